#pragma once

namespace alphasat {

// The assignment-coverage machinery (CoverageSet, brute-force oracle) scales
// as 2^n; both share this cap. Default 26 (8 MiB of coverage bits), hard
// ceiling 30.
inline constexpr int kDefaultCoverageCap = 26;
inline constexpr int kMaxCoverageCap = 30;

int coverage_cap();

/// Accepts values in [1, kMaxCoverageCap]; throws otherwise.
void set_coverage_cap(int cap);

}  // namespace alphasat
