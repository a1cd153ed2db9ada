#pragma once

#include <cstdint>
#include <optional>

#include "alphasat/types.hpp"

namespace alphasat {

/// True iff every clause has a true literal under a. Throws on length mismatch.
bool verify_assignment(const CnfFormula& f, const Assignment& a);

/// Exhaustive scan in assignment-index order; the lowest-index satisfying
/// assignment, or nullopt when unsatisfiable. Requires n <= coverage_cap().
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

/// Number of satisfying assignments. Requires n <= coverage_cap().
std::uint64_t count_models(const CnfFormula& f);

}  // namespace alphasat
