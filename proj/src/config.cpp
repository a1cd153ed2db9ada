#include "alphasat/config.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace alphasat {

namespace {
std::atomic<int> g_coverage_cap{kDefaultCoverageCap};
}

int coverage_cap() { return g_coverage_cap.load(std::memory_order_relaxed); }

void set_coverage_cap(int cap) {
    if (cap < 1 || cap > kMaxCoverageCap)
        throw std::invalid_argument("coverage cap must be in [1, " +
                                    std::to_string(kMaxCoverageCap) + "]");
    g_coverage_cap.store(cap, std::memory_order_relaxed);
}

}  // namespace alphasat
