#include "alphasat/oracle.hpp"

#include <stdexcept>
#include <vector>

#include "alphasat/config.hpp"

namespace alphasat {

namespace {

// Clause falsified at index iff (index & mask) == falsifying: a positive
// literal wants its bit clear, a negated one wants it set.
struct ClauseMask {
    std::uint64_t mask = 0;
    std::uint64_t falsifying = 0;
};

std::vector<ClauseMask> compile_masks(const CnfFormula& f) {
    std::vector<ClauseMask> masks;
    masks.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) {
        ClauseMask cm;
        for (const Literal& lit : c.literals) {
            cm.mask |= std::uint64_t{1} << lit.var;
            if (lit.negated)
                cm.falsifying |= std::uint64_t{1} << lit.var;
        }
        masks.push_back(cm);
    }
    return masks;
}

void require_within_cap(int n) {
    if (n < 0 || n > coverage_cap())
        throw std::invalid_argument("oracle: variable count exceeds coverage cap");
}

}  // namespace

bool verify_assignment(const CnfFormula& f, const Assignment& a) {
    if (a.size() != static_cast<std::size_t>(f.n))
        throw std::invalid_argument("verify_assignment: assignment length mismatch");
    for (const Clause& c : f.clauses) {
        bool satisfied = false;
        for (const Literal& lit : c.literals)
            if (a.get(lit.var) != lit.negated) {
                satisfied = true;
                break;
            }
        if (!satisfied)
            return false;
    }
    return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
    require_within_cap(f.n);
    const auto masks = compile_masks(f);
    const std::uint64_t total = std::uint64_t{1} << f.n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        bool ok = true;
        for (const ClauseMask& cm : masks)
            if ((idx & cm.mask) == cm.falsifying) {
                ok = false;
                break;
            }
        if (ok)
            return Assignment::from_index(idx, f.n);
    }
    return std::nullopt;
}

std::uint64_t count_models(const CnfFormula& f) {
    require_within_cap(f.n);
    const auto masks = compile_masks(f);
    const std::uint64_t total = std::uint64_t{1} << f.n;
    std::uint64_t models = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        bool ok = true;
        for (const ClauseMask& cm : masks)
            if ((idx & cm.mask) == cm.falsifying) {
                ok = false;
                break;
            }
        if (ok)
            ++models;
    }
    return models;
}

}  // namespace alphasat
