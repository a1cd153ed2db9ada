#pragma once

#include "alphasat/types.hpp"

namespace alphasat {

/// Evaluated satisfiability-threshold bounds for alpha-intersecting k-CNFs.
/// L values: every formula strictly below any of them is satisfiable.
/// U values: some unsatisfiable formula meets all of them simultaneously.
struct ThresholdBounds {
    int k = 0;
    int alpha = 0;
    double d = 0.0;  // LLL degree threshold 2^(k-alpha) / (e k)
    double L_i = 0.0;
    double L_n = 0.0;
    double L_m = 0.0;
    double U_i = 0.0;
    double U_n = 0.0;
    double U_m = 0.0;
    double U_delta = 0.0;
    // d <= 1: the lower-bound family is vacuous and L_i (which needs d > 1)
    // is reported as 0.
    bool degenerate = false;
};

/// L_i = (d-1)^(2+1/alpha) / (2 alpha), L_n = d^(1/alpha),
/// L_m = d^(1+1/alpha) / k. Requires k > alpha >= 1.
ThresholdBounds lower_bounds(int k, int alpha);

/// U_i = alpha^2 2^((k+alpha)(2+1/alpha)) k^(5+2/alpha),
/// U_n = 2 alpha 2^(k/alpha) k^(2(1+1/alpha)),
/// U_m = alpha 2^((k+alpha)(1+1/alpha)) k^(2(1+1/alpha)),
/// U_delta = alpha 2^(k+alpha) k^2. Requires k > alpha >= 1.
ThresholdBounds upper_bounds(int k, int alpha);

/// Both families in one report.
ThresholdBounds evaluate_thresholds(int k, int alpha);

struct GuaranteeReport {
    bool by_variables = false;      // n < L_n
    bool by_clauses = false;        // m < L_m
    bool by_intersections = false;  // i < L_i
    ThresholdBounds bounds;

    bool any() const { return by_variables || by_clauses || by_intersections; }
};

/// Which lower-bound criteria certify satisfiability of a formula with the
/// given measured metrics. An empty set means no guarantee, not unsatisfiable.
/// The report must come from an alpha-intersecting width-k formula.
GuaranteeReport guarantee_check(const MetricsReport& report, int k, int alpha);

}  // namespace alphasat
