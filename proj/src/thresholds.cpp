#include "alphasat/thresholds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace alphasat {

namespace {

void require_params(int k, int alpha) {
    if (!(k > alpha && alpha >= 1))
        throw std::invalid_argument("thresholds: need k > alpha >= 1");
}

}  // namespace

ThresholdBounds lower_bounds(int k, int alpha) {
    require_params(k, alpha);
    ThresholdBounds b;
    b.k = k;
    b.alpha = alpha;
    const double inv_alpha = 1.0 / alpha;
    b.d = std::exp2(static_cast<double>(k - alpha)) / (std::numbers::e * k);
    b.degenerate = b.d <= 1.0;
    b.L_n = std::pow(b.d, inv_alpha);
    b.L_m = std::pow(b.d, 1.0 + inv_alpha) / k;
    b.L_i = b.degenerate ? 0.0 : std::pow(b.d - 1.0, 2.0 + inv_alpha) / (2.0 * alpha);
    return b;
}

ThresholdBounds upper_bounds(int k, int alpha) {
    require_params(k, alpha);
    ThresholdBounds b;
    b.k = k;
    b.alpha = alpha;
    const double inv_alpha = 1.0 / alpha;
    const double a = static_cast<double>(alpha);
    const double kd = static_cast<double>(k);
    b.U_i = a * a * std::exp2((kd + a) * (2.0 + inv_alpha)) * std::pow(kd, 5.0 + 2.0 * inv_alpha);
    b.U_n = 2.0 * a * std::exp2(kd * inv_alpha) * std::pow(kd, 2.0 * (1.0 + inv_alpha));
    b.U_m = a * std::exp2((kd + a) * (1.0 + inv_alpha)) * std::pow(kd, 2.0 * (1.0 + inv_alpha));
    b.U_delta = a * std::exp2(kd + a) * kd * kd;
    return b;
}

ThresholdBounds evaluate_thresholds(int k, int alpha) {
    ThresholdBounds b = lower_bounds(k, alpha);
    const ThresholdBounds u = upper_bounds(k, alpha);
    b.U_i = u.U_i;
    b.U_n = u.U_n;
    b.U_m = u.U_m;
    b.U_delta = u.U_delta;
    return b;
}

GuaranteeReport guarantee_check(const MetricsReport& report, int k, int alpha) {
    GuaranteeReport g;
    g.bounds = lower_bounds(k, alpha);
    g.by_variables = static_cast<double>(report.n) < g.bounds.L_n;
    g.by_clauses = static_cast<double>(report.m) < g.bounds.L_m;
    g.by_intersections = static_cast<double>(report.i) < g.bounds.L_i;
    return g;
}

}  // namespace alphasat
