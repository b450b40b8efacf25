#include "monospline/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "monospline/errors.hpp"

namespace monospline {

namespace {

GaussRule compute_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map [-1, 1] -> [0, 1]; ascending order.
        rule.nodes[n - 1 - i] = 0.5 * (x + 1.0);
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

struct Evaluation {
    double integral = 0.0;
    bool sign_change = false;
};

Evaluation apply_rule(const std::function<double(double)>& residual, double lo, double hi, double p,
                      const GaussRule& rule, double zero_threshold, double r_lo, double r_hi) {
    Evaluation e;
    const double h = hi - lo;
    int sign = 0;
    auto track = [&](double r) {
        if (std::abs(r) <= zero_threshold) return;
        const int s = r > 0.0 ? 1 : -1;
        if (sign != 0 && s != sign) e.sign_change = true;
        sign = s;
    };
    track(r_lo);
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        const double r = residual(lo + h * rule.nodes[k]);
        track(r);
        const double a = std::abs(r);
        e.integral += rule.weights[k] * (p == 1.0 ? a : (p == 2.0 ? a * a : std::pow(a, p)));
    }
    track(r_hi);
    e.integral *= h;
    return e;
}

double adapt(const std::function<double(double)>& residual, double lo, double hi, double p,
             const GaussRule& rule, const AdaptiveOptions& options, int depth, const Evaluation& whole,
             double r_lo, double r_hi) {
    if (depth >= std::max(options.max_depth, options.max_accuracy_depth)) return whole.integral;
    const double mid = 0.5 * (lo + hi);
    const double r_mid = residual(mid);
    const Evaluation left = apply_rule(residual, lo, mid, p, rule, options.zero_threshold, r_lo, r_mid);
    const Evaluation right = apply_rule(residual, mid, hi, p, rule, options.zero_threshold, r_mid, r_hi);
    const double sum = left.integral + right.integral;
    const bool split_sign = whole.sign_change && depth < options.max_depth;
    const bool split_accuracy =
        std::abs(sum - whole.integral) > options.abs_tolerance && depth < options.max_accuracy_depth;
    if (!split_sign && !split_accuracy) return sum;
    return adapt(residual, lo, mid, p, rule, options, depth + 1, left, r_lo, r_mid) +
           adapt(residual, mid, hi, p, rule, options, depth + 1, right, r_mid, r_hi);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw ConfigInvalid("quadrature needs at least one node");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussRule>(compute_rule(n));
    return *slot;
}

double integrate_abs_power(const std::function<double(double)>& residual, double lo, double hi, double p,
                           const AdaptiveOptions& options) {
    const GaussRule& rule = gauss_legendre(options.points);
    const double r_lo = residual(lo);
    const double r_hi = residual(hi);
    const Evaluation whole = apply_rule(residual, lo, hi, p, rule, options.zero_threshold, r_lo, r_hi);
    return adapt(residual, lo, hi, p, rule, options, 0, whole, r_lo, r_hi);
}

}  // namespace monospline
