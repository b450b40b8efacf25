#pragma once

#include <functional>
#include <vector>

namespace monospline {

/// Gauss-Legendre rule on [0, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule, cached; exact for polynomials of degree <= 2n - 1.
const GaussRule& gauss_legendre(int n);

struct AdaptiveOptions {
    int points = 32;
    /// Depth limit for bisection at sign changes of r.
    int max_depth = 10;
    /// Depth limit for bisection driven by the two-halves error estimate.
    int max_accuracy_depth = 30;
    /// Bisection stops once |I - (I_left + I_right)| falls below this.
    double abs_tolerance = 1e-15;
    /// Residuals with magnitude below this do not count as sign changes.
    double zero_threshold = 0.0;
};

/// Integrates |r(x)|^p over [lo, hi] with composite Gauss-Legendre, bisecting
/// (up to max_depth) where r changes sign or where the two-halves estimate
/// disagrees with the whole-interval one.
double integrate_abs_power(const std::function<double(double)>& residual, double lo, double hi, double p,
                           const AdaptiveOptions& options = {});

}  // namespace monospline
