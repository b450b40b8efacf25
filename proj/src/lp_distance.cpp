#include <algorithm>
#include <cmath>

#include "monospline/approx.hpp"
#include "monospline/errors.hpp"
#include "monospline/quadrature.hpp"

namespace monospline {

double lp_distance(const TargetFunction& f, const Spline& s, double p, int points_per_piece) {
    if (!(p >= 1.0)) throw ConfigInvalid("p must be >= 1");
    const Partition& part = s.partition();
    double scale = 0.0;
    for (double x : part.knots()) scale = std::max(scale, std::abs(f(x)));
    AdaptiveOptions opts;
    opts.points = points_per_piece;
    opts.max_depth = 10;
    opts.abs_tolerance = 1e-15 * std::pow(1.0 + scale, p) * part.interval().length();
    opts.zero_threshold = 1e-13 * (1.0 + scale);
    double total = 0.0;
    for (size_t i = 0; i < part.pieces(); ++i) {
        const double lo = part.knot(i);
        const double h = part.gap(i);
        const Polynomial& piece = s.piece(i);
        auto residual = [&](double x) { return f(x) - piece(std::clamp((x - lo) / h, 0.0, 1.0)); };
        total += integrate_abs_power(residual, lo, part.knot(i + 1), p, opts);
    }
    return std::pow(total, 1.0 / p);
}

}  // namespace monospline
