#include "monospline/spline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monospline/errors.hpp"

namespace monospline {

namespace {

double falling_factorial(int k, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r *= (k - i);
    return r;
}

// j-th t-derivative of p at t.
double local_derivative(const Polynomial& p, double t, int j) {
    double acc = 0.0;
    for (int k = p.degree_bound(); k >= j; --k) acc = acc * t + falling_factorial(k, j) * p[k];
    return acc;
}

// Size of the terms summed when evaluating the j-th x-derivative of piece p
// on a subinterval of width h.
double derivative_scale(const Polynomial& p, double h, int j) {
    double acc = 0.0;
    for (int k = j; k <= p.degree_bound(); ++k) acc += falling_factorial(k, j) * std::abs(p[k]);
    return acc / std::pow(h, j);
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

}  // namespace

Spline::Spline(Partition partition, std::vector<Polynomial> pieces, int order, int smoothness)
    : partition_(std::move(partition)), pieces_(std::move(pieces)), order_(order), smoothness_(smoothness) {
    if (order_ < 1) throw ConfigInvalid("spline order must be >= 1");
    if (smoothness_ < 0 || smoothness_ > order_ - 1) throw ConfigInvalid("spline smoothness must satisfy 0 <= l <= m-1");
    if (pieces_.size() != partition_.pieces()) throw ConfigInvalid("spline needs one piece per subinterval");
    for (auto& p : pieces_) {
        if (p.degree_bound() > order_) {
            // Trailing zeros beyond the order are harmless; anything else is not.
            for (int k = order_ + 1; k <= p.degree_bound(); ++k) {
                if (p[k] != 0.0) throw ConfigInvalid("spline piece exceeds the spline order");
            }
            p = Polynomial(std::vector<double>(p.coeffs().begin(), p.coeffs().begin() + order_ + 1));
        }
        p = p.padded(order_);
    }
    for (int j = 0; j <= smoothness_; ++j) {
        for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
            const double left = piece_derivative(i, 1.0, j);
            const double right = piece_derivative(i + 1, 0.0, j);
            const double scale = std::max(derivative_scale(pieces_[i], partition_.gap(i), j),
                                          derivative_scale(pieces_[i + 1], partition_.gap(i + 1), j));
            if (std::abs(left - right) > 1e-9 * (1.0 + scale)) {
                throw SmoothnessViolation("derivative of order " + std::to_string(j) + " jumps at knot " +
                                          std::to_string(i + 1));
            }
        }
    }
}

Spline Spline::constant(Partition partition, double value, int order, int smoothness) {
    std::vector<Polynomial> pieces(partition.pieces(), Polynomial::constant(value, order));
    return Spline(std::move(partition), std::move(pieces), order, smoothness);
}

double Spline::piece_derivative(size_t i, double t, int j) const {
    const double h = partition_.gap(i);
    return local_derivative(pieces_[i], t, j) / std::pow(h, j);
}

double Spline::operator()(double x) const {
    const size_t i = partition_.locate(x);
    const double t = (x - partition_.knot(i)) / partition_.gap(i);
    return pieces_[i](t);
}

double Spline::derivative(double x, int j) const {
    const size_t i = partition_.locate(x);
    const double t = (x - partition_.knot(i)) / partition_.gap(i);
    return piece_derivative(i, t, j);
}

double eval_spline(const Spline& s, double x) { return s(x); }

double smoothness_defect(const Spline& s, int j) {
    if (j < 0 || j > s.order()) throw ConfigInvalid("derivative order out of range");
    double worst = 0.0;
    for (size_t i = 0; i + 1 < s.pieces().size(); ++i) {
        worst = std::max(worst, std::abs(s.piece_derivative(i, 1.0, j) - s.piece_derivative(i + 1, 0.0, j)));
    }
    return worst;
}

Polynomial hermite_step_kernel(int l) {
    // Antiderivative of t^l (1-t)^l, normalized to reach 1 at t = 1.
    std::vector<double> c(static_cast<size_t>(2 * l + 2), 0.0);
    for (int j = 0; j <= l; ++j) {
        c[l + j + 1] = ((j % 2 == 0) ? 1.0 : -1.0) * binomial(l, j) / (l + j + 1);
    }
    Polynomial k(std::move(c));
    const double total = k(1.0);
    return (1.0 / total) * k;
}

MonotoneSpline passow_interpolant(std::span<const std::pair<double, double>> points, int l) {
    if (l < 0) throw ConfigInvalid("smoothness must be nonnegative");
    if (points.size() < 2) throw TooFewKnots("interpolation needs at least 2 points");
    std::vector<double> knots;
    knots.reserve(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        if (i > 0) {
            if (!(points[i].first > points[i - 1].first)) {
                throw DuplicateAbscissa("abscissae must be strictly increasing");
            }
            if (points[i].second < points[i - 1].second) {
                throw NonMonotoneData("ordinates must be nondecreasing");
            }
        }
        knots.push_back(points[i].first);
    }
    const Polynomial kernel = hermite_step_kernel(l);
    const int order = 2 * l + 1;
    std::vector<Polynomial> pieces;
    pieces.reserve(points.size() - 1);
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        const double rise = points[i + 1].second - points[i].second;
        Polynomial piece = rise * kernel;
        piece += Polynomial::constant(points[i].second);
        pieces.push_back(piece);
    }
    Spline spline(Partition(std::move(knots)), std::move(pieces), order, l);
    auto certified = certify_spline_monotone(spline, kDefaultElevationBudget);
    if (auto* ms = std::get_if<MonotoneSpline>(&certified)) return std::move(*ms);
    throw NotMonotone("interpolant failed its monotonicity certificate");
}

SplineCertification certify_spline_monotone(const Spline& s, int elevation_budget, Orientation orientation,
                                            double tolerance) {
    std::vector<MonotoneCertificate> certs;
    certs.reserve(s.pieces().size());
    const Interval unit{0.0, 1.0};
    for (size_t i = 0; i < s.pieces().size(); ++i) {
        const Polynomial piece = orientation == Orientation::Nondecreasing ? s.piece(i) : -s.piece(i);
        MonotoneCertificate cert = certify_nondecreasing(piece, unit, elevation_budget, tolerance);
        if (cert.refuted()) {
            return SplineRefutation{i, s.partition().knot(i) + cert.witness * s.partition().gap(i), cert};
        }
        certs.push_back(cert);
    }
    return MonotoneSpline{s, orientation, std::move(certs)};
}

Spline negate(const Spline& s) {
    std::vector<Polynomial> pieces;
    pieces.reserve(s.pieces().size());
    for (const auto& p : s.pieces()) pieces.push_back(-p);
    return Spline(s.partition(), std::move(pieces), s.order(), s.smoothness());
}

MonotoneSpline negate(const MonotoneSpline& s) {
    return MonotoneSpline{negate(s.spline),
                          s.orientation == Orientation::Nondecreasing ? Orientation::Nonincreasing
                                                                      : Orientation::Nondecreasing,
                          s.certificates};
}

}  // namespace monospline
