#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "monospline/partition.hpp"
#include "monospline/poly.hpp"

namespace monospline {

/// Piecewise polynomial of order m with C^l joins.
///
/// Piece i is stored in the local coordinate t = (x - k_i) / (k_{i+1} - k_i),
/// t in [0, 1].
class Spline {
public:
    /// Validates piece count, degree bounds (padding lower-degree pieces up to
    /// m) and C^l continuity; throws ConfigInvalid or SmoothnessViolation.
    Spline(Partition partition, std::vector<Polynomial> pieces, int order, int smoothness);

    static Spline constant(Partition partition, double value, int order = 1, int smoothness = 0);

    const Partition& partition() const { return partition_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    const Polynomial& piece(size_t i) const { return pieces_[i]; }
    int order() const { return order_; }
    int smoothness() const { return smoothness_; }

    /// Throws OutOfDomain outside [a, b]; interior knots use the left piece.
    double operator()(double x) const;

    /// j-th derivative with respect to x; same knot convention.
    double derivative(double x, int j) const;

    /// j-th x-derivative of piece i at local coordinate t.
    double piece_derivative(size_t i, double t, int j) const;

private:
    Partition partition_;
    std::vector<Polynomial> pieces_;
    int order_;
    int smoothness_;
};

double eval_spline(const Spline& s, double x);

/// Largest jump of the j-th x-derivative over interior knots (0 <= j <= m).
double smoothness_defect(const Spline& s, int j);

enum class Orientation { Nondecreasing, Nonincreasing };

/// Spline whose pieces all carry a monotonicity certificate for `orientation`.
/// For Nonincreasing the certificates refer to the negated pieces.
struct MonotoneSpline {
    Spline spline;
    Orientation orientation = Orientation::Nondecreasing;
    std::vector<MonotoneCertificate> certificates;
};

/// Monotone C^l interpolant of order 2l+1 that matches the data and has
/// vanishing derivatives of orders 1..l at every abscissa. On each piece it is
/// y_i + (y_{i+1} - y_i) K_l(t) with K_l the regularized incomplete beta
/// kernel, so nondecreasing data give a nondecreasing spline.
/// Throws DuplicateAbscissa, NonMonotoneData or TooFewKnots.
MonotoneSpline passow_interpolant(std::span<const std::pair<double, double>> points, int l);

/// The monotone kernel K_l: K_l(0) = 0, K_l(1) = 1, K_l^{(j)}(0) = K_l^{(j)}(1) = 0 for 1 <= j <= l.
Polynomial hermite_step_kernel(int l);

struct SplineRefutation {
    size_t piece = 0;
    double x = 0.0;  // witness in global coordinates
    MonotoneCertificate certificate;
};

using SplineCertification = std::variant<MonotoneSpline, SplineRefutation>;

/// Certifies every piece nondecreasing (or nonincreasing) on its subinterval.
/// Returns a MonotoneSpline unless some piece is refuted; pieces reporting
/// Unknown keep their certificate but do not block the result.
SplineCertification certify_spline_monotone(const Spline& s,
                                            int elevation_budget = kDefaultElevationBudget,
                                            Orientation orientation = Orientation::Nondecreasing,
                                            double tolerance = kMonotoneTolerance);

Spline negate(const Spline& s);
MonotoneSpline negate(const MonotoneSpline& s);

}  // namespace monospline
