#pragma once

#include <vector>

#include <Eigen/Dense>

#include "monospline/partition.hpp"
#include "monospline/spline.hpp"

namespace monospline::detail {

/// Coefficient space of C^l piecewise polynomials of order m.
///
/// Raw coordinates are the local monomial coefficients of every piece,
/// stacked piece by piece (N = pieces * (m + 1)). The C^l joins are
/// eliminated once: c = Z z with Z an orthonormal basis of their null space.
class SplineSpace {
public:
    SplineSpace(const Partition& partition, int m, int l);

    const Partition& partition() const { return partition_; }
    int order() const { return m_; }
    int smoothness() const { return l_; }
    int pieces() const { return n_; }
    int block() const { return m_ + 1; }
    int raw_dim() const { return n_ * (m_ + 1); }
    int dim() const { return static_cast<int>(Z_.cols()); }
    const Eigen::MatrixXd& basis() const { return Z_; }
    /// Rows of Z belonging to piece i.
    auto basis_block(int i) const { return Z_.middleRows(i * (m_ + 1), m_ + 1); }

    Eigen::VectorXd coefficients(const Eigen::VectorXd& z) const { return Z_ * z; }
    /// Orthogonal projection of raw coefficients onto the space, in z coordinates.
    Eigen::VectorXd reduce(const Eigen::VectorXd& c) const { return Z_.transpose() * c; }

    Spline to_spline(const Eigen::VectorXd& z) const;
    Eigen::VectorXd raw_from_spline(const Spline& s) const;
    /// Raw coefficients of x (global coordinate) and of the constant 1.
    Eigen::VectorXd raw_identity() const;
    Eigen::VectorXd raw_constant(double value) const;

    /// z-space row of the local t-derivative of piece i at t, normalized to unit length.
    Eigen::RowVectorXd derivative_row(int piece, double t) const;

    /// Linear inequalities C z >= 0 describing nondecreasing elements:
    /// m = 1 slope, m = 2 endpoint derivatives (exact), m = 3 derivative at
    /// t = 0, 1/2, 1 (to be completed by cuts), m >= 4 Bernstein coefficients
    /// of the derivative after `elevation` degree elevations (sufficient).
    /// Duplicate rows at C^1 joins are dropped.
    Eigen::MatrixXd monotone_constraints(int elevation) const;

    /// Minimum over t in [0, 1] of the local derivative of piece i when the
    /// derivative is at most quadratic; returns {t, value}.
    std::pair<double, double> derivative_minimum(const Eigen::VectorXd& c, int piece) const;

private:
    Partition partition_;
    int m_;
    int l_;
    int n_;
    Eigen::MatrixXd Z_;
};

}  // namespace monospline::detail
