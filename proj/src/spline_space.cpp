#include "spline_space.hpp"

#include <cmath>

namespace monospline::detail {

namespace {

double falling(int k, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r *= k - i;
    return r;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

SplineSpace::SplineSpace(const Partition& partition, int m, int l)
    : partition_(partition), m_(m), l_(l), n_(static_cast<int>(partition.pieces())) {
    const int M = m + 1;
    const int N = n_ * M;
    const int r = (n_ - 1) * (l + 1);
    if (r == 0) {
        Z_ = Eigen::MatrixXd::Identity(N, N);
        return;
    }
    Eigen::MatrixXd At = Eigen::MatrixXd::Zero(N, r);
    int col = 0;
    for (int i = 1; i < n_; ++i) {
        const double h0 = partition.gap(i - 1);
        const double h1 = partition.gap(i);
        const double hs = std::min(h0, h1);
        for (int j = 0; j <= l; ++j) {
            for (int k = j; k <= m; ++k) At((i - 1) * M + k, col) = falling(k, j) * std::pow(hs / h0, j);
            At(i * M + j, col) = -falling(j, j) * std::pow(hs / h1, j);
            At.col(col).normalize();
            ++col;
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(At);
    const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(N, N);
    Z_ = Q.rightCols(N - r);
}

Spline SplineSpace::to_spline(const Eigen::VectorXd& z) const {
    const Eigen::VectorXd c = coefficients(z);
    const int M = m_ + 1;
    std::vector<Polynomial> pieces;
    pieces.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        pieces.emplace_back(std::vector<double>(c.data() + i * M, c.data() + (i + 1) * M));
    }
    return Spline(partition_, std::move(pieces), m_, l_);
}

Eigen::VectorXd SplineSpace::raw_from_spline(const Spline& s) const {
    const int M = m_ + 1;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(raw_dim());
    for (int i = 0; i < n_; ++i) {
        const Polynomial& piece = s.piece(static_cast<size_t>(i));
        for (int k = 0; k < M; ++k) c[i * M + k] = piece[static_cast<size_t>(k)];
    }
    return c;
}

Eigen::VectorXd SplineSpace::raw_identity() const {
    const int M = m_ + 1;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(raw_dim());
    for (int i = 0; i < n_; ++i) {
        c[i * M] = partition_.knot(static_cast<size_t>(i));
        c[i * M + 1] = partition_.gap(static_cast<size_t>(i));
    }
    return c;
}

Eigen::VectorXd SplineSpace::raw_constant(double value) const {
    const int M = m_ + 1;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(raw_dim());
    for (int i = 0; i < n_; ++i) c[i * M] = value;
    return c;
}

Eigen::RowVectorXd SplineSpace::derivative_row(int piece, double t) const {
    Eigen::RowVectorXd local(m_ + 1);
    local[0] = 0.0;
    double tp = 1.0;
    for (int k = 1; k <= m_; ++k) {
        local[k] = k * tp;
        tp *= t;
    }
    Eigen::RowVectorXd row = local * basis_block(piece);
    const double nrm = row.norm();
    if (nrm > 0.0) row /= nrm;
    return row;
}

Eigen::MatrixXd SplineSpace::monotone_constraints(int elevation) const {
    const int M = m_ + 1;
    std::vector<Eigen::RowVectorXd> rows;
    auto push = [&](const Eigen::RowVectorXd& local, int piece) {
        Eigen::RowVectorXd row = local * basis_block(piece);
        const double nrm = row.norm();
        if (nrm > 1e-12) rows.push_back(row / nrm);
    };
    const bool shared_endpoint = l_ >= 1;
    for (int i = 0; i < n_; ++i) {
        const bool skip_left = shared_endpoint && i > 0;
        if (m_ <= 3) {
            std::vector<double> ts;
            if (m_ == 1) {
                ts = {0.0};
            } else if (m_ == 2) {
                ts = {0.0, 1.0};
            } else {
                ts = {0.0, 0.5, 1.0};
            }
            for (double t : ts) {
                if (m_ > 1 && skip_left && t == 0.0) continue;
                Eigen::RowVectorXd local = Eigen::RowVectorXd::Zero(M);
                double tp = 1.0;
                for (int k = 1; k <= m_; ++k) {
                    local[k] = k * tp;
                    tp *= t;
                }
                push(local, i);
            }
        } else {
            // Derivative a_j = (j+1) c_{j+1}, degree m-1; Bernstein coefficients of
            // degree D >= m-1 are b_k = sum_{j<=k} C(k,j)/C(D,j) a_j.
            const int D = m_ - 1 + elevation;
            for (int k = 0; k <= D; ++k) {
                if (skip_left && k == 0) continue;
                Eigen::RowVectorXd local = Eigen::RowVectorXd::Zero(M);
                for (int j = 0; j <= std::min(k, m_ - 1); ++j) {
                    local[j + 1] = (j + 1) * binomial(k, j) / binomial(D, j);
                }
                push(local, i);
            }
        }
    }
    Eigen::MatrixXd C(static_cast<Eigen::Index>(rows.size()), dim());
    for (size_t i = 0; i < rows.size(); ++i) C.row(static_cast<Eigen::Index>(i)) = rows[i];
    return C;
}

std::pair<double, double> SplineSpace::derivative_minimum(const Eigen::VectorXd& c, int piece) const {
    const int M = m_ + 1;
    const double a0 = m_ >= 1 ? c[piece * M + 1] : 0.0;
    const double a1 = m_ >= 2 ? 2.0 * c[piece * M + 2] : 0.0;
    const double a2 = m_ >= 3 ? 3.0 * c[piece * M + 3] : 0.0;
    auto q = [&](double t) { return a0 + t * (a1 + t * a2); };
    double best_t = 0.0;
    double best = q(0.0);
    if (double v = q(1.0); v < best) {
        best = v;
        best_t = 1.0;
    }
    if (a2 > 0.0) {
        const double t = -a1 / (2.0 * a2);
        if (t > 0.0 && t < 1.0) {
            if (double v = q(t); v < best) {
                best = v;
                best_t = t;
            }
        }
    }
    return {best_t, best};
}

}  // namespace monospline::detail
