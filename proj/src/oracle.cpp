// Reference minimizer for tiny instances. Shares no optimization code with
// projection.cpp: values at equispaced local points parametrize each piece,
// joins are eliminated through an SVD, the cone is handled by Dykstra's
// alternating projections and the objective is a trapezoid sum.

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "monospline/approx.hpp"
#include "monospline/errors.hpp"
#include "numeric_util.hpp"

namespace monospline {

namespace {

constexpr int kMaxCoefficients = 12;
constexpr int kStarts = 20;
constexpr int kStartIterations = 2500;
constexpr int kPolishIterations = 10000;

struct LocalBasis {
    int m;
    Eigen::MatrixXd to_monomial;  // monomial coefficients = to_monomial * values

    explicit LocalBasis(int order) : m(order) {
        const int M = m + 1;
        Eigen::MatrixXd V(M, M);
        for (int k = 0; k < M; ++k) {
            const double t = m == 0 ? 0.0 : static_cast<double>(k) / m;
            for (int j = 0; j < M; ++j) V(k, j) = std::pow(t, j);
        }
        to_monomial = V.inverse();
    }

    /// Row mapping piece values to the j-th t-derivative at t.
    Eigen::RowVectorXd derivative_row(double t, int j) const {
        const int M = m + 1;
        Eigen::RowVectorXd mono = Eigen::RowVectorXd::Zero(M);
        for (int k = j; k < M; ++k) {
            double c = 1.0;
            for (int i = 0; i < j; ++i) c *= k - i;
            mono[k] = c * std::pow(t, k - j);
        }
        return mono * to_monomial;
    }
};

class Polyhedron {
public:
    explicit Polyhedron(Eigen::MatrixXd rows) : A_(std::move(rows)) {
        for (Eigen::Index i = 0; i < A_.rows(); ++i) {
            const double n = A_.row(i).norm();
            if (n > 0.0) A_.row(i) /= n;
        }
    }

    /// Euclidean projection onto {w : A w >= 0} by Dykstra's method.
    Eigen::VectorXd project(const Eigen::VectorXd& w) const {
        const Eigen::Index k = A_.rows();
        if (k == 0) return w;
        Eigen::VectorXd x = w;
        Eigen::MatrixXd incr = Eigen::MatrixXd::Zero(w.size(), k);
        for (int sweep = 0; sweep < 2000; ++sweep) {
            double moved = 0.0;
            for (Eigen::Index i = 0; i < k; ++i) {
                const Eigen::VectorXd y = x + incr.col(i);
                const double v = A_.row(i).dot(y);
                const Eigen::VectorXd nx = v < 0.0 ? Eigen::VectorXd(y - v * A_.row(i).transpose()) : y;
                incr.col(i) = y - nx;
                moved = std::max(moved, (nx - x).lpNorm<Eigen::Infinity>());
                x = nx;
            }
            if (moved <= 1e-15 * (1.0 + x.lpNorm<Eigen::Infinity>())) break;
        }
        return x;
    }

private:
    Eigen::MatrixXd A_;
};

}  // namespace

ProjectionResult oracle_project(const TargetFunction& f, const Partition& partition, const ApproxConfig& cfg,
                                int grid_size, std::uint64_t seed) {
    cfg.validate();
    const int n = static_cast<int>(partition.pieces());
    const int m = cfg.m;
    const int M = m + 1;
    const int N = n * M;
    if (N > kMaxCoefficients) throw InstanceTooLarge("oracle handles at most 12 coefficients");
    if (grid_size < 3) throw ConfigInvalid("oracle grid needs at least 3 points");
    const LocalBasis basis(m);

    // Joins: x-derivatives of orders 0..l agree at interior knots.
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(std::max(1, (n - 1) * (cfg.l + 1)), N);
    int row = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j <= cfg.l; ++j) {
            E.block(row, (i - 1) * M, 1, M) = basis.derivative_row(1.0, j) / std::pow(partition.gap(i - 1), j);
            E.block(row, i * M, 1, M) = -basis.derivative_row(0.0, j) / std::pow(partition.gap(i), j);
            ++row;
        }
    }
    Eigen::MatrixXd Z;
    if (row == 0) {
        Z = Eigen::MatrixXd::Identity(N, N);
    } else {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(E, Eigen::ComputeFullV);
        Z = svd.matrixV().rightCols(N - row);
    }
    const int d = static_cast<int>(Z.cols());

    // Cone: local derivative samples.
    std::vector<double> samples;
    if (m == 1) {
        samples = {0.5};
    } else if (m == 2) {
        samples = {0.0, 1.0};
    } else {
        for (int k = 0; k <= 16; ++k) samples.push_back(k / 16.0);
    }
    Eigen::MatrixXd A(static_cast<Eigen::Index>(n * samples.size()), d);
    row = 0;
    for (int i = 0; i < n; ++i) {
        for (double t : samples) {
            Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(N);
            r.segment(i * M, M) = basis.derivative_row(t, 1);
            A.row(row++) = r * Z;
        }
    }
    const Polyhedron cone(A);

    // Trapezoid grid.
    const Interval iv = partition.interval();
    const double hx = iv.length() / (grid_size - 1);
    Eigen::VectorXd fy(grid_size);
    Eigen::VectorXd wt(grid_size);
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(grid_size, N);
    for (int g = 0; g < grid_size; ++g) {
        const double x = g == grid_size - 1 ? iv.hi : iv.lo + hx * g;
        fy[g] = f(x);
        wt[g] = (g == 0 || g == grid_size - 1) ? 0.5 * hx : hx;
        const size_t i = partition.locate(x);
        const double t = (x - partition.knot(i)) / partition.gap(i);
        S.block(g, static_cast<Eigen::Index>(i) * M, 1, M) = basis.derivative_row(t, 0);
    }
    const Eigen::MatrixXd SZ = S * Z;
    const double p = cfg.p;

    auto objective = [&](const Eigen::VectorXd& w) {
        const Eigen::VectorXd r = fy - SZ * w;
        double F = 0.0;
        for (int g = 0; g < grid_size; ++g) F += wt[g] * std::pow(std::abs(r[g]), p);
        return F;
    };
    auto subgradient = [&](const Eigen::VectorXd& w) {
        const Eigen::VectorXd r = fy - SZ * w;
        Eigen::VectorXd s(grid_size);
        for (int g = 0; g < grid_size; ++g) {
            const double a = std::abs(r[g]);
            s[g] = a == 0.0 ? 0.0 : wt[g] * p * std::pow(a, p - 1.0) * (r[g] > 0.0 ? 1.0 : -1.0);
        }
        return Eigen::VectorXd(-(SZ.transpose() * s));
    };

    const double ymin = fy.minCoeff();
    const double ymax = fy.maxCoeff();
    const double yscale = std::max({std::abs(ymin), std::abs(ymax), 1e-12});
    const double step0 = 0.5 * yscale * std::sqrt(static_cast<double>(N));

    struct Run {
        Eigen::VectorXd w;
        double best;
        int iterations;
    };
    auto descend = [&](Eigen::VectorXd w, double step, int iterations) {
        const double decay = std::exp(-10.0 / iterations);
        Run run{w, objective(w), 0};
        for (int k = 0; k < iterations; ++k) {
            const Eigen::VectorXd g = subgradient(w);
            const double gn = g.norm();
            if (gn == 0.0) break;
            w = cone.project(w - (step / gn) * g);
            step *= decay;
            ++run.iterations;
            const double F = objective(w);
            if (F < run.best) {
                run.best = F;
                run.w = w;
            }
        }
        return run;
    };

    std::mt19937_64 rng(seed);
    Run best{Eigen::VectorXd::Zero(d), std::numeric_limits<double>::infinity(), 0};
    int total = 0;
    for (int s = 0; s < kStarts; ++s) {
        Eigen::VectorXd raw(N);
        for (int k = 0; k < N; ++k) raw[k] = detail::uniform(rng, ymin, ymax + 1e-12);
        Eigen::VectorXd w0 = cone.project(Z.transpose() * raw);
        Run run = descend(w0, step0, kStartIterations);
        total += run.iterations;
        if (run.best < best.best) best = run;
    }
    Run polished = descend(best.w, 0.05 * step0, kPolishIterations);
    total += polished.iterations;
    if (polished.best < best.best) best = polished;

    const Eigen::VectorXd values = Z * best.w;
    std::vector<Polynomial> pieces;
    for (int i = 0; i < n; ++i) {
        const Eigen::VectorXd mono = basis.to_monomial * values.segment(i * M, M);
        pieces.emplace_back(std::vector<double>(mono.data(), mono.data() + M));
    }
    Spline s(partition, std::move(pieces), m, cfg.l);
    SplineCertification cert = certify_spline_monotone(s, cfg.elevation_budget);
    if (std::holds_alternative<SplineRefutation>(cert)) {
        throw NotMonotone("oracle iterate left the monotone cone");
    }
    ProjectionResult out{std::get<MonotoneSpline>(std::move(cert)), 0.0, total,
                         std::numeric_limits<double>::quiet_NaN(), true};
    out.objective = lp_distance(f, out.spline.spline, p, cfg.quadrature_points_per_piece);
    return out;
}

}  // namespace monospline
