#include "monospline/active_set_qp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace monospline {

namespace {

/// Appends the constraint with transformed normal d = J'n to the active set:
/// rotations zero d[q+1..], the matching columns of J rotate along, and d[0..q]
/// becomes column q of R. Returns false if the constraint is dependent.
bool add_constraint(Eigen::MatrixXd& R, Eigen::MatrixXd& J, Eigen::VectorXd& d, int& q, double& r_norm) {
    const Eigen::Index n = J.rows();
    for (Eigen::Index j = n - 1; j >= q + 1; --j) {
        double cc = d[j - 1];
        double ss = d[j];
        const double h = std::hypot(cc, ss);
        if (h == 0.0) continue;
        d[j] = 0.0;
        ss /= h;
        cc /= h;
        if (cc < 0.0) {
            cc = -cc;
            ss = -ss;
            d[j - 1] = -h;
        } else {
            d[j - 1] = h;
        }
        const double xny = ss / (1.0 + cc);
        for (Eigen::Index k = 0; k < n; ++k) {
            const double t1 = J(k, j - 1);
            const double t2 = J(k, j);
            J(k, j - 1) = t1 * cc + t2 * ss;
            J(k, j) = xny * (t1 + J(k, j - 1)) - t2;
        }
    }
    ++q;
    for (int i = 0; i < q; ++i) R(i, q - 1) = d[i];
    if (std::abs(d[q - 1]) <= std::numeric_limits<double>::epsilon() * r_norm) {
        --q;
        return false;
    }
    r_norm = std::max(r_norm, std::abs(d[q - 1]));
    return true;
}

/// Removes active constraint `constraint` and restores R to upper-triangular form.
/// Slot q (the constraint being added) shifts down with the others.
void delete_constraint(Eigen::MatrixXd& R, Eigen::MatrixXd& J, std::vector<int>& active, Eigen::VectorXd& u,
                       int& q, int constraint) {
    const Eigen::Index n = J.rows();
    int pos = -1;
    for (int i = 0; i < q; ++i) {
        if (active[i] == constraint) {
            pos = i;
            break;
        }
    }
    if (pos < 0) return;
    for (int i = pos; i < q - 1; ++i) {
        active[i] = active[i + 1];
        u[i] = u[i + 1];
        R.col(i) = R.col(i + 1);
    }
    active[q - 1] = active[q];
    u[q - 1] = u[q];
    active[q] = -1;
    u[q] = 0.0;
    for (int j = 0; j < q; ++j) R(j, q - 1) = 0.0;
    --q;
    for (int j = pos; j < q; ++j) {
        double cc = R(j, j);
        double ss = R(j + 1, j);
        const double h = std::hypot(cc, ss);
        if (h == 0.0) continue;
        cc /= h;
        ss /= h;
        R(j + 1, j) = 0.0;
        if (cc < 0.0) {
            R(j, j) = -h;
            cc = -cc;
            ss = -ss;
        } else {
            R(j, j) = h;
        }
        const double xny = ss / (1.0 + cc);
        for (int k = j + 1; k < q; ++k) {
            const double t1 = R(j, k);
            const double t2 = R(j + 1, k);
            R(j, k) = t1 * cc + t2 * ss;
            R(j + 1, k) = xny * (t1 + R(j, k)) - t2;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            const double t1 = J(k, j);
            const double t2 = J(k, j + 1);
            J(k, j) = t1 * cc + t2 * ss;
            J(k, j + 1) = xny * (J(k, j) + t1) - t2;
        }
    }
}

}  // namespace

ActiveSetQp::ActiveSetQp(const Eigen::MatrixXd& hessian, const Eigen::VectorXd& linear)
    : linear_(linear), llt_(hessian) {
    factored_ = llt_.info() == Eigen::Success;
}

QpResult ActiveSetQp::solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const QpOptions& options) const {
    return solve(A, b, nullptr, options);
}

QpResult ActiveSetQp::solve(Eigen::MatrixXd A, Eigen::VectorXd b, const Separator& separate,
                            const QpOptions& options) const {
    const Eigen::Index n = linear_.size();
    Eigen::Index m = A.rows();
    QpResult result;
    Eigen::VectorXd x = llt_.solve(-linear_);

    // J = L^{-T}, so that J'HJ = I.
    Eigen::MatrixXd J = llt_.matrixU().solve(Eigen::MatrixXd::Identity(n, n));
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(m + 1);
    std::vector<int> active(static_cast<size_t>(m + 1), -1);
    std::vector<char> is_active(static_cast<size_t>(m), 0);
    std::vector<char> excluded(static_cast<size_t>(m), 0);
    Eigen::VectorXd s = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd d(n);
    Eigen::VectorXd z(n);
    Eigen::VectorXd r(n);
    int q = 0;
    double r_norm = 1.0;
    const double inf = std::numeric_limits<double>::infinity();

    auto finish = [&](bool optimal) {
        result.x = x;
        result.optimal = optimal;
        result.active_set.assign(active.begin(), active.begin() + q);
        result.multipliers = u.head(q);
        result.A = std::move(A);
        result.b = std::move(b);
        return result;
    };

    for (;;) {
        // Most violated inactive constraint.
        const double tol = options.violation_tolerance * (1.0 + x.lpNorm<Eigen::Infinity>());
        int ip = -1;
        double worst = -tol;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (is_active[i] || excluded[i]) continue;
            s[i] = A.row(i).dot(x) - b[i];
            if (s[i] < worst) {
                worst = s[i];
                ip = static_cast<int>(i);
            }
        }
        if (ip < 0) {
            if (!separate || separate(x, A, b) == 0) return finish(true);
            const Eigen::Index old_m = m;
            m = A.rows();
            bool violated = false;
            for (Eigen::Index i = old_m; i < m; ++i) violated = violated || A.row(i).dot(x) - b[i] < -tol;
            if (!violated) {
                A.conservativeResize(old_m, Eigen::NoChange);
                b.conservativeResize(old_m);
                m = old_m;
                return finish(true);
            }
            u.conservativeResize(m + 1);
            u.tail(m + 1 - static_cast<Eigen::Index>(active.size())).setZero();
            active.resize(static_cast<size_t>(m + 1), -1);
            is_active.resize(static_cast<size_t>(m), 0);
            excluded.resize(static_cast<size_t>(m), 0);
            s.conservativeResize(m);
            continue;
        }

        const Eigen::VectorXd np = A.row(ip).transpose();
        u[q] = 0.0;
        active[q] = ip;
        for (;;) {
            if (++result.iterations > options.max_iterations) return finish(false);
            d.noalias() = J.transpose() * np;
            z.noalias() = J.rightCols(n - q) * d.tail(n - q);
            if (q > 0) {
                r.head(q) = R.topLeftCorner(q, q).triangularView<Eigen::Upper>().solve(d.head(q));
            }
            // Largest dual step keeping the active multipliers nonnegative.
            double t1 = inf;
            int leaving = -1;
            for (int k = 0; k < q; ++k) {
                if (r[k] > 0.0 && u[k] / r[k] < t1) {
                    t1 = u[k] / r[k];
                    leaving = active[k];
                }
            }
            // Primal step that makes constraint ip active; none if its normal
            // lies in the span of the active normals.
            const double zn = z.dot(np);
            const bool independent = d.tail(n - q).norm() > 1e-12 * d.norm() && zn > 0.0;
            const double t2 = independent ? -s[ip] / zn : inf;
            const double t = std::min(t1, t2);
            if (t == inf) {
                result.infeasible = true;
                return finish(false);
            }
            if (t2 == inf) {
                for (int k = 0; k < q; ++k) u[k] -= t * r[k];
                u[q] += t;
                is_active[leaving] = 0;
                delete_constraint(R, J, active, u, q, leaving);
                continue;
            }
            x += t * z;
            for (int k = 0; k < q; ++k) u[k] -= t * r[k];
            u[q] += t;
            if (t == t2) {
                if (add_constraint(R, J, d, q, r_norm)) {
                    is_active[ip] = 1;
                    std::fill(excluded.begin(), excluded.end(), 0);
                } else {
                    excluded[ip] = 1;
                    u[q] = 0.0;
                    active[q] = -1;
                }
                break;
            }
            is_active[leaving] = 0;
            delete_constraint(R, J, active, u, q, leaving);
            s[ip] = A.row(ip).dot(x) - b[ip];
        }
    }
}

}  // namespace monospline
