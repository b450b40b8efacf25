#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace monospline {

struct QpOptions {
    int max_iterations = 20000;
    /// Constraints with a'x - b >= -violation_tolerance * (1 + |x|_inf) count as satisfied.
    double violation_tolerance = 1e-13;
};

struct QpResult {
    Eigen::VectorXd x;
    std::vector<int> active_set;
    Eigen::VectorXd multipliers;  // aligned with active_set
    int iterations = 0;
    bool optimal = false;
    bool infeasible = false;
    /// Constraint system at exit, including rows added by a separator.
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
};

/// Dual active-set solver (Goldfarb-Idnani) for
///     minimize 1/2 x'Hx + c'x  subject to  A x >= b
/// with H symmetric positive definite.
///
/// Starts from the unconstrained minimizer and adds the most violated
/// constraint at each step while keeping the multipliers nonnegative. The
/// active set is kept linearly independent through orthogonal updates of the
/// factors J = L^{-T} Q and R, so no feasible starting point is needed.
class ActiveSetQp {
public:
    ActiveSetQp(const Eigen::MatrixXd& hessian, const Eigen::VectorXd& linear);

    /// False if H was not numerically positive definite.
    bool factored() const { return factored_; }

    QpResult solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const QpOptions& options = {}) const;

    /// Appends rows to (A, b) that cut off x; returns how many were added.
    using Separator = std::function<int(const Eigen::VectorXd& x, Eigen::MatrixXd& A, Eigen::VectorXd& b)>;

    /// Same problem with constraints generated lazily: whenever x satisfies the
    /// current rows, `separate` may add violated ones and the dual iteration
    /// continues from its present state.
    QpResult solve(Eigen::MatrixXd A, Eigen::VectorXd b, const Separator& separate,
                   const QpOptions& options = {}) const;

private:
    Eigen::VectorXd linear_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    bool factored_ = false;
};

}  // namespace monospline
