#pragma once

#include <cstdint>
#include <optional>

#include "monospline/partition.hpp"
#include "monospline/spline.hpp"
#include "monospline/target.hpp"

namespace monospline {

struct ApproxConfig {
    double p = 2.0;
    int m = 1;
    int l = 0;
    int quadrature_points_per_piece = 32;
    double solver_tolerance = 1e-8;
    int max_iterations = 1000;
    /// Final smoothing width of |r| for p close to 1, relative to the data scale.
    double smoothing_epsilon = 1e-10;
    int elevation_budget = kDefaultElevationBudget;
    /// Depth of the bisection used around sign changes of f - s.
    int kink_refinement_depth = 10;
    int gap_probes = 100;
    /// Randomizes the feasible starting point; the minimizer does not depend on it.
    std::optional<std::uint64_t> random_start_seed;

    /// Throws ConfigInvalid.
    void validate() const;
};

struct ProjectionResult {
    MonotoneSpline spline;
    /// ||f - s||_p by adaptive quadrature.
    double objective = 0.0;
    int iterations = 0;
    /// max(0, -min directional derivative) over probed feasible directions; NaN if not probed.
    double optimality_gap = 0.0;
    bool converged = true;
};

/// ||f - s||_p on the spline's interval: composite Gauss-Legendre per piece,
/// bisected up to depth 10 where f - s changes sign.
double lp_distance(const TargetFunction& f, const Spline& s, double p, int points_per_piece = 32);

/// Best nondecreasing C^l approximation of order m in L^p on `partition`.
/// Equality constraints are eliminated through a null-space basis; the
/// remaining inequality-constrained convex problem is solved by Newton steps
/// whose subproblems go to an active-set QP. Non-convergence is reported
/// through ProjectionResult::converged.
ProjectionResult project(const TargetFunction& f, const Partition& partition, const ApproxConfig& cfg);

/// Best nonincreasing approximation: negate(project(-f)).
ProjectionResult project_nonincreasing(const TargetFunction& f, const Partition& partition,
                                       const ApproxConfig& cfg);

/// Slow reference minimizer for small instances (at most 12 coefficients):
/// projected subgradient descent on a uniform trapezoid grid from 20 random
/// feasible starts. Throws InstanceTooLarge.
ProjectionResult oracle_project(const TargetFunction& f, const Partition& partition, const ApproxConfig& cfg,
                                int grid_size = 4001, std::uint64_t seed = 7);

struct EquivarianceDefects {
    double translation_defect = 0.0;
    double scaling_defect = 0.0;
};

/// Sup differences on 1001 points between project(f - c) and project(f) - c,
/// and between project(c f) and c project(f). The scaling defect is NaN for c < 0.
EquivarianceDefects check_equivariance(const TargetFunction& f, const Partition& partition,
                                       const ApproxConfig& cfg, double c);

/// Max |s1 - s2| on a uniform grid over the common interval.
double sup_difference(const Spline& s1, const Spline& s2, int grid = 1001);

}  // namespace monospline
