#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monospline/approx.hpp"
#include "monospline/partition.hpp"
#include "monospline/target.hpp"

namespace monospline {

/// Nondecreasing test functions on [0, 1]: identity, constant, square, sqrt,
/// cbrt, smoothstep, plateau, exp. All carry their exact modulus of continuity.
const std::vector<TargetFunction>& builtin_functions();

/// Throws ConfigInvalid for unknown ids.
const TargetFunction& find_builtin(const std::string& id);

/// omega_f(delta) on f.domain. Uses f.exact_modulus when present; otherwise
/// a grid search (one-sided for nondecreasing f) with local refinement.
/// Throws InvalidDelta unless 0 < delta <= b - a.
double modulus_of_continuity(const TargetFunction& f, double delta, int grid = 2001);

/// max |f - s| on [u, v]: uniform grid plus a golden-section polish at the
/// discrete argmax. Throws BadInterval unless [u, v] lies in the spline's interval.
double sup_distance(const TargetFunction& f, const Spline& s, Interval on, int grid = 10001);

struct ConvergenceRow {
    int partition_size = 0;
    double partition_norm = 0.0;
    double lp_error = 0.0;
    double sup_error_global = 0.0;
    double sup_error_inner = 0.0;
    double endpoint_a = 0.0;
    double endpoint_b = 0.0;
    /// (b - a)^(1/p) omega_f(||partition||); absent when m < 2l + 1.
    std::optional<double> prop3_bound;
    double optimality_gap = 0.0;
    bool converged = true;
};

struct ConvergenceReport {
    std::string function_id;
    ApproxConfig config;
    std::string partition_kind;
    Interval inner{0.0, 1.0};
    std::vector<ConvergenceRow> rows;

    bool has_prop3_bound() const { return config.m >= 2 * config.l + 1; }
};

/// Middle part of [a, b] that leaves (1 - fraction)/2 of the length at each end.
Interval inner_interval(Interval whole, double fraction = 0.8);

/// Projects f on each partition (up to `workers` at a time) and tabulates
/// errors. Rows come out ordered by decreasing partition norm.
/// Throws BadInterval unless a < c < d < b.
ConvergenceReport run_convergence(const TargetFunction& f, const std::vector<Partition>& partitions,
                                  const ApproxConfig& cfg, Interval inner, int workers = 1,
                                  const std::string& partition_kind = "uniform");

/// Rowwise checks: lp_error <= prop3_bound + 1e-6 and inner <= global.
/// Returns the index of the first failing row, if any.
std::optional<size_t> first_invariant_violation(const ConvergenceReport& report);

struct CounterexampleRow {
    int n = 0;
    double lp_norm = 0.0;      // by quadrature
    double closed_form = 0.0;  // (1 / (n p + 1))^(1/p)
    double sup_norm = 0.0;
};

/// ||x^n||_p and ||x^n||_inf on [0, 1] for each n. Throws ConfigInvalid for n < 1 or p < 1.
std::vector<CounterexampleRow> counterexample_xn(const std::vector<int>& n_values, double p);

}  // namespace monospline
