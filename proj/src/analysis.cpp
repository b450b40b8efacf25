#include "monospline/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "monospline/errors.hpp"
#include "monospline/quadrature.hpp"
#include "numeric_util.hpp"

namespace monospline {

double modulus_of_continuity(const TargetFunction& f, double delta, int grid) {
    const double a = f.domain.lo;
    const double b = f.domain.hi;
    if (!(delta > 0.0) || delta > (b - a) * (1.0 + 1e-12)) {
        throw InvalidDelta("delta must satisfy 0 < delta <= b - a");
    }
    delta = std::min(delta, b - a);
    if (f.has_exact_modulus()) return f.exact_modulus(delta);

    if (f.monotonicity != Monotonicity::None) {
        const double sign = f.monotonicity == Monotonicity::Nondecreasing ? 1.0 : -1.0;
        auto rise = [&](double x) { return sign * (f(std::min(x + delta, b)) - f(x)); };
        return std::max(0.0, detail::grid_max(rise, a, b - delta, grid).second);
    }

    // Pairs (x, x + u) with 0 <= u <= delta, then one local refinement.
    const int offsets = std::max(2, std::min(grid, 201));
    const double hx = (b - a) / (grid - 1);
    const double hu = delta / (offsets - 1);
    auto gap = [&](double x, double u) {
        const double y = std::min(x + u, b);
        return std::abs(f(y) - f(x));
    };
    double best = 0.0;
    double bx = a;
    double bu = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double x = a + hx * i;
        for (int j = 0; j < offsets; ++j) {
            const double u = hu * j;
            if (double v = gap(x, u); v > best) {
                best = v;
                bx = x;
                bu = u;
            }
        }
    }
    double sx = hx;
    double su = hu;
    for (int round = 0; round < 60; ++round) {
        double nx = bx;
        double nu = bu;
        for (int i = -2; i <= 2; ++i) {
            const double x = std::clamp(bx + sx * i / 2.0, a, b);
            for (int j = -2; j <= 2; ++j) {
                const double u = std::clamp(bu + su * j / 2.0, 0.0, delta);
                if (double v = gap(x, u); v > best) {
                    best = v;
                    nx = x;
                    nu = u;
                }
            }
        }
        if (nx == bx && nu == bu) {
            sx *= 0.5;
            su *= 0.5;
        }
        bx = nx;
        bu = nu;
    }
    return best;
}

double sup_distance(const TargetFunction& f, const Spline& s, Interval on, int grid) {
    const Interval whole = s.partition().interval();
    const double slack = 1e-12 * (1.0 + whole.length());
    if (!(on.lo <= on.hi) || on.lo < whole.lo - slack || on.hi > whole.hi + slack) {
        throw BadInterval("sup interval must lie inside the spline's interval");
    }
    on.lo = std::max(on.lo, whole.lo);
    on.hi = std::min(on.hi, whole.hi);
    auto err = [&](double x) { return std::abs(f(x) - s(x)); };
    if (on.lo == on.hi) return err(on.lo);
    return detail::grid_max(err, on.lo, on.hi, grid).second;
}

Interval inner_interval(Interval whole, double fraction) {
    if (!(fraction > 0.0 && fraction < 1.0)) throw ConfigInvalid("inner fraction must lie in (0, 1)");
    const double margin = 0.5 * (1.0 - fraction) * whole.length();
    return {whole.lo + margin, whole.hi - margin};
}

ConvergenceReport run_convergence(const TargetFunction& f, const std::vector<Partition>& partitions,
                                  const ApproxConfig& cfg, Interval inner, int workers,
                                  const std::string& partition_kind) {
    cfg.validate();
    ConvergenceReport report;
    report.function_id = f.id;
    report.config = cfg;
    report.partition_kind = partition_kind;
    report.inner = inner;
    if (partitions.empty()) return report;
    const Interval whole = partitions.front().interval();
    for (const auto& part : partitions) {
        if (!(part.interval() == whole)) throw BadInterval("all partitions must cover the same interval");
    }
    if (!(whole.lo < inner.lo && inner.lo < inner.hi && inner.hi < whole.hi)) {
        throw BadInterval("inner interval must satisfy a < c < d < b");
    }

    std::vector<ConvergenceRow> rows(partitions.size());
    std::vector<std::exception_ptr> errors(partitions.size());
    auto compute = [&](size_t k) {
        const Partition& part = partitions[k];
        const ProjectionResult res = project(f, part, cfg);
        const Spline& s = res.spline.spline;
        ConvergenceRow row;
        row.partition_size = static_cast<int>(part.size());
        row.partition_norm = part.norm();
        row.lp_error = res.objective;
        row.sup_error_inner = sup_distance(f, s, inner);
        row.sup_error_global = std::max(sup_distance(f, s, whole), row.sup_error_inner);
        row.endpoint_a = s(whole.lo);
        row.endpoint_b = s(whole.hi);
        if (report.has_prop3_bound()) {
            const double w = modulus_of_continuity(f, std::min(row.partition_norm, f.domain.length()));
            row.prop3_bound = std::pow(whole.length(), 1.0 / cfg.p) * w;
        }
        row.optimality_gap = res.optimality_gap;
        row.converged = res.converged;
        rows[k] = row;
    };

    const size_t n_workers = std::clamp<size_t>(static_cast<size_t>(std::max(1, workers)), 1, partitions.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k = next++; k < partitions.size(); k = next++) {
            try {
                compute(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ConvergenceRow& x, const ConvergenceRow& y) {
        return x.partition_norm > y.partition_norm;
    });
    report.rows = std::move(rows);
    return report;
}

std::optional<size_t> first_invariant_violation(const ConvergenceReport& report) {
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const ConvergenceRow& r = report.rows[i];
        if (r.prop3_bound && r.lp_error > *r.prop3_bound + 1e-6) return i;
        if (r.sup_error_inner > r.sup_error_global) return i;
    }
    return std::nullopt;
}

std::vector<CounterexampleRow> counterexample_xn(const std::vector<int>& n_values, double p) {
    if (!(p >= 1.0)) throw ConfigInvalid("p must be >= 1");
    std::vector<CounterexampleRow> out;
    out.reserve(n_values.size());
    for (int n : n_values) {
        if (n < 1) throw ConfigInvalid("exponents must be >= 1");
        auto power = [n](double x) { return std::pow(x, n); };
        CounterexampleRow row;
        row.n = n;
        row.lp_norm = std::pow(integrate_abs_power(power, 0.0, 1.0, p), 1.0 / p);
        row.closed_form = std::pow(1.0 / (n * p + 1.0), 1.0 / p);
        row.sup_norm = detail::grid_max(power, 0.0, 1.0, 10001).second;
        out.push_back(row);
    }
    return out;
}

}  // namespace monospline
