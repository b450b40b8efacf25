#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "monospline/active_set_qp.hpp"
#include "monospline/approx.hpp"
#include "monospline/errors.hpp"
#include "monospline/quadrature.hpp"
#include "numeric_util.hpp"
#include "spline_space.hpp"

namespace monospline {

void ApproxConfig::validate() const {
    if (!(p >= 1.0) || !std::isfinite(p)) throw ConfigInvalid("p must be a finite real >= 1");
    if (m < 1) throw ConfigInvalid("m must be >= 1");
    if (l < 0 || l > m - 1) throw ConfigInvalid("l must satisfy 0 <= l <= m-1");
    if (quadrature_points_per_piece < 1) throw ConfigInvalid("quadrature_points_per_piece must be >= 1");
    if (!(solver_tolerance > 0.0)) throw ConfigInvalid("solver_tolerance must be positive");
    if (max_iterations < 1) throw ConfigInvalid("max_iterations must be >= 1");
    if (!(smoothing_epsilon > 0.0)) throw ConfigInvalid("smoothing_epsilon must be positive");
    if (elevation_budget < 0) throw ConfigInvalid("elevation_budget must be >= 0");
    if (kink_refinement_depth < 0) throw ConfigInvalid("kink_refinement_depth must be >= 0");
    if (gap_probes < 0) throw ConfigInvalid("gap_probes must be >= 0");
}

namespace {

using detail::SplineSpace;

struct PieceNodes {
    std::vector<double> weight;  // includes the piece length
    Eigen::VectorXd y;
    Eigen::MatrixXd B;  // local monomials at the nodes
};

using Discretization = std::vector<PieceNodes>;

void append_cell(const GaussRule& rule, double t0, double t1, double h, std::vector<double>& ts,
                 std::vector<double>& ws) {
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
        ts.push_back(t0 + (t1 - t0) * rule.nodes[q]);
        ws.push_back(h * (t1 - t0) * rule.weights[q]);
    }
}

PieceNodes make_piece(const TargetFunction& f, double lo, double h, int M, std::vector<double> ts,
                      std::vector<double> ws) {
    PieceNodes pn;
    const auto n = static_cast<Eigen::Index>(ts.size());
    pn.weight = std::move(ws);
    pn.y.resize(n);
    pn.B.resize(n, M);
    for (Eigen::Index q = 0; q < n; ++q) {
        const double t = ts[static_cast<size_t>(q)];
        pn.y[q] = f(lo + h * t);
        double tp = 1.0;
        for (int k = 0; k < M; ++k) {
            pn.B(q, k) = tp;
            tp *= t;
        }
    }
    return pn;
}

/// Gauss nodes per piece; where the current residual changes sign, or where
/// the rule misjudges the integral of |r|^p by more than `abs_tol` against its
/// two halves, the cell is bisected up to `depth` times.
Discretization discretize(const TargetFunction& f, const SplineSpace& space, const GaussRule& rule,
                          const Eigen::VectorXd* c, int depth, double kappa, double p, double abs_tol) {
    const Partition& part = space.partition();
    const int M = space.block();
    Discretization out;
    out.reserve(static_cast<size_t>(space.pieces()));
    for (int i = 0; i < space.pieces(); ++i) {
        const double lo = part.knot(static_cast<size_t>(i));
        const double h = part.gap(static_cast<size_t>(i));
        std::vector<double> ts;
        std::vector<double> ws;
        if (c == nullptr || depth == 0) {
            append_cell(rule, 0.0, 1.0, h, ts, ws);
        } else {
            auto residual = [&](double t) {
                double v = 0.0;
                for (int k = M - 1; k >= 0; --k) v = v * t + (*c)[i * M + k];
                return f(lo + h * t) - v;
            };
            auto changes_sign = [&](double t0, double t1) {
                int sign = 0;
                auto track = [&](double r) {
                    if (std::abs(r) <= kappa) return false;
                    const int s = r > 0.0 ? 1 : -1;
                    const bool flip = sign != 0 && s != sign;
                    sign = s;
                    return flip;
                };
                if (track(residual(t0))) return true;
                for (double node : rule.nodes) {
                    if (track(residual(t0 + (t1 - t0) * node))) return true;
                }
                return track(residual(t1));
            };
            auto cell_integral = [&](double t0, double t1) {
                double acc = 0.0;
                for (size_t q = 0; q < rule.nodes.size(); ++q) {
                    acc += rule.weights[q] * std::pow(std::abs(residual(t0 + (t1 - t0) * rule.nodes[q])), p);
                }
                return h * (t1 - t0) * acc;
            };
            auto inaccurate = [&](double t0, double t1) {
                const double mid = 0.5 * (t0 + t1);
                return std::abs(cell_integral(t0, t1) - cell_integral(t0, mid) - cell_integral(mid, t1)) > abs_tol;
            };
            auto recurse = [&](auto&& self, double t0, double t1, int level) -> void {
                if (level < depth && (changes_sign(t0, t1) || inaccurate(t0, t1))) {
                    const double mid = 0.5 * (t0 + t1);
                    self(self, t0, mid, level + 1);
                    self(self, mid, t1, level + 1);
                } else {
                    append_cell(rule, t0, t1, h, ts, ws);
                }
            };
            recurse(recurse, 0.0, 1.0, 0);
        }
        out.push_back(make_piece(f, lo, h, M, std::move(ts), std::move(ws)));
    }
    return out;
}

/// phi(r) = |r|^p, or (r^2 + eps^2)^(p/2) when eps > 0. For 1 < p < 2 the
/// curvature is that of the quadratic majorizer p |r|^(p-2) r^2 / 2, floored at |r| = floor.
struct Penalty {
    double p = 2.0;
    double eps = 0.0;
    double floor = 0.0;

    double value(double r) const {
        if (eps > 0.0) return std::pow(r * r + eps * eps, 0.5 * p);
        const double a = std::abs(r);
        if (p == 2.0) return a * a;
        if (p == 1.0) return a;
        return std::pow(a, p);
    }
    double slope(double r) const {
        if (eps > 0.0) return p * r * std::pow(r * r + eps * eps, 0.5 * p - 1.0);
        const double a = std::abs(r);
        if (p == 2.0) return 2.0 * r;
        if (a == 0.0) return 0.0;
        return p * std::pow(a, p - 1.0) * (r > 0.0 ? 1.0 : -1.0);
    }
    double curvature(double r) const {
        if (eps > 0.0) {
            const double s = r * r + eps * eps;
            return p * std::pow(s, 0.5 * p - 1.0) + p * (p - 2.0) * r * r * std::pow(s, 0.5 * p - 2.0);
        }
        if (p == 2.0) return 2.0;
        const double a = std::max(std::abs(r), floor);
        if (p < 2.0) return p * std::pow(a, p - 2.0);
        return p * (p - 1.0) * std::pow(a, p - 2.0);
    }
};

class Problem {
public:
    Problem(const TargetFunction& f, const SplineSpace& space, const ApproxConfig& cfg)
        : f_(f), space_(space), cfg_(cfg), rule_(gauss_legendre(cfg.quadrature_points_per_piece)) {
        C_ = space.monotone_constraints(cfg.elevation_budget);
        base_rows_ = C_.rows();
        disc_ = discretize(f, space, rule_, nullptr, 0, 0.0, cfg.p, 0.0);
        double yabs = 0.0;
        for (const auto& pn : disc_) yabs = std::max(yabs, pn.y.cwiseAbs().maxCoeff());
        for (double x : space.partition().knots()) yabs = std::max(yabs, std::abs(f(x)));
        scale_ = yabs > 0.0 ? yabs : 1.0;
        kappa_ = 1e-10 * scale_;
    }

    double scale() const { return scale_; }
    double kappa() const { return kappa_; }

    /// The common value when every sampled target value is identical.
    std::optional<double> constant_target() const {
        const double c = f_(space_.partition().knot(0));
        for (double x : space_.partition().knots()) {
            if (f_(x) != c) return std::nullopt;
        }
        for (const auto& pn : disc_) {
            if ((pn.y.array() != c).any()) return std::nullopt;
        }
        return c;
    }
    const Discretization& discretization() const { return disc_; }
    const Eigen::MatrixXd& constraints() const { return C_; }

    void refine(const Eigen::VectorXd& z) {
        const Eigen::VectorXd c = space_.coefficients(z);
        const double abs_tol =
            1e-16 * std::pow(scale_, cfg_.p) * space_.partition().interval().length();
        disc_ = discretize(f_, space_, rule_, &c, cfg_.kink_refinement_depth, kappa_, cfg_.p, abs_tol);
    }

    /// Residuals y - B c per piece.
    std::vector<Eigen::VectorXd> residuals(const Eigen::VectorXd& z) const {
        const Eigen::VectorXd c = space_.coefficients(z);
        const int M = space_.block();
        std::vector<Eigen::VectorXd> r(disc_.size());
        for (size_t i = 0; i < disc_.size(); ++i) {
            r[i] = disc_[i].y - disc_[i].B * c.segment(static_cast<Eigen::Index>(i) * M, M);
        }
        return r;
    }

    double objective(const Eigen::VectorXd& z, const Penalty& pen) const {
        const auto r = residuals(z);
        double F = 0.0;
        for (size_t i = 0; i < disc_.size(); ++i) {
            for (Eigen::Index q = 0; q < r[i].size(); ++q) {
                F += disc_[i].weight[static_cast<size_t>(q)] * pen.value(r[i][q]);
            }
        }
        return F;
    }

    /// (sum w |r|^p)^(1/p) on the current nodes.
    double discrete_norm(const Eigen::VectorXd& z) const {
        Penalty exact{cfg_.p, 0.0, 0.0};
        return std::pow(objective(z, exact), 1.0 / cfg_.p);
    }

    double derivatives(const Eigen::VectorXd& z, const Penalty& pen, Eigen::VectorXd& g, Eigen::MatrixXd& H) const {
        const auto r = residuals(z);
        const int d = space_.dim();
        g = Eigen::VectorXd::Zero(d);
        H = Eigen::MatrixXd::Zero(d, d);
        double F = 0.0;
        for (size_t i = 0; i < disc_.size(); ++i) {
            const PieceNodes& pn = disc_[i];
            const auto nq = r[i].size();
            Eigen::VectorXd s1(nq);
            Eigen::VectorXd s2(nq);
            for (Eigen::Index q = 0; q < nq; ++q) {
                const double w = pn.weight[static_cast<size_t>(q)];
                F += w * pen.value(r[i][q]);
                s1[q] = w * pen.slope(r[i][q]);
                s2[q] = w * pen.curvature(r[i][q]);
            }
            const Eigen::VectorXd gc = -(pn.B.transpose() * s1);
            const Eigen::MatrixXd G = pn.B.transpose() * s2.asDiagonal() * pn.B;
            const auto Zi = space_.basis_block(static_cast<int>(i));
            g.noalias() += Zi.transpose() * gc;
            const Eigen::MatrixXd T = G * Zi;
            H.noalias() += Zi.transpose() * T;
        }
        return F;
    }

    /// Largest change of the spline at the nodes caused by step dz.
    double node_change(const Eigen::VectorXd& dz) const {
        const Eigen::VectorXd dc = space_.coefficients(dz);
        const int M = space_.block();
        double out = 0.0;
        for (size_t i = 0; i < disc_.size(); ++i) {
            const Eigen::VectorXd v = disc_[i].B * dc.segment(static_cast<Eigen::Index>(i) * M, M);
            out = std::max(out, v.cwiseAbs().maxCoeff());
        }
        return out;
    }

    /// min 1/2 v'Hv + g'v subject to the monotone cone at base + v. For m = 3
    /// the sampled derivative constraints are completed by cuts at the
    /// derivative's interior minimum, generated inside the QP. Cuts active at
    /// the solution are kept for the next call.
    Eigen::VectorXd constrained_step(const Eigen::MatrixXd& H, const Eigen::VectorXd& g, const Eigen::VectorXd& base) {
        double damping = 1e-12 * std::max(H.diagonal().maxCoeff(), 1e-300) + 1e-300;
        ActiveSetQp::Separator cut;
        if (space_.order() == 3) {
            cut = [&](const Eigen::VectorXd& v, Eigen::MatrixXd& A, Eigen::VectorXd& b) {
                const Eigen::VectorXd c = space_.coefficients(base + v);
                int added = 0;
                for (int i = 0; i < space_.pieces(); ++i) {
                    const auto [t, value] = space_.derivative_minimum(c, i);
                    if (value >= -1e-12 * scale_ || t <= 0.0 || t >= 1.0) continue;
                    const Eigen::RowVectorXd row = space_.derivative_row(i, t);
                    A.conservativeResize(A.rows() + 1, Eigen::NoChange);
                    b.conservativeResize(b.size() + 1);
                    A.row(A.rows() - 1) = row;
                    b[b.size() - 1] = -row.dot(base);
                    ++added;
                }
                return added;
            };
        }
        for (int attempt = 0; attempt < 8; ++attempt) {
            Eigen::MatrixXd Hd = H;
            Hd.diagonal().array() += damping;
            ActiveSetQp qp(Hd, g);
            if (!qp.factored()) {
                damping *= 1e3;
                continue;
            }
            const Eigen::VectorXd b = -(C_ * base);
            QpResult res = qp.solve(C_, b, cut);
            if (space_.order() == 3) {
                Eigen::MatrixXd kept = C_.topRows(base_rows_);
                for (int k : res.active_set) {
                    if (k < base_rows_) continue;
                    kept.conservativeResize(kept.rows() + 1, Eigen::NoChange);
                    kept.row(kept.rows() - 1) = res.A.row(k);
                }
                C_ = std::move(kept);
            }
            return res.x;
        }
        return Eigen::VectorXd::Zero(base.size());
    }

private:
    const TargetFunction& f_;
    const SplineSpace& space_;
    const ApproxConfig& cfg_;
    const GaussRule& rule_;
    Eigen::MatrixXd C_;
    Eigen::Index base_rows_ = 0;
    Discretization disc_;
    double scale_ = 1.0;
    double kappa_ = 0.0;
};

struct StageOutcome {
    int iterations = 0;
    bool converged = false;
};

/// Damped Newton iteration on the penalized objective with QP subproblems.
StageOutcome newton_stage(Problem& prob, const Penalty& pen, Eigen::VectorXd& z, int budget, double tol) {
    StageOutcome out;
    Eigen::VectorXd g;
    Eigen::MatrixXd H;
    const double stop = 0.01 * tol * prob.scale();
    while (out.iterations < budget) {
        const double F = prob.derivatives(z, pen, g, H);
        const Eigen::VectorXd v = prob.constrained_step(H, g, z);
        ++out.iterations;
        const double slope = g.dot(v);
        if (prob.node_change(v) <= stop || !(slope < 0.0)) {
            out.converged = true;
            break;
        }
        double alpha = 1.0;
        bool accepted = false;
        for (int k = 0; k < 60; ++k) {
            if (prob.objective(z + alpha * v, pen) <= F + 1e-4 * alpha * slope) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            out.converged = true;  // no further decrease representable
            break;
        }
        const Eigen::VectorXd step = alpha * v;
        z += step;
        if (prob.node_change(step) <= stop) {
            out.converged = true;
            break;
        }
    }
    return out;
}

Eigen::VectorXd starting_point(const TargetFunction& f, const SplineSpace& space, const ApproxConfig& cfg) {
    const Partition& part = space.partition();
    std::vector<std::pair<double, double>> data;
    data.reserve(part.size());
    bool monotone_data = true;
    double sum = 0.0;
    for (size_t i = 0; i < part.size(); ++i) {
        const double y = f(part.knot(i));
        if (i > 0 && y < data.back().second) monotone_data = false;
        data.emplace_back(part.knot(i), y);
        sum += y;
    }
    const double mean = sum / static_cast<double>(part.size());
    const bool interpolant_available = monotone_data && cfg.m >= 2 * cfg.l + 1;
    Eigen::VectorXd interp = Eigen::VectorXd::Zero(space.raw_dim());
    if (interpolant_available) {
        const MonotoneSpline ps = passow_interpolant(data, cfg.l);
        const int M = space.block();
        for (size_t i = 0; i < part.pieces(); ++i) {
            const Polynomial& piece = ps.spline.piece(i);
            for (int k = 0; k < M && k <= piece.degree_bound(); ++k) {
                interp[static_cast<Eigen::Index>(i) * M + k] = piece[static_cast<size_t>(k)];
            }
        }
    }
    if (!cfg.random_start_seed) {
        return space.reduce(interpolant_available ? interp : space.raw_constant(mean));
    }
    std::mt19937_64 rng(*cfg.random_start_seed);
    const double lo = std::min(data.front().second, data.back().second);
    const double hi = std::max(data.front().second, data.back().second);
    const double c0 = detail::uniform(rng, lo - 0.5 * (hi - lo) - 0.5, hi + 0.5);
    const double slope = detail::uniform(rng, 0.0, 2.0);
    const double w = detail::uniform(rng, 0.0, 1.0);
    Eigen::VectorXd raw = space.raw_constant(c0) + slope * space.raw_identity();
    if (interpolant_available) raw += w * interp;
    return space.reduce(raw);
}

/// Feasible cone elements obtained by projecting random points onto the cone.
std::vector<Eigen::VectorXd> cone_samples(Problem& prob, int dim, int count, std::mt19937_64& rng) {
    std::vector<Eigen::VectorXd> out;
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(dim, dim);
    for (int k = 0; k < count; ++k) {
        Eigen::VectorXd target(dim);
        for (int j = 0; j < dim; ++j) target[j] = detail::uniform(rng, -1.0, 1.0);
        Eigen::VectorXd v = prob.constrained_step(I, -target, Eigen::VectorXd::Zero(dim));
        if (v.norm() > 1e-12) out.push_back(v);
    }
    return out;
}

double optimality_gap(Problem& prob, const SplineSpace& space, const Eigen::VectorXd& z, const ApproxConfig& cfg) {
    if (cfg.gap_probes == 0) return std::numeric_limits<double>::quiet_NaN();
    const int d = space.dim();
    std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(d));
    const Eigen::VectorXd one = space.reduce(space.raw_constant(1.0));
    const Eigen::VectorXd ident = space.reduce(space.raw_identity());
    const std::vector<Eigen::VectorXd> cone = cone_samples(prob, d, 6, rng);

    std::vector<Eigen::VectorXd> dirs = {one, -one, z, -z, ident};
    for (const auto& g : cone) {
        dirs.push_back(g);
        dirs.push_back(g - z);
    }
    while (static_cast<int>(dirs.size()) < cfg.gap_probes) {
        Eigen::VectorXd dir = detail::uniform(rng, -1.0, 1.0) * one + detail::uniform(rng, 0.0, 1.0) * ident -
                              detail::uniform(rng, 0.0, 1.0) * z;
        for (const auto& g : cone) dir += detail::uniform(rng, 0.0, 1.0) * g;
        dirs.push_back(dir);
    }
    dirs.resize(static_cast<size_t>(cfg.gap_probes));

    // One-sided derivative of sum w |r|^p along d, with d scaled to unit sup
    // norm on the nodes and the result scaled by (b - a) scale^(p-1).
    const auto r = prob.residuals(z);
    const auto& disc = prob.discretization();
    const double p = cfg.p;
    const double kappa = prob.kappa();
    const double unit = space.partition().interval().length() * std::pow(prob.scale(), p - 1.0);
    const int M = space.block();
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& dir : dirs) {
        const Eigen::VectorXd dc = space.coefficients(dir);
        double dmax = 0.0;
        double smooth = 0.0;
        double kink = 0.0;
        for (size_t i = 0; i < disc.size(); ++i) {
            const Eigen::VectorXd dv = disc[i].B * dc.segment(static_cast<Eigen::Index>(i) * M, M);
            dmax = std::max(dmax, dv.cwiseAbs().maxCoeff());
            for (Eigen::Index q = 0; q < dv.size(); ++q) {
                const double w = disc[i].weight[static_cast<size_t>(q)];
                const double rq = r[i][q];
                if (p == 1.0 && std::abs(rq) <= kappa) {
                    kink += w * std::abs(dv[q]);
                } else if (rq != 0.0) {
                    smooth += w * std::pow(std::abs(rq), p - 1.0) * (rq > 0.0 ? 1.0 : -1.0) * dv[q];
                }
            }
        }
        if (!(dmax > 1e-14)) continue;
        const double deriv = (kink - p * smooth) / (dmax * unit);
        worst = std::min(worst, deriv);
    }
    if (!std::isfinite(worst)) return 0.0;
    return std::max(0.0, -worst);
}

}  // namespace

ProjectionResult project(const TargetFunction& f, const Partition& partition, const ApproxConfig& cfg) {
    cfg.validate();
    const SplineSpace space(partition, cfg.m, cfg.l);
    Problem prob(f, space, cfg);
    if (const auto c = prob.constant_target()) {
        Spline flat = Spline::constant(partition, *c, cfg.m, cfg.l);
        ProjectionResult out{std::get<MonotoneSpline>(certify_spline_monotone(flat, cfg.elevation_budget)), 0.0,
                             0, 0.0, true};
        out.objective = lp_distance(f, out.spline.spline, cfg.p, cfg.quadrature_points_per_piece);
        return out;
    }
    Eigen::VectorXd z = starting_point(f, space, cfg);
    const double tol = cfg.solver_tolerance;
    const double scale = prob.scale();

    int iterations = 0;
    bool converged = true;
    auto budget = [&] { return std::max(0, cfg.max_iterations - iterations); };

    if (cfg.p == 2.0) {
        Penalty pen{cfg.p, 0.0, 0.0};
        const StageOutcome st = newton_stage(prob, pen, z, budget(), tol);
        iterations += st.iterations;
        converged = st.converged;
    } else if (cfg.p > 2.0) {
        Penalty pen{cfg.p, 0.0, 0.0};
        double previous = std::numeric_limits<double>::infinity();
        for (int round = 0;; ++round) {
            if (round > 0) prob.refine(z);
            const StageOutcome st = newton_stage(prob, pen, z, budget(), tol);
            iterations += st.iterations;
            if (!st.converged) {
                converged = false;
                break;
            }
            const double current = prob.discrete_norm(z);
            if (std::abs(current - previous) < tol * scale || round >= 6) break;
            previous = current;
            if (budget() == 0) {
                converged = false;
                break;
            }
        }
    } else {
        const bool smooth = cfg.p < 1.1;
        const double eps_floor = cfg.smoothing_epsilon * scale;
        double eps = smooth ? std::max(1e-2 * scale, eps_floor) : 0.0;
        double previous = std::numeric_limits<double>::infinity();
        int rounds_at_floor = 0;
        for (int round = 0;; ++round) {
            if (round > 0) prob.refine(z);
            Penalty pen{cfg.p, eps, smooth ? 0.0 : 1e-8 * scale};
            const StageOutcome st = newton_stage(prob, pen, z, budget(), tol);
            iterations += st.iterations;
            if (!st.converged) {
                converged = false;
                break;
            }
            const double current = prob.discrete_norm(z);
            const bool settled = std::abs(current - previous) < tol * scale;
            previous = current;
            if (smooth) {
                if (eps <= eps_floor && (settled || ++rounds_at_floor > 4)) break;
                eps = std::max(0.5 * eps, eps_floor);
            } else if (settled || round >= 6) {
                break;
            }
            if (budget() == 0) {
                converged = false;
                break;
            }
        }
    }

    Spline s = space.to_spline(z);
    SplineCertification cert = certify_spline_monotone(s, cfg.elevation_budget);
    if (std::holds_alternative<SplineRefutation>(cert)) {
        throw NotMonotone("projection produced a spline that is not nondecreasing");
    }
    ProjectionResult out{std::get<MonotoneSpline>(std::move(cert)), 0.0, iterations, 0.0, converged};
    out.objective = lp_distance(f, out.spline.spline, cfg.p, cfg.quadrature_points_per_piece);
    out.optimality_gap = optimality_gap(prob, space, z, cfg);
    return out;
}

ProjectionResult project_nonincreasing(const TargetFunction& f, const Partition& partition,
                                       const ApproxConfig& cfg) {
    ProjectionResult r = project(negated(f), partition, cfg);
    r.spline = negate(r.spline);
    return r;
}

double sup_difference(const Spline& s1, const Spline& s2, int grid) {
    const Interval iv = s1.partition().interval();
    double out = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double x = i == grid - 1 ? iv.hi : iv.lo + iv.length() * i / (grid - 1);
        out = std::max(out, std::abs(s1(x) - s2(x)));
    }
    return out;
}

EquivarianceDefects check_equivariance(const TargetFunction& f, const Partition& partition,
                                       const ApproxConfig& cfg, double c) {
    const Spline base = project(f, partition, cfg).spline.spline;
    EquivarianceDefects out;
    {
        const Spline moved = project(shifted(f, c), partition, cfg).spline.spline;
        const Interval iv = partition.interval();
        double worst = 0.0;
        for (int i = 0; i < 1001; ++i) {
            const double x = i == 1000 ? iv.hi : iv.lo + iv.length() * i / 1000.0;
            worst = std::max(worst, std::abs(moved(x) - (base(x) - c)));
        }
        out.translation_defect = worst;
    }
    if (c < 0.0) {
        out.scaling_defect = std::numeric_limits<double>::quiet_NaN();
    } else {
        const Spline stretched = project(scaled(f, c), partition, cfg).spline.spline;
        const Interval iv = partition.interval();
        double worst = 0.0;
        for (int i = 0; i < 1001; ++i) {
            const double x = i == 1000 ? iv.hi : iv.lo + iv.length() * i / 1000.0;
            worst = std::max(worst, std::abs(stretched(x) - c * base(x)));
        }
        out.scaling_defect = worst;
    }
    return out;
}

}  // namespace monospline
