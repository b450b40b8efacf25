#include <doctest.h>

#include <cmath>
#include <random>

#include "monospline/active_set_qp.hpp"
#include "monospline/analysis.hpp"
#include "monospline/approx.hpp"
#include "monospline/errors.hpp"
#include "oracles.hpp"

using namespace monospline;
using Approx = doctest::Approx;

namespace {

TargetFunction fn(std::string id, std::function<double(double)> g,
                  Monotonicity tag = Monotonicity::None) {
    TargetFunction f;
    f.id = std::move(id);
    f.evaluator = std::move(g);
    f.monotonicity = tag;
    return f;
}

ApproxConfig config(int m, int l, double p) {
    ApproxConfig c;
    c.m = m;
    c.l = l;
    c.p = p;
    return c;
}

void check_feasible(const ProjectionResult& r, int l) {
    for (const auto& cert : r.spline.certificates) CHECK_FALSE(cert.refuted());
    CHECK(std::holds_alternative<MonotoneSpline>(certify_spline_monotone(r.spline.spline)));
    for (int j = 0; j <= l; ++j) CHECK(smoothness_defect(r.spline.spline, j) <= 1e-9);
}

}  // namespace

TEST_SUITE("approx") {

TEST_CASE("lp distance") {
    const Spline zero = Spline::constant(uniform(0, 1, 2), 0.0, 1, 0);
    const auto id = fn("x", [](double x) { return x; });
    CHECK(lp_distance(id, zero, 2.0) == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
    for (int n : {1, 2, 5, 9}) {
        const auto xn = fn("xn", [n](double x) { return std::pow(x, n); });
        CHECK(lp_distance(xn, zero, 1.0) == Approx(1.0 / (n + 1)).epsilon(1e-13));
    }
    const Spline line(uniform(0, 1, 3), {Polynomial({0.0, 0.5}), Polynomial({0.5, 0.5})}, 1, 0);
    CHECK(lp_distance(id, line, 1.0) <= 1e-12);
    CHECK(lp_distance(id, line, 3.0) <= 1e-12);

    // Kinked residual: |x - 1/3| has its crossing inside a piece.
    const auto shifted_id = fn("x", [](double x) { return x - 1.0 / 3.0; });
    const double ref = oracle::simpson_lp([](double x) { return x - 1.0 / 3.0; }, 0.0, 1.0, 1.5);
    CHECK(lp_distance(shifted_id, zero, 1.5) == Approx(ref).epsilon(1e-9));
}

TEST_CASE("projection examples") {
    const auto c = fn("c", [](double) { return 0.7; }, Monotonicity::Nondecreasing);
    for (double p : {1.0, 2.0, 3.0}) {
        const auto r = project(c, uniform(0, 1, 5), config(2, 1, p));
        CHECK(r.objective <= 1e-9);
        CHECK(sup_difference(r.spline.spline, Spline::constant(uniform(0, 1, 5), 0.7, 2, 1)) <= 1e-8);
    }

    const auto sq = fn("sq", [](double x) { return x * x; }, Monotonicity::Nondecreasing);
    const auto r = project(sq, uniform(0, 1, 2), config(1, 0, 2.0));
    const auto [beta, alpha] = oracle::l2_line_on_unit([](double x) { return x * x; });
    CHECK(r.spline.spline.piece(0)[0] == Approx(beta).epsilon(1e-9));
    CHECK(r.spline.spline.piece(0)[1] == Approx(alpha).epsilon(1e-9));
    CHECK(r.objective == Approx(oracle::simpson_lp([](double x) { return x * x - x + 1.0 / 6.0; }, 0, 1, 2.0))
                             .epsilon(1e-9));
    CHECK(r.converged);

    const auto neg = fn("-x", [](double x) { return -x; });
    const auto rn = project(neg, uniform(0, 1, 2), config(1, 0, 2.0));
    CHECK(rn.spline.spline.piece(0)[0] == Approx(-0.5).epsilon(1e-9));
    CHECK(std::abs(rn.spline.spline.piece(0)[1]) <= 1e-9);
}

TEST_CASE("idempotence") {
    const Spline s(Partition({0.0, 0.3, 1.0}), {Polynomial({0.0, 0.3, 0.0}), Polynomial({0.3, 0.0, 0.7})}, 2, 0);
    const auto f = fn("s", [s](double x) { return s(x); }, Monotonicity::Nondecreasing);
    for (double p : {1.0, 2.0, 3.0}) {
        const auto r = project(f, s.partition(), config(2, 0, p));
        CHECK(r.objective <= 1e-8);
        CHECK(sup_difference(r.spline.spline, s) <= 1e-7);
    }
}

TEST_CASE("nonincreasing projection") {
    const auto sq = fn("sq", [](double x) { return x * x; });
    const auto r = project_nonincreasing(sq, uniform(0, 1, 2), config(1, 0, 2.0));
    CHECK(r.spline.orientation == Orientation::Nonincreasing);
    CHECK(r.spline.spline.piece(0)[0] == Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(std::abs(r.spline.spline.piece(0)[1]) <= 1e-9);

    const auto c = fn("c", [](double) { return -2.0; });
    const auto rc = project_nonincreasing(c, uniform(0, 1, 4), config(2, 0, 2.0));
    CHECK(sup_difference(rc.spline.spline, Spline::constant(uniform(0, 1, 4), -2.0, 2, 0)) <= 1e-9);

    const auto sqrt_f = find_builtin("sqrt");
    const auto once = project(sqrt_f, uniform(0, 1, 5), config(2, 0, 2.0));
    const auto twice = project_nonincreasing(negated(sqrt_f), uniform(0, 1, 5), config(2, 0, 2.0));
    CHECK(sup_difference(negate(twice.spline.spline), once.spline.spline) <= 1e-12);
}

TEST_CASE("oracle agreement examples") {
    const auto sq = find_builtin("square");
    const auto neg = fn("-x", [](double x) { return -x; });
    const auto ss = find_builtin("smoothstep");
    const struct {
        const TargetFunction* f;
        Partition partition;
    } cases[] = {{&sq, uniform(0, 1, 2)}, {&neg, uniform(0, 1, 2)}, {&ss, uniform(0, 1, 3)}};
    for (const auto& c : cases) {
        const auto cfg = config(1, 0, 2.0);
        const auto r = project(*c.f, c.partition, cfg);
        const auto o = oracle_project(*c.f, c.partition, cfg);
        CHECK(std::abs(r.objective - o.objective) <= 1e-4);
        CHECK(sup_difference(r.spline.spline, o.spline.spline) <= 1e-3);
    }
    CHECK_THROWS_AS(oracle_project(sq, uniform(0, 1, 6), config(2, 0, 2.0)), InstanceTooLarge);
}

TEST_CASE("equivariance examples") {
    const auto f = find_builtin("sqrt");
    const auto p = uniform(0, 1, 9);
    const auto cfg = config(2, 0, 2.0);
    const auto zero = check_equivariance(f, p, cfg, 0.0);
    CHECK(zero.translation_defect <= 2.0 * cfg.solver_tolerance);
    CHECK(zero.scaling_defect <= 2.0 * cfg.solver_tolerance);
    CHECK(check_equivariance(f, p, cfg, 3.0).translation_defect <= 1e-5);
    CHECK(check_equivariance(f, p, cfg, 2.0).scaling_defect <= 1e-5);
    CHECK(std::isnan(check_equivariance(f, p, cfg, -1.0).scaling_defect));
}

TEST_CASE("feasibility and first-order optimality") {
    const char* ids[] = {"sqrt", "cbrt", "plateau", "exp"};
    const int ml[][2] = {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 1}, {5, 2}};
    for (const char* id : ids) {
        const auto& f = find_builtin(id);
        for (const auto& [m, l] : ml) {
            for (double p : {1.0, 2.0, 3.0}) {
                CAPTURE(id);
                CAPTURE(m);
                CAPTURE(l);
                CAPTURE(p);
                const auto cfg = config(m, l, p);
                const auto r = project(f, uniform(0, 1, 6), cfg);
                CHECK(r.converged);
                CHECK(r.objective >= 0.0);
                check_feasible(r, l);
                CHECK(r.optimality_gap <= 10.0 * cfg.solver_tolerance);
            }
        }
    }
}

TEST_CASE("uniqueness across random starts") {
    const auto& f = find_builtin("sqrt");
    const auto part = uniform(0, 1, 5);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        auto cfg = config(2, 0, p);
        const auto base = project(f, part, cfg);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            cfg.random_start_seed = seed;
            const auto r = project(f, part, cfg);
            if (p == 1.0) {
                CHECK(std::abs(r.objective - base.objective) <= 1e-6);
            } else {
                CHECK(sup_difference(r.spline.spline, base.spline.spline) <= 1e-5);
            }
        }
    }
}

TEST_CASE("never worse than the monotone interpolant") {
    for (const char* id : {"sqrt", "square", "smoothstep", "plateau", "cbrt"}) {
        const auto& f = find_builtin(id);
        for (int l = 0; l <= 1; ++l) {
            for (double p : {1.0, 2.0, 3.0}) {
                const auto part = uniform(0, 1, 7);
                std::vector<std::pair<double, double>> pts;
                for (double x : part.knots()) pts.emplace_back(x, f(x));
                const auto interp = passow_interpolant(pts, l);
                const auto r = project(f, part, config(2 * l + 1, l, p));
                CHECK(r.objective <= lp_distance(f, interp.spline, p) + 1e-8);
            }
        }
    }
}

TEST_CASE("inactive monotone constraint") {
    const auto& f = find_builtin("exp");
    const auto part = uniform(0, 1, 5);
    for (const auto& [m, l] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
        const auto coeffs = oracle::ls_spline(f.evaluator, {part.knots().begin(), part.knots().end()}, m, l);
        std::vector<Polynomial> pieces;
        for (const auto& c : coeffs) pieces.emplace_back(c);
        const Spline ls(part, pieces, m, l);
        REQUIRE(std::holds_alternative<MonotoneSpline>(certify_spline_monotone(ls)));
        const auto r = project(f, part, config(m, l, 2.0));
        CHECK(sup_difference(r.spline.spline, ls) <= 1e-6);
    }
}

TEST_CASE("quadrature refinement") {
    for (const char* id : {"sqrt", "cbrt", "plateau", "smoothstep"}) {
        for (double p : {1.0, 2.0, 3.0}) {
            auto cfg = config(2, 0, p);
            const auto coarse = project(find_builtin(id), uniform(0, 1, 9), cfg);
            cfg.quadrature_points_per_piece *= 2;
            const auto fine = project(find_builtin(id), uniform(0, 1, 9), cfg);
            CHECK(std::abs(coarse.objective - fine.objective) < 1e-8);
        }
    }
}

TEST_CASE("config validation") {
    const auto& f = find_builtin("sqrt");
    CHECK_THROWS_AS(project(f, uniform(0, 1, 3), config(1, 0, 0.5)), ConfigInvalid);
    CHECK_THROWS_AS(project(f, uniform(0, 1, 3), config(2, 2, 2.0)), ConfigInvalid);
    CHECK_THROWS_AS(project(f, uniform(0, 1, 3), config(0, 0, 2.0)), ConfigInvalid);
    auto bad = config(1, 0, 2.0);
    bad.solver_tolerance = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
    CHECK_NOTHROW(config(3, 1, 1.0).validate());
}

TEST_CASE("active-set qp") {
    // min 1/2 |x|^2 - x0 - x1  s.t.  x0 + x1 <= 1, x >= 0  ->  (1/2, 1/2).
    Eigen::MatrixXd H = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd c(2);
    c << -1.0, -1.0;
    Eigen::MatrixXd A(3, 2);
    A << -1, -1, 1, 0, 0, 1;
    Eigen::VectorXd b(3);
    b << -1, 0, 0;
    const ActiveSetQp qp(H, c);
    REQUIRE(qp.factored());
    const QpResult r = qp.solve(A, b);
    CHECK(r.optimal);
    CHECK(r.x[0] == Approx(0.5));
    CHECK(r.x[1] == Approx(0.5));
    REQUIRE(r.active_set.size() == 1);
    CHECK(r.active_set[0] == 0);
    CHECK(r.multipliers[0] == Approx(0.5));

    Eigen::MatrixXd Ai(2, 2);
    Ai << 1, 0, -1, 0;
    Eigen::VectorXd bi(2);
    bi << 1, 0;
    CHECK(qp.solve(Ai, bi).infeasible);

    // Separator supplying x0 <= 0.25 lazily.
    int calls = 0;
    const ActiveSetQp::Separator cut = [&](const Eigen::VectorXd& x, Eigen::MatrixXd& M, Eigen::VectorXd& v) {
        ++calls;
        if (x[0] <= 0.25 + 1e-12) return 0;
        M.conservativeResize(M.rows() + 1, Eigen::NoChange);
        M.row(M.rows() - 1) << -1.0, 0.0;
        v.conservativeResize(v.size() + 1);
        v[v.size() - 1] = -0.25;
        return 1;
    };
    const QpResult rs = qp.solve(A, b, cut);
    CHECK(rs.optimal);
    CHECK(calls >= 1);
    CHECK(rs.x[0] == Approx(0.25));
    CHECK(rs.x[1] == Approx(0.75));
    CHECK(rs.A.rows() == 4);
}

}  // TEST_SUITE
