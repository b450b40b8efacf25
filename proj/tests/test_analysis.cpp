#include <doctest.h>

#include <cmath>

#include "monospline/analysis.hpp"
#include "monospline/errors.hpp"
#include "oracles.hpp"

using namespace monospline;
using Approx = doctest::Approx;

namespace {

TargetFunction plain(std::function<double(double)> g, Monotonicity tag = Monotonicity::None) {
    TargetFunction f;
    f.id = "g";
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

std::vector<Partition> uniform_sizes(std::vector<int> sizes) {
    return sequence(PartitionKind::Uniform, 0.0, 1.0, sizes);
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("modulus of continuity") {
    const auto id = plain([](double x) { return x; }, Monotonicity::Nondecreasing);
    for (double d : {0.01, 0.3, 1.0}) CHECK(modulus_of_continuity(id, d) == Approx(d).epsilon(1e-12));
    const auto c = plain([](double) { return 4.0; });
    CHECK(modulus_of_continuity(c, 0.2) == 0.0);

    const auto root = plain([](double x) { return std::sqrt(x); }, Monotonicity::Nondecreasing);
    for (double d : {0.04, 0.1, 0.5}) {
        CHECK(modulus_of_continuity(root, d) == Approx(std::sqrt(d)).epsilon(1e-9));
        CHECK(modulus_of_continuity(root, d) == Approx(oracle::brute_modulus(root.evaluator, 0, 1, d)).epsilon(1e-3));
    }

    // Untagged, non-monotone: the two-sided search.
    const auto wave = plain([](double x) { return std::sin(6.0 * x); });
    for (double d : {0.05, 0.2, 0.6}) {
        const double ref = oracle::brute_modulus(wave.evaluator, 0, 1, d, 2001);
        CHECK(modulus_of_continuity(wave, d) >= ref - 1e-9);
        CHECK(modulus_of_continuity(wave, d) <= ref + 1e-3);
    }

    CHECK_THROWS_AS(modulus_of_continuity(id, 0.0), InvalidDelta);
    CHECK_THROWS_AS(modulus_of_continuity(id, -0.1), InvalidDelta);
    CHECK_THROWS_AS(modulus_of_continuity(id, 1.5), InvalidDelta);
}

TEST_CASE("sup distance") {
    const Spline zero = Spline::constant(uniform(0, 1, 2), 0.0);
    const auto id = plain([](double x) { return x; });
    CHECK(sup_distance(id, zero, {0.0, 1.0}) == Approx(1.0));
    const Spline line(uniform(0, 1, 2), {Polynomial({0.0, 1.0})}, 1, 0);
    CHECK(sup_distance(id, line, {0.0, 1.0}) <= 1e-12);
    for (int n : {1, 5, 40, 99}) {
        const auto xn = plain([n](double x) { return std::pow(x, n); });
        CHECK(sup_distance(xn, zero, {0.0, 1.0}) == Approx(1.0));
    }
    const auto bump = plain([](double x) { return std::exp(-1e4 * (x - 0.31416) * (x - 0.31416)); });
    CHECK(sup_distance(bump, zero, {0.0, 1.0}) == Approx(1.0).epsilon(1e-6));
    CHECK(sup_distance(id, zero, {0.2, 0.5}) == Approx(0.5));
    CHECK_THROWS_AS(sup_distance(id, zero, {-0.1, 0.5}), BadInterval);
    CHECK_THROWS_AS(sup_distance(id, zero, {0.5, 1.2}), BadInterval);
    CHECK_THROWS_AS(sup_distance(id, zero, {0.6, 0.5}), BadInterval);
}

TEST_CASE("builtin catalog") {
    const auto& all = builtin_functions();
    CHECK(all.size() >= 8);
    for (const char* id : {"identity", "constant", "square", "sqrt", "cbrt", "smoothstep", "plateau", "exp"}) {
        CHECK_NOTHROW(find_builtin(id));
    }
    CHECK_THROWS_AS(find_builtin("nope"), ConfigInvalid);
    for (const auto& f : all) {
        CAPTURE(f.id);
        CHECK(f.monotonicity == Monotonicity::Nondecreasing);
        CHECK(respects_tag(f));
        REQUIRE(f.has_exact_modulus());
        for (double d : {0.01, 0.1, 1.0 / 3.0, 0.5, 1.0}) {
            const double ref = oracle::brute_modulus(f.evaluator, 0.0, 1.0, d, 1201);
            CHECK(f.exact_modulus(d) >= ref - 1e-12);
            CHECK(f.exact_modulus(d) <= ref + 5e-3);
        }
    }
    CHECK(find_builtin("sqrt").exact_modulus(0.04) == Approx(0.2));

    // The flat middle third adds nothing: omega(1/3) equals one steep part's rise.
    const auto& plateau = find_builtin("plateau");
    const double steep = plateau(1.0 / 3.0) - plateau(0.0);
    CHECK(plateau.exact_modulus(1.0 / 3.0) == Approx(steep).epsilon(1e-9));
    CHECK(plateau.exact_modulus(0.5) == Approx(oracle::brute_modulus(plateau.evaluator, 0, 1, 0.5, 3001)).epsilon(1e-3));
}

TEST_CASE("inner interval") {
    const Interval in = inner_interval({0.0, 1.0});
    CHECK(in.lo == Approx(0.1));
    CHECK(in.hi == Approx(0.9));
    CHECK_THROWS_AS(inner_interval({0.0, 1.0}, 1.0), ConfigInvalid);
}

TEST_CASE("convergence of a constant") {
    const auto& c = find_builtin("constant");
    const auto rep = run_convergence(c, uniform_sizes({5, 9, 17}), config(2, 0, 2.0), {0.1, 0.9});
    REQUIRE(rep.rows.size() == 3);
    for (const auto& r : rep.rows) {
        CHECK(r.lp_error <= 1e-9);
        CHECK(r.sup_error_global <= 1e-9);
        CHECK(r.sup_error_inner <= 1e-9);
        CHECK(std::abs(r.endpoint_a - 0.5) <= 1e-9);
        CHECK(std::abs(r.endpoint_b - 0.5) <= 1e-9);
    }
    CHECK_FALSE(first_invariant_violation(rep).has_value());
}

TEST_CASE("convergence of sqrt") {
    const auto& f = find_builtin("sqrt");
    const auto parts = uniform_sizes({5, 9, 17, 33, 65});
    const auto rep = run_convergence(f, parts, config(1, 0, 2.0), {0.1, 0.9});
    REQUIRE(rep.rows.size() == 5);
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& r = rep.rows[i];
        REQUIRE(r.prop3_bound.has_value());
        CHECK(*r.prop3_bound == Approx(std::sqrt(parts[i].norm())));
        CHECK(r.lp_error <= *r.prop3_bound);
        CHECK(r.sup_error_inner <= r.sup_error_global);
        CHECK(r.converged);
        if (i > 0) {
            CHECK(r.partition_norm < rep.rows[i - 1].partition_norm);
            CHECK(r.sup_error_global < rep.rows[i - 1].sup_error_global);
        }
        // Never worse than the interpolant on the same knots.
        std::vector<std::pair<double, double>> pts;
        for (double x : parts[i].knots()) pts.emplace_back(x, f(x));
        CHECK(r.lp_error <= lp_distance(f, passow_interpolant(pts, 0).spline, 2.0) + 1e-8);
    }
    CHECK_FALSE(first_invariant_violation(rep).has_value());
}

TEST_CASE("rows ordered by decreasing norm and independent of workers") {
    const auto& f = find_builtin("plateau");
    const auto parts = uniform_sizes({5, 9, 17, 33});
    std::vector<Partition> shuffled = {parts[2], parts[0], parts[3], parts[1]};
    const auto one = run_convergence(f, shuffled, config(2, 0, 3.0), {0.1, 0.9}, 1);
    const auto four = run_convergence(f, shuffled, config(2, 0, 3.0), {0.1, 0.9}, 4);
    REQUIRE(one.rows.size() == 4);
    for (size_t i = 0; i < 4; ++i) {
        if (i > 0) CHECK(one.rows[i].partition_norm < one.rows[i - 1].partition_norm);
        CHECK(one.rows[i].partition_size == four.rows[i].partition_size);
        CHECK(one.rows[i].lp_error == four.rows[i].lp_error);
        CHECK(one.rows[i].sup_error_global == four.rows[i].sup_error_global);
        CHECK(one.rows[i].endpoint_a == four.rows[i].endpoint_a);
    }
}

TEST_CASE("bound column and invariant checks") {
    const auto& f = find_builtin("smoothstep");
    const auto rep = run_convergence(f, uniform_sizes({5, 9}), config(2, 1, 2.0), {0.1, 0.9});
    CHECK_FALSE(rep.has_prop3_bound());
    for (const auto& r : rep.rows) CHECK_FALSE(r.prop3_bound.has_value());

    ConvergenceReport fake;
    fake.config = config(1, 0, 2.0);
    ConvergenceRow ok;
    ok.lp_error = 0.1;
    ok.prop3_bound = 0.1 + 5e-7;
    ok.sup_error_global = 0.3;
    ok.sup_error_inner = 0.2;
    ConvergenceRow over = ok;
    over.lp_error = 0.2;
    ConvergenceRow inverted = ok;
    inverted.sup_error_inner = 0.4;
    fake.rows = {ok, ok, over};
    CHECK(first_invariant_violation(fake) == std::optional<size_t>(2));
    fake.rows = {ok, inverted};
    CHECK(first_invariant_violation(fake) == std::optional<size_t>(1));
    fake.rows = {ok};
    CHECK_FALSE(first_invariant_violation(fake).has_value());

    CHECK_THROWS_AS(run_convergence(f, uniform_sizes({5}), config(1, 0, 2.0), {0.0, 0.9}), BadInterval);
    CHECK_THROWS_AS(run_convergence(f, uniform_sizes({5}), config(1, 0, 2.0), {0.5, 0.4}), BadInterval);
}

TEST_CASE("counterexample") {
    const auto rows = counterexample_xn({1, 4, 9}, 1.0);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].lp_norm == Approx(0.5).epsilon(1e-10));
    CHECK(rows[2].lp_norm == Approx(0.1).epsilon(1e-10));
    for (const auto& r : rows) CHECK(r.sup_norm == Approx(1.0).epsilon(1e-12));
    const auto two = counterexample_xn({4}, 2.0);
    CHECK(two[0].lp_norm == Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(two[0].closed_form == Approx(1.0 / 3.0).epsilon(1e-14));

    std::vector<int> ns;
    for (int n = 1; n <= 99; ++n) ns.push_back(n);
    const auto all = counterexample_xn(ns, 1.0);
    for (size_t i = 0; i < all.size(); ++i) {
        CHECK(std::abs(all[i].lp_norm - all[i].closed_form) <= 1e-8);
        CHECK(all[i].sup_norm >= 1.0 - 1e-9);
        CHECK(all[i].sup_norm <= 1.0);
        if (i > 0) CHECK(all[i].lp_norm < all[i - 1].lp_norm);
    }
    CHECK(all.back().lp_norm < 0.05);
    CHECK_THROWS_AS(counterexample_xn({0}, 1.0), ConfigInvalid);
    CHECK_THROWS_AS(counterexample_xn({1}, 0.5), ConfigInvalid);
}

}  // TEST_SUITE
