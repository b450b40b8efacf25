#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "monospline/errors.hpp"
#include "monospline/spline.hpp"
#include "oracles.hpp"

using namespace monospline;
using Approx = doctest::Approx;

namespace {

std::vector<std::pair<double, double>> random_monotone_data(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> step(0.05, 1.0);
    std::uniform_real_distribution<double> rise(0.0, 2.0);
    std::bernoulli_distribution flat(0.2);
    std::vector<std::pair<double, double>> pts;
    double x = -1.0;
    double y = 0.5;
    for (int i = 0; i < n; ++i) {
        pts.emplace_back(x, y);
        x += step(rng);
        y += flat(rng) ? 0.0 : rise(rng);
    }
    return pts;
}

/// Broken-line interpolant of the data.
double broken_line(const std::vector<std::pair<double, double>>& pts, double x) {
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (x <= pts[i + 1].first) {
            const double t = (x - pts[i].first) / (pts[i + 1].first - pts[i].first);
            return pts[i].second + t * (pts[i + 1].second - pts[i].second);
        }
    }
    return pts.back().second;
}

}  // namespace

TEST_SUITE("spline") {

TEST_CASE("evaluation") {
    const Spline id(uniform(0, 1, 2), {Polynomial({0.0, 1.0})}, 1, 0);
    CHECK(id(0.3) == Approx(0.3));
    CHECK(eval_spline(id, 0.3) == Approx(0.3));

    const Spline two(uniform(0, 1, 3), {Polynomial({0.0, 0.5}), Polynomial({0.5, 0.5})}, 1, 0);
    CHECK(two(0.5) == 0.5);
    CHECK(two.piece(0)(1.0) == two.piece(1)(0.0));
    CHECK(two(0.75) == Approx(0.75));
    CHECK_THROWS_AS(two(1.01), OutOfDomain);
    CHECK_THROWS_AS(two(-0.01), OutOfDomain);
}

TEST_CASE("evaluation agrees with direct piece evaluation") {
    std::mt19937_64 rng(8);
    auto pts = random_monotone_data(rng, 12);
    const MonotoneSpline ms = passow_interpolant(pts, 1);
    const Spline& s = ms.spline;
    const Interval iv = s.partition().interval();
    for (int i = 0; i < 10001; ++i) {
        const double x = std::min(iv.hi, iv.lo + iv.length() * i / 10000.0);
        size_t k = 0;
        while (k + 1 < s.pieces().size() && x > s.partition().knot(k + 1)) ++k;
        const double t = (x - s.partition().knot(k)) / s.partition().gap(k);
        CHECK(s(x) == Approx(s.piece(k)(t)).epsilon(1e-14));
    }
}

TEST_CASE("smoothness defect") {
    const Spline single(uniform(0, 1, 2), {Polynomial({1.0, -2.0, 3.0})}, 2, 0);
    for (int j = 0; j <= 2; ++j) CHECK(smoothness_defect(single, j) == 0.0);

    const Spline hat(Partition({0.0, 1.0, 2.0}), {Polynomial({0.0, 1.0}), Polynomial({1.0, -1.0})}, 1, 0);
    CHECK(smoothness_defect(hat, 0) == 0.0);
    CHECK(smoothness_defect(hat, 1) == Approx(2.0));

    CHECK_THROWS_AS(Spline(Partition({0.0, 1.0, 2.0}), {Polynomial({0.0, 1.0}), Polynomial({1.0, -1.0})}, 2, 1),
                    SmoothnessViolation);
    CHECK_THROWS_AS(Spline(uniform(0, 1, 3), {Polynomial({0.0, 1.0})}, 1, 0), ConfigInvalid);
    CHECK_THROWS_AS(Spline(uniform(0, 1, 2), {Polynomial({0.0, 1.0, 1.0})}, 1, 0), ConfigInvalid);
    CHECK_THROWS_AS(Spline(uniform(0, 1, 2), {Polynomial({0.0, 1.0})}, 1, 1), ConfigInvalid);
}

TEST_CASE("passow interpolant examples") {
    const std::vector<std::pair<double, double>> unit = {{0.0, 0.0}, {1.0, 1.0}};
    const MonotoneSpline line = passow_interpolant(unit, 0);
    CHECK(line.spline.order() == 1);
    CHECK(line.spline.piece(0)[0] == 0.0);
    CHECK(line.spline.piece(0)[1] == Approx(1.0));

    const MonotoneSpline cubic = passow_interpolant(unit, 1);
    const auto ref = oracle::hermite_cubic(0.0, 0.0, 1.0, 0.0);
    CHECK(cubic.spline.order() == 3);
    CHECK(cubic.spline.smoothness() == 1);
    for (int k = 0; k < 4; ++k) CHECK(cubic.spline.piece(0)[k] == Approx(ref[static_cast<size_t>(k)]).scale(1.0));
    CHECK(cubic.spline.piece(0)[2] == Approx(3.0));
    CHECK(cubic.spline.piece(0)[3] == Approx(-2.0));
    CHECK(std::holds_alternative<MonotoneSpline>(certify_spline_monotone(cubic.spline)));

    const std::vector<std::pair<double, double>> flat = {{0.0, 2.5}, {0.3, 2.5}, {1.0, 2.5}};
    for (int l = 0; l <= 2; ++l) {
        const MonotoneSpline c = passow_interpolant(flat, l);
        for (int i = 0; i <= 100; ++i) CHECK(c.spline(i / 100.0) == Approx(2.5));
    }

    const std::vector<std::pair<double, double>> down = {{0.0, 1.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(passow_interpolant(down, 0), NonMonotoneData);
    const std::vector<std::pair<double, double>> dup = {{0.0, 0.0}, {0.0, 1.0}, {1.0, 2.0}};
    CHECK_THROWS_AS(passow_interpolant(dup, 1), DuplicateAbscissa);
}

TEST_CASE("passow interpolant properties") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int l = trial % 4;
        const auto pts = random_monotone_data(rng, 3 + trial % 9);
        const MonotoneSpline ms = passow_interpolant(pts, l);
        const Spline& s = ms.spline;
        CHECK(s.order() == 2 * l + 1);
        double max_step = 0.0;
        for (size_t i = 0; i < pts.size(); ++i) {
            CHECK(std::abs(s(pts[i].first) - pts[i].second) <= 1e-12 * (1.0 + std::abs(pts[i].second)));
            if (i + 1 < pts.size()) max_step = std::max(max_step, pts[i + 1].second - pts[i].second);
        }
        for (size_t i = 0; i < s.pieces().size(); ++i) {
            for (int q = 0; q < 1001; ++q) CHECK(s.piece_derivative(i, q / 1000.0, 1) >= -1e-9);
        }
        for (int j = 0; j <= std::min(l, 2); ++j) CHECK(smoothness_defect(s, j) <= 1e-9);
        for (int j = 3; j <= l; ++j) {
            double scale = 0.0;
            for (size_t i = 0; i < s.pieces().size(); ++i) {
                double terms = 0.0;
                for (int k = j; k <= s.order(); ++k) terms += std::tgamma(k + 1) / std::tgamma(k - j + 1) * std::abs(s.piece(i)[k]);
                scale = std::max(scale, terms / std::pow(s.partition().gap(i), j));
            }
            CHECK(smoothness_defect(s, j) <= 1e-9 * (1.0 + scale));
        }
        const Interval iv = s.partition().interval();
        double envelope = 0.0;
        for (int q = 0; q <= 5000; ++q) {
            const double x = std::min(iv.hi, iv.lo + iv.length() * q / 5000.0);
            envelope = std::max(envelope, std::abs(s(x) - broken_line(pts, x)));
        }
        CHECK(envelope <= max_step + 1e-12);
    }
}

TEST_CASE("certify spline") {
    const Spline down(uniform(0, 1, 2), {Polynomial({0.0, -1.0})}, 1, 0);
    const auto cert = certify_spline_monotone(down);
    REQUIRE(std::holds_alternative<SplineRefutation>(cert));
    CHECK(std::get<SplineRefutation>(cert).piece == 0);

    const Spline mixed(uniform(0, 2, 3), {Polynomial({0.0, 1.0}), Polynomial({1.0, -0.5})}, 1, 0);
    const auto c2 = certify_spline_monotone(mixed);
    REQUIRE(std::holds_alternative<SplineRefutation>(c2));
    const auto& r = std::get<SplineRefutation>(c2);
    CHECK(r.piece == 1);
    CHECK(r.x >= 1.0);
    CHECK(r.x <= 2.0);

    const auto flipped = certify_spline_monotone(down, kDefaultElevationBudget, Orientation::Nonincreasing);
    CHECK(std::holds_alternative<MonotoneSpline>(flipped));
}

TEST_CASE("negation") {
    const Spline s(uniform(0, 1, 3), {Polynomial({0.0, 0.5}), Polynomial({0.5, 0.5})}, 1, 0);
    const Spline n = negate(s);
    CHECK(n(0.3) == -s(0.3));
    const Spline nn = negate(n);
    for (size_t i = 0; i < s.pieces().size(); ++i) CHECK(nn.piece(i) == s.piece(i));

    const Spline x(uniform(0, 1, 2), {Polynomial({0.0, 1.0})}, 1, 0);
    CHECK(negate(x).piece(0)[1] == -1.0);

    const auto ms = std::get<MonotoneSpline>(certify_spline_monotone(x));
    const MonotoneSpline neg = negate(ms);
    CHECK(neg.orientation == Orientation::Nonincreasing);
    CHECK(negate(neg).orientation == Orientation::Nondecreasing);
}

}  // TEST_SUITE
