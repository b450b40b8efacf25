#include "monospline/experiments.hpp"

#include <algorithm>
#include <limits>

#include "monospline/errors.hpp"
#include "numeric_util.hpp"

namespace monospline {

Polynomial random_polynomial(int m, std::mt19937_64& rng) {
    std::vector<double> c(static_cast<size_t>(m + 1));
    for (double& v : c) v = detail::uniform(rng, -1.0, 1.0);
    return Polynomial(std::move(c));
}

Polynomial random_nondecreasing_polynomial(int m, Interval interval, std::mt19937_64& rng) {
    if (m < 1) throw ConfigInvalid("degree bound must be >= 1");
    const int d = m - 1;
    const Polynomial left({-interval.lo, 1.0});   // x - a
    const Polynomial right({interval.hi, -1.0});  // b - x
    Polynomial deriv;
    if (d % 2 == 0) {
        const Polynomial A = random_polynomial(d / 2, rng);
        deriv = A * A;
        if (d >= 2) {
            const Polynomial B = random_polynomial(d / 2 - 1, rng);
            deriv += left * right * (B * B);
        }
    } else {
        const Polynomial A = random_polynomial(d / 2, rng);
        const Polynomial B = random_polynomial(d / 2, rng);
        deriv = left * (A * A) + right * (B * B);
    }
    return antiderivative(deriv.padded(d), detail::uniform(rng, -1.0, 1.0));
}

std::vector<MarkovLemmaSummary> markov_lemma_suite(std::uint64_t seed, int trials, int max_degree) {
    std::mt19937_64 rng(seed);
    std::vector<MarkovLemmaSummary> out;
    for (int m = 1; m <= max_degree; ++m) {
        MarkovLemmaSummary summary;
        summary.m = m;
        summary.worst_slack = std::numeric_limits<double>::infinity();
        summary.worst_relative_slack = std::numeric_limits<double>::infinity();
        for (int t = 0; t < trials; ++t) {
            const double a = detail::uniform(rng, -2.0, 1.0);
            const Interval iv{a, a + detail::uniform(rng, 0.25, 2.0)};
            const Polynomial p = random_nondecreasing_polynomial(m, iv, rng);
            const MarkovLemmaCheck check = check_markov_lemma(p, iv);
            ++summary.trials;
            if (check.slack() >= -1e-9) ++summary.passed;
            const double rise = p(iv.hi) - p(iv.lo);
            if (rise > 0.0) summary.worst_relative_slack = std::min(summary.worst_relative_slack, check.slack() / rise);
            if (check.slack() < summary.worst_slack) {
                summary.worst_slack = check.slack();
                summary.worst_polynomial = p;
                summary.worst_interval = iv;
            }
        }
        out.push_back(summary);
    }
    return out;
}

MarkovInequalitySummary markov_inequality_suite(std::uint64_t seed, int trials, int max_degree) {
    std::mt19937_64 rng(seed);
    MarkovInequalitySummary summary;
    for (int t = 0; t < trials; ++t) {
        const int m = 1 + static_cast<int>(detail::uniform01(rng) * max_degree);
        const Polynomial q = random_polynomial(std::min(m, max_degree), rng);
        const MarkovInequalityCheck check = check_markov_inequality(q);
        ++summary.trials;
        if (check.holds) ++summary.passed;
        if (check.ratio > summary.worst_ratio || t == 0) {
            summary.worst_ratio = check.ratio;
            summary.worst_polynomial = q;
        }
    }
    return summary;
}

}  // namespace monospline
