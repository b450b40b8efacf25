#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "monospline/poly.hpp"

namespace monospline {

/// Random polynomial of degree at most m that is nondecreasing on `interval`
/// by construction: the antiderivative of A^2 + (x-a)(b-x) B^2 (even
/// derivative degree) or (x-a) A^2 + (b-x) B^2 (odd derivative degree), with
/// coefficients of A and B uniform in [-1, 1], plus a uniform constant.
Polynomial random_nondecreasing_polynomial(int m, Interval interval, std::mt19937_64& rng);

/// Polynomial of degree bound m with coefficients uniform in [-1, 1].
Polynomial random_polynomial(int m, std::mt19937_64& rng);

struct MarkovLemmaSummary {
    int m = 0;
    int trials = 0;
    int passed = 0;
    /// Smallest rhs - lhs.
    double worst_slack = 0.0;
    /// Smallest (rhs - lhs) / (P(b) - P(a)) over instances with P(b) > P(a).
    double worst_relative_slack = 0.0;
    Polynomial worst_polynomial;
    Interval worst_interval;
};

struct MarkovInequalitySummary {
    int trials = 0;
    int passed = 0;
    /// Largest max|Q'| / (m^2 max|Q|).
    double worst_ratio = 0.0;
    Polynomial worst_polynomial;
};

/// `trials` random nondecreasing polynomials for each m in 1..max_degree on
/// random intervals inside [-2, 3].
std::vector<MarkovLemmaSummary> markov_lemma_suite(std::uint64_t seed, int trials = 1000, int max_degree = 5);

/// `trials` random polynomials with degree bound uniform in 1..max_degree.
MarkovInequalitySummary markov_inequality_suite(std::uint64_t seed, int trials = 1000, int max_degree = 5);

}  // namespace monospline
