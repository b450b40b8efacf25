#include "monospline/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "monospline/errors.hpp"
#include "numeric_util.hpp"

namespace monospline {

namespace {

void check_args(double a, double b, int k) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidInterval("partition interval requires finite a < b");
    }
    if (k < 2) throw TooFewKnots("partition requires at least 2 knots");
}

}  // namespace

Partition::Partition(std::vector<double> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw TooFewKnots("partition requires at least 2 knots");
    for (size_t i = 0; i + 1 < knots_.size(); ++i) {
        if (!(knots_[i] < knots_[i + 1]) || !std::isfinite(knots_[i]) || !std::isfinite(knots_[i + 1])) {
            throw InvalidInterval("partition knots must be finite and strictly increasing");
        }
    }
}

double Partition::norm() const {
    double g = 0.0;
    for (size_t i = 0; i + 1 < knots_.size(); ++i) g = std::max(g, gap(i));
    return g;
}

size_t Partition::locate(double x) const {
    if (!(x >= a() && x <= b())) throw OutOfDomain("point outside the partition interval");
    // First knot >= x; x in (k_{i-1}, k_i] belongs to piece i-1.
    auto it = std::lower_bound(knots_.begin(), knots_.end(), x);
    const size_t idx = static_cast<size_t>(it - knots_.begin());
    return idx == 0 ? 0 : idx - 1;
}

std::string_view to_string(PartitionKind kind) {
    switch (kind) {
        case PartitionKind::Uniform: return "uniform";
        case PartitionKind::Chebyshev: return "chebyshev";
        case PartitionKind::Random: return "random";
    }
    return "uniform";
}

PartitionKind parse_partition_kind(std::string_view name) {
    if (name == "uniform") return PartitionKind::Uniform;
    if (name == "chebyshev") return PartitionKind::Chebyshev;
    if (name == "random") return PartitionKind::Random;
    throw ParseError("unknown partition kind '" + std::string(name) + "'");
}

Partition uniform(double a, double b, int k) {
    check_args(a, b, k);
    std::vector<double> knots(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) knots[i] = a + (b - a) * i / (k - 1);
    knots.back() = b;
    return Partition(std::move(knots));
}

Partition chebyshev_first_kind(double a, double b, int k) {
    check_args(a, b, k);
    const int n = k - 2;
    std::vector<double> knots;
    knots.reserve(static_cast<size_t>(k));
    knots.push_back(a);
    // cos((2i-1) pi / (2n)) for i = n..1 is increasing.
    for (int i = n; i >= 1; --i) {
        const double c = std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * n));
        knots.push_back(0.5 * (a + b) + 0.5 * (b - a) * c);
    }
    knots.push_back(b);
    return Partition(std::move(knots));
}

Partition random_partition(double a, double b, int k, std::uint64_t seed) {
    check_args(a, b, k);
    const double min_gap = (b - a) * 1e-6;
    std::mt19937_64 engine(seed);
    std::vector<double> knots(static_cast<size_t>(k));
    for (int attempt = 0; attempt < 10000; ++attempt) {
        knots.front() = a;
        knots.back() = b;
        for (int i = 1; i + 1 < k; ++i) knots[i] = detail::uniform(engine, a, b);
        std::sort(knots.begin() + 1, knots.end() - 1);
        bool ok = true;
        for (int i = 0; i + 1 < k && ok; ++i) ok = knots[i + 1] - knots[i] >= min_gap;
        if (ok) return Partition(knots);
    }
    throw InvalidInterval("could not draw a random partition honoring the minimum gap");
}

double norm(const Partition& partition) { return partition.norm(); }

Partition reflect(const Partition& partition) {
    const auto knots = partition.knots();
    const size_t n = knots.size();
    const double a = partition.a();
    const double b = partition.b();
    std::vector<double> out(n);
    out.front() = a;
    out.back() = b;
    for (size_t i = 1; i + 1 < n; ++i) out[i] = a + b - knots[n - 1 - i];
    return Partition(std::move(out));
}

std::vector<Partition> sequence(PartitionKind kind, double a, double b, std::span<const int> sizes,
                                std::uint64_t seed) {
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2) throw TooFewKnots("partition sizes must be >= 2");
        if (i > 0 && sizes[i] <= sizes[i - 1]) throw ConfigInvalid("partition sizes must be strictly increasing");
    }
    std::vector<Partition> out;
    out.reserve(sizes.size());
    for (size_t i = 0; i < sizes.size(); ++i) {
        switch (kind) {
            case PartitionKind::Uniform: out.push_back(uniform(a, b, sizes[i])); break;
            case PartitionKind::Chebyshev: out.push_back(chebyshev_first_kind(a, b, sizes[i])); break;
            case PartitionKind::Random: out.push_back(random_partition(a, b, sizes[i], seed + i)); break;
        }
    }
    return out;
}

}  // namespace monospline
