#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monospline/poly.hpp"

namespace monospline {

/// Strictly increasing knot vector a = k_0 < k_1 < ... < k_{n-1} = b, n >= 2.
class Partition {
public:
    /// Throws TooFewKnots (n < 2) or InvalidInterval (not strictly increasing).
    explicit Partition(std::vector<double> knots);

    std::span<const double> knots() const { return knots_; }
    double knot(size_t i) const { return knots_[i]; }
    size_t size() const { return knots_.size(); }
    size_t pieces() const { return knots_.size() - 1; }
    double a() const { return knots_.front(); }
    double b() const { return knots_.back(); }
    Interval interval() const { return {a(), b()}; }
    double gap(size_t i) const { return knots_[i + 1] - knots_[i]; }
    double norm() const;

    /// Index of the piece containing x in [a, b]; interior knots belong to the
    /// piece on their left. Throws OutOfDomain outside [a, b].
    size_t locate(double x) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<double> knots_;
};

enum class PartitionKind { Uniform, Chebyshev, Random };

std::string_view to_string(PartitionKind kind);
/// Throws ParseError on unknown names.
PartitionKind parse_partition_kind(std::string_view name);

Partition uniform(double a, double b, int k);
/// Interior knots are the k-2 Chebyshev points of the first kind mapped to [a, b].
Partition chebyshev_first_kind(double a, double b, int k);
/// Sorted uniform draws with minimum gap (b-a)*1e-6; deterministic in `seed`.
Partition random_partition(double a, double b, int k, std::uint64_t seed);

/// Maximum gap.
double norm(const Partition& partition);

/// knots b_i = a + b - k_{n-1-i}.
Partition reflect(const Partition& partition);

/// One partition per size. `sizes` must be strictly increasing and >= 2.
std::vector<Partition> sequence(PartitionKind kind, double a, double b, std::span<const int> sizes,
                                std::uint64_t seed = 0);

}  // namespace monospline
