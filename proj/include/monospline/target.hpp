#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "monospline/poly.hpp"

namespace monospline {

enum class Monotonicity { Nondecreasing, Nonincreasing, None };

/// Continuous function on `domain`, optionally tagged monotone and optionally
/// carrying its exact modulus of continuity on that domain.
struct TargetFunction {
    std::string id;
    std::function<double(double)> evaluator;
    Interval domain{0.0, 1.0};
    Monotonicity monotonicity = Monotonicity::None;
    std::function<double(double)> exact_modulus;  // empty when unknown

    double operator()(double x) const { return evaluator(x); }
    bool has_exact_modulus() const { return static_cast<bool>(exact_modulus); }
};

/// -f, with the monotonicity tag flipped.
TargetFunction negated(const TargetFunction& f);
/// f - c.
TargetFunction shifted(const TargetFunction& f, double c);
/// c f; a negative c flips the tag.
TargetFunction scaled(const TargetFunction& f, double c);
/// x -> f(a + b - x) on the same domain.
TargetFunction reflected(const TargetFunction& f);

/// Checks the monotonicity tag on a uniform grid of `grid` points within `tolerance`.
bool respects_tag(const TargetFunction& f, int grid = 10001, double tolerance = 1e-12);

/// Piecewise-linear interpolant of (x, y) samples with strictly increasing x.
/// Tagged Nondecreasing when y is nondecreasing; otherwise throws NonMonotoneData
/// unless `allow_nonmonotone` is set, in which case the tag is None.
TargetFunction sampled_function(std::string id, std::span<const std::pair<double, double>> samples,
                                bool allow_nonmonotone = false);

}  // namespace monospline
