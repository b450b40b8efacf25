#include "monospline/target.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "monospline/errors.hpp"

namespace monospline {

namespace {

Monotonicity flip(Monotonicity m) {
    switch (m) {
        case Monotonicity::Nondecreasing: return Monotonicity::Nonincreasing;
        case Monotonicity::Nonincreasing: return Monotonicity::Nondecreasing;
        case Monotonicity::None: return Monotonicity::None;
    }
    return Monotonicity::None;
}

}  // namespace

TargetFunction negated(const TargetFunction& f) {
    TargetFunction g = f;
    g.id = "neg(" + f.id + ")";
    g.evaluator = [e = f.evaluator](double x) { return -e(x); };
    g.monotonicity = flip(f.monotonicity);
    return g;
}

TargetFunction shifted(const TargetFunction& f, double c) {
    TargetFunction g = f;
    g.id = f.id + "-shift";
    g.evaluator = [e = f.evaluator, c](double x) { return e(x) - c; };
    return g;
}

TargetFunction scaled(const TargetFunction& f, double c) {
    TargetFunction g = f;
    g.id = f.id + "-scaled";
    g.evaluator = [e = f.evaluator, c](double x) { return c * e(x); };
    if (c < 0.0) g.monotonicity = flip(f.monotonicity);
    if (c == 0.0) g.monotonicity = Monotonicity::Nondecreasing;
    if (f.exact_modulus) {
        g.exact_modulus = [w = f.exact_modulus, c](double d) { return std::abs(c) * w(d); };
    }
    return g;
}

TargetFunction reflected(const TargetFunction& f) {
    TargetFunction g = f;
    g.id = "reflect(" + f.id + ")";
    const double s = f.domain.lo + f.domain.hi;
    g.evaluator = [e = f.evaluator, s](double x) { return e(s - x); };
    g.monotonicity = flip(f.monotonicity);
    return g;
}

bool respects_tag(const TargetFunction& f, int grid, double tolerance) {
    if (f.monotonicity == Monotonicity::None) return true;
    const double sign = f.monotonicity == Monotonicity::Nondecreasing ? 1.0 : -1.0;
    double prev = f(f.domain.lo);
    for (int i = 1; i < grid; ++i) {
        const double x = i == grid - 1 ? f.domain.hi : f.domain.lo + f.domain.length() * i / (grid - 1);
        const double v = f(x);
        if (sign * (v - prev) < -tolerance) return false;
        prev = v;
    }
    return true;
}

TargetFunction sampled_function(std::string id, std::span<const std::pair<double, double>> samples,
                                bool allow_nonmonotone) {
    if (samples.size() < 2) throw TooFewKnots("sampled function needs at least 2 samples");
    std::vector<double> xs;
    std::vector<double> ys;
    bool nondecreasing = true;
    for (size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i].first) || !std::isfinite(samples[i].second)) {
            throw ParseError("sample values must be finite");
        }
        if (i > 0 && !(samples[i].first > samples[i - 1].first)) {
            throw DuplicateAbscissa("sample abscissae must be strictly increasing");
        }
        if (i > 0 && samples[i].second < samples[i - 1].second) nondecreasing = false;
        xs.push_back(samples[i].first);
        ys.push_back(samples[i].second);
    }
    if (!nondecreasing && !allow_nonmonotone) {
        throw NonMonotoneData("sample ordinates must be nondecreasing");
    }
    TargetFunction f;
    f.id = std::move(id);
    f.domain = {xs.front(), xs.back()};
    f.monotonicity = nondecreasing ? Monotonicity::Nondecreasing : Monotonicity::None;
    f.evaluator = [xs, ys](double x) {
        if (x <= xs.front()) return ys.front();
        if (x >= xs.back()) return ys.back();
        const size_t i = static_cast<size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin()) - 1;
        const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
        return ys[i] + t * (ys[i + 1] - ys[i]);
    };
    return f;
}

}  // namespace monospline
