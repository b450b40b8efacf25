#include <algorithm>
#include <cmath>
#include <numbers>

#include "monospline/analysis.hpp"
#include "monospline/errors.hpp"

namespace monospline {

namespace {

TargetFunction make(std::string id, std::function<double(double)> f, std::function<double(double)> modulus) {
    TargetFunction t;
    t.id = std::move(id);
    t.evaluator = std::move(f);
    t.domain = {0.0, 1.0};
    t.monotonicity = Monotonicity::Nondecreasing;
    // Moduli are stated for 0 < delta <= 1; larger windows see the whole interval.
    t.exact_modulus = [w = std::move(modulus)](double delta) { return w(std::min(delta, 1.0)); };
    return t;
}

double smoothstep(double x) { return x * x * (3.0 - 2.0 * x); }

double plateau(double x) {
    if (x <= 1.0 / 3.0) return 1.5 * x;
    if (x <= 2.0 / 3.0) return 0.5;
    return 0.5 + 1.5 * (x - 2.0 / 3.0);
}

std::vector<TargetFunction> build() {
    const double e = std::numbers::e;
    std::vector<TargetFunction> out;
    out.push_back(make("identity", [](double x) { return x; }, [](double d) { return d; }));
    out.push_back(make("constant", [](double) { return 0.5; }, [](double) { return 0.0; }));
    out.push_back(make("square", [](double x) { return x * x; }, [](double d) { return 2.0 * d - d * d; }));
    out.push_back(make("sqrt", [](double x) { return std::sqrt(std::max(x, 0.0)); },
                       [](double d) { return std::sqrt(d); }));
    out.push_back(make("cbrt", [](double x) { return std::cbrt(x); }, [](double d) { return std::cbrt(d); }));
    out.push_back(make("smoothstep", smoothstep,
                       [](double d) { return smoothstep(0.5 + 0.5 * d) - smoothstep(0.5 - 0.5 * d); }));
    out.push_back(make("plateau", plateau, [](double d) {
        if (d <= 1.0 / 3.0) return 1.5 * d;
        if (d <= 2.0 / 3.0) return 0.5;
        return 1.5 * d - 0.5;
    }));
    out.push_back(make("exp", [e](double x) { return (std::exp(x) - 1.0) / (e - 1.0); },
                       [e](double d) { return (e - std::exp(1.0 - d)) / (e - 1.0); }));
    return out;
}

}  // namespace

const std::vector<TargetFunction>& builtin_functions() {
    static const std::vector<TargetFunction> catalog = build();
    return catalog;
}

const TargetFunction& find_builtin(const std::string& id) {
    for (const auto& f : builtin_functions()) {
        if (f.id == id) return f;
    }
    throw ConfigInvalid("unknown function id '" + id + "'");
}

}  // namespace monospline
