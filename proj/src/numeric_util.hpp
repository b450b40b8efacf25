#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace monospline::detail {

/// Golden-section search for a maximum of a unimodal function on [lo, hi].
/// Returns (argmax, max) and never reports less than the bracket endpoints.
template <class F>
std::pair<double, double> golden_section_max(F&& f, double lo, double hi, int iterations = 60) {
    constexpr double kInvPhi = 0.6180339887498948482;
    double best_x = lo;
    double best_v = f(lo);
    if (double v = f(hi); v > best_v) {
        best_x = hi;
        best_v = v;
    }
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < iterations && hi - lo > 0.0; ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
    }
    if (f1 > best_v) {
        best_x = x1;
        best_v = f1;
    }
    if (f2 > best_v) {
        best_x = x2;
        best_v = f2;
    }
    return {best_x, best_v};
}

/// Maximum of f on [lo, hi]: uniform grid of `grid` points, then a
/// golden-section polish on the two cells around the discrete argmax.
template <class F>
std::pair<double, double> grid_max(F&& f, double lo, double hi, int grid) {
    if (grid < 2) grid = 2;
    const double step = (hi - lo) / (grid - 1);
    int best_i = 0;
    double best_v = f(lo);
    for (int i = 1; i < grid; ++i) {
        const double x = (i == grid - 1) ? hi : lo + step * i;
        const double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_i = i;
        }
    }
    const double best_x = (best_i == grid - 1) ? hi : lo + step * best_i;
    const double left = best_i == 0 ? lo : lo + step * (best_i - 1);
    const double right = best_i >= grid - 2 ? hi : lo + step * (best_i + 1);
    auto [x, v] = golden_section_max(f, left, right);
    if (v > best_v) return {x, v};
    return {best_x, best_v};
}

/// Portable uniform double in [0, 1) from a 64-bit generator.
template <class Engine>
double uniform01(Engine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

template <class Engine>
double uniform(Engine& engine, double lo, double hi) {
    return lo + (hi - lo) * uniform01(engine);
}

}  // namespace monospline::detail
