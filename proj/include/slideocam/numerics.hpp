#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>

namespace slideocam::numerics {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct Extremum {
    double x;
    double value;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
/// Endpoints are candidates too, so a monotone f converges to the boundary.
template <class F>
Extremum golden_minimize(F&& f, double lo, double hi, double tol)
{
    constexpr double inv_phi = 0.6180339887498948482;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    Extremum best{0.5 * (a + b), f(0.5 * (a + b))};
    for (double x : {lo, hi}) {
        if (std::abs(x - best.x) <= tol) {
            double fx = f(x);
            if (fx < best.value) best = {x, fx};
        }
    }
    return best;
}

/// Uniform scan of `count` points over [lo, hi] followed by golden-section
/// refinement on the bracket around the best sample.
template <class F>
Extremum scan_minimize(F&& f, double lo, double hi, std::size_t count, double tol)
{
    const double step = (hi - lo) / static_cast<double>(count - 1);
    std::size_t best_i = 0;
    double best_v = f(lo);
    for (std::size_t i = 1; i < count; ++i) {
        const double x = (i + 1 == count) ? hi : lo + step * static_cast<double>(i);
        const double v = f(x);
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    const double a = best_i == 0 ? lo : lo + step * static_cast<double>(best_i - 1);
    const double b = best_i + 1 >= count ? hi : lo + step * static_cast<double>(best_i + 1);
    Extremum refined = golden_minimize(f, a, b, tol);
    if (refined.value <= best_v) return refined;
    const double x = (best_i + 1 == count) ? hi : lo + step * static_cast<double>(best_i);
    return {x, best_v};
}

template <class F>
Extremum scan_maximize(F&& f, double lo, double hi, std::size_t count, double tol)
{
    auto neg = [&f](double x) { return -f(x); };
    Extremum e = scan_minimize(neg, lo, hi, count, tol);
    return {e.x, -e.value};
}

/// Bisection on a bracket with f(lo) and f(hi) of opposite sign (or zero).
template <class F>
double bisect(F&& f, double lo, double hi, double tol)
{
    double flo = f(lo);
    if (flo == 0.0) return lo;
    if (f(hi) == 0.0) return hi;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // adjacent doubles
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace slideocam::numerics
