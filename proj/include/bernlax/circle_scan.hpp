#ifndef BERNLAX_CIRCLE_SCAN_HPP
#define BERNLAX_CIRCLE_SCAN_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "bernlax/complex_poly.hpp"
#include "bernlax/laurent_poly.hpp"

namespace bernlax {

// |f|^2 restricted to the circle is a trigonometric polynomial of degree
// <= 2n; eight times the Nyquist count brackets every local extremum of
// practical inputs before refinement.
inline constexpr int kDefaultOversample = 8;

// Golden-section refinement runs until the bracket is this narrow, which
// drives the extremum value error to ~1e-15 near smooth extrema.
inline constexpr double kRefineBracketWidth = 1e-12;

/// Extremum of a scalar quantity over the unit circle.
struct CircleExtremum {
    double value = 0.0;     // extremal value found (a bound from the safe side)
    double argument = 0.0;  // angle theta in [0, 2pi) where it is attained
    int samples_used = 0;   // total function evaluations spent
};

/// sup over |z| = 1 of |p(z)|, by uniform sampling at
/// oversample * max(8, 2*degree+1) angles followed by golden-section
/// refinement of every locally maximal bracket. The returned value is a
/// lower bound of the true supremum. Requires oversample >= 4.
CircleExtremum sup_modulus_on_circle(const ComplexPoly& p,
                                     int oversample = kDefaultOversample);
CircleExtremum sup_modulus_on_circle(const LaurentPoly& f,
                                     int oversample = kDefaultOversample);

/// min over |z| = 1 of Re f(z) for a Hermitian Laurent polynomial, same
/// sampling and refinement scheme. Throws ContractError when f is not
/// Hermitian.
CircleExtremum min_real_on_circle(const LaurentPoly& f,
                                  int oversample = kDefaultOversample);

namespace detail {

// Golden-section maximization on [a, b]; assumes a single interior maximum
// in the bracket. Returns (theta, value) and accumulates evaluation count.
template <class Fn>
std::pair<double, double> golden_max(Fn&& fn, double a, double b, int& evals) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = fn(x1);
    double f2 = fn(x2);
    evals += 2;
    while (b - a > kRefineBracketWidth) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = fn(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = fn(x1);
        }
        ++evals;
    }
    return f1 > f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// Shared scan-and-refine driver over theta in [0, 2pi); maximizes fn by
// refining every locally maximal bracket of the uniform sample sequence.
template <class Fn>
CircleExtremum scan_circle_max(Fn&& fn, int base_count, int oversample) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const int count = oversample * std::max(8, base_count);
    std::vector<double> values(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) {
        values[static_cast<size_t>(j)] = fn(two_pi * j / count);
    }
    int evals = count;

    double best_value = values[0];
    double best_theta = 0.0;
    double min_value = values[0];
    for (int j = 1; j < count; ++j) {
        const double v = values[static_cast<size_t>(j)];
        min_value = std::min(min_value, v);
        if (v > best_value) {
            best_value = v;
            best_theta = two_pi * j / count;
        }
    }
    // Constant within sampling noise: nothing to refine.
    if (best_value - min_value <= 1e-15 * (std::abs(best_value) + 1.0)) {
        return {best_value, best_theta, evals};
    }

    for (int j = 0; j < count; ++j) {
        const double prev = values[static_cast<size_t>((j + count - 1) % count)];
        const double next = values[static_cast<size_t>((j + 1) % count)];
        const double here = values[static_cast<size_t>(j)];
        if (here < prev || here < next) continue;
        auto [theta, value] =
            golden_max(fn, two_pi * (j - 1) / count, two_pi * (j + 1) / count,
                       evals);
        if (value > best_value) {
            best_value = value;
            best_theta = theta;
        }
    }

    best_theta = std::fmod(best_theta, two_pi);
    if (best_theta < 0.0) best_theta += two_pi;
    return {best_value, best_theta, evals};
}

}  // namespace detail

}  // namespace bernlax

#endif
