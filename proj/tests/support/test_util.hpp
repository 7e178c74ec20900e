// Shared test helpers: independent half-line oracles and candidate
// generators. Everything here evaluates p directly on the half-line, so
// suites that compare against the circle-side implementation stay
// two-route.
#ifndef BERNLAX_TESTS_SUPPORT_TEST_UTIL_HPP
#define BERNLAX_TESTS_SUPPORT_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bernlax/chebyshev.hpp"
#include "bernlax/complex_poly.hpp"

namespace testsupport {

using bernlax::Complex;
using bernlax::ComplexPoly;

// Compensated Horner for real coefficients at a real point: error-free
// FMA products and TwoSum corrections give ~eps accuracy even when the
// coefficient scale dwarfs the value (e.g. high Chebyshev polynomials in
// the monomial basis near x = +-1).
inline double compensated_horner(const std::vector<double>& c, double x) {
    double s = c.back();
    double e = 0.0;
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        const double p = s * x;
        const double pe = std::fma(s, x, -p);
        const double t = p + c[static_cast<size_t>(k)];
        const double z = t - p;
        const double te = (p - (t - z)) + (c[static_cast<size_t>(k)] - z);
        s = t;
        e = e * x + (pe + te);
    }
    return s + e;
}

// |sum_k c_k sin^{2(k+1)}(t/2) cos^{2(n-1-k)}(t/2)| at angle t. This is
// s|p(s)|/(1+s)^n at s = tan^2(t/2), written without the singular
// substitution so t = pi (s = infinity) is an ordinary point.
inline double growth_ratio_at(const ComplexPoly& p, int n, double theta) {
    const double s2 = std::pow(std::sin(theta / 2.0), 2);
    const double c2 = std::pow(std::cos(theta / 2.0), 2);
    Complex acc{0.0, 0.0};
    double s_pow = s2;  // sin^{2(k+1)}
    for (int k = 0; k <= p.degree(); ++k) {
        acc += p.coeff(k) * s_pow * std::pow(c2, n - 1 - k);
        s_pow *= s2;
    }
    return std::abs(acc);
}

// Independent supremum of the growth ratio over s in [0, inf], by dense
// angle sampling on [0, pi] plus golden-section refinement of every local
// maximum (endpoints included).
inline double halfline_growth_sup(const ComplexPoly& p, int n,
                                  int samples = 4096) {
    const double pi = std::numbers::pi;
    std::vector<double> vals(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        vals[i] = growth_ratio_at(p, n, pi * i / samples);
    }
    double best = 0.0;
    constexpr double inv_phi = 0.6180339887498949;
    for (int i = 0; i <= samples; ++i) {
        best = std::max(best, vals[i]);
        const bool left_ok = i == 0 || vals[i] >= vals[i - 1];
        const bool right_ok = i == samples || vals[i] >= vals[i + 1];
        if (!left_ok || !right_ok) continue;
        double a = pi * std::max(0, i - 1) / samples;
        double b = pi * std::min(samples, i + 1) / samples;
        double x1 = b - inv_phi * (b - a);
        double x2 = a + inv_phi * (b - a);
        double f1 = growth_ratio_at(p, n, x1);
        double f2 = growth_ratio_at(p, n, x2);
        while (b - a > 1e-12) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = growth_ratio_at(p, n, x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = growth_ratio_at(p, n, x1);
            }
        }
        best = std::max(best, std::max(f1, f2));
    }
    return best;
}

// Random real polynomial, nonnegative on [0, inf), scaled so the growth
// ratio supremum is 1: a nonnegative-coefficient combination, half the
// time mixed with a multiple of the exact extremal. max_mix caps the
// extremal share; heavy mixes approach the equality case (good for bound
// suites) but drive the transform towards double-rounding degeneracy
// (factor identities then lose digits), so factorization suites cap it.
inline ComplexPoly random_real_nonneg_candidate(std::mt19937_64& rng, int n,
                                                double max_mix = 1.0) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_degree(0, n - 1);
    for (;;) {
        const int d = pick_degree(rng);
        std::vector<double> coeffs(d + 1, 0.0);
        for (double& c : coeffs) c = unit(rng);
        if (unit(rng) < 0.5) {
            const ComplexPoly pn =
                bernlax::extremal_polynomial(n).to_complex_poly();
            const double mix = max_mix * unit(rng);
            coeffs.resize(std::max<size_t>(coeffs.size(), pn.degree() + 1),
                          0.0);
            for (int k = 0; k <= pn.degree(); ++k) {
                coeffs[k] += mix * pn.coeff(k).real();
            }
        }
        ComplexPoly p = ComplexPoly::from_real(coeffs);
        const double sup = halfline_growth_sup(p, n);
        if (sup <= 1e-12) continue;
        std::vector<Complex> scaled(p.coeffs().begin(), p.coeffs().end());
        for (Complex& c : scaled) c /= sup;
        return ComplexPoly(std::move(scaled));
    }
}

// Random complex polynomial scaled the same way; no positivity.
inline ComplexPoly random_complex_candidate(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    std::uniform_int_distribution<int> pick_degree(0, n - 1);
    for (;;) {
        const int d = pick_degree(rng);
        std::vector<Complex> coeffs(d + 1);
        for (Complex& c : coeffs) c = Complex{sym(rng), sym(rng)};
        ComplexPoly p{std::move(coeffs)};
        const double sup = halfline_growth_sup(p, n);
        if (sup <= 1e-12) continue;
        std::vector<Complex> scaled(p.coeffs().begin(), p.coeffs().end());
        for (Complex& c : scaled) c /= sup;
        return ComplexPoly(std::move(scaled));
    }
}

// Random polynomial with all roots of modulus >= 1, positive real leading
// coefficient, scaled so the largest coefficient modulus is 1. Roots keep
// a margin off the circle and off each other's reflections: when roots
// collide (or straddle the circle at ~1e-3), root-finding accuracy drops
// to the cluster conditioning and no factorization can reproduce the
// coefficients to 1e-7.
inline ComplexPoly random_outer_polynomial(std::mt19937_64& rng,
                                           int max_degree) {
    std::uniform_real_distribution<double> modulus(1.02, 1.6);
    std::uniform_real_distribution<double> angle(0.0,
                                                 2.0 * std::numbers::pi);
    std::uniform_int_distribution<int> pick_degree(1, max_degree);
    for (;;) {
        const int d = pick_degree(rng);
        std::vector<Complex> roots;
        while (static_cast<int>(roots.size()) < d) {
            const Complex candidate = std::polar(modulus(rng), angle(rng));
            const Complex mirror = 1.0 / std::conj(candidate);
            bool separated = true;
            for (const Complex& r : roots) {
                if (std::abs(candidate - r) < 0.02 ||
                    std::abs(mirror - r) < 0.02) {
                    separated = false;
                    break;
                }
            }
            if (separated) roots.push_back(candidate);
        }
        std::vector<Complex> coeffs = {Complex{1.0, 0.0}};
        for (const Complex& root : roots) {
            coeffs.push_back(Complex{0.0, 0.0});
            for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k) {
                coeffs[k] = coeffs[k - 1] - root * coeffs[k];
            }
            coeffs[0] *= -root;
        }
        double max_mod = 0.0;
        for (const Complex& c : coeffs) {
            max_mod = std::max(max_mod, std::abs(c));
        }
        for (Complex& c : coeffs) c /= max_mod;
        ComplexPoly p{std::move(coeffs)};

        // Reject nearly degenerate draws: when |P| dips towards zero on
        // the circle, machine rounding of |P|^2 alone moves the factor
        // by more than the comparison tolerances allow.
        double min_on_circle = 1e300;
        for (int i = 0; i < 512; ++i) {
            const double theta = 2.0 * std::numbers::pi * i / 512.0;
            min_on_circle =
                std::min(min_on_circle, std::abs(p(std::polar(1.0, theta))));
        }
        if (min_on_circle >= 1e-2) return p;
    }
}

}  // namespace testsupport

#endif
