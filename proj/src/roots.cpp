#include "bernlax/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bernlax/errors.hpp"

namespace bernlax {

namespace {

// Evaluate p and p' at z in one Horner pass over monic-scaled coefficients.
std::pair<Complex, Complex> eval_with_derivative(
    const std::vector<Complex>& c, Complex z) {
    Complex p = c.back();
    Complex dp{0.0, 0.0};
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + c[static_cast<size_t>(k)];
    }
    return {p, dp};
}

// Scale of p at the point r: max_k |c_k| max(1,|r|)^k. Residuals are
// certified against this, which matches max coefficient magnitude for
// roots in the closed unit disk.
double residual_scale(const ComplexPoly& p, Complex r) {
    const double m = std::max(1.0, std::abs(r));
    double scale = 0.0;
    double mk = 1.0;
    for (const Complex& c : p.coeffs()) {
        scale = std::max(scale, std::abs(c) * mk);
        mk *= m;
    }
    return scale;
}

}  // namespace

std::vector<Complex> roots(const ComplexPoly& p, double tol) {
    if (p.degree() < 1) {
        throw ContractError("roots: degree must be >= 1");
    }

    // Deflate exact roots at the origin.
    std::vector<Complex> work(p.coeffs().begin(), p.coeffs().end());
    std::vector<Complex> found;
    while (work.size() > 1 && work.front() == Complex{0.0, 0.0}) {
        found.emplace_back(0.0, 0.0);
        work.erase(work.begin());
    }
    const int d = static_cast<int>(work.size()) - 1;
    if (d == 0) return found;

    const Complex lead = work.back();
    for (Complex& c : work) c /= lead;

    if (d == 1) {
        found.push_back(-work[0]);
        return found;
    }

    // Initial guesses on a circle of the geometric-mean radius, with an
    // angular offset so symmetric inputs do not start on their own roots.
    double radius = std::pow(std::abs(work[0]), 1.0 / d);
    radius = std::clamp(radius, 1e-3, 1e3);
    std::vector<Complex> x(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        const double angle =
            2.0 * std::numbers::pi * i / d + 0.376991118430775;
        x[static_cast<size_t>(i)] = std::polar(radius, angle);
    }

    for (int sweep = 0; sweep < kRootSweepCap; ++sweep) {
        double max_step = 0.0;
        for (int i = 0; i < d; ++i) {
            Complex xi = x[static_cast<size_t>(i)];
            auto [pv, dpv] = eval_with_derivative(work, xi);
            if (pv == Complex{0.0, 0.0}) continue;
            if (dpv == Complex{0.0, 0.0}) {
                // Stationary point; nudge off it.
                xi += Complex{1e-8, 1e-8};
                std::tie(pv, dpv) = eval_with_derivative(work, xi);
                if (dpv == Complex{0.0, 0.0}) continue;
            }
            const Complex newton = pv / dpv;
            Complex repulsion{0.0, 0.0};
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                Complex diff = xi - x[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = Complex{1e-300, 0.0};
                repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - newton * repulsion;
            const Complex step =
                std::abs(denom) < 1e-300 ? newton : newton / denom;
            x[static_cast<size_t>(i)] = xi - step;
            max_step = std::max(max_step,
                                std::abs(step) / (1.0 + std::abs(xi)));
        }
        if (max_step < 1e-14) break;
    }

    // Guarded Newton polish: crowded simple roots leave the sweep loop a
    // few digits short; polishing restores them (and cannot hurt true
    // multiple roots, where shrinking steps are still accepted).
    for (int i = 0; i < d; ++i) {
        Complex xi = x[static_cast<size_t>(i)];
        auto [pv, dpv] = eval_with_derivative(work, xi);
        double best_mod = std::abs(pv);
        for (int it = 0; it < 6; ++it) {
            if (std::abs(dpv) < 1e-300) break;
            const Complex candidate = xi - pv / dpv;
            const auto [pc, dpc] = eval_with_derivative(work, candidate);
            if (std::abs(pc) >= best_mod) break;
            xi = candidate;
            pv = pc;
            dpv = dpc;
            best_mod = std::abs(pc);
        }
        x[static_cast<size_t>(i)] = xi;
    }

    // Certify residuals against the original coefficients.
    std::vector<Complex> result = found;
    result.insert(result.end(), x.begin(), x.end());
    for (const Complex& r : result) {
        if (std::abs(p(r)) > tol * residual_scale(p, r)) {
            throw RootConvergenceError(
                "roots: residual contract not met after iteration cap",
                result);
        }
    }
    return result;
}

}  // namespace bernlax
