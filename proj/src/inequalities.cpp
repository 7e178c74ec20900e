#include "bernlax/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bernlax/circle_scan.hpp"
#include "bernlax/errors.hpp"
#include "bernlax/roots.hpp"

namespace bernlax {

namespace {

constexpr double kE2 = 7.38905609893065;  // e^2

bool holds_within(double lhs, double rhs) {
    return lhs <= rhs + kCertTol * std::max(1.0, std::abs(rhs));
}

}  // namespace

InequalityCertificate bernstein_check(const ComplexPoly& h, int oversample) {
    if (h.degree() < 1) {
        throw ContractError("bernstein_check: degree must be >= 1");
    }
    const CircleExtremum sup_dh = sup_modulus_on_circle(h.derivative(),
                                                        oversample);
    const CircleExtremum sup_h = sup_modulus_on_circle(h, oversample);
    InequalityCertificate cert;
    cert.lhs = sup_dh.value;
    cert.rhs = h.degree() * sup_h.value;
    cert.holds = holds_within(cert.lhs, cert.rhs);
    cert.witness_angle = sup_dh.argument;
    cert.samples = sup_dh.samples_used + sup_h.samples_used;
    return cert;
}

InequalityCertificate lax_check(const ComplexPoly& P, double root_tol,
                                int oversample) {
    InequalityCertificate cert;
    if (P.degree() < 1) {
        // Constant: derivative vanishes and the bound is trivial.
        cert.lhs = 0.0;
        cert.rhs = 0.0;
        cert.holds = true;
        return cert;
    }
    // Zero-free hypothesis, certified through the root finder. Clustered
    // roots straddling the circle carry placement noise of
    // eps * sum|c_k||r|^k / |P'(r)|; a violation must exceed it.
    const ComplexPoly dP = P.derivative();
    for (const Complex& r : roots(P)) {
        double scale = 0.0;
        double rk = 1.0;
        for (const Complex& c : P.coeffs()) {
            scale += std::abs(c) * rk;
            rk *= std::abs(r);
        }
        const double slope = std::abs(dP(r));
        const double uncertainty =
            slope < 1e-300
                ? 1e-2
                : std::min(1e-2, 10.0 * 2.22e-16 * scale / slope);
        if (std::abs(r) < 1.0 - root_tol - uncertainty) {
            throw HypothesisViolation(
                "lax_check: root of modulus " + std::to_string(std::abs(r)) +
                " inside the open unit disk");
        }
    }
    const CircleExtremum sup_dp = sup_modulus_on_circle(P.derivative(),
                                                        oversample);
    const CircleExtremum sup_p = sup_modulus_on_circle(P, oversample);
    cert.lhs = sup_dp.value;
    cert.rhs = 0.5 * P.degree() * sup_p.value;
    cert.holds = holds_within(cert.lhs, cert.rhs);
    cert.witness_angle = sup_dp.argument;
    cert.samples = sup_dp.samples_used + sup_p.samples_used;
    return cert;
}

InequalityCertificate rs_pair_check(const ComplexPoly& g, int n,
                                    int radial_grid) {
    if (n < 1) throw ContractError("rs_pair_check: n must be >= 1");
    if (radial_grid < 1) {
        throw ContractError("rs_pair_check: radial grid must be >= 1");
    }
    if (g.degree() > 2 * n) {
        throw ContractError("rs_pair_check: degree of g' exceeds 2n - 1");
    }
    const ComplexPoly dg = g.derivative();
    const ComplexPoly ddg = dg.is_zero() ? ComplexPoly() : dg.derivative();

    const double bound_dg =
        dg.is_zero() ? 0.0 : sup_modulus_on_circle(dg).value;
    if (bound_dg > n * (1.0 + kCertTol)) {
        throw HypothesisViolation(
            "rs_pair_check: sup|g'| = " + std::to_string(bound_dg) +
            " exceeds n = " + std::to_string(n));
    }

    const double two_n_minus_1 = 2.0 * n - 1.0;
    const auto pair_value = [&](Complex z) {
        const Complex first = ddg(z);
        const Complex second = two_n_minus_1 * dg(z) - z * first;
        return std::abs(first) + std::abs(second);
    };

    InequalityCertificate cert;
    cert.rhs = static_cast<double>(n) * two_n_minus_1;

    // Interior polar grid.
    const int angles = 2 * radial_grid;
    int samples = 0;
    for (int i = 0; i <= radial_grid; ++i) {
        const double radius = static_cast<double>(i) / radial_grid;
        for (int j = 0; j < angles; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / angles;
            const double v = pair_value(std::polar(radius, theta));
            ++samples;
            if (v > cert.lhs) {
                cert.lhs = v;
                cert.witness_angle = theta;
            }
        }
    }
    // Circle at refinement density; by the maximum principle each modulus
    // term peaks here, so this sharpens the grid estimate.
    const CircleExtremum rim = detail::scan_circle_max(
        [&](double theta) { return pair_value(std::polar(1.0, theta)); },
        2 * std::max(0, g.degree()) + 1, kDefaultOversample);
    samples += rim.samples_used;
    if (rim.value > cert.lhs) {
        cert.lhs = rim.value;
        cert.witness_angle = rim.argument;
    }
    cert.samples = samples;
    cert.holds = holds_within(cert.lhs, cert.rhs);
    return cert;
}

AdmissibilityReport admissibility_check(const CandidateInput& c,
                                        bool require_positive) {
    AdmissibilityReport report;
    const LaurentPoly f = laurent_f(c);
    const CircleExtremum sup_f = sup_modulus_on_circle(f);
    report.admissible = sup_f.value <= 1.0 + kCertTol;
    report.worst_s = std::pow(std::tan(sup_f.argument / 2.0), 2);
    report.worst_margin = 1.0 - sup_f.value;

    if (!require_positive) {
        report.positive = false;  // not examined
        return report;
    }

    // Positivity of p on [0, inf), sampled at the circle-image abscissas
    // s = tan^2(theta/2) plus the endpoint s = 0. Tolerances are relative
    // to the evaluation scale at each abscissa.
    report.positive = true;
    const int grid = 4096;
    for (int i = 0; i <= grid && report.positive; ++i) {
        double s;
        if (i == 0) {
            s = 0.0;
        } else {
            const double theta =
                std::numbers::pi * static_cast<double>(i) / (grid + 1);
            s = std::pow(std::tan(theta / 2.0), 2);
        }
        const Complex value = c.p(Complex{s, 0.0});
        double scale = 1.0;
        double sk = 1.0;
        for (const Complex& coeff : c.p.coeffs()) {
            scale = std::max(scale, std::abs(coeff) * sk);
            sk *= s;
        }
        const double tol = kCertTol * scale;
        if (value.real() < -tol || std::abs(value.imag()) > tol) {
            report.positive = false;
        }
    }
    return report;
}

BoundReport bound_report(const CandidateInput& c) {
    BoundReport report;
    const double n = static_cast<double>(c.n);
    report.p0_modulus = std::abs(c.p.coeff(0));
    report.sharp_bound = n * n;
    report.weak_bound = 2.0 * n * n - n;
    report.nazarov_sodin_bound = kE2 * n * n;
    report.naive_bound = 4.0 * n * (2.0 * n - 1.0);

    const AdmissibilityReport adm = admissibility_check(c);
    report.admissible = adm.admissible;
    report.positive_on_halfline = adm.positive;

    report.sharp_margin = report.sharp_bound - report.p0_modulus;
    report.weak_margin = report.weak_bound - report.p0_modulus;
    report.nazarov_sodin_margin = report.nazarov_sodin_bound - report.p0_modulus;
    report.naive_margin = report.naive_bound - report.p0_modulus;
    return report;
}

CarlesonConstants carleson_constant(int d) {
    if (d < 1) throw ContractError("carleson_constant: d must be >= 1");
    CarlesonConstants out;
    const double dd = static_cast<double>(d) * d;
    out.new_constant = 4.0 * dd;
    out.old_constant = 4.0 * kE2 * dd;
    if (d == 1) out.scalar_sharp = 4.0;
    return out;
}

}  // namespace bernlax
