#ifndef BERNLAX_INEQUALITIES_HPP
#define BERNLAX_INEQUALITIES_HPP

#include <optional>

#include "bernlax/circle_scan.hpp"
#include "bernlax/complex_poly.hpp"
#include "bernlax/transforms.hpp"

namespace bernlax {

// Certification tolerance, relative to the bound's magnitude: two orders
// above accumulated evaluation error at the degrees in play.
inline constexpr double kCertTol = 1e-8;

/// One certified inequality instance: lhs <= rhs within tolerance.
struct InequalityCertificate {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    double witness_angle = 0.0;  // where the lhs is attained
    int samples = 0;
};

/// Classical Bernstein: max|h'| <= degree * max|h| on the unit circle.
/// Requires degree(h) >= 1.
InequalityCertificate bernstein_check(const ComplexPoly& h,
                                      int oversample = kDefaultOversample);

/// Erdos-Lax sharpening for polynomials zero-free in the open unit disk:
/// max|P'| <= (degree/2) * max|P|. The zero-free hypothesis is verified
/// through the root finder; a root with modulus < 1 - root_tol raises
/// HypothesisViolation.
InequalityCertificate lax_check(const ComplexPoly& P, double root_tol = 1e-6,
                                int oversample = kDefaultOversample);

/// Derivative-pair inequality on the closed disk for g' of degree <= 2n-1
/// with max|g'| <= n on the circle:
///   |g''(z)| + |(2n-1) g'(z) - z g''(z)| <= n (2n-1),  |z| <= 1.
/// The left side is maximized over a (radial_grid+1) x (2*radial_grid)
/// polar grid of the closed disk plus the circle at refinement density.
InequalityCertificate rs_pair_check(const ComplexPoly& g, int n,
                                    int radial_grid = 128);

/// Growth-bound and positivity verdict for a candidate. Admissibility is
/// decided through the transform isometry: sup of |laurent_f| on the circle
/// equals sup over s > 0 of s|p(s)|/(1+s)^n. The positivity scan runs only
/// when require_positive is set; otherwise positive reports false unexamined.
struct AdmissibilityReport {
    bool admissible = false;
    bool positive = false;
    double worst_s = 0.0;      // abscissa where the growth ratio peaks
    double worst_margin = 0.0; // 1 - sup of the growth ratio
};

AdmissibilityReport admissibility_check(const CandidateInput& c,
                                        bool require_positive = true);

/// The four constants relevant at exponent n together with a candidate's
/// standing against each. Margin = bound - |p(0)| (nonnegative = satisfied).
struct BoundReport {
    double p0_modulus = 0.0;
    double sharp_bound = 0.0;          // n^2
    double weak_bound = 0.0;           // 2n^2 - n
    double nazarov_sodin_bound = 0.0;  // e^2 n^2
    double naive_bound = 0.0;          // 4n(2n-1)
    bool admissible = false;
    bool positive_on_halfline = false;
    double sharp_margin = 0.0;
    double weak_margin = 0.0;
    double nazarov_sodin_margin = 0.0;
    double naive_margin = 0.0;
};

BoundReport bound_report(const CandidateInput& c);

/// Carleson embedding constants: the improved 4d^2 against the previous
/// 4e^2 d^2; in the scalar case d = 1 the improved bound A <= 4B is
/// optimal.
struct CarlesonConstants {
    double new_constant = 0.0;
    double old_constant = 0.0;
    std::optional<double> scalar_sharp;  // = 4, reported only for d = 1
};

CarlesonConstants carleson_constant(int d);

}  // namespace bernlax

#endif
