#ifndef BERNLAX_TRANSFORMS_HPP
#define BERNLAX_TRANSFORMS_HPP

#include "bernlax/complex_poly.hpp"
#include "bernlax/laurent_poly.hpp"

namespace bernlax {

// Binomial weights are formed in doubles; the central binomial coefficient
// overflows the double range a little past 2n = 1028.
inline constexpr int kMaxTransformExponent = 500;

/// Candidate pair (p, n): a polynomial together with the growth exponent
/// that caps its admissible degree at n - 1.
struct CandidateInput {
    ComplexPoly p;
    int n = 1;
};

/// q(z) = z p(z); q(0) = 0 exactly and q'(0) = p(0).
/// Throws ContractError when degree(p) > n - 1 or n < 1.
ComplexPoly lift_q(const CandidateInput& c);

/// The Laurent auxiliary with center degree n, built by exact binomial
/// convolution in the coefficient domain:
///   f(z) = 4^{-n} z^{-n} sum_{k>=1} q_k (-1)^k (1-z)^{2k} (1+z)^{2(n-k)}.
/// On |z| = 1 it equals s p(s) / (1+s)^n at s = tan^2(theta/2). For real p
/// the coefficients are real and exactly symmetric (a_{-k} == a_k).
LaurentPoly laurent_f(const CandidateInput& c);

/// The polynomial auxiliary g = z^n f(z) of degree <= 2n, same expansion
/// without the z^{-n} shift. g'(1) = 0 is asserted post-construction.
ComplexPoly poly_g(const CandidateInput& c);

/// The Koebe map z / (1+z)^2, which takes the unit circle onto [1/4, inf).
/// Throws EvalDomainError at the pole z = -1.
Complex koebe(Complex z);

/// p(0) recovered from the Laurent auxiliary: -2 f''(1).
Complex p0_from_f(const LaurentPoly& f);

/// p(0) recovered from the polynomial auxiliary: -2 g''(1).
Complex p0_from_g(const ComplexPoly& g);

}  // namespace bernlax

#endif
