#ifndef BERNLAX_CHEBYSHEV_HPP
#define BERNLAX_CHEBYSHEV_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "bernlax/complex_poly.hpp"

namespace bernlax {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with arbitrary-precision integer coefficients divided by a
/// uniform positive denominator. Normalized so gcd(coeffs, denominator) = 1
/// and there are no stored coefficients beyond the degree.
class ExactPoly {
  public:
    ExactPoly();  // zero
    explicit ExactPoly(std::vector<BigInt> coeffs, BigInt denominator = 1);

    int degree() const;  // -1 for zero
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& denominator() const { return den_; }
    BigInt coeff(int k) const;  // numerator at z^k, zero outside range

    /// Floating conversion; exact whenever each coefficient/denominator is
    /// representable. Throws OverflowError when a value does not fit.
    ComplexPoly to_complex_poly() const;

    bool operator==(const ExactPoly&) const = default;

  private:
    std::vector<BigInt> coeffs_;  // ascending powers, size degree+1 (or {0})
    BigInt den_ = 1;
};

/// Chebyshev polynomial of the first kind via the three-term recurrence
/// T_{n+1} = 2 x T_n - T_{n-1}, T_0 = 1, T_1 = x. Integer coefficients.
ExactPoly chebyshev_t(int n);

/// The degree-capped extremal candidate attaining value n^2 at the origin:
/// numerator (1+s)^n - sum_j t_j (1-s)^j (1+s)^{n-j} built exactly from
/// the coefficients t_j of T_n, then divided by 2s by exact synthetic
/// division. The division must be exact; a nonzero remainder raises
/// InternalConsistencyError. The result has constant coefficient n^2 and
/// degree n-1 (odd n) / n-2 (even n).
ExactPoly extremal_polynomial(int n);

/// n^2, asserted equal to the constant coefficient of extremal_polynomial(n).
long long extremal_value(int n);

/// Root structure probe of extremal_polynomial(n): clusters the numerical
/// roots within tol (relative to root magnitude) and reports whether every
/// cluster is a double root at a positive real location.
struct ZeroStructureReport {
    bool all_positive_real = false;
    bool all_double = false;
    std::vector<Complex> roots;  // raw root multiset
};

ZeroStructureReport zero_structure(int n, double tol = 1e-6);

}  // namespace bernlax

#endif
