#ifndef BERNLAX_COMPLEX_POLY_HPP
#define BERNLAX_COMPLEX_POLY_HPP

#include <complex>
#include <span>
#include <vector>

namespace bernlax {

using Complex = std::complex<double>;

// Relative threshold below which a coefficient counts as zero when
// normalizing degrees (scale-invariant trimming).
inline constexpr double kCoeffZeroThreshold = 1e-12;

/// Dense univariate polynomial with complex coefficients, ascending powers.
///
/// The stored vector has exactly degree()+1 entries. The zero polynomial
/// stores a single zero coefficient and reports degree() == -1.
class ComplexPoly {
  public:
    ComplexPoly();  // the zero polynomial
    explicit ComplexPoly(std::vector<Complex> coeffs);
    static ComplexPoly from_real(const std::vector<double>& coeffs);
    static ComplexPoly monomial(int k, Complex scale = 1.0);

    // Trims only exact zeros; embeddings of exact objects must not lose
    // a genuine leading coefficient to the relative threshold (high
    // extremals are monic while their mid coefficients grow like 4^n).
    static ComplexPoly from_exact(std::vector<Complex> coeffs);

    int degree() const { return degree_; }  // -1 for the zero polynomial
    bool is_zero() const { return degree_ < 0; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    Complex coeff(int k) const;  // zero outside [0, degree]
    double max_coeff_modulus() const;
    bool is_real(double tol) const;
    bool is_real() const;  // tol = kCoeffZeroThreshold * max modulus

    Complex operator()(Complex z) const;  // Horner evaluation
    ComplexPoly derivative(int order = 1) const;

    bool operator==(const ComplexPoly&) const = default;

  private:
    std::vector<Complex> coeffs_;  // size degree_+1, or {0} for zero
    int degree_ = -1;
};

}  // namespace bernlax

#endif
