#ifndef BERNLAX_LAURENT_POLY_HPP
#define BERNLAX_LAURENT_POLY_HPP

#include <span>
#include <vector>

#include "bernlax/complex_poly.hpp"

namespace bernlax {

/// Laurent polynomial sum_{k=-n}^{n} a_k z^k with n = center_degree().
/// Coefficients are stored ascending, a_{-n} first, 2n+1 entries.
class LaurentPoly {
  public:
    LaurentPoly();  // zero, center degree 0
    LaurentPoly(int center_degree, std::vector<Complex> coeffs);

    int center_degree() const { return center_degree_; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    Complex coeff(int k) const;  // k in [-n, n]; zero outside
    double max_coeff_modulus() const;
    bool is_zero() const;

    // a_{-k} == conj(a_k) for all k, within the zero threshold. Hermitian
    // Laurent polynomials are real-valued on |z| = 1.
    bool is_hermitian() const;

    bool has_negative_powers() const;

    Complex operator()(Complex z) const;  // z != 0 unless no negative powers
    LaurentPoly derivative(int order = 1) const;

    // Largest k with |a_k| or |a_{-k}| above the zero threshold (0 for the
    // zero polynomial), and the copy trimmed to that center degree.
    int effective_center_degree() const;
    LaurentPoly trimmed() const;

    bool operator==(const LaurentPoly&) const = default;

  private:
    int center_degree_ = 0;
    std::vector<Complex> coeffs_;  // size 2*center_degree_+1
};

}  // namespace bernlax

#endif
