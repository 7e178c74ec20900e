#ifndef BERNLAX_FACTORIZATION_HPP
#define BERNLAX_FACTORIZATION_HPP

#include "bernlax/complex_poly.hpp"
#include "bernlax/laurent_poly.hpp"

namespace bernlax {

// Double roots on the circle limit attainable root accuracy to roughly the
// square root of machine precision; classification bands account for that.
inline constexpr double kCircleClassTol = 1e-6;
inline constexpr double kRootPairTol = 1e-6;

/// Spectral factor of a Hermitian Laurent polynomial nonnegative on the
/// unit circle: f(z) = P(z) * conj(P(1/conj(z))) with P zero-free in the
/// open unit disk and positive real leading coefficient.
struct SpectralFactor {
    ComplexPoly P;
    double residual = 0.0;          // max coefficient error of reconstruction
    double min_root_modulus = 0.0;  // +inf when P is constant
};

/// Root-pairing spectral factorization. Forms z^m f(z) at the effective
/// center degree m, pairs every off-circle root with its reflection across
/// the circle, splits even-multiplicity circle roots equally, and scales so
/// the reconstruction matches a_0 of f.
///
/// Preconditions: f Hermitian, not identically zero, and
/// min over |z|=1 of Re f >= -tol. Violations of nonnegativity (including
/// unpaired roots and odd circle multiplicities) raise NotNonnegativeError.
SpectralFactor fejer_riesz(const LaurentPoly& f, double tol = 1e-9);

/// The identity read left-to-right: the Laurent polynomial with
/// a_m = sum_k P_{k+m} conj(P_k). Hermitian by construction and
/// nonnegative on the circle.
LaurentPoly reconstruct(const ComplexPoly& P);

}  // namespace bernlax

#endif
