#include "bernlax/transforms.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "bernlax/errors.hpp"

namespace bernlax {

namespace {

// Row m of Pascal's triangle in doubles.
std::vector<double> binomial_row(int m) {
    std::vector<double> row(static_cast<size_t>(m) + 1);
    row[0] = 1.0;
    for (int i = 0; i < m; ++i) {
        row[static_cast<size_t>(i) + 1] =
            row[static_cast<size_t>(i)] * (m - i) / (i + 1);
    }
    return row;
}

void validate(const CandidateInput& c) {
    if (c.n < 1) throw ContractError("CandidateInput: n must be >= 1");
    if (c.n > kMaxTransformExponent) {
        throw SizeError("CandidateInput: n exceeds the supported maximum " +
                        std::to_string(kMaxTransformExponent));
    }
    if (c.p.degree() > c.n - 1) {
        throw ContractError(
            "CandidateInput: degree " + std::to_string(c.p.degree()) +
            " exceeds the growth cap n - 1 = " + std::to_string(c.n - 1));
    }
}

// Coefficients of 4^{-n} sum_{k>=1} q_k (-1)^k (1-z)^{2k} (1+z)^{2(n-k)}
// with q_k = p_{k-1}. Each summand is palindromic of length 2n+1, so only
// the lower half is accumulated and then mirrored; the symmetry is exact.
std::vector<Complex> expand_conjugated(const CandidateInput& c) {
    const int n = c.n;
    std::vector<Complex> lower(static_cast<size_t>(n) + 1, Complex{0.0, 0.0});
    const double quarter_pow = std::pow(0.25, n);

    for (int k = 1; k <= n; ++k) {
        const Complex qk = c.p.coeff(k - 1);
        if (qk == Complex{0.0, 0.0}) continue;
        const std::vector<double> a = binomial_row(2 * k);
        const std::vector<double> b = binomial_row(2 * (n - k));
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const Complex weight = qk * (sign * quarter_pow);
        for (int m = 0; m <= n; ++m) {
            // [z^m] (1-z)^{2k} (1+z)^{2(n-k)}
            double conv = 0.0;
            const int lo = std::max(0, m - 2 * (n - k));
            const int hi = std::min(2 * k, m);
            for (int i = lo; i <= hi; ++i) {
                const double term = a[static_cast<size_t>(i)] *
                                    b[static_cast<size_t>(m - i)];
                conv += (i % 2 == 0) ? term : -term;
            }
            lower[static_cast<size_t>(m)] += weight * conv;
        }
    }

    std::vector<Complex> full(2 * static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        full[static_cast<size_t>(m)] = lower[static_cast<size_t>(m)];
        full[static_cast<size_t>(2 * n - m)] = lower[static_cast<size_t>(m)];
    }
    return full;
}

}  // namespace

ComplexPoly lift_q(const CandidateInput& c) {
    validate(c);
    if (c.p.is_zero()) return ComplexPoly();
    std::vector<Complex> shifted(c.p.coeffs().size() + 1, Complex{0.0, 0.0});
    for (size_t k = 0; k < c.p.coeffs().size(); ++k) {
        shifted[k + 1] = c.p.coeffs()[k];
    }
    return ComplexPoly(std::move(shifted));
}

LaurentPoly laurent_f(const CandidateInput& c) {
    validate(c);
    return LaurentPoly(c.n, expand_conjugated(c));
}

ComplexPoly poly_g(const CandidateInput& c) {
    validate(c);
    const std::vector<Complex> coeffs = expand_conjugated(c);

    // g'(1) = n q(0) = 0; a failure here is a construction bug.
    Complex deriv_at_one{0.0, 0.0};
    double scale = 1.0;
    for (size_t m = 1; m < coeffs.size(); ++m) {
        deriv_at_one += static_cast<double>(m) * coeffs[m];
        scale += static_cast<double>(m) * std::abs(coeffs[m]);
    }
    if (std::abs(deriv_at_one) > 1e-9 * scale) {
        throw InternalConsistencyError(
            "poly_g: derivative at 1 is not zero");
    }
    return ComplexPoly(coeffs);
}

Complex koebe(Complex z) {
    if (z == Complex{-1.0, 0.0}) {
        throw EvalDomainError("koebe: pole at z = -1");
    }
    // On the circle k(e^{i t}) = 1/(2 + 2 cos t) exactly; the generic
    // quotient loses all relative accuracy in the imaginary part there.
    if (std::abs(std::norm(z) - 1.0) <= 1e-14) {
        return Complex{1.0 / (2.0 + 2.0 * z.real()), 0.0};
    }
    const Complex w = 1.0 + z;
    return z / (w * w);
}

Complex p0_from_f(const LaurentPoly& f) {
    return -2.0 * f.derivative(2)(Complex{1.0, 0.0});
}

Complex p0_from_g(const ComplexPoly& g) {
    if (g.degree() < 2) return Complex{0.0, 0.0};
    return -2.0 * g.derivative(2)(Complex{1.0, 0.0});
}

}  // namespace bernlax
