#include "bernlax/laurent_poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bernlax/errors.hpp"

namespace bernlax {

LaurentPoly::LaurentPoly() : center_degree_(0), coeffs_{Complex{0.0, 0.0}} {}

LaurentPoly::LaurentPoly(int center_degree, std::vector<Complex> coeffs)
    : center_degree_(center_degree), coeffs_(std::move(coeffs)) {
    if (center_degree_ < 0) {
        throw ContractError("LaurentPoly: center degree must be nonnegative");
    }
    if (coeffs_.size() != 2 * static_cast<size_t>(center_degree_) + 1) {
        throw ContractError(
            "LaurentPoly: expected " +
            std::to_string(2 * center_degree_ + 1) + " coefficients, got " +
            std::to_string(coeffs_.size()));
    }
}

Complex LaurentPoly::coeff(int k) const {
    if (k < -center_degree_ || k > center_degree_) return Complex{0.0, 0.0};
    return coeffs_[static_cast<size_t>(k + center_degree_)];
}

double LaurentPoly::max_coeff_modulus() const {
    double m = 0.0;
    for (const Complex& v : coeffs_) m = std::max(m, std::abs(v));
    return m;
}

bool LaurentPoly::is_zero() const {
    for (const Complex& v : coeffs_) {
        if (std::abs(v) > 0.0) return false;
    }
    return true;
}

bool LaurentPoly::is_hermitian() const {
    const double tol = kCoeffZeroThreshold * max_coeff_modulus();
    for (int k = 1; k <= center_degree_; ++k) {
        if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
    }
    return std::abs(coeff(0).imag()) <= tol;
}

bool LaurentPoly::has_negative_powers() const {
    for (int k = 1; k <= center_degree_; ++k) {
        if (std::abs(coeff(-k)) > 0.0) return true;
    }
    return false;
}

Complex LaurentPoly::operator()(Complex z) const {
    if (z == Complex{0.0, 0.0}) {
        if (has_negative_powers()) {
            throw EvalDomainError(
                "LaurentPoly: evaluation at 0 with nonzero negative powers");
        }
        return coeff(0);
    }
    // Horner on the shifted ordinary polynomial, then divide by z^n.
    Complex acc = coeffs_.back();
    for (int j = static_cast<int>(coeffs_.size()) - 2; j >= 0; --j) {
        acc = acc * z + coeffs_[static_cast<size_t>(j)];
    }
    return acc * std::pow(z, Complex(-center_degree_, 0.0));
}

LaurentPoly LaurentPoly::derivative(int order) const {
    if (order < 1) throw ContractError("derivative: order must be >= 1");
    LaurentPoly cur = *this;
    for (int pass = 0; pass < order; ++pass) {
        const int n = cur.center_degree_;
        // d/dz sum a_k z^k = sum k a_k z^{k-1}: exponents now span
        // [-n-1, n-1]; store with center degree n+1.
        std::vector<Complex> d(2 * static_cast<size_t>(n + 1) + 1,
                               Complex{0.0, 0.0});
        for (int k = -n; k <= n; ++k) {
            d[static_cast<size_t>((k - 1) + (n + 1))] =
                cur.coeff(k) * static_cast<double>(k);
        }
        cur = LaurentPoly(n + 1, std::move(d));
    }
    return cur;
}

int LaurentPoly::effective_center_degree() const {
    const double threshold = kCoeffZeroThreshold * max_coeff_modulus();
    for (int k = center_degree_; k >= 1; --k) {
        if (std::abs(coeff(k)) > threshold || std::abs(coeff(-k)) > threshold) {
            return k;
        }
    }
    return 0;
}

LaurentPoly LaurentPoly::trimmed() const {
    const int m = effective_center_degree();
    if (m == center_degree_) return *this;
    std::vector<Complex> c(2 * static_cast<size_t>(m) + 1);
    for (int k = -m; k <= m; ++k) c[static_cast<size_t>(k + m)] = coeff(k);
    return LaurentPoly(m, std::move(c));
}

}  // namespace bernlax
