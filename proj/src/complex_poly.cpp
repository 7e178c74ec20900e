#include "bernlax/complex_poly.hpp"

#include <algorithm>
#include <cmath>

#include "bernlax/errors.hpp"

namespace bernlax {

namespace {

// Highest index with |c| above the scale-relative zero threshold, or -1.
int normalized_degree(const std::vector<Complex>& c) {
    double max_mod = 0.0;
    for (const Complex& v : c) max_mod = std::max(max_mod, std::abs(v));
    const double threshold = kCoeffZeroThreshold * max_mod;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        if (std::abs(c[k]) > threshold && std::abs(c[k]) > 0.0) return k;
    }
    return -1;
}

}  // namespace

ComplexPoly::ComplexPoly() : coeffs_{Complex{0.0, 0.0}}, degree_(-1) {}

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) {
    degree_ = normalized_degree(coeffs);
    if (degree_ < 0) {
        coeffs_ = {Complex{0.0, 0.0}};
    } else {
        coeffs.resize(static_cast<size_t>(degree_) + 1);
        coeffs_ = std::move(coeffs);
    }
}

ComplexPoly ComplexPoly::from_real(const std::vector<double>& coeffs) {
    std::vector<Complex> c(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) c[k] = Complex{coeffs[k], 0.0};
    return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::monomial(int k, Complex scale) {
    if (k < 0) throw ContractError("monomial: negative exponent");
    std::vector<Complex> c(static_cast<size_t>(k) + 1, Complex{0.0, 0.0});
    c.back() = scale;
    return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::from_exact(std::vector<Complex> coeffs) {
    int degree = -1;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        if (coeffs[static_cast<size_t>(k)] != Complex{0.0, 0.0}) {
            degree = k;
            break;
        }
    }
    ComplexPoly out;
    if (degree >= 0) {
        coeffs.resize(static_cast<size_t>(degree) + 1);
        out.coeffs_ = std::move(coeffs);
        out.degree_ = degree;
    }
    return out;
}

Complex ComplexPoly::coeff(int k) const {
    if (k < 0 || k > degree_) return Complex{0.0, 0.0};
    return coeffs_[static_cast<size_t>(k)];
}

double ComplexPoly::max_coeff_modulus() const {
    double m = 0.0;
    for (const Complex& v : coeffs_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexPoly::is_real(double tol) const {
    for (const Complex& v : coeffs_) {
        if (std::abs(v.imag()) > tol) return false;
    }
    return true;
}

bool ComplexPoly::is_real() const {
    return is_real(kCoeffZeroThreshold * max_coeff_modulus());
}

Complex ComplexPoly::operator()(Complex z) const {
    Complex acc = coeffs_.back();
    for (int k = static_cast<int>(coeffs_.size()) - 2; k >= 0; --k) {
        acc = acc * z + coeffs_[static_cast<size_t>(k)];
    }
    return acc;
}

ComplexPoly ComplexPoly::derivative(int order) const {
    if (order < 1) throw ContractError("derivative: order must be >= 1");
    std::vector<Complex> c(coeffs_.begin(), coeffs_.end());
    for (int pass = 0; pass < order; ++pass) {
        if (c.size() <= 1) return ComplexPoly();
        std::vector<Complex> d(c.size() - 1);
        for (size_t k = 1; k < c.size(); ++k) {
            d[k - 1] = c[k] * static_cast<double>(k);
        }
        c = std::move(d);
    }
    return ComplexPoly(std::move(c));
}

}  // namespace bernlax
