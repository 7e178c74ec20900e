#include "bernlax/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "bernlax/errors.hpp"
#include "bernlax/roots.hpp"

namespace bernlax {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

std::vector<BigInt> convolve(const std::vector<BigInt>& a,
                             const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Binomial power tables (1+s)^j and (1-s)^j for j = 0..n.
std::vector<std::vector<BigInt>> power_table(BigInt linear_coeff, int n) {
    std::vector<std::vector<BigInt>> table(static_cast<size_t>(n) + 1);
    table[0] = {BigInt(1)};
    const std::vector<BigInt> base = {BigInt(1), linear_coeff};
    for (int j = 1; j <= n; ++j) {
        table[static_cast<size_t>(j)] =
            convolve(table[static_cast<size_t>(j - 1)], base);
    }
    return table;
}

}  // namespace

ExactPoly::ExactPoly() : coeffs_{BigInt(0)}, den_(1) {}

ExactPoly::ExactPoly(std::vector<BigInt> coeffs, BigInt denominator)
    : coeffs_(std::move(coeffs)), den_(std::move(denominator)) {
    if (den_ == 0) throw ContractError("ExactPoly: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (BigInt& c : coeffs_) c = -c;
    }
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_ = {BigInt(0)};

    BigInt g = den_;
    for (const BigInt& c : coeffs_) g = gcd(g, abs(c));
    if (g > 1) {
        den_ /= g;
        for (BigInt& c : coeffs_) c /= g;
    }
}

int ExactPoly::degree() const {
    if (coeffs_.size() == 1 && coeffs_[0] == 0) return -1;
    return static_cast<int>(coeffs_.size()) - 1;
}

BigInt ExactPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[static_cast<size_t>(k)];
}

ComplexPoly ExactPoly::to_complex_poly() const {
    const double den = den_.convert_to<double>();
    if (!std::isfinite(den)) {
        throw OverflowError("ExactPoly: denominator exceeds double range");
    }
    std::vector<Complex> c(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const double v = coeffs_[k].convert_to<double>();
        if (!std::isfinite(v)) {
            throw OverflowError("ExactPoly: coefficient exceeds double range");
        }
        c[k] = Complex{v / den, 0.0};
    }
    return ComplexPoly::from_exact(std::move(c));
}

ExactPoly chebyshev_t(int n) {
    if (n < 0) throw ContractError("chebyshev_t: n must be nonnegative");
    std::vector<BigInt> prev = {BigInt(1)};          // T_0
    if (n == 0) return ExactPoly(std::move(prev));
    std::vector<BigInt> cur = {BigInt(0), BigInt(1)};  // T_1
    for (int k = 2; k <= n; ++k) {
        std::vector<BigInt> next(static_cast<size_t>(k) + 1, BigInt(0));
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2 * cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return ExactPoly(std::move(cur));
}

ExactPoly extremal_polynomial(int n) {
    if (n < 1) throw ContractError("extremal_polynomial: n must be >= 1");

    const ExactPoly t = chebyshev_t(n);
    const auto plus = power_table(BigInt(1), n);    // (1+s)^j
    const auto minus = power_table(BigInt(-1), n);  // (1-s)^j

    // numerator N(s) = (1+s)^n - sum_j t_j (1-s)^j (1+s)^{n-j}
    std::vector<BigInt> numerator(static_cast<size_t>(n) + 1, BigInt(0));
    for (size_t i = 0; i < plus[static_cast<size_t>(n)].size(); ++i) {
        numerator[i] = plus[static_cast<size_t>(n)][i];
    }
    for (int j = 0; j <= t.degree(); ++j) {
        const BigInt tj = t.coeff(j);
        if (tj == 0) continue;
        const std::vector<BigInt> term =
            convolve(minus[static_cast<size_t>(j)],
                     plus[static_cast<size_t>(n - j)]);
        for (size_t i = 0; i < term.size(); ++i) {
            numerator[i] -= tj * term[i];
        }
    }

    // Exact synthetic division by 2s.
    if (numerator[0] != 0) {
        throw InternalConsistencyError(
            "extremal_polynomial: numerator has nonzero constant term");
    }
    std::vector<BigInt> quotient(numerator.begin() + 1, numerator.end());
    for (BigInt& c : quotient) {
        if (c % 2 != 0) {
            throw InternalConsistencyError(
                "extremal_polynomial: numerator not divisible by 2s");
        }
        c /= 2;
    }

    ExactPoly p(std::move(quotient));
    if (p.coeff(0) != BigInt(n) * n) {
        throw InternalConsistencyError(
            "extremal_polynomial: constant coefficient is not n^2");
    }
    const int expected_degree = (n % 2 == 1) ? n - 1 : n - 2;
    if (p.degree() != expected_degree) {
        throw InternalConsistencyError(
            "extremal_polynomial: unexpected degree " +
            std::to_string(p.degree()));
    }
    return p;
}

long long extremal_value(int n) {
    if (n < 1) throw ContractError("extremal_value: n must be >= 1");
    const long long value = static_cast<long long>(n) * n;
    if (extremal_polynomial(n).coeff(0) != value) {
        throw InternalConsistencyError(
            "extremal_value: mismatch with constructed polynomial");
    }
    return value;
}

ZeroStructureReport zero_structure(int n, double tol) {
    if (n < 3) {
        throw ContractError(
            "zero_structure: n must be >= 3 (no roots to analyze below)");
    }
    const ComplexPoly p = extremal_polynomial(n).to_complex_poly();
    ZeroStructureReport report;
    report.roots = roots(p);

    // Greedy clustering within tol relative to root magnitude.
    std::vector<Complex> pending = report.roots;
    std::sort(pending.begin(), pending.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    report.all_double = true;
    report.all_positive_real = true;
    size_t i = 0;
    while (i < pending.size()) {
        Complex centroid = pending[i];
        size_t j = i + 1;
        while (j < pending.size()) {
            const double radius = tol * std::max(1.0, std::abs(centroid));
            if (std::abs(pending[j] - centroid) > radius) break;
            centroid = (centroid * static_cast<double>(j - i) + pending[j]) /
                       static_cast<double>(j - i + 1);
            ++j;
        }
        const size_t multiplicity = j - i;
        if (multiplicity != 2) report.all_double = false;
        const double imag_tol = tol * std::max(1.0, std::abs(centroid));
        if (centroid.real() <= 0.0 || std::abs(centroid.imag()) > imag_tol) {
            report.all_positive_real = false;
        }
        i = j;
    }
    return report;
}

}  // namespace bernlax
