#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bernlax/chebyshev.hpp"
#include "bernlax/errors.hpp"
#include "support/test_util.hpp"

using bernlax::BigInt;
using bernlax::Complex;
using bernlax::ComplexPoly;
using bernlax::ExactPoly;

namespace {

std::vector<double> real_coeffs(const ComplexPoly& p) {
    std::vector<double> out;
    for (const Complex& c : p.coeffs()) out.push_back(c.real());
    return out;
}

}  // namespace

TEST_CASE("chebyshev_t small cases") {
    CHECK(bernlax::chebyshev_t(0).coeffs() == std::vector<BigInt>{1});
    CHECK(bernlax::chebyshev_t(1).coeffs() == std::vector<BigInt>{0, 1});
    CHECK(bernlax::chebyshev_t(3).coeffs() ==
          std::vector<BigInt>{0, -3, 0, 4});
    CHECK(bernlax::chebyshev_t(5).coeffs() ==
          std::vector<BigInt>{0, 5, 0, -20, 0, 16});
    CHECK_THROWS_AS(bernlax::chebyshev_t(-1), bernlax::ContractError);
}

TEST_CASE("chebyshev_t bounded on [-1,1] and matches cos(n arccos)") {
    // High-n monomial coefficients are huge, so an accurate (compensated)
    // evaluation is needed to see the polynomial rather than roundoff.
    for (int n = 0; n <= 30; ++n) {
        const std::vector<double> t =
            real_coeffs(bernlax::chebyshev_t(n).to_complex_poly());
        for (int i = 0; i < 200; ++i) {
            const double x = -1.0 + 2.0 * i / 199.0;
            CHECK(std::abs(testsupport::compensated_horner(t, x)) <=
                  1.0 + 1e-12);
        }
        for (int i = 0; i < 64; ++i) {
            const double theta = std::numbers::pi * i / 63.0;
            const double v =
                testsupport::compensated_horner(t, std::cos(theta));
            CHECK(std::abs(v - std::cos(n * theta)) < 1e-10);
        }
    }
}

TEST_CASE("extremal polynomial small cases") {
    CHECK(bernlax::extremal_polynomial(1).coeffs() == std::vector<BigInt>{1});
    CHECK(bernlax::extremal_polynomial(3).coeffs() ==
          std::vector<BigInt>{9, -6, 1});
    CHECK(bernlax::extremal_polynomial(4).coeffs() ==
          std::vector<BigInt>{16, -32, 16});
    CHECK(bernlax::extremal_polynomial(1).denominator() == 1);
    CHECK_THROWS_AS(bernlax::extremal_polynomial(0), bernlax::ContractError);
}

TEST_CASE("extremal polynomial: constant term and degree parity, n <= 30") {
    for (int n = 1; n <= 30; ++n) {
        const ExactPoly p = bernlax::extremal_polynomial(n);
        CHECK(p.coeff(0) == BigInt(n) * n);
        CHECK(p.denominator() == 1);
        const int expected = (n % 2 == 1) ? n - 1 : n - 2;
        CHECK(p.degree() == expected);
    }
}

TEST_CASE("extremal_value") {
    CHECK(bernlax::extremal_value(1) == 1);
    CHECK(bernlax::extremal_value(3) == 9);
    CHECK(bernlax::extremal_value(12) == 144);
    CHECK_THROWS_AS(bernlax::extremal_value(0), bernlax::ContractError);
}

namespace {

std::vector<BigInt> big_convolve(const std::vector<BigInt>& a,
                                 const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<BigInt> big_power(BigInt lin, int e) {
    std::vector<BigInt> out = {BigInt(1)};
    for (int i = 0; i < e; ++i) out = big_convolve(out, {BigInt(1), lin});
    return out;
}

}  // namespace

TEST_CASE("admissibility identity holds exactly: 2s p_n = (1+s)^n (1 - T_n)") {
    // Integer-arithmetic oracle, expanded independently of the library's
    // construction path. With this identity the growth ratio equals
    // (1 - cos n theta)/2 on the substitution grid, so it lies in [0, 1]
    // with supremum exactly 1.
    for (int n = 1; n <= 30; ++n) {
        const ExactPoly p = bernlax::extremal_polynomial(n);
        REQUIRE(p.denominator() == 1);
        std::vector<BigInt> lhs = {BigInt(0), BigInt(2)};  // 2s
        lhs = big_convolve(lhs, p.coeffs());

        const ExactPoly t = bernlax::chebyshev_t(n);
        std::vector<BigInt> rhs = big_power(BigInt(1), n);
        rhs.resize(std::max(rhs.size(), lhs.size()), BigInt(0));
        for (int j = 0; j <= t.degree(); ++j) {
            if (t.coeff(j) == 0) continue;
            const auto term =
                big_convolve(big_power(BigInt(-1), j), big_power(BigInt(1), n - j));
            for (size_t i = 0; i < term.size(); ++i) {
                rhs[i] -= t.coeff(j) * term[i];
            }
        }
        lhs.resize(rhs.size(), BigInt(0));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("admissibility of the extremal with sharp supremum (numeric)") {
    // Double-faithful range: every coefficient of p_n is far below 2^53.
    for (int n : {1, 2, 3, 5, 8, 13, 16}) {
        const ComplexPoly p = bernlax::extremal_polynomial(n).to_complex_poly();
        for (int i = 1; i <= 4096; ++i) {
            const double theta = std::numbers::pi * i / 4097.0;
            const double ratio = testsupport::growth_ratio_at(p, n, theta);
            const double closed_form = 0.5 * (1.0 - std::cos(n * theta));
            CHECK(std::abs(ratio - closed_form) < 1e-10);
            CHECK(ratio <= 1.0 + 1e-10);
            const double s = std::pow(std::tan(theta / 2.0), 2);
            CHECK(p(Complex{s, 0.0}).real() >= -1e-12);
        }
        CHECK(testsupport::halfline_growth_sup(p, n) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("zero structure of the extremal") {
    const auto r3 = bernlax::zero_structure(3, 1e-6);
    CHECK(r3.all_double);
    CHECK(r3.all_positive_real);
    REQUIRE(r3.roots.size() == 2);
    for (const Complex& r : r3.roots) {
        CHECK(std::abs(r - Complex{3.0, 0.0}) < 1e-6);
    }

    const auto r4 = bernlax::zero_structure(4, 1e-6);
    CHECK(r4.all_double);
    CHECK(r4.all_positive_real);
    REQUIRE(r4.roots.size() == 2);
    for (const Complex& r : r4.roots) {
        CHECK(std::abs(r - Complex{1.0, 0.0}) < 1e-6);
    }

    CHECK_THROWS_AS(bernlax::zero_structure(2), bernlax::ContractError);
}

TEST_CASE("zero locations are tan^2(pi j / n)") {
    for (int n : {5, 6, 10}) {
        const auto report = bernlax::zero_structure(n, 1e-6);
        CHECK(report.all_double);
        CHECK(report.all_positive_real);
        for (const Complex& r : report.roots) {
            double best = 1e300;
            for (int j = 1; 2 * j < n; ++j) {
                const double predicted =
                    std::pow(std::tan(std::numbers::pi * j / n), 2);
                best = std::min(best, std::abs(r - Complex{predicted, 0.0}) /
                                          std::max(1.0, predicted));
            }
            CHECK(best < 1e-6);
        }
    }
}

TEST_CASE("exact poly normalization") {
    const ExactPoly p({BigInt(2), BigInt(4)}, BigInt(6));
    CHECK(p.coeffs() == std::vector<BigInt>{1, 2});
    CHECK(p.denominator() == 3);
    const ExactPoly q({BigInt(1)}, BigInt(-2));
    CHECK(q.coeff(0) == -1);
    CHECK(q.denominator() == 2);
    CHECK(ExactPoly().degree() == -1);
    CHECK_THROWS_AS(ExactPoly({BigInt(1)}, BigInt(0)), bernlax::ContractError);
}

TEST_CASE("floating conversion detects overflow") {
    BigInt huge = 1;
    for (int i = 0; i < 1100; ++i) huge *= 2;
    CHECK_THROWS_AS(ExactPoly({huge}).to_complex_poly(),
                    bernlax::OverflowError);
    const ComplexPoly p = ExactPoly({BigInt(9), BigInt(-6)}).to_complex_poly();
    CHECK(p.coeff(0) == Complex{9.0, 0.0});
    CHECK(p.coeff(1) == Complex{-6.0, 0.0});
}
