#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bernlax/chebyshev.hpp"
#include "bernlax/circle_scan.hpp"
#include "bernlax/errors.hpp"
#include "bernlax/transforms.hpp"
#include "support/test_util.hpp"

using bernlax::CandidateInput;
using bernlax::Complex;
using bernlax::ComplexPoly;
using bernlax::LaurentPoly;

namespace {

ComplexPoly extremal_float(int n) {
    return bernlax::extremal_polynomial(n).to_complex_poly();
}

CandidateInput random_candidate(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    std::uniform_int_distribution<int> pick_degree(0, n - 1);
    std::vector<Complex> coeffs(pick_degree(rng) + 1);
    for (Complex& c : coeffs) c = Complex{sym(rng), sym(rng)};
    return CandidateInput{ComplexPoly(std::move(coeffs)), n};
}

}  // namespace

TEST_CASE("lift_q") {
    const ComplexPoly one = ComplexPoly::from_real({1.0});
    const ComplexPoly q1 = bernlax::lift_q({one, 1});
    CHECK(q1.degree() == 1);
    CHECK(q1.coeff(0) == Complex{0.0, 0.0});
    CHECK(q1.coeff(1) == Complex{1.0, 0.0});

    const ComplexPoly q3 = bernlax::lift_q({extremal_float(3), 3});
    CHECK(q3.degree() == 3);
    CHECK(q3.coeff(0) == Complex{0.0, 0.0});
    CHECK(q3.coeff(1) == Complex{9.0, 0.0});
    CHECK(q3.coeff(2) == Complex{-6.0, 0.0});
    CHECK(q3.coeff(3) == Complex{1.0, 0.0});

    // degree n candidate violates the growth cap
    CHECK_THROWS_AS(bernlax::lift_q({ComplexPoly::monomial(2), 2}),
                    bernlax::ContractError);
    CHECK_THROWS_AS(bernlax::lift_q({one, 0}), bernlax::ContractError);
}

TEST_CASE("laurent_f fixed cases") {
    // p = 1, n = 1: f = (2 - z - 1/z)/4
    const LaurentPoly f1 = bernlax::laurent_f({ComplexPoly::from_real({1.0}), 1});
    CHECK(f1.center_degree() == 1);
    CHECK(std::abs(f1.coeff(-1) - Complex{-0.25, 0.0}) < 1e-15);
    CHECK(std::abs(f1.coeff(0) - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(f1.coeff(1) - Complex{-0.25, 0.0}) < 1e-15);

    // p = p_n: f = (2 - z^n - z^-n)/4
    for (int n : {1, 2, 3, 5, 8, 12}) {
        const LaurentPoly f = bernlax::laurent_f({extremal_float(n), n});
        CHECK(f.center_degree() == n);
        CHECK(std::abs(f.coeff(0) - Complex{0.5, 0.0}) < 1e-12);
        CHECK(std::abs(f.coeff(n) - Complex{-0.25, 0.0}) < 1e-12);
        CHECK(std::abs(f.coeff(-n) - Complex{-0.25, 0.0}) < 1e-12);
        for (int k = 1; k < n; ++k) {
            CHECK(std::abs(f.coeff(k)) < 1e-12);
        }
    }

    CHECK(bernlax::laurent_f({ComplexPoly(), 4}).is_zero());
}

TEST_CASE("poly_g fixed cases") {
    const ComplexPoly g1 = bernlax::poly_g({ComplexPoly::from_real({1.0}), 1});
    CHECK(g1.degree() == 2);
    CHECK(std::abs(g1.coeff(0) - Complex{-0.25, 0.0}) < 1e-15);
    CHECK(std::abs(g1.coeff(1) - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(g1.coeff(2) - Complex{-0.25, 0.0}) < 1e-15);

    // g'(1) = 0
    CHECK(std::abs(g1.derivative()(Complex{1.0, 0.0})) < 1e-14);

    CHECK(bernlax::poly_g({ComplexPoly(), 3}).is_zero());
}

TEST_CASE("koebe") {
    CHECK(std::abs(bernlax::koebe(Complex{1.0, 0.0}) - Complex{0.25, 0.0}) <
          1e-15);
    CHECK(std::abs(bernlax::koebe(Complex{0.0, 1.0}) - Complex{0.5, 0.0}) <
          1e-15);
    CHECK_THROWS_AS(bernlax::koebe(Complex{-1.0, 0.0}),
                    bernlax::EvalDomainError);
}

TEST_CASE("koebe maps the circle onto [1/4, inf)") {
    for (int i = 0; i < 1000; ++i) {
        if (i == 500) continue;  // the pole at theta = pi
        const double theta = 2.0 * std::numbers::pi * i / 1000.0;
        const Complex k = bernlax::koebe(std::polar(1.0, theta));
        CHECK(std::abs(k.imag()) <= 1e-14);
        CHECK(k.real() >= 0.25 - 1e-14);
    }
}

TEST_CASE("p0 from f and from g: fixed cases") {
    const LaurentPoly f1 = bernlax::laurent_f({ComplexPoly::from_real({1.0}), 1});
    CHECK(std::abs(bernlax::p0_from_f(f1) - Complex{1.0, 0.0}) < 1e-14);

    for (int n : {2, 5, 9}) {
        const LaurentPoly fn = bernlax::laurent_f({extremal_float(n), n});
        CHECK(std::abs(bernlax::p0_from_f(fn) -
                       Complex{static_cast<double>(n) * n, 0.0}) <
              1e-10 * n * n);
    }

    CHECK(std::abs(bernlax::p0_from_f(LaurentPoly(0, {Complex{3.0, 0.0}}))) <
          1e-15);

    const ComplexPoly g1 = bernlax::poly_g({ComplexPoly::from_real({1.0}), 1});
    CHECK(std::abs(bernlax::p0_from_g(g1) - Complex{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(bernlax::p0_from_g(ComplexPoly::from_real({2.0, 5.0}))) <
          1e-15);

    const ComplexPoly g3 = bernlax::poly_g({extremal_float(3), 3});
    CHECK(std::abs(bernlax::p0_from_g(g3) - Complex{9.0, 0.0}) < 1e-12);
}

TEST_CASE("consistency chain p0_from_f == p0_from_g == p(0)") {
    std::mt19937_64 rng(321);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            const CandidateInput c = random_candidate(rng, n);
            const Complex expected = c.p.coeff(0);
            const Complex via_f = bernlax::p0_from_f(bernlax::laurent_f(c));
            const Complex via_g = bernlax::p0_from_g(bernlax::poly_g(c));
            const double scale = 1.0 + std::abs(expected);
            CHECK(std::abs(via_f - expected) <= 1e-9 * scale);
            CHECK(std::abs(via_g - expected) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("transform isometry: circle sup equals half-line sup") {
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const CandidateInput c = random_candidate(rng, n);
            const double circle =
                bernlax::sup_modulus_on_circle(bernlax::laurent_f(c)).value;
            const double halfline = testsupport::halfline_growth_sup(c.p, n);
            CHECK(std::abs(circle - halfline) <=
                  1e-8 * std::max(1.0, halfline));
        }
    }
}

TEST_CASE("real nonnegative candidates give Hermitian nonnegative f") {
    std::mt19937_64 rng(12345);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexPoly p =
                testsupport::random_real_nonneg_candidate(rng, n);
            const LaurentPoly f = bernlax::laurent_f({p, n});
            REQUIRE(f.is_hermitian());
            CHECK(bernlax::min_real_on_circle(f).value >= -1e-10);
            // symmetry is exact by construction
            for (int k = 1; k <= n; ++k) {
                CHECK(f.coeff(-k) == f.coeff(k));
            }
        }
    }
}

TEST_CASE("transform size cap") {
    CHECK_THROWS_AS(
        bernlax::laurent_f({ComplexPoly::from_real({1.0}), 501}),
        bernlax::SizeError);
}
