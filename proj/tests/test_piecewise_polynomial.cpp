#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heisengram/bspline.hpp"
#include "heisengram/piecewise_polynomial.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace heisengram;
using namespace heisengram::testing;

namespace {

PiecewisePolynomial b3_literal() {
    // 1/2 t², -t²+3t-3/2, 1/2 t²-3t+9/2 on [0,1],[1,2],[2,3].
    return PiecewisePolynomial(
        {0, 1, 2, 3},
        {Polynomial({Rational(0), Rational(0), Rational(1, 2)}),
         Polynomial({Rational(-3, 2), Rational(3), Rational(-1)}),
         Polynomial({Rational(9, 2), Rational(-3), Rational(1, 2)})});
}

}  // namespace

TEST_CASE("evaluation of B-spline pieces") {
    const auto b3 = b3_literal();
    CHECK(b3(Rational(1, 2)) == Rational(1, 8));
    CHECK(b3(Rational(3, 2)) == Rational(3, 4));
    const auto b1 = PiecewisePolynomial::indicator(0, 1);
    CHECK(b1(Rational(2)) == 0);
    CHECK(b1(Rational(1)) == 1);  // left piece at the final breakpoint
    CHECK(b1(Rational(0)) == 1);
}

TEST_CASE("eval outside support is exactly zero") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_piecewise(rng);
        const auto sup = p.support();
        if (!sup) continue;
        CHECK(p(sup->first - Rational(1, 7)) == 0);
        CHECK(p(sup->second + Rational(5, 3)) == 0);
    }
}

TEST_CASE("grid-convolution oracle for B3 evaluation") {
    // B3(t) = ∫_{t-1}^t B2, sampled numerically.
    const auto b2 = bspline(2);
    const auto b3 = bspline(3);
    for (double t : {0.25, 0.5, 1.0, 1.5, 2.2, 2.9}) {
        const double numeric = adaptive_simpson_real([&](double x) { return b2(x); }, t - 1.0, t, 1e-13);
        CHECK(std::abs(numeric - b3(t)) < 1e-10);
    }
}

TEST_CASE("convolution of unit indicators is the hat") {
    const auto chi = PiecewisePolynomial::indicator(0, 1);
    const auto hat = convolve(chi, chi);
    CHECK(hat.support()->first == 0);
    CHECK(hat.support()->second == 2);
    CHECK(hat(Rational(1)) == 1);
    CHECK(hat(Rational(1, 2)) == Rational(1, 2));
    CHECK(hat == bspline(2));
}

TEST_CASE("convolve(B2, B1) reproduces the exact B3 pieces") {
    const auto built = convolve(bspline(2), PiecewisePolynomial::indicator(0, 1));
    CHECK(built == b3_literal());
    CHECK(built == bspline(3));
}

TEST_CASE("convolution with the zero function") {
    CHECK(convolve(PiecewisePolynomial::indicator(0, 1), PiecewisePolynomial::zero()).is_zero());
}

TEST_CASE("shifted-product integrals of B3") {
    const auto b3 = bspline(3);
    CHECK(integrate_product_shifted(b3, b3, 0, 0, 1) == Rational(1, 20));
    CHECK(integrate_product_shifted(b3, b3, 1, 0, 1) == Rational(13, 120));
    CHECK(integrate_product_shifted(b3, b3, 2, 0, 1) == Rational(1, 120));
    // Disjoint effective supports.
    CHECK(integrate_product_shifted(b3, b3, 10, -20, 20) == 0);
}

TEST_CASE("modulated integral of an indicator has the sinc closed form") {
    const auto chi02 = PiecewisePolynomial::indicator(0, 2);
    for (double lam : {0.1, 0.37, 0.77, 0.99, 2.5}) {
        const double w = std::numbers::pi * lam;
        const auto got = modulated_integral(chi02, w);
        const std::complex<double> expected =
            2.0 * std::exp(std::complex<double>(0, w)) * (std::sin(w) / w);
        CHECK(std::abs(got - expected) < 1e-13);
    }
}

TEST_CASE("modulated integral at omega zero is the plain integral") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_piecewise(rng);
        const auto got = modulated_integral(p, 0.0);
        CHECK(got.real() == doctest::Approx(to_double(p.integral())).epsilon(1e-14));
        CHECK(got.imag() == 0.0);
    }
}

TEST_CASE("modulated integral of B3 against the quadrature oracle") {
    const auto b3 = bspline(3);
    for (double w : {std::numbers::pi, 0.3, 2.0, -4.7, 11.0}) {
        const auto got = modulated_integral(b3, w);
        const auto oracle = adaptive_simpson(
            [&](double t) { return std::exp(std::complex<double>(0, w * t)) * b3(t); }, 0.0, 3.0, 1e-15);
        CHECK(std::abs(got - oracle) < 1e-12);
    }
}

TEST_CASE("modulated integral is continuous across the series threshold") {
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_piecewise(rng);
        if (p.is_zero()) continue;
        const double width = to_double(p.support_width());
        const double w_thr = 0.5 / width;
        const auto below = modulated_integral(p, w_thr * (1.0 - 1e-9));
        const auto above = modulated_integral(p, w_thr * (1.0 + 1e-9));
        CHECK(std::abs(below - above) < 1e-12 * (1.0 + std::abs(below)));
        // And the small-omega limit matches the omega = 0 branch.
        const auto tiny = modulated_integral(p, 1e-13);
        CHECK(std::abs(tiny - modulated_integral(p, 0.0)) < 1e-12);
    }
}

TEST_CASE("piecewise algebra identities under randomized testing") {
    std::mt19937 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_piecewise(rng);
        const auto q = random_piecewise(rng);
        // Commutativity, exact equality in canonical form.
        CHECK(convolve(p, q) == convolve(q, p));
        // ∫ (p*q) = ∫p · ∫q.
        CHECK(convolve(p, q).integral() == p.integral() * q.integral());
        if (i % 4 == 0) {
            const auto r = random_piecewise(rng, 2, 1);
            CHECK(convolve(convolve(p, q), r) == convolve(p, convolve(q, r)));
        }
    }
}

TEST_CASE("normalization merges equal pieces and trims zeros") {
    const auto glued = PiecewisePolynomial::indicator(0, 1) + PiecewisePolynomial::indicator(1, 2);
    CHECK(glued == PiecewisePolynomial::indicator(0, 2));
    CHECK(glued.pieces().size() == 1);
    const auto cancelled = PiecewisePolynomial::indicator(0, 1) - PiecewisePolynomial::indicator(0, 1);
    CHECK(cancelled.is_zero());
}

TEST_CASE("B-spline basics for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto b = bspline(n);
        CHECK(b.support()->first == 0);
        CHECK(b.support()->second == n);
        CHECK(b.integral() == 1);
        for (double t = -0.5; t <= n + 0.5; t += 0.0625) CHECK(b(t) >= 0.0);
    }
    CHECK(bspline(2)(Rational(1)) == 1);
    CHECK_THROWS_AS(bspline(0), std::invalid_argument);
}

TEST_CASE("restriction and shifting") {
    const auto b3 = bspline(3);
    const auto mid = b3.restricted(1, 2);
    CHECK(mid(Rational(3, 2)) == Rational(3, 4));
    CHECK(mid(Rational(1, 2)) == 0);
    const auto moved = b3.shifted(Rational(5, 2));
    CHECK(moved(Rational(3)) == b3(Rational(1, 2)));
    CHECK(moved.support()->first == Rational(5, 2));
}
