#include <gtest/gtest.h>

#include <random>

#include "optapprox/poly.hpp"
#include "test_util.hpp"

using namespace optapprox;
using test::expect_close;

TEST(Poly, MulTelescopes) {
    const Poly p = Poly{1.0, -1.0} * Poly{1.0, 1.0, 1.0};
    EXPECT_EQ(p.degree(), 3u);
    expect_close(p.coeff(0), 1.0, 0.0);
    expect_close(p.coeff(1), 0.0, 0.0);
    expect_close(p.coeff(2), 0.0, 0.0);
    expect_close(p.coeff(3), -1.0, 0.0);
}

TEST(Poly, MulByOneIsIdentity) {
    const Poly p{2.0, Complex{0.0, 1.0}, -3.5};
    const Poly q = p * Poly::one();
    EXPECT_EQ(q.degree(), p.degree());
    for (std::size_t k = 0; k <= p.degree(); ++k) expect_close(q.coeff(k), p.coeff(k), 0.0);
}

TEST(Poly, MulBinomialSquare) {
    const Poly p = Poly{1.0, -1.0} * Poly{1.0, -1.0};
    expect_close(p.coeff(0), 1.0, 0.0);
    expect_close(p.coeff(1), -2.0, 0.0);
    expect_close(p.coeff(2), 1.0, 0.0);
}

TEST(Poly, ZeroPolynomial) {
    const Poly z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), 0u);
    EXPECT_TRUE((z * Poly{1.0, 2.0}).is_zero());
    EXPECT_TRUE((Complex{0.0} * Poly{1.0, 2.0}).is_zero());
}

TEST(Poly, TrailingCoefficientsTrimmed) {
    const Poly p{1.0, 0.5, 1e-20};
    EXPECT_EQ(p.degree(), 1u);
    const Poly tiny{1e-300};
    EXPECT_FALSE(tiny.is_zero());
}

TEST(Poly, DerivativeBasics) {
    EXPECT_TRUE(derivative(Poly{7.0}).is_zero());
    const Poly d = derivative(Poly{1.0, -2.0, 1.0});
    EXPECT_EQ(d.degree(), 1u);
    expect_close(d.coeff(0), -2.0, 0.0);
    expect_close(d.coeff(1), 2.0, 0.0);
}

TEST(Poly, EvaluateAtRoots) {
    expect_close(evaluate(Poly{1.0, -1.0}, Complex{1.0}), 0.0, 0.0);
    expect_close(evaluate(Poly{1.0, 1.0 / 3.0}, Complex{-3.0}), 0.0, 1e-15);
}

TEST(Reciprocal, GeometricSeries) {
    const auto b = reciprocal_coeffs(Poly{1.0, -1.0}, 5);
    ASSERT_EQ(b.size(), 6u);
    for (const Complex& v : b) expect_close(v, 1.0, 0.0);
}

TEST(Reciprocal, PeriodSixPattern) {
    const Poly f{1.0, -1.0, 1.0};
    const auto b = reciprocal_coeffs(f, 7);
    const double expected[] = {1.0, 1.0, 0.0, -1.0, -1.0, 0.0, 1.0, 1.0};
    for (std::size_t k = 0; k < 8; ++k) expect_close(b[k], expected[k], 0.0);
    const auto oracle = test::long_division_reciprocal(f, 7);
    for (std::size_t k = 0; k < 8; ++k) expect_close(b[k], oracle[k], 1e-15);
}

TEST(Reciprocal, ConstantFunction) {
    const auto b = reciprocal_coeffs(Poly{2.0}, 3);
    expect_close(b[0], 0.5, 0.0);
    for (std::size_t k = 1; k < 4; ++k) expect_close(b[k], 0.0, 0.0);
}

TEST(Reciprocal, ZeroConstantTermThrows) {
    EXPECT_THROW(reciprocal_coeffs(Poly{0.0, 1.0}, 3), ZeroConstantTerm);
}

TEST(PolyProperty, ReciprocalConvolutionIdentity) {
    std::mt19937 rng(7001);
    std::uniform_int_distribution<int> deg(0, 8), len(1, 64);
    for (int rep = 0; rep < 50; ++rep) {
        const Poly f = test::random_poly(rng, deg(rng));
        const std::size_t N = std::size_t(len(rng));
        const auto b = reciprocal_coeffs(f, N);
        double scale = 0.0;
        for (const Complex& v : b) scale = std::max(scale, std::abs(v));
        scale = std::max(1.0, scale);
        for (std::size_t k = 0; k <= N; ++k) {
            Complex s{0.0};
            const std::size_t jlo = k > f.degree() ? k - f.degree() : 0;
            for (std::size_t j = jlo; j <= k; ++j) s += b[j] * f.coeff(k - j);
            expect_close(s, k == 0 ? Complex{1.0} : Complex{0.0}, 1e-12 * scale);
        }
    }
}

TEST(PolyProperty, MulCommutativeAssociative) {
    std::mt19937 rng(7002);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int rep = 0; rep < 50; ++rep) {
        const Poly a = test::random_poly(rng, deg(rng), false);
        const Poly b = test::random_poly(rng, deg(rng), false);
        const Poly c = test::random_poly(rng, deg(rng), false);
        const Poly ab = a * b, ba = b * a;
        for (std::size_t k = 0; k <= ab.degree(); ++k)
            expect_close(ab.coeff(k), ba.coeff(k), 1e-13);
        const Poly l = (a * b) * c, r = a * (b * c);
        for (std::size_t k = 0; k <= std::max(l.degree(), r.degree()); ++k)
            expect_close(l.coeff(k), r.coeff(k), 1e-13);
    }
}

TEST(PolyProperty, EvaluationIsMultiplicative) {
    std::mt19937 rng(7003);
    std::uniform_int_distribution<int> deg(0, 8);
    std::uniform_real_distribution<double> radius(0.0, 2.0), angle(0.0, 6.283185307179586);
    for (int rep = 0; rep < 50; ++rep) {
        const Poly a = test::random_poly(rng, deg(rng), false);
        const Poly b = test::random_poly(rng, deg(rng), false);
        const double th = angle(rng);
        const Complex z = radius(rng) * Complex{std::cos(th), std::sin(th)};
        const Complex lhs = evaluate(a * b, z);
        const Complex rhs = evaluate(a, z) * evaluate(b, z);
        expect_close(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST(Poly, ExpandRoots) {
    // -(z-1)(z-2)^2 = 4 - 8z + 5z^2 - z^3
    const Poly f = expand_roots({{Complex{1.0}, 1}, {Complex{2.0}, 2}}, Complex{-1.0});
    expect_close(f.coeff(0), 4.0, 0.0);
    expect_close(f.coeff(1), -8.0, 0.0);
    expect_close(f.coeff(2), 5.0, 0.0);
    expect_close(f.coeff(3), -1.0, 0.0);
}
