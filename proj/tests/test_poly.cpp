#include <gtest/gtest.h>

#include "iterroot/poly.hpp"
#include "support/oracles.hpp"

using namespace iterroot;

namespace {

ComplexPolynomial z_pow(std::size_t d) { return ComplexPolynomial::monomial(d); }

// c * prod (z - r_i)
ComplexPolynomial from_roots(const std::vector<Complex>& roots, Complex c = 1.0) {
    auto p = ComplexPolynomial::constant(c);
    for (auto r : roots) p = p * ComplexPolynomial({-r, 1.0});
    return p;
}

bool fires(const PolyAdvice& a, PolyRule r) { return a.finding(r).applicable; }

} // namespace

TEST(Solar, SmallDegrees) {
    EXPECT_TRUE(solar_criterion(2));
    EXPECT_FALSE(solar_criterion(4));
    EXPECT_FALSE(solar_criterion(5));
    EXPECT_TRUE(solar_criterion(142));
    EXPECT_THROW(solar_criterion(1), std::invalid_argument);
}

TEST(Solar, FirstTerms) {
    EXPECT_EQ(first_solar(1), std::vector<std::uint64_t>{2});
    EXPECT_EQ(first_solar(3), (std::vector<std::uint64_t>{2, 3, 6}));
    EXPECT_THROW(first_solar(0), std::invalid_argument);
}

TEST(Solar, MatchesNaiveArithmetic) {
    for (std::uint64_t d = 2; d <= 400; ++d) EXPECT_EQ(solar_criterion(d), oracle::naive_solar(d)) << d;
}

TEST(Roots, CompanionMatrix) {
    auto roots = polynomial_roots(from_roots({1.0, -2.0, Complex(0.5, 3.0)}, 2.0));
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_NEAR(std::abs(roots[0] - Complex(-2.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(roots[1] - Complex(0.5, 3.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(roots[2] - Complex(1.0)), 0.0, 1e-12);
}

TEST(Roots, MultipleRootsCountOnce) {
    auto p = from_roots({1.0, 1.0, 1.0, -1.0, -1.0, Complex(0, 2)});
    auto c = distinct_roots(p);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0].multiplicity, 2u);
    EXPECT_EQ(c[1].multiplicity, 1u);
    EXPECT_EQ(c[2].multiplicity, 3u);
    EXPECT_EQ(distinct_roots(z_pow(5)).size(), 1u);
}

TEST(Roots, CloseSimpleRootsStaySeparate) {
    auto p = from_roots({0.0, 1e-3, 0.5});
    EXPECT_EQ(distinct_roots(p).size(), 3u);
}

TEST(FixedPoints, MonomialCounts) {
    // z^d: 0 is isolated, the (d-1)-th roots of unity are not
    for (std::size_t d = 2; d <= 7; ++d) {
        EXPECT_EQ(fixed_points(z_pow(d)).size(), d);
        EXPECT_EQ(count_non_isolated_fixed_points(z_pow(d)), d - 1) << d;
    }
}

TEST(FixedPoints, ShiftedMonomialCount) {
    const Complex alpha(0.5, -1.5), beta(2.0, 1.0);
    for (std::size_t d : {2, 3, 5}) {
        auto f = ComplexPolynomial::monomial(d, alpha).compose(ComplexPolynomial({-beta, 1.0})) +
                 ComplexPolynomial::constant(beta);
        auto m = match_shifted_monomial(f);
        ASSERT_TRUE(m.has_value());
        EXPECT_NEAR(std::abs(m->alpha - alpha), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(m->beta - beta), 0.0, 1e-12);
        EXPECT_EQ(count_non_isolated_fixed_points(f), d - 1);
    }
    EXPECT_FALSE(match_shifted_monomial(ComplexPolynomial({0.0, 1.0, 0.0, 1.0})).has_value());
}

TEST(Cubic, SpecialConjugacy) {
    const ComplexPolynomial special({0.0, 1.0, -1.0, 1.0});
    EXPECT_TRUE(is_conjugate_to_special_cubic(special));
    // h(z) = 2z + 1: h o p o h^-1
    const ComplexPolynomial hinv({-0.5, 0.5});
    auto conj = ComplexPolynomial::constant(2.0) * special.compose(hinv) + ComplexPolynomial::constant(1.0);
    EXPECT_TRUE(is_conjugate_to_special_cubic(conj));
    EXPECT_FALSE(is_conjugate_to_special_cubic(ComplexPolynomial({0.0, 1.0, 0.0, 1.0})));
    EXPECT_EQ(fixed_points(special).size(), 2u);
}

TEST(Advise, Quadratic) {
    for (std::uint64_t n = 2; n <= 12; ++n) {
        auto a = advise(z_pow(2), n);
        EXPECT_TRUE(fires(a, PolyRule::Quadratic));
        EXPECT_EQ(a.finding(PolyRule::Quadratic).excluded.describe(), "all n >= 2");
    }
}

TEST(Advise, QuinticMonomial) {
    auto a = advise(z_pow(5), 5);
    EXPECT_TRUE(fires(a, PolyRule::ShiftedMonomialPrime));
    EXPECT_FALSE(fires(a, PolyRule::Solar));
    EXPECT_FALSE(a.finding(PolyRule::Solar).hypotheses_hold);
}

TEST(Advise, QuarticSquareRootExists) {
    // z^2 o z^2 = z^4
    EXPECT_TRUE(advise(z_pow(4), 2).fired().empty());
}

TEST(Advise, SolarMonomialNeedsExactCoefficients) {
    EXPECT_TRUE(fires(advise(z_pow(3), 2), PolyRule::Solar));
    auto nearly = ComplexPolynomial({1e-30, 0.0, 0.0, 1.0});
    EXPECT_FALSE(advise(nearly, 2).finding(PolyRule::Solar).hypotheses_hold);
}

TEST(Advise, DegreeBounds) {
    auto a = advise(from_roots({1.0, 2.0, 3.0, 4.0}), 13);
    EXPECT_TRUE(fires(a, PolyRule::RiceDegree));  // 13 > 12
    EXPECT_TRUE(fires(a, PolyRule::PrimeOrder));
    auto b = advise(from_roots({1.0, 2.0, 3.0, 4.0}), 12);
    EXPECT_FALSE(fires(b, PolyRule::RiceDegree));
    EXPECT_FALSE(fires(b, PolyRule::PrimeOrder));
}

TEST(Advise, CubicSpecial) {
    // z^3 + z has the triple fixed point 0 and is not conjugate to z^3 - z^2 + z
    EXPECT_TRUE(fires(advise(ComplexPolynomial({0.0, 1.0, 0.0, 1.0}), 2), PolyRule::CubicSpecial));
    EXPECT_FALSE(advise(ComplexPolynomial({0.0, 1.0, -1.0, 1.0}), 2).finding(PolyRule::CubicSpecial).hypotheses_hold);
    // three distinct fixed points
    EXPECT_FALSE(advise(z_pow(3), 2).finding(PolyRule::CubicSpecial).hypotheses_hold);
}

TEST(Advise, RejectsBadInput) {
    EXPECT_THROW(advise(ComplexPolynomial({1.0, 1.0}), 2), std::invalid_argument);
    EXPECT_THROW(advise(z_pow(3), 1), std::invalid_argument);
    EXPECT_THROW(ComplexPolynomial({0.0, 0.0}), std::invalid_argument);
}

TEST(Parse, ComplexCoefficients) {
    EXPECT_EQ(parse_complex("1.5"), Complex(1.5, 0));
    EXPECT_EQ(parse_complex("-2i"), Complex(0, -2));
    EXPECT_EQ(parse_complex("i"), Complex(0, 1));
    EXPECT_EQ(parse_complex("1+2i"), Complex(1, 2));
    EXPECT_EQ(parse_complex("1e-3-4.5i"), Complex(1e-3, -4.5));
    EXPECT_EQ(parse_complex("-1e+2+1e-1i"), Complex(-100, 0.1));
    EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
    EXPECT_THROW(parse_complex(""), std::invalid_argument);
    auto p = parse_coefficients("0,0,0,0,0,1");
    EXPECT_EQ(p.degree(), 5u);
    EXPECT_THROW(parse_coefficients("1,,2"), std::invalid_argument);
}
