#include "qf2/json_io.hpp"
#include "qf2/linalg.hpp"
#include "qf2/poly.hpp"
#include "qf2/rational.hpp"
#include "qf2/series.hpp"
#include "qf2/vfraction.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qf2;

namespace {

Rational q(long p, long d) { return Rational(p) / Rational(d); }

Rational random_rational(std::mt19937& rng, int range = 9)
{
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    return q(num(rng), den(rng));
}

Series random_series(std::mt19937& rng, int order, bool unit)
{
    Series s = Series::zero(order);
    for (int t = 0; t <= order; ++t)
        for (int b = 0; b <= t; ++b) s.set(t - b, b, random_rational(rng));
    if (unit) {
        Rational c = 0;
        while (c == 0) c = random_rational(rng);
        s.set(0, 0, c);
    }
    return s;
}

VFrac random_vfrac(std::mt19937& rng, int degree)
{
    std::uniform_int_distribution<int> deg(0, 3);
    auto poly = [&] {
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& x : c) x = random_rational(rng);
        if (c.back() == 0) c.back() = 1;
        return RPoly(c);
    };
    RPoly den = poly();
    while (den.coeff(0) == 0) den = den + RPoly(1);
    return VFrac(degree, poly(), den);
}

}  // namespace

TEST(Rational, BinomialsAndFactorials)
{
    EXPECT_EQ(binom(4, 2), 6);
    EXPECT_EQ(binom(4, 5), 0);
    EXPECT_EQ(binom(-1, 0), 0);
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
    EXPECT_EQ(multiset(2, 1), 2);
    EXPECT_EQ(multiset(3, 2), 6);
    EXPECT_EQ(binom_rational(q(-1, 2), 2), q(3, 8));
    EXPECT_EQ(binom(60, 30), BigInt("118264581564861424"));
}

TEST(Rational, CentralBinomialIdentities)
{
    for (int n = 0; n <= 20; ++n) {
        Rational s = 0;
        for (int k = 0; k <= n; ++k) s += Rational(binom(2 * k, k) * binom(2 * n - 2 * k, n - k));
        EXPECT_EQ(s, pow(Rational(4), n)) << n;
        EXPECT_EQ(Rational(binom(2 * n, n)), pow(Rational(-4), n) * binom_rational(q(-1, 2), n)) << n;
    }
}

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(parse_rational("-3/6"), q(-1, 2));
    EXPECT_THROW(parse_rational("3/-6"), std::invalid_argument);
    EXPECT_EQ(parse_rational("-7"), -7);
    EXPECT_EQ(to_string(q(10, -4)), "-5/2");
    EXPECT_EQ(to_string(Rational(3)), "3");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Poly, ArithmeticAndGcd)
{
    const RPoly x = RPoly::x();
    const RPoly a = (x + RPoly(1)) * (x - RPoly(2));
    const RPoly b = (x + RPoly(1)) * (x + RPoly(3));
    EXPECT_EQ(gcd(a, b), x + RPoly(1));
    auto [quo, rem] = divmod(a, x + RPoly(1));
    EXPECT_EQ(quo, x - RPoly(2));
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(a(Rational(2)), 0);
    EXPECT_EQ((x * x).valuation(), 2);
    EXPECT_EQ((x * x * RPoly(3)).shift_down(2), RPoly(3));
    EXPECT_EQ(a.str(), "V^2 - V - 2");
}

TEST(Series, RingOperationsTruncate)
{
    const Series q2 = Series::q2(3), q4 = Series::q4(3);
    const Series s = (Series::constant(1, 3) + q2) * (Series::constant(1, 3) + q4);
    EXPECT_EQ(s.coeff(1, 1), 1);
    EXPECT_EQ((q2 * q2 * q4 * q4).is_zero(), true);
    EXPECT_EQ(format_series(s), "1 + q2 + q4 + q2*q4");
    EXPECT_EQ(format_series(Series::zero(2)), "0");
}

TEST(Series, ScalarLiftAdoptsOrder)
{
    const Series s = Series::q4(4) * Series(3) + Series(1);
    EXPECT_EQ(s.order(), 4);
    EXPECT_EQ(s.coeff(0, 0), 1);
    EXPECT_EQ(s.coeff(0, 1), 3);
    EXPECT_THROW(Series::q4(4) + Series::q4(5), std::invalid_argument);
}

TEST(Series, FCoefficientsAndIdentities)
{
    const int n = 12;
    const Series f = f_series(n), one = Series::constant(1, n), q4 = Series::q4(n);
    EXPECT_EQ(f.coeff(0, 1), 2);
    EXPECT_EQ(f.coeff(0, 2), 6);
    EXPECT_EQ(f.coeff(0, 3), 20);
    const Series g = (one + f) * (one + f);
    EXPECT_EQ(g * (one - q4 * Series(4)), one);
    EXPECT_EQ(q4 * Series(4) * g, f * (f + Series(2)));
    EXPECT_EQ(format_series(series_invert(one - q4 * Series(4)).with_order(3)), "1 + 4*q4 + 16*q4^2 + 64*q4^3");
}

TEST(Series, RandomUnitsInvert)
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> ord(0, 6);
    for (int i = 0; i < 1000; ++i) {
        const int n = ord(rng);
        const Series s = random_series(rng, n, true);
        EXPECT_EQ(series_invert(s) * s, Series::constant(1, n)) << format_series(s);
    }
}

TEST(Series, NonUnitDoesNotInvert)
{
    EXPECT_THROW(series_invert(Series::q2(3)), std::domain_error);
}

TEST(Series, JsonRoundTrip)
{
    std::mt19937 rng(7);
    const Series s = random_series(rng, 4, false);
    const Json j = to_json(s);
    EXPECT_EQ(j["order"], 4);
    EXPECT_EQ(series_from_json(j), s);
    const Json one = to_json(Series::monomial(1, 2, q(-3, 4), 5));
    EXPECT_EQ(one.dump(), R"({"order":5,"terms":[{"q2":1,"q4":2,"num":"-3","den":"4"}]})");
    EXPECT_THROW(series_from_json(Json::parse(R"({"order":1})")), InputError);
}

TEST(VFraction, ReducesAndEvaluates)
{
    const VFrac v = VFrac::V(), w = VFrac::W();
    const VFrac x = (v * v + v * w) / (v * (v + w));
    EXPECT_EQ(x.degree(), 0);
    EXPECT_EQ(x.at_v0(), 1);
    EXPECT_EQ((w / v).degree(), 0);
    EXPECT_THROW((w / v).at_v0(), PoleError);
    const VFrac y = VFrac::linear(Rational(1), Rational(2)).reciprocal();
    EXPECT_EQ(eval_at_v0(y), (WeightedValue{q(1, 2), -1}));
    EXPECT_EQ(y(Rational(2)), q(1, 4));
    EXPECT_THROW(v + v * v, std::invalid_argument);
}

TEST(VFraction, RandomizedFieldAxioms)
{
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        const VFrac a = random_vfrac(rng, 1), b = random_vfrac(rng, 1), c = random_vfrac(rng, -2);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a * c).degree(), a.degree() + c.degree());
        if (!a.is_zero()) EXPECT_EQ((a * c) / a, c);
    }
}

TEST(Linalg, ExactSolveAndInverse)
{
    DenseMat<Rational> a{{2, 1}, {1, 1}};
    auto inv = exact_inverse(a);
    ASSERT_TRUE(inv);
    EXPECT_EQ((*inv)[0][0], 1);
    EXPECT_EQ((*inv)[0][1], -1);
    EXPECT_EQ((*inv)[1][1], 2);
    DenseMat<Rational> singular{{1, 2}, {2, 4}};
    EXPECT_FALSE(exact_inverse(singular));
    auto x = exact_solve(a, std::vector<Rational>{3, 2});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], 1);
    EXPECT_EQ((*x)[1], 1);
}
