#include "qf2/batyrev.hpp"

#include <gtest/gtest.h>

using namespace qf2;

namespace {

const int N = 8;

Series one() { return Series::constant(1, N); }
Series q2() { return Series::q2(N); }
Series q4() { return Series::q4(N); }
Series g() { return (one() + f_series(N)) * (one() + f_series(N)); }

BatElement element(Series c0, Series c1, Series c2, Series c3)
{
    BatElement e;
    e.coeffs << c0, c1, c2, c3;
    return e;
}

BatPoly relation1() { return bat_monomial(2, 0, one()) - bat_monomial(0, 2, q4()); }
BatPoly relation2()
{
    return bat_monomial(1, 1, Series::constant(2, N)) + bat_monomial(0, 2, one()) - bat_monomial(0, 0, q2());
}

}  // namespace

TEST(NormalForm, RewriteRules)
{
    const Series z = Series::zero(N);
    EXPECT_EQ(normal_form(bat_monomial(0, 2, one()), N), element(q2(), z, z, Series::constant(-2, N)));
    EXPECT_EQ(normal_form(bat_monomial(2, 0, one()), N), element(q2() * q4(), z, z, q4() * Series(-2)));
    const Series m = q2() * q4() * g();
    EXPECT_EQ(normal_form(bat_monomial(2, 1, one()), N), element(z, m * Series(-2), m, z));
    EXPECT_EQ(normal_form(bat_monomial(1, 2, one()), N), element(z, q2() + m * Series(4), m * Series(-2), z));
}

TEST(NormalForm, RelationsAndMultiplesVanish)
{
    for (const BatPoly& r : {relation1(), relation2()})
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b)
                EXPECT_EQ(normal_form(bat_monomial(a, b, one()) * r, N), BatElement::zero(N)) << a << "," << b;
}

TEST(NormalForm, IdempotentAndLinear)
{
    const BatPoly p = bat_monomial(3, 2, q2()) + bat_monomial(1, 4, Series::constant(3, N)) + bat_monomial(0, 5, q4());
    const BatPoly r = bat_monomial(4, 1, one()) - bat_monomial(2, 2, q2());
    const BatElement np = normal_form(p, N);
    EXPECT_EQ(normal_form(np.to_poly(), N), np);
    const BatElement sum = normal_form(p + r, N);
    const BatElement nr = normal_form(r, N);
    BatElement expect = BatElement::zero(N);
    for (int i = 0; i < 4; ++i) expect.coeffs(i) = np.coeffs(i) + nr.coeffs(i);
    EXPECT_EQ(sum, expect);
    EXPECT_EQ(normal_form(p * bat_monomial(0, 0, q4()), N), normal_form(bat_monomial(0, 0, q4()) * p, N));
}

TEST(ActionMatrices, CommuteUpToOrder12)
{
    for (int n = 0; n <= 12; ++n) {
        const SeriesMatrix a = bat_action_matrix(Generator::sigma2, n), b = bat_action_matrix(Generator::sigma4, n);
        EXPECT_TRUE(equal(mul(a, b), mul(b, a))) << n;
    }
}

TEST(ActionMatrices, Examples)
{
    const SeriesMatrix x4 = bat_action_matrix(Generator::sigma4, N);
    EXPECT_EQ(x4(0, 2), q2());
    EXPECT_EQ(x4(3, 2), Series::constant(-2, N));
    const SeriesMatrix x2 = bat_action_matrix(Generator::sigma2, N);
    EXPECT_EQ(x2(2, 3), q2() * q4() * g());
    EXPECT_EQ(x2(1, 0), one());
}

TEST(Phi, EntriesAndDeterminant)
{
    const SeriesMatrix phi = phi_matrix(N);
    EXPECT_EQ(phi(2, 1), f_series(N) * Series(Rational(-1) / Rational(2)));
    EXPECT_EQ(phi(0, 3), g() * q2() * q4() * Series(-2));
    const Series det = determinant(phi);
    EXPECT_EQ(det, g() * (one() + f_series(N)));
    EXPECT_EQ(det.constant_term(), 1);
    EXPECT_TRUE(equal(phi, phi_from_definition(N)));
}

TEST(Phi, DeterminantOfIdentityAndPermutation)
{
    SeriesMatrix m = identity_matrix(3);
    EXPECT_EQ(determinant(m), Series::constant(1, 3));
    std::swap(m(0, 0), m(1, 0));
    std::swap(m(0, 1), m(1, 1));
    EXPECT_EQ(determinant(m), Series::constant(-1, 3));
}

TEST(Isomorphism, HoldsUpToOrder12)
{
    for (int n = 1; n <= 12; ++n) EXPECT_TRUE(verify_isomorphism(n).ok) << n;
    EXPECT_TRUE(verify_isomorphism(6, InvariantSource::assembled).ok);
    EXPECT_THROW(verify_isomorphism(0), std::invalid_argument);
}
