#include "qf2/losev_manin.hpp"
#include "qf2/poly.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace qf2;

namespace {

Rational q(long p, long d) { return Rational(p) / Rational(d); }

// D_lambda integrated against psi_n^a psi_n'^c.
Rational d_lambda_integral(int b, const std::string& lambda, int a, int c)
{
    return (lm_d_lambda<Rational>(b, parse_partition(lambda)) * LMClass<Rational>::psi(b, a, c)).integrate();
}

std::uint32_t relabel(std::uint32_t mask, const std::vector<int>& perm)
{
    std::uint32_t out = 0;
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        if (mask >> i & 1u) out |= 1u << perm[i];
    return out;
}

}  // namespace

TEST(LosevManin, PsiIntegrals)
{
    EXPECT_EQ(psi_integral(1, 0, 0), 1);
    EXPECT_EQ(psi_integral(3, 1, 1), 2);
    EXPECT_EQ(psi_integral(4, 3, 0), 1);
    EXPECT_EQ(psi_integral(4, 1, 1), 0);
    EXPECT_EQ(LMClass<Rational>::psi(4, 2, 1).integrate(), 3);
}

TEST(LosevManin, DLambdaIntegrals)
{
    EXPECT_EQ(d_lambda_integral(3, "2,1", 0, 1), 3);
    EXPECT_EQ(d_lambda_integral(3, "2,1", 1, 0), 3);
    EXPECT_EQ(d_lambda_integral(3, "3", 0, 0), 1);
    EXPECT_EQ(d_lambda_integral(3, "1,1,1", 0, 1), 0);
    EXPECT_EQ(d_lambda_integral(4, "2,2", 0, 1), 3);
}

TEST(LosevManin, DiagonalProducts)
{
    const auto d12 = lm_diagonal_monomial(3, 0b011), d13 = lm_diagonal_monomial(3, 0b101);
    const auto d123 = multiply_monomials(d12, d13);
    ASSERT_TRUE(d123);
    EXPECT_EQ(d123->blocks.size(), 1u);
    EXPECT_FALSE(multiply_monomials(d12, d12));
    const auto x = LMClass<Rational>::diagonal(3, 0b011);
    EXPECT_TRUE((x * x).hat_dropped());
    EXPECT_FALSE((x * LMClass<Rational>::diagonal(3, 0b101)).hat_dropped());
}

TEST(LosevManin, ExpansionIdentity)
{
    for (int b = 2; b <= 6; ++b) EXPECT_TRUE(expansion_check(b)) << b;
}

TEST(LosevManin, SymmetricUnderRelabeling)
{
    const int b = 4;
    std::vector<int> perm(b);
    std::iota(perm.begin(), perm.end(), 0);
    const auto base = lm_delta<Rational>(b, 3) * lm_delta<Rational>(b, 4);
    do {
        LMClass<Rational> img(b);
        for (const auto& [m, c] : base.terms()) {
            LMMonomial r = m;
            for (auto& blk : r.blocks) blk = relabel(blk, perm);
            std::sort(r.blocks.begin(), r.blocks.end());
            img.add(r, c);
        }
        for (int a = 0; a <= b - 1; ++a)
            EXPECT_EQ((img * LMClass<Rational>::psi(b, a, b - 3 - a < 0 ? 0 : b - 3 - a)).integrate(),
                      (base * LMClass<Rational>::psi(b, a, b - 3 - a < 0 ? 0 : b - 3 - a)).integrate());
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(ContB, InteriorThreeWays)
{
    for (int b = 1; b <= 6; ++b)
        for (int e = 1; e <= 4; ++e)
            for (int e2 = 1; e2 <= 4; ++e2) {
                const WeightedValue closed = cont_b_interior_closed(b, e, e2);
                EXPECT_EQ(closed.w_exponent, -3);
                EXPECT_EQ(closed.value, Rational(e * e2) * pow(Rational(2), 2 * b - 1) / Rational(b) *
                                            Rational(multiset(b, e + e2)));
                EXPECT_EQ(cont_b_interior_by_partitions(b, e, e2), closed);
                EXPECT_EQ(cont_b_interior_brute(b, e, e2), closed);
            }
}

TEST(ContB, EndThreeWays)
{
    for (int b = 1; b <= 6; ++b)
        for (int e = 1; e <= 4; ++e) {
            const WeightedValue closed = cont_b_end_closed(b, e);
            EXPECT_EQ(closed.w_exponent, -2);
            EXPECT_EQ(cont_b_end_by_partitions(b, e), closed);
            EXPECT_EQ(cont_b_end_brute(b, e), closed);
        }
    EXPECT_EQ(cont_b_end(2, 1).value, -8);
    EXPECT_EQ(cont_b_interior(1, 1, 1).value, 2);
}

TEST(ContB, ForestSumMatchesExpansion)
{
    const std::vector<std::vector<Rational>> tangents{{}, {q(-1, 3)}, {Rational(2), q(-5, 7)}};
    for (int b = 1; b <= 6; ++b)
        for (const auto& t : tangents)
            for (const Rational& w : {Rational(1), Rational(-1), q(3, 2)}) {
                const RPoly v = RPoly::x() + RPoly(2);
                EXPECT_EQ(base_vertex_integral_forest<RPoly>(b, v, w, t), base_vertex_integral<RPoly>(b, v, w, t))
                    << "b=" << b << " tangents=" << t.size();
            }
}

TEST(ContB, RejectsBadInput)
{
    const std::vector<Rational> three{1, 2, 3};
    EXPECT_THROW(base_vertex_integral<Rational>(0, Rational(1), Rational(1), {}), std::invalid_argument);
    EXPECT_THROW(base_vertex_integral_forest<Rational>(2, Rational(1), Rational(1), three), std::invalid_argument);
    EXPECT_THROW(LMClass<Rational>(0), std::invalid_argument);
}
