#include "qf2/fan.hpp"
#include "qf2/quantum_module.hpp"

#include <gtest/gtest.h>

using namespace qf2;

TEST(Pairing, DualBasis)
{
    const PairingData p = pairing_and_dual();
    Eigen::Matrix4i g;
    g << 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, -2, 0, 1, 0, 0, 0;
    EXPECT_EQ(p.g, g);
    EXPECT_EQ(p.g * p.duals, Eigen::Matrix4i::Identity());
}

TEST(StarMatrix, ClassicalLimitIsCupProduct)
{
    const Cohomology h = f2_cohomology();
    for (Generator k : {Generator::sigma2, Generator::sigma4}) {
        const Eigen::Matrix4i c = constant_part(star_matrix(k, 6));
        const int dk = k == Generator::sigma2 ? 1 : 2;
        for (int j = 0; j < 4; ++j) EXPECT_EQ(Eigen::Vector4i(c.col(j)), h.cup[j][dk]);
    }
}

TEST(StarMatrix, EqualsTableUpToOrder12)
{
    for (int n = 1; n <= 12; ++n) EXPECT_TRUE(verify_table(n).ok) << n;
    for (int n : {1, 5, 10}) {
        EXPECT_TRUE(verify_table(n, InvariantSource::localization).ok) << n;
        EXPECT_TRUE(verify_table(n, InvariantSource::assembled).ok) << n;
    }
}

TEST(StarMatrix, GeneratorsCommute)
{
    for (int n = 1; n <= 12; ++n) EXPECT_TRUE(verify_module_axiom(n).ok) << n;
}

TEST(StarMatrix, QuantumRelations)
{
    for (int n : {1, 4, 10, 12}) {
        const Report r = verify_quantum_relations(n);
        EXPECT_TRUE(r.ok) << n;
        EXPECT_EQ(r.lines.size(), 4u);
    }
}

TEST(StarMatrix, TableEntryRendering)
{
    EXPECT_EQ(format_table_entry(Generator::sigma2, 0, 3), "D2 - 1/2*(2*q4 + 6*q4^2 + 20*q4^3)*D4");
    EXPECT_EQ(format_table_entry(Generator::sigma4, 3, 2), "q2*D2 - 1/2*q2*(2*q4)*D4");
    EXPECT_EQ(format_table_entry(Generator::sigma4, 2, 1), "q2 - 2*(1 + 2*q4)*pt");
    EXPECT_EQ(format_table_entry(Generator::sigma2, 3, 1), "0");
    EXPECT_EQ(format_table_entry(Generator::sigma2, 1, 0), "0");
    EXPECT_EQ(format_table_entry(Generator::sigma4, 0, 0), "D4");
}

TEST(StarMatrix, CoefficientIdentity)
{
    for (int d = 1; d <= 12; ++d)
        EXPECT_EQ(Rational(d) / Rational(2 * d - 1) * Rational(binom(2 * d, d)), Rational(2 * binom(2 * d - 2, d - 1)));
}

TEST(StarMatrix, HelpersAgreeWithDefinition)
{
    const SeriesMatrix a = star_matrix(Generator::sigma2, 3), b = star_matrix(Generator::sigma4, 3);
    const SeriesMatrix ab = mul(a, b);
    Series s = a(2, 0) * b(0, 1);
    for (int k = 1; k < 4; ++k) s += a(2, k) * b(k, 1);
    EXPECT_EQ(ab(2, 1), s);
    EXPECT_TRUE(equal(sub(add(a, b), b), a));
    EXPECT_TRUE(equal(mul(identity_matrix(3), a), a));
    EXPECT_THROW(star_matrix(Generator::sigma2, -1), std::invalid_argument);
}
