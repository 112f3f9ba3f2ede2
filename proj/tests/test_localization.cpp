#include "qf2/localization.hpp"

#include <gtest/gtest.h>

using namespace qf2;

namespace {

Rational q(long p, long d) { return Rational(p) / Rational(d); }

std::vector<std::string> names(Family f, int d)
{
    std::vector<std::string> out;
    for (const auto& g : enumerate_necessary_loci(f, d)) out.push_back(g.name());
    return out;
}

}  // namespace

TEST(Loci, EnumerationOrder)
{
    EXPECT_EQ(names(Family::dD4, 1), (std::vector<std::string>{"F_{1}"}));
    EXPECT_EQ(names(Family::dD4, 3),
              (std::vector<std::string>{"F_{3}", "F_{1,2}", "F_{2,1}", "F_{2}^{1}", "F_{1}^{2}", "F_{1,1}^{1}"}));
    EXPECT_EQ(names(Family::D2_plus_dD4, 0), (std::vector<std::string>{"F'_vert"}));
    EXPECT_EQ(names(Family::D2_plus_dD4, 3), (std::vector<std::string>{"F'_{0}", "F'_{1}", "F'_{2}"}));
}

TEST(Loci, Counts)
{
    for (int d = 1; d <= 10; ++d) {
        EXPECT_EQ(static_cast<int>(enumerate_necessary_loci(Family::dD4, d).size()),
                  1 + 2 * (d - 1) + (d - 1) * (d - 2) / 2);
        EXPECT_EQ(static_cast<int>(enumerate_necessary_loci(Family::D2_plus_dD4, d).size()), d);
    }
}

TEST(Loci, GraphStructure)
{
    const ChainGraph g = make_graph(Family::dD4, {1, 2});
    EXPECT_EQ(g.degree(), 3);
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.vertex_point(0), FixedPoint::p1);
    EXPECT_EQ(g.vertex_point(1), FixedPoint::p2);
    EXPECT_EQ(g.marking1_vertex(), 0);
    EXPECT_EQ(g.marking2_vertex(), 2);
    const ChainGraph h = make_graph(Family::D2_plus_dD4, {2}, std::pair{1, 1});
    EXPECT_EQ(h.marking2_vertex(), -1);
    EXPECT_EQ(h.marking1_vertex(), 1);
    EXPECT_EQ(h.name(), "F'_{1}");
}

TEST(Weights, FixedPointTable)
{
    const VFrac V = VFrac::V(), W = VFrac::W(), zero(1, RPoly(0));
    EXPECT_EQ(divisor_weight(Divisor::D1, FixedPoint::p1), zero);
    EXPECT_EQ(divisor_weight(Divisor::D2, FixedPoint::p1), W);
    EXPECT_EQ(divisor_weight(Divisor::D3, FixedPoint::p1), zero);
    EXPECT_EQ(divisor_weight(Divisor::D4, FixedPoint::p1), V);
    EXPECT_EQ(divisor_weight(Divisor::D1, FixedPoint::p2), -W);
    EXPECT_EQ(divisor_weight(Divisor::D2, FixedPoint::p2), zero);
    EXPECT_EQ(divisor_weight(Divisor::D4, FixedPoint::p2), V + W * VFrac(Rational(2)));
    EXPECT_EQ(w_weight(FixedPoint::p2), -W);
    EXPECT_EQ(v_weight(FixedPoint::p2), V + W * VFrac(Rational(2)));
}

TEST(Weights, EdgeFactor)
{
    EXPECT_EQ(edge_factor(1), VFrac(-1, RPoly(std::vector<Rational>{-1, -1})));
    for (int e = 1; e <= 6; ++e) {
        const VFrac x = edge_factor(e);
        EXPECT_EQ(x.degree(), -1);
        EXPECT_EQ(x.num().degree(), 2 * e - 1);
        // V = 0: e^{2e-1} (-1)^e (2e-1)! / (e^{2e-1} (e!)^2) = (-1)^e (2e-1)!/(e!)^2
        EXPECT_EQ(x.at_v0(), pow(Rational(-1), e) * Rational(factorial(2 * e - 1)) /
                                 Rational(factorial(e) * factorial(e)));
    }
}

TEST(Contributions, ClosedValuesInDegreeThree)
{
    const std::vector<Rational> want{q(-10, 3), -2, -2, 12, -16, 8};
    const auto got = contributions(Family::dD4, 3, Method::closed);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(got[i].value, want[i]) << got[i].graph.name();
    const auto vert = contributions(Family::D2_plus_dD4, 3, Method::closed);
    EXPECT_EQ(vert[0].value, 10);
    EXPECT_EQ(vert[1].value, -24);
    EXPECT_EQ(vert[2].value, 16);
}

TEST(Contributions, AssembledEqualsClosedPerLocus)
{
    for (Family f : {Family::dD4, Family::D2_plus_dD4})
        for (int d = f == Family::dD4 ? 1 : 0; d <= 8; ++d)
            for (const auto& g : enumerate_necessary_loci(f, d)) {
                const Contribution a = locus_contribution(g, Method::assembled);
                EXPECT_EQ(a.w_exponent, 0);
                EXPECT_EQ(a.value, closed_contribution(g)) << to_string(f) << " d=" << d << " " << g.name();
            }
}

TEST(Contributions, InvariantsMatchClosedForms)
{
    for (int d = 1; d <= 8; ++d) {
        const Rational c = Rational(binom(2 * d, d));
        EXPECT_EQ(invariant_by_localization(Family::dD4, d, Method::assembled), -c / Rational(2 * d));
        EXPECT_EQ(invariant_by_localization(Family::D2_plus_dD4, d, Method::assembled), c / Rational(2 * (2 * d - 1)));
    }
    EXPECT_EQ(invariant_by_localization(Family::D2_plus_dD4, 0, Method::assembled), 0);
}

TEST(Contributions, ResummationStagesPreserveTotal)
{
    for (int d = 1; d <= 8; ++d) {
        const Rational dd4 = invariant_by_localization(Family::dD4, d);
        for (const auto& s : dD4_resummation_stages(d)) EXPECT_EQ(s, dd4) << d;
        const Rational d2 = invariant_by_localization(Family::D2_plus_dD4, d);
        for (const auto& s : D2_resummation_stages(d)) EXPECT_EQ(s, d2) << d;
    }
}

TEST(Contributions, RejectsUnsupportedGraphs)
{
    EXPECT_THROW(closed_contribution(make_graph(Family::dD4, {1, 1, 1})), std::invalid_argument);
    EXPECT_THROW(assemble_locus(make_graph(Family::D2_plus_dD4, {1}, std::pair{0, 1})), std::invalid_argument);
    EXPECT_THROW(parse_family("D4"), std::invalid_argument);
    EXPECT_THROW(parse_method("fast"), std::invalid_argument);
    EXPECT_EQ(parse_family("D2+dD4"), Family::D2_plus_dD4);
}
