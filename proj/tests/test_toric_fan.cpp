#include "qf2/fan.hpp"
#include "qf2/json_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace qf2;

namespace {

Eigen::VectorXi alpha(std::initializer_list<int> c)
{
    Eigen::VectorXi v(static_cast<int>(c.size()));
    int i = 0;
    for (int x : c) v[i++] = x;
    return v;
}

std::vector<std::vector<int>> subsets(int n)
{
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(Fan, StandardFansValidate)
{
    EXPECT_TRUE(validate_fan(f2_fan()).empty());
    EXPECT_TRUE(validate_fan(p2_fan()).empty());
    EXPECT_TRUE(validate_fan(p1xp1_fan()).empty());
}

TEST(Fan, RejectsBadFans)
{
    Fan nonprimitive = p2_fan();
    nonprimitive.rays[0] = {2, 0};
    EXPECT_FALSE(validate_fan(nonprimitive).empty());

    Fan incomplete = p2_fan();
    incomplete.max_cones.pop_back();
    EXPECT_FALSE(validate_fan(incomplete).empty());

    Fan singular;
    singular.rays = {{1, 0}, {1, 2}, {-1, -1}};
    singular.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    EXPECT_FALSE(validate_fan(singular).empty());

    Fan bad_index = p2_fan();
    bad_index.max_cones[0] = {0, 7};
    EXPECT_FALSE(validate_fan(bad_index).empty());
    EXPECT_THROW(require_valid(bad_index), std::invalid_argument);
}

TEST(Fan, ClassMatrixOfF2)
{
    const ClassMatrix cm = class_matrix(f2_fan());
    Eigen::MatrixXi want(2, 4);
    want << 1, 1, 2, 0, 0, 0, 1, 1;
    EXPECT_EQ(cm.entries, want);
    EXPECT_EQ(cm.basis_rays, (std::vector<int>{1, 3}));
}

TEST(Fan, ClassMatrixAnnihilatesCharacters)
{
    for (const Fan& fan : {f2_fan(), p2_fan(), p1xp1_fan()}) {
        const ClassMatrix cm = class_matrix(fan);
        const Eigen::MatrixXi chars = character_rows(fan);
        EXPECT_TRUE((cm.entries * chars.transpose()).isZero());
    }
}

TEST(Fan, PrimitiveCollectionsMatchDefinition)
{
    for (const Fan& fan : {f2_fan(), p2_fan(), p1xp1_fan()}) {
        const auto prims = primitive_collections(fan);
        const int n = static_cast<int>(fan.rays.size());
        for (const auto& s : subsets(n)) {
            bool minimal = !in_some_cone(fan, s);
            for (std::size_t drop = 0; minimal && drop < s.size(); ++drop) {
                auto t = s;
                t.erase(t.begin() + static_cast<long>(drop));
                if (!in_some_cone(fan, t)) minimal = false;
            }
            const bool listed = std::any_of(prims.begin(), prims.end(), [&](auto& p) { return p.rays == s; });
            EXPECT_EQ(listed, minimal);
        }
    }
}

TEST(Fan, F2PrimitiveRelations)
{
    const Fan fan = f2_fan();
    const auto prims = primitive_collections(fan);
    ASSERT_EQ(prims.size(), 2u);
    const auto a = primitive_relation(fan, prims[0].rays);
    const auto b = primitive_relation(fan, prims[1].rays);
    EXPECT_EQ(a.rays, (std::vector<int>{0, 1}));
    EXPECT_EQ(a.relation, (std::vector<int>{1, 1, 0, -2}));
    EXPECT_EQ(a.beta, (std::vector<int>{0, 1}));
    EXPECT_EQ(b.rays, (std::vector<int>{2, 3}));
    EXPECT_EQ(b.beta, (std::vector<int>{1, 0}));
    for (const auto& p : {a, b})
        for (int x : p.beta) EXPECT_GE(x, 0);
}

TEST(Fan, P2HasOnePrimitiveCollection)
{
    const auto prims = primitive_collections(p2_fan());
    ASSERT_EQ(prims.size(), 1u);
    EXPECT_EQ(prims[0].rays, (std::vector<int>{0, 1, 2}));
}

TEST(Fan, IntersectionsOfF2)
{
    const Eigen::MatrixXi m = intersection_matrix(f2_fan());
    EXPECT_EQ(m(1, 1), 0);
    EXPECT_EQ(m(1, 3), 1);
    EXPECT_EQ(m(3, 3), -2);
    EXPECT_EQ(m(0, 1), 0);
    const Cohomology h = f2_cohomology();
    EXPECT_EQ(h.cup[1][1], Eigen::Vector4i::Zero());
    EXPECT_EQ(h.cup[1][2], Eigen::Vector4i(0, 0, 0, 1));
    EXPECT_EQ(h.cup[2][2], Eigen::Vector4i(0, 0, 0, -2));
    EXPECT_EQ(h.cup[0][3], Eigen::Vector4i(0, 0, 0, 1));
}

TEST(Fan, WeightTableAtFixedPoints)
{
    const Fan fan = f2_fan();
    const ClassMatrix cm = class_matrix(fan);
    const Eigen::VectorXi W = alpha({1, -1, 0, 0});
    const Eigen::VectorXi V = alpha({-2, 0, 1, -1});
    const Eigen::VectorXi zero = Eigen::VectorXi::Zero(4);
    // cone 0 is p1, cone 1 is p2
    EXPECT_EQ(fixed_point_weight(fan, cm, 0, 0), zero);
    EXPECT_EQ(fixed_point_weight(fan, cm, 0, 1), W);
    EXPECT_EQ(fixed_point_weight(fan, cm, 0, 2), zero);
    EXPECT_EQ(fixed_point_weight(fan, cm, 0, 3), V);
    EXPECT_EQ(fixed_point_weight(fan, cm, 1, 0), Eigen::VectorXi(-W));
    EXPECT_EQ(fixed_point_weight(fan, cm, 1, 1), zero);
    EXPECT_EQ(fixed_point_weight(fan, cm, 1, 2), zero);
    EXPECT_EQ(fixed_point_weight(fan, cm, 1, 3), Eigen::VectorXi(V + 2 * W));
}

TEST(Fan, BatyrevPresentationOfF2)
{
    const Fan fan = f2_fan();
    const ClassMatrix cm = class_matrix(fan);
    const auto pres = batyrev_presentation(fan, cm);
    ASSERT_EQ(pres.size(), 2u);
    EXPECT_EQ(pres[0].str(cm.basis_rays), "x2^2 - q4*x4^2");
    EXPECT_EQ(pres[1].str(cm.basis_rays), "2*x2*x4 + x4^2 - q2");
}

TEST(FanJson, ParsesAndRoundTrips)
{
    const std::string text = R"({"rays": [[-1,2],[1,0],[0,-1],[0,1]], "max_cones": [[1,3],[3,0],[0,2],[2,1]]})";
    const Fan fan = parse_fan_json(text);
    EXPECT_EQ(to_json(fan), Json::parse(text));
    EXPECT_EQ(fan_summary_json(fan)["class_matrix"]["entries"], Json::parse("[[1,1,2,0],[0,0,1,1]]"));
}

TEST(FanJson, ReportsErrors)
{
    try {
        parse_fan_json("{\n  \"rays\": [[1,0],\n  ]\n}");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_fan_json(R"({"rays": [[1,0,0]], "max_cones": []})"), InputError);
    EXPECT_THROW(parse_fan_json(R"({"max_cones": []})"), InputError);
    EXPECT_THROW(parse_fan_json(R"({"rays": [[1,"a"]], "max_cones": []})"), InputError);
}
