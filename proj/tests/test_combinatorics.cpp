#include "qf2/combinatorics.hpp"

#include <gtest/gtest.h>

using namespace qf2;

TEST(Partitions, CountsAndOrder)
{
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int b = 1; b <= 10; ++b) EXPECT_EQ(static_cast<int>(partitions(b).size()), p[b]) << b;
    const auto four = partitions(4);
    EXPECT_EQ(four.front().str(), "(4)");
    EXPECT_EQ(four.back().str(), "(1,1,1,1)");
    for (std::size_t i = 1; i < four.size(); ++i) EXPECT_GT(four[i - 1], four[i]);
}

TEST(Partitions, Parse)
{
    EXPECT_EQ(parse_partition("1,2").parts, (std::vector<int>{2, 1}));
    EXPECT_EQ(parse_partition("3").size(), 3);
    EXPECT_THROW(parse_partition("2,,1"), std::invalid_argument);
    EXPECT_THROW(parse_partition("0"), std::invalid_argument);
    EXPECT_THROW(parse_partition(""), std::invalid_argument);
}

TEST(Partitions, ClassEquationAndCentralizers)
{
    for (int b = 1; b <= 10; ++b) {
        Rational inv = 0;
        BigInt perms = 0;
        for (const auto& l : partitions(b)) {
            inv += Rational(1) / Rational(z_lambda(l));
            perms += count_cycle_type(b, l);
        }
        EXPECT_EQ(inv, 1);
        EXPECT_EQ(perms, factorial(b));
    }
}

TEST(Partitions, CycleTypesMatchBruteForce)
{
    for (int b = 1; b <= 7; ++b)
        for (const auto& [l, n] : permutations_by_cycle_type(b)) EXPECT_EQ(count_cycle_type(b, l), n) << l.str();
}

TEST(SetPartitions, BellNumbersAndTypes)
{
    for (int b = 1; b <= 9; ++b) {
        const auto sp = set_partitions(b);
        EXPECT_EQ(BigInt(sp.size()), bell(b));
        BigInt total = 0;
        for (const auto& l : partitions(b)) total += count_set_partitions(b, l);
        EXPECT_EQ(total, bell(b));
    }
    std::map<Partition, int> seen;
    for (const auto& p : set_partitions(5)) ++seen[block_type(p)];
    for (const auto& [l, n] : seen) EXPECT_EQ(BigInt(n), count_set_partitions(5, l));
}

TEST(Multiset, PartitionSumForm)
{
    for (int b = 1; b <= 10; ++b)
        for (int e = 1; e <= 10; ++e) {
            EXPECT_EQ(multiset_via_partitions(b, e), binom(b + e - 1, e));
            EXPECT_EQ(h_at_ones(b, e), Rational(binom(b + e - 1, b)));
        }
}
