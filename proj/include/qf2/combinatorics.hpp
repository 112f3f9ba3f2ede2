#pragma once

#include "qf2/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qf2 {

struct Partition {
    std::vector<int> parts;  // weakly decreasing

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    /// part -> number of times it occurs
    std::map<int, int> multiplicities() const;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Parses "2,1,1"; sorts descending. Throws std::invalid_argument.
Partition parse_partition(const std::string& s);

/// All partitions of b in reverse-lexicographic order.
std::vector<Partition> partitions(int b);

BigInt z_lambda(const Partition& lambda);

/// Set partitions of [b] whose block sizes form lambda.
BigInt count_set_partitions(int b, const Partition& lambda);

/// Permutations of [b] with cycle type lambda.
BigInt count_cycle_type(int b, const Partition& lambda);

/// The partition-sum form of binom(b+e-1, e).
BigInt multiset_via_partitions(int b, int e);

/// sum over lambda of e^{l(lambda)} / z_lambda.
Rational h_at_ones(int b, int e);

BigInt bell(int b);

/// A set partition of [b] as block bitmasks (bit i is element i+1), sorted.
using SetPartition = std::vector<std::uint32_t>;

/// Brute-force enumeration; b <= 12.
std::vector<SetPartition> set_partitions(int b);

/// Block-size partition of a set partition.
Partition block_type(const SetPartition& p);

/// Brute-force count of permutations by cycle type; b <= 8.
std::map<Partition, BigInt> permutations_by_cycle_type(int b);

}  // namespace qf2
