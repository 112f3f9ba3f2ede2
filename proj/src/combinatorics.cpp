#include "qf2/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qf2 {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::map<int, int> Partition::multiplicities() const
{
    std::map<int, int> k;
    for (int p : parts) ++k[p];
    return k;
}

std::string Partition::str() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

Partition parse_partition(const std::string& s)
{
    Partition p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part '" + tok + "'");
        }
        if (used != tok.size() || v <= 0) throw std::invalid_argument("bad partition part '" + tok + "'");
        p.parts.push_back(v);
    }
    if (p.parts.empty()) throw std::invalid_argument("empty partition");
    std::sort(p.parts.rbegin(), p.parts.rend());
    return p;
}

std::vector<Partition> partitions(int b)
{
    if (b < 1) throw std::invalid_argument("partitions: b must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back({cur});
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(b, b);
    return out;
}

BigInt z_lambda(const Partition& lambda)
{
    BigInt z = 1;
    for (auto [n, k] : lambda.multiplicities()) {
        for (int i = 0; i < k; ++i) z *= n;
        z *= factorial(k);
    }
    return z;
}

static void require_partition_of(int b, const Partition& lambda)
{
    bool ok = lambda.size() == b && std::is_sorted(lambda.parts.rbegin(), lambda.parts.rend());
    for (int p : lambda.parts) ok = ok && p > 0;
    if (!ok) throw std::invalid_argument(lambda.str() + " is not a partition of " + std::to_string(b));
}

BigInt count_set_partitions(int b, const Partition& lambda)
{
    require_partition_of(b, lambda);
    BigInt d = 1;
    for (auto [n, k] : lambda.multiplicities()) {
        BigInt fn = factorial(n);
        for (int i = 0; i < k; ++i) d *= fn;
        d *= factorial(k);
    }
    return factorial(b) / d;
}

BigInt count_cycle_type(int b, const Partition& lambda)
{
    require_partition_of(b, lambda);
    BigInt c = factorial(b) / z_lambda(lambda);
    BigInt w = 1;
    for (int p : lambda.parts) w *= factorial(p - 1);
    if (w * count_set_partitions(b, lambda) != c)
        throw std::logic_error("cycle-type count disagrees with weighted set-partition count");
    return c;
}

BigInt multiset_via_partitions(int b, int e)
{
    if (b < 1 || e < 1) throw std::invalid_argument("multiset_via_partitions: b, e must be >= 1");
    Rational total = 0;
    for (const auto& lambda : partitions(b)) {
        BigInt el = 1;
        for (int i = 1; i < lambda.length(); ++i) el *= e;
        total += Rational(el * count_cycle_type(b, lambda));
    }
    total /= Rational(factorial(b - 1));
    if (den(total) != 1) throw std::logic_error("multiset_via_partitions: non-integral result");
    return num(total);
}

Rational h_at_ones(int b, int e)
{
    Rational total = 0;
    for (const auto& lambda : partitions(b)) {
        BigInt el = 1;
        for (int i = 0; i < lambda.length(); ++i) el *= e;
        total += Rational(el) / Rational(z_lambda(lambda));
    }
    return total;
}

BigInt bell(int b)
{
    // Bell triangle.
    std::vector<BigInt> row{1};
    for (int i = 1; i <= b; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

std::vector<SetPartition> set_partitions(int b)
{
    if (b < 0 || b > 12) throw std::invalid_argument("set_partitions: b out of range");
    std::vector<SetPartition> out;
    std::vector<std::uint32_t> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == b) {
            SetPartition p = blocks;
            std::sort(p.begin(), p.end());
            out.push_back(std::move(p));
            return;
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            blocks[k] |= 1u << i;
            rec(i + 1);
            blocks[k] &= ~(1u << i);
        }
        blocks.push_back(1u << i);
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
    return out;
}

Partition block_type(const SetPartition& p)
{
    Partition lambda;
    for (auto blk : p) lambda.parts.push_back(std::popcount(blk));
    std::sort(lambda.parts.rbegin(), lambda.parts.rend());
    return lambda;
}

std::map<Partition, BigInt> permutations_by_cycle_type(int b)
{
    if (b < 1 || b > 8) throw std::invalid_argument("permutations_by_cycle_type: b out of range");
    std::vector<int> perm(b);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Partition, BigInt> counts;
    do {
        std::vector<bool> seen(b, false);
        Partition lambda;
        for (int i = 0; i < b; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            lambda.parts.push_back(len);
        }
        std::sort(lambda.parts.rbegin(), lambda.parts.rend());
        counts[lambda] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

}  // namespace qf2
