#include "qf2/losev_manin.hpp"

#include <algorithm>
#include <sstream>

namespace qf2 {

std::string LMMonomial::str() const
{
    std::ostringstream os;
    bool any = false;
    for (auto blk : blocks) {
        if (std::popcount(blk) < 2) continue;
        os << (any ? "*" : "") << "D";
        for (int i = 0; i < b; ++i)
            if (blk & (1u << i)) os << (i + 1 < 10 ? "" : "_") << i + 1;
        any = true;
    }
    auto psi = [&](const char* name, int e) {
        if (e == 0) return;
        os << (any ? "*" : "") << name;
        if (e > 1) os << "^" << e;
        any = true;
    };
    psi("psi_n", a);
    psi("psi_n'", c);
    if (!any) os << "1";
    return os.str();
}

LMMonomial lm_unit_monomial(int b)
{
    LMMonomial m;
    m.b = b;
    for (int i = 0; i < b; ++i) m.blocks.push_back(1u << i);
    return m;
}

LMMonomial lm_diagonal_monomial(int b, std::uint32_t subset)
{
    const std::uint32_t full = b >= 32 ? ~0u : (1u << b) - 1;
    if ((subset & ~full) != 0 || std::popcount(subset) < 2)
        throw std::invalid_argument("lm_diagonal_monomial: need a subset of [b] with at least two elements");
    LMMonomial m;
    m.b = b;
    m.blocks.push_back(subset);
    for (int i = 0; i < b; ++i)
        if (!(subset & (1u << i))) m.blocks.push_back(1u << i);
    std::sort(m.blocks.begin(), m.blocks.end());
    return m;
}

std::optional<LMMonomial> multiply_monomials(const LMMonomial& x, const LMMonomial& y)
{
    if (x.b != y.b) throw std::invalid_argument("multiply_monomials: b mismatch");
    std::vector<std::uint32_t> comps;
    auto absorb = [&](std::uint32_t blk) {
        std::uint32_t merged = blk;
        std::vector<std::uint32_t> rest;
        for (auto c : comps) {
            if (c & merged)
                merged |= c;
            else
                rest.push_back(c);
        }
        rest.push_back(merged);
        comps = std::move(rest);
    };
    int excess = 0;
    for (auto blk : x.blocks) {
        absorb(blk);
        excess += std::popcount(blk) - 1;
    }
    for (auto blk : y.blocks) {
        absorb(blk);
        excess += std::popcount(blk) - 1;
    }
    int merged_excess = 0;
    for (auto c : comps) merged_excess += std::popcount(c) - 1;
    if (merged_excess != excess) return std::nullopt;
    std::sort(comps.begin(), comps.end());
    return LMMonomial{x.b, std::move(comps), x.a + y.a, x.c + y.c};
}

BigInt psi_integral(int b, int a, int c)
{
    if (b < 1 || a < 0 || c < 0) throw std::invalid_argument("psi_integral: bad arguments");
    return a + c == b - 1 ? binom(b - 1, c) : BigInt(0);
}

BigInt integrate_monomial(const LMMonomial& m)
{
    return psi_integral(static_cast<int>(m.blocks.size()), m.a, m.c);
}

bool expansion_check(int b)
{
    using C = LMClass<Rational>;
    C lhs = C::unit(b);
    for (int j = 2; j <= b; ++j) lhs = lhs * (C::unit(b) + lm_delta(b, j));
    C rhs(b);
    for (const auto& lambda : partitions(b)) {
        BigInt w = 1;
        for (int p : lambda.parts) w *= factorial(p - 1);
        rhs += lm_d_lambda(b, lambda) * Rational(w);
    }
    for (int a = 0; a <= b - 1; ++a)
        for (int c = 0; a + c <= b - 1; ++c) {
            C psi = C::psi(b, a, c);
            if ((lhs * psi).integrate() != (rhs * psi).integrate()) return false;
        }
    return true;
}

WeightedValue cont_b_interior_closed(int b, int e, int e2)
{
    if (b < 1 || e < 1 || e2 < 1) throw std::invalid_argument("cont_b_interior: b, e, e' must be >= 1");
    Rational v = Rational(e * e2) * pow(Rational(2), 2 * b - 1) / Rational(b) * Rational(multiset(b, e + e2));
    return {v, -3};
}

WeightedValue cont_b_end_closed(int b, int e)
{
    if (b < 1 || e < 1) throw std::invalid_argument("cont_b_end: b, e must be >= 1");
    Rational v = -Rational(e) * pow(Rational(4), b) / Rational(2 * b) * Rational(multiset(b, e));
    return {v, -2};
}

namespace {

// sum_lambda prod(lambda_q - 1)! sum_m x^{l-1-m} y^m int D_lambda psi_n^{l-1-m} psi_n'^m
Rational partition_sum(int b, const Rational& x, const Rational& y, bool two_nodes)
{
    using C = LMClass<Rational>;
    Rational total = 0;
    for (const auto& lambda : partitions(b)) {
        BigInt w = 1;
        for (int p : lambda.parts) w *= factorial(p - 1);
        const int k = lambda.length() - 1;
        C dl = lm_d_lambda(b, lambda);
        for (int m = 0; m <= (two_nodes ? k : 0); ++m) {
            Rational integral = (dl * C::psi(b, k - m, m)).integrate();
            total += Rational(w) * pow(x, k - m) * pow(y, m) * integral;
        }
    }
    return total;
}

}  // namespace

WeightedValue cont_b_interior_by_partitions(int b, int e, int e2)
{
    Rational pre = Rational(2) * pow(Rational(4), b - 1) * Rational(e * e2) / Rational(factorial(b));
    return {pre * partition_sum(b, Rational(e), Rational(e2), true), -3};
}

WeightedValue cont_b_end_by_partitions(int b, int e)
{
    Rational pre = Rational(-2) * pow(Rational(4), b - 1) * Rational(e) / Rational(factorial(b));
    return {pre * partition_sum(b, Rational(e), Rational(0), false), -2};
}

// The base vertex sits at p2, where V2 = V + 2W and W2 = -W; tangents are W2/e.
WeightedValue cont_b_interior_brute(int b, int e, int e2)
{
    const Rational t[2] = {Rational(-1) / Rational(e), Rational(-1) / Rational(e2)};
    return {base_vertex_integral<Rational>(b, Rational(2), Rational(-1), t), -3};
}

WeightedValue cont_b_end_brute(int b, int e)
{
    const Rational t[1] = {Rational(-1) / Rational(e)};
    return {base_vertex_integral<Rational>(b, Rational(2), Rational(-1), t), -2};
}

WeightedValue cont_b_interior(int b, int e, int e2)
{
    WeightedValue closed = cont_b_interior_closed(b, e, e2);
    if (cont_b_interior_by_partitions(b, e, e2) != closed)
        throw std::logic_error("cont_b_interior: partition sum disagrees with closed form");
    return closed;
}

WeightedValue cont_b_end(int b, int e)
{
    WeightedValue closed = cont_b_end_closed(b, e);
    if (cont_b_end_by_partitions(b, e) != closed)
        throw std::logic_error("cont_b_end: partition sum disagrees with closed form");
    return closed;
}

}  // namespace qf2
