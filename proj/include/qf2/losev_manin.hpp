#pragma once

#include "qf2/combinatorics.hpp"
#include "qf2/rational.hpp"
#include "qf2/vfraction.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf2 {

/// D_P * psi_n^a * psi_n'^c on the Losev-Manin space with b light points.
struct LMMonomial {
    int b = 1;
    SetPartition blocks;  // all blocks, singletons included, sorted
    int a = 0;
    int c = 0;

    int codim() const { return b - static_cast<int>(blocks.size()) + a + c; }
    std::string str() const;

    friend bool operator==(const LMMonomial&, const LMMonomial&) = default;
    friend auto operator<=>(const LMMonomial&, const LMMonomial&) = default;
};

/// The monomial 1 (all singletons).
LMMonomial lm_unit_monomial(int b);

/// D_I for a subset I of [b] given as a bitmask, |I| >= 2.
LMMonomial lm_diagonal_monomial(int b, std::uint32_t subset);

/// Product of two monomials; nullopt when the product carries a hat-psi factor.
std::optional<LMMonomial> multiply_monomials(const LMMonomial& x, const LMMonomial& y);

/// binom(b-1, c) if a + c = b - 1, else 0.
BigInt psi_integral(int b, int a, int c);

/// Integral of a single monomial over the Losev-Manin space.
BigInt integrate_monomial(const LMMonomial& m);

/// Linear combination of monomials; hat-psi terms are dropped on multiplication
/// and the drop recorded. Classes above the top degree b - 1 are discarded.
template <class Scalar>
class LMClass {
public:
    explicit LMClass(int b) : b_(b)
    {
        if (b < 1 || b > 31) throw std::invalid_argument("LMClass: b out of range");
    }
    LMClass(const LMMonomial& m, const Scalar& coeff = Scalar(1)) : b_(m.b) { add(m, coeff); }

    static LMClass unit(int b, const Scalar& c = Scalar(1)) { return LMClass(lm_unit_monomial(b), c); }
    static LMClass diagonal(int b, std::uint32_t subset) { return LMClass(lm_diagonal_monomial(b, subset)); }
    static LMClass psi(int b, int a, int c)
    {
        LMMonomial m = lm_unit_monomial(b);
        m.a = a;
        m.c = c;
        return LMClass(m);
    }

    int b() const { return b_; }
    bool hat_dropped() const { return hat_dropped_; }
    const std::map<LMMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const LMMonomial& m, const Scalar& coeff)
    {
        if (m.b != b_) throw std::invalid_argument("LMClass: b mismatch");
        if (coeff == 0 || m.codim() > b_ - 1) return;
        auto [it, fresh] = terms_.try_emplace(m, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LMClass& operator+=(const LMClass& o)
    {
        check(o);
        for (const auto& [m, c] : o.terms_) add(m, c);
        hat_dropped_ = hat_dropped_ || o.hat_dropped_;
        return *this;
    }
    LMClass& operator-=(const LMClass& o) { return *this += o * Scalar(-1); }
    friend LMClass operator+(LMClass x, const LMClass& y) { return x += y; }
    friend LMClass operator-(LMClass x, const LMClass& y) { return x -= y; }
    friend LMClass operator*(LMClass x, const Scalar& s)
    {
        LMClass r(x.b_);
        r.hat_dropped_ = x.hat_dropped_;
        for (const auto& [m, c] : x.terms_) r.add(m, c * s);
        return r;
    }
    friend LMClass operator*(const Scalar& s, const LMClass& x) { return x * s; }

    friend LMClass operator*(const LMClass& x, const LMClass& y)
    {
        x.check(y);
        LMClass r(x.b_);
        r.hat_dropped_ = x.hat_dropped_ || y.hat_dropped_;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                if (mx.codim() + my.codim() > x.b_ - 1) continue;
                if (auto m = multiply_monomials(mx, my))
                    r.add(*m, cx * cy);
                else
                    r.hat_dropped_ = true;
            }
        return r;
    }

    Scalar integrate() const
    {
        Scalar total(0);
        for (const auto& [m, c] : terms_) {
            BigInt v = integrate_monomial(m);
            if (v != 0) total += c * Scalar(Rational(v));
        }
        return total;
    }

private:
    void check(const LMClass& o) const
    {
        if (o.b_ != b_) throw std::invalid_argument("LMClass: b mismatch");
    }

    int b_;
    std::map<LMMonomial, Scalar> terms_;
    bool hat_dropped_ = false;
};

template <class Scalar>
LMClass<Scalar> lm_multiply(const LMClass<Scalar>& x, const LMClass<Scalar>& y)
{
    return x * y;
}

template <class Scalar>
Scalar lm_integrate(const LMClass<Scalar>& x)
{
    return x.integrate();
}

/// Delta_j = sum_{i<j} D_{ij}, j in 2..b.
template <class Scalar = Rational>
LMClass<Scalar> lm_delta(int b, int j)
{
    LMClass<Scalar> d(b);
    for (int i = 1; i < j; ++i) d.add(lm_diagonal_monomial(b, (1u << (i - 1)) | (1u << (j - 1))), Scalar(1));
    return d;
}

/// D_lambda: sum of D_P over set partitions of type lambda.
template <class Scalar = Rational>
LMClass<Scalar> lm_d_lambda(int b, const Partition& lambda)
{
    LMClass<Scalar> r(b);
    for (const auto& p : set_partitions(b))
        if (block_type(p) == lambda) r.add(LMMonomial{b, p, 0, 0}, Scalar(1));
    return r;
}

/// prod_{j=2}^b (1 + Delta_j) against sum_lambda prod(lambda_q - 1)! D_lambda,
/// compared after integrating against every psi_n^a psi_n'^c.
bool expansion_check(int b);

/// Integral over the Losev-Manin space with b light points of
///   (1/b!) (v/w^2) prod_{j=2}^b (v - 2 Delta_j)^2 / (w + Delta_j) * prod_k 1/(t_k - psi_k)
/// at W = 1. At most two tangents; the first pairs with psi_n, the second with psi_n'.
template <class Scalar>
Scalar base_vertex_integral(int b, const Scalar& v, const Rational& w, std::span<const Rational> tangents)
{
    if (b < 1) throw std::invalid_argument("base_vertex_integral: b must be >= 1");
    if (tangents.size() > 2) throw std::invalid_argument("base_vertex_integral: at most two nodes");
    using C = LMClass<Scalar>;
    C acc = C::unit(b, v * Scalar(Rational(1) / (w * w)));
    for (int j = 2; j <= b; ++j) {
        C delta = lm_delta<Scalar>(b, j);
        C lin = C::unit(b, v) - delta * Scalar(2);
        C geo(b);
        C pw = C::unit(b);
        for (int s = 0; s <= b - 1; ++s) {
            Rational coef = pow(Rational(-1), s) / pow(w, s + 1);
            geo += pw * Scalar(coef);
            pw = pw * delta;
        }
        acc = acc * lin * lin * geo;
    }
    for (std::size_t k = 0; k < tangents.size(); ++k) {
        C geo(b);
        for (int s = 0; s <= b - 1; ++s)
            geo += C::psi(b, k == 0 ? s : 0, k == 1 ? s : 0) * Scalar(Rational(1) / pow(tangents[k], s + 1));
        acc = acc * geo;
    }
    return acc.integrate() * Scalar(Rational(1) / Rational(factorial(b)));
}

/// Same integral without expanding in the Losev-Manin ring. A product of
/// Delta_j's survives only when its diagonals form a forest (cycles and repeats
/// are hat terms), and a monomial integrates by its block count alone, so the
/// sum runs over component sizes as vertices 2..b are attached in turn.
template <class Scalar>
Scalar base_vertex_integral_forest(int b, const Scalar& v, const Rational& w, std::span<const Rational> tangents)
{
    if (b < 1) throw std::invalid_argument("base_vertex_integral_forest: b must be >= 1");
    if (tangents.size() > 2) throw std::invalid_argument("base_vertex_integral_forest: at most two nodes");
    // coefficient of Delta^k in (v - 2 Delta)^2 / (w + Delta), times k! for the orderings of k distinct diagonals
    std::vector<Scalar> geo(b), lin2{v * v, v * Scalar(-4), Scalar(4)};
    for (int s = 0; s < b; ++s) geo[s] = Scalar(pow(Rational(-1), s) / pow(w, s + 1));
    std::vector<Scalar> coef(b, Scalar(0));
    for (int k = 0; k < b; ++k) {
        for (int i = 0; i <= std::min(k, 2); ++i) coef[k] += lin2[i] * geo[k - i];
        coef[k] = coef[k] * Scalar(Rational(factorial(k)));
    }
    using State = std::vector<int>;  // component sizes, sorted descending
    std::map<State, Scalar> cur{{State{1}, Scalar(1)}};
    for (int j = 2; j <= b; ++j) {
        std::map<State, Scalar> next;
        for (const auto& [st, wgt] : cur) {
            const int n = static_cast<int>(st.size());
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                const int k = std::popcount(mask);
                if (k >= b) continue;
                long ways = 1;
                int merged = 1;
                State ns;
                for (int c = 0; c < n; ++c) {
                    if (mask >> c & 1u) {
                        ways *= st[c];
                        merged += st[c];
                    } else {
                        ns.push_back(st[c]);
                    }
                }
                ns.push_back(merged);
                std::sort(ns.begin(), ns.end(), std::greater<>());
                Scalar term = wgt * coef[k] * Scalar(Rational(ways));
                auto [it, fresh] = next.try_emplace(ns, term);
                if (!fresh) it->second += term;
            }
        }
        cur = std::move(next);
    }
    auto psi_coef = [&](std::size_t k, int s) {
        if (k >= tangents.size()) return s == 0 ? Rational(1) : Rational(0);
        return Rational(1) / pow(tangents[k], s + 1);
    };
    Scalar total(0);
    for (const auto& [st, wgt] : cur) {
        const int l = static_cast<int>(st.size());
        Rational psi(0);
        for (int a = 0; a <= l - 1; ++a) psi += psi_coef(0, a) * psi_coef(1, l - 1 - a) * Rational(psi_integral(l, a, l - 1 - a));
        if (psi != 0) total += wgt * Scalar(psi);
    }
    return total * v * Scalar(Rational(1) / (w * w * Rational(factorial(b))));
}

/// e e' 2^{2b-1} / b * multiset(b, e+e'), W-exponent -3.
WeightedValue cont_b_interior_closed(int b, int e, int e2);
/// -e 4^b / (2b) * multiset(b, e), W-exponent -2.
WeightedValue cont_b_end_closed(int b, int e);

/// Sum over partitions of integrated D_lambda psi-monomials, with the V = 0 prefactor.
WeightedValue cont_b_interior_by_partitions(int b, int e, int e2);
WeightedValue cont_b_end_by_partitions(int b, int e);

/// Full Losev-Manin expansion of the raw vertex integrand at V = 0.
WeightedValue cont_b_interior_brute(int b, int e, int e2);
WeightedValue cont_b_end_brute(int b, int e);

/// Closed value, after checking it against the partition sum. Throws std::logic_error on mismatch.
WeightedValue cont_b_interior(int b, int e, int e2);
WeightedValue cont_b_end(int b, int e);

}  // namespace qf2
