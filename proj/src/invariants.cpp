#include "qf2/invariants.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qf2 {

std::string to_string(Insertion i)
{
    switch (i) {
    case Insertion::One: return "1";
    case Insertion::D1: return "D1";
    case Insertion::D2: return "D2";
    case Insertion::D3: return "D3";
    case Insertion::D4: return "D4";
    case Insertion::Pt: return "pt";
    }
    return "?";
}

std::string to_string(InvariantSource s)
{
    switch (s) {
    case InvariantSource::closed: return "closed";
    case InvariantSource::localization: return "localization";
    case InvariantSource::assembled: return "assembled";
    }
    return "?";
}

InvariantSource parse_source(const std::string& s)
{
    for (auto x : {InvariantSource::closed, InvariantSource::localization, InvariantSource::assembled})
        if (to_string(x) == s) return x;
    throw std::invalid_argument("unknown invariant source '" + s + "'");
}

Insertion parse_insertion(const std::string& s)
{
    for (auto i : {Insertion::One, Insertion::D1, Insertion::D2, Insertion::D3, Insertion::D4, Insertion::Pt})
        if (to_string(i) == s) return i;
    throw std::invalid_argument("unknown insertion '" + s + "'");
}

int codim(Insertion i)
{
    if (i == Insertion::One) return 0;
    if (i == Insertion::Pt) return 2;
    return 1;
}

Eigen::Vector4i basis_coords(Insertion i)
{
    switch (i) {
    case Insertion::One: return {1, 0, 0, 0};
    case Insertion::D1:
    case Insertion::D2: return {0, 1, 0, 0};
    case Insertion::D3: return {0, 2, 1, 0};
    case Insertion::D4: return {0, 0, 1, 0};
    case Insertion::Pt: return {0, 0, 0, 1};
    }
    return Eigen::Vector4i::Zero();
}

bool dimension_valid(const InvariantKey& k) { return codim(k.first) + codim(k.second) == 1 + 2 * k.a; }

namespace {

// <T_i, T_j> on basis elements (1, D2, D4, pt) for beta = a D2 + d D4.
template <class Base>
Rational bilinear(const InvariantKey& k, Base base)
{
    if (k.a < 0 || k.d < 0 || k.a >= 2 || (k.a == 0 && k.d == 0) || !dimension_valid(k)) return 0;
    const Eigen::Vector4i x = basis_coords(k.first), y = basis_coords(k.second);
    Rational total = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (x[i] != 0 && y[j] != 0) total += Rational(x[i] * y[j]) * base(k.a, k.d, i, j);
    return total;
}

// Only (divisor, 1) for a = 0 and (divisor, pt) for a = 1 survive the dimension count.
int divisor_slot(int a, int i, int j)
{
    const int other = a == 0 ? 0 : 3;
    if ((i == 1 || i == 2) && j == other) return i;
    if ((j == 1 || j == 2) && i == other) return j;
    return 0;
}

Rational closed_base(int a, int d, int i, int j)
{
    const int s = divisor_slot(a, i, j);
    if (s == 0) return 0;
    const Rational c = Rational(binom(2 * d, d));
    if (a == 0) return s == 1 ? -c / Rational(2 * d) : c / Rational(d);
    if (d == 0) return s == 1 ? Rational(0) : Rational(1);
    return s == 1 ? c / Rational(2 * (2 * d - 1)) : -c / Rational(2 * d - 1);
}

Rational cached_localization(Family f, int d, Method m)
{
    static std::mutex mu;
    static std::map<std::tuple<Family, int, Method>, Rational> cache;
    const auto key = std::tuple{f, d, m};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const Rational v = invariant_by_localization(f, d, m);
    std::lock_guard lock(mu);
    return cache.emplace(key, v).first->second;
}

Rational localized_base(int a, int d, int i, int j, Method m)
{
    const int s = divisor_slot(a, i, j);
    if (s == 0) return 0;
    if (a == 0) {
        Rational d2 = cached_localization(Family::dD4, d, m);
        // D3 restricts to zero at both fixed points of D4, so <D3,1> = 0 and D4 = D3 - 2 D2.
        return s == 1 ? d2 : Rational(-2) * d2;
    }
    Rational d1 = cached_localization(Family::D2_plus_dD4, d, m);
    if (s == 1) return d1;
    if (d == 0) {
        const auto g = enumerate_necessary_loci(Family::D2_plus_dD4, 0).front();
        return eval_at_v0(assemble_locus(g, Divisor::D4).product).value;
    }
    return Rational(-2) * d1;
}

}  // namespace

Rational closed_invariant(const InvariantKey& k) { return bilinear(k, closed_base); }

Rational localized_invariant(const InvariantKey& k, Method m)
{
    return bilinear(k, [m](int a, int d, int i, int j) { return localized_base(a, d, i, j, m); });
}

Rational invariant(const InvariantKey& k, InvariantSource src)
{
    switch (src) {
    case InvariantSource::closed: return closed_invariant(k);
    case InvariantSource::localization: return localized_invariant(k, Method::closed);
    case InvariantSource::assembled: return localized_invariant(k, Method::assembled);
    }
    return 0;
}

std::vector<InvariantRow> invariant_table(Family f, int d_max, InvariantSource src)
{
    std::vector<InvariantRow> rows;
    const int a = f == Family::dD4 ? 0 : 1;
    for (int d = 1 - a; d <= d_max; ++d)
        for (auto dv : {Insertion::D1, Insertion::D2, Insertion::D3, Insertion::D4}) {
            InvariantKey k{a, d, dv, a == 0 ? Insertion::One : Insertion::Pt};
            rows.push_back({k, invariant(k, src)});
        }
    return rows;
}

std::vector<InvariantRow> invariant_table(int d_max, InvariantSource src)
{
    auto rows = invariant_table(Family::dD4, d_max, src);
    for (auto& r : invariant_table(Family::D2_plus_dD4, d_max, src)) rows.push_back(r);
    return rows;
}

void Report::check(bool pass, const std::string& what)
{
    ok = ok && pass;
    lines.push_back(std::string(pass ? "ok    " : "FAIL  ") + what);
}

void Report::note(const std::string& what) { lines.push_back("note  " + what); }

Report verify_relations(int d_max)
{
    Report r;
    auto key = [](int a, int d, Insertion x) { return InvariantKey{a, d, x, a == 0 ? Insertion::One : Insertion::Pt}; };
    for (int a = 0; a <= 1; ++a) {
        const std::string fam = a == 0 ? "dD4" : "D2+dD4";
        const std::string other = a == 0 ? "1" : "pt";
        for (int d = a == 0 ? 1 : 0; d <= d_max; ++d) {
            const std::string at = fam + " d=" + std::to_string(d) + ": ";
            Rational d1 = closed_invariant(key(a, d, Insertion::D1));
            Rational d2 = closed_invariant(key(a, d, Insertion::D2));
            Rational d3 = closed_invariant(key(a, d, Insertion::D3));
            Rational d4 = closed_invariant(key(a, d, Insertion::D4));
            r.check(d1 == d2, at + "<D1," + other + "> = <D2," + other + "> = " + to_string(d2));
            if (d >= 1) {
                r.check(d4 == Rational(-2) * d2, at + "<D4," + other + "> = -2<D2," + other + "> = " + to_string(d4));
                r.check(d3 == 0, at + "<D3," + other + "> = 0");
            } else {
                r.note(at + "<D4,pt> = " + to_string(d4) + ", <D3,pt> = " + to_string(d3) +
                       "; the D4-relation needs a D4-component, absent in degree D2");
            }
            for (Method m : {Method::closed, Method::assembled}) {
                Rational loc = invariant_by_localization(a == 0 ? Family::dD4 : Family::D2_plus_dD4, d, m);
                const Rational& want = a == 0 ? d2 : d1;
                r.check(loc == want, at + "localization (" + to_string(m) + ") " + to_string(loc) + " = closed " +
                                         to_string(want));
            }
        }
    }
    return r;
}

}  // namespace qf2
