#include "qf2/batyrev.hpp"

#include <sstream>
#include <stdexcept>

namespace qf2 {

BatPoly bat_monomial(int a, int b, const Series& c)
{
    if (a < 0 || b < 0) throw std::invalid_argument("bat_monomial: negative exponent");
    return BatPoly{{{a, b}, c}};
}

BatPoly operator+(const BatPoly& p, const BatPoly& q)
{
    BatPoly r = p;
    for (const auto& [k, c] : q) {
        auto it = r.find(k);
        if (it == r.end()) r.emplace(k, c);
        else it->second += c;
    }
    return r;
}

BatPoly operator-(const BatPoly& p, const BatPoly& q)
{
    BatPoly r = p;
    for (const auto& [k, c] : q) {
        auto it = r.find(k);
        if (it == r.end()) r.emplace(k, Series(0) - c);
        else it->second -= c;
    }
    return r;
}

BatPoly operator*(const BatPoly& p, const BatPoly& q)
{
    BatPoly r;
    for (const auto& [k1, c1] : p)
        for (const auto& [k2, c2] : q) r = r + bat_monomial(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

BatElement BatElement::zero(int order)
{
    BatElement e;
    for (int i = 0; i < 4; ++i) e.coeffs(i) = Series::zero(order);
    return e;
}

namespace {

const std::pair<int, int> kBasis[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};

int basis_slot(int a, int b)
{
    for (int i = 0; i < 4; ++i)
        if (kBasis[i] == std::pair{a, b}) return i;
    return -1;
}

class Reducer {
public:
    explicit Reducer(int order)
        : order_(order),
          q2_(Series::q2(order)),
          q4_(Series::q4(order)),
          mixed_(q2_ * q4_ * series_invert(Series::constant(1, order) - q4_ * Series(4)))
    {
    }

    const BatElement& monomial(int a, int b)
    {
        auto it = memo_.find({a, b});
        if (it != memo_.end()) return it->second;
        BatElement e = BatElement::zero(order_);
        const int slot = basis_slot(a, b);
        if (slot >= 0) {
            e.coeffs(slot) = Series::constant(1, order_);
        } else if (a >= 2 && b >= 1) {
            e = combine({{a - 2, b, mixed_}, {a - 1, b - 1, mixed_ * Series(-2)}});
        } else if (a >= 2) {
            e = combine({{a - 2, b, q2_ * q4_}, {a - 1, b + 1, q4_ * Series(-2)}});
        } else {
            e = combine({{a, b - 2, q2_}, {a + 1, b - 1, Series::constant(-2, order_)}});
        }
        return memo_.emplace(std::pair{a, b}, std::move(e)).first->second;
    }

    BatElement reduce(const BatPoly& p)
    {
        BatElement r = BatElement::zero(order_);
        for (const auto& [k, c] : p) {
            if (c.is_zero()) continue;
            const BatElement& m = monomial(k.first, k.second);
            for (int i = 0; i < 4; ++i) r.coeffs(i) += m.coeffs(i) * c;
        }
        return r;
    }

private:
    struct Term {
        int a, b;
        Series c;
    };

    BatElement combine(std::initializer_list<Term> terms)
    {
        BatElement r = BatElement::zero(order_);
        for (const auto& t : terms) {
            const BatElement& m = monomial(t.a, t.b);
            for (int i = 0; i < 4; ++i) r.coeffs(i) += m.coeffs(i) * t.c;
        }
        return r;
    }

    int order_;
    Series q2_, q4_, mixed_;
    std::map<std::pair<int, int>, BatElement> memo_;
};

}  // namespace

BatPoly BatElement::to_poly() const
{
    BatPoly p;
    for (int i = 0; i < 4; ++i) p.emplace(kBasis[i], coeffs(i));
    return p;
}

std::string BatElement::str() const
{
    static const char* names[4] = {"", "x2", "x4", "x2*x4"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (coeffs(i).is_zero()) continue;
        os << (first ? "" : " + ") << "(" << format_series(coeffs(i)) << ")";
        if (i) os << "*" << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

BatElement normal_form(const BatPoly& p, int order)
{
    if (order < 0) throw std::invalid_argument("normal_form: order must be >= 0");
    return Reducer(order).reduce(p);
}

SeriesMatrix bat_action_matrix(Generator k, int order)
{
    Reducer red(order);
    const int da = k == Generator::sigma2 ? 1 : 0;
    SeriesMatrix m = zero_matrix(order);
    for (int j = 0; j < 4; ++j) {
        const BatElement& col = red.monomial(kBasis[j].first + da, kBasis[j].second + 1 - da);
        for (int i = 0; i < 4; ++i) m(i, j) = col.coeffs(i);
    }
    return m;
}

SeriesMatrix phi_matrix(int order)
{
    const Series one = Series::constant(1, order);
    const Series f = f_series(order);
    const Series g = (one + f) * (one + f);
    SeriesMatrix m = zero_matrix(order);
    m(0, 0) = one;
    m(0, 3) = g * Series::q2(order) * Series::q4(order) * Series(-2);
    m(1, 1) = one;
    m(2, 1) = f * Series(Rational(-1) / Rational(2));
    m(2, 2) = one + f;
    m(3, 3) = g;
    return m;
}

SeriesMatrix phi_from_definition(int order, InvariantSource src)
{
    const SeriesMatrix s2 = star_matrix(Generator::sigma2, order, src);
    const SeriesMatrix s4 = star_matrix(Generator::sigma4, order, src);
    const SeriesVector e0 = unit_vector(0, order);
    const SeriesVector s4e0 = mul(s4, e0);
    const SeriesVector cols[4] = {e0, mul(s2, e0), s4e0, mul(s2, s4e0)};
    SeriesMatrix m;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) m(i, j) = cols[j](i);
    return m;
}

Series determinant(const SeriesMatrix& m)
{
    // Expansion along the first column over 3x3 minors.
    auto det3 = [&](int skip) {
        int r[3], n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) r[n++] = i;
        auto a = [&](int i, int j) -> const Series& { return m(r[i], j + 1); };
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    };
    Series d = m(0, 0) * det3(0);
    for (int i = 1; i < 4; ++i) {
        Series t = m(i, 0) * det3(i);
        if (i % 2) d -= t;
        else d += t;
    }
    return d;
}

namespace {

std::string mismatches(const SeriesMatrix& a, const SeriesMatrix& b)
{
    std::string bad;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (a(i, j) != b(i, j))
                bad += " [(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + format_series(a(i, j)) +
                       " vs " + format_series(b(i, j)) + "]";
    return bad;
}

}  // namespace

Report verify_isomorphism(int order, InvariantSource src)
{
    if (order < 1) throw std::invalid_argument("verify_isomorphism: order must be >= 1");
    Report r;
    const std::string at = " at order " + std::to_string(order);
    const SeriesMatrix phi = phi_matrix(order);
    r.check(equal(phi, phi_from_definition(order, src)), "phi matrix = images of 1, x2, x4, x2x4" + at +
                                                               mismatches(phi, phi_from_definition(order, src)));
    for (Generator k : {Generator::sigma2, Generator::sigma4}) {
        const SeriesMatrix lhs = mul(phi, bat_action_matrix(k, order));
        const SeriesMatrix rhs = mul(star_matrix(k, order, src), phi);
        r.check(equal(lhs, rhs), "[phi][" + to_string(k) + "]_Batyrev = [" + to_string(k) + "]_quantum[phi]" + at +
                                     mismatches(lhs, rhs));
    }
    const Series one = Series::constant(1, order);
    const Series u = one + f_series(order);
    const Series det = determinant(phi);
    r.check(det == u * u * u, "det[phi] = (1+f)^3" + at + ": " + format_series(det));
    r.check(det.constant_term() != 0, "det[phi] is a unit (constant term " + to_string(det.constant_term()) + ")");
    return r;
}

}  // namespace qf2
