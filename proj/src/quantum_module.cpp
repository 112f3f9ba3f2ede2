#include "qf2/quantum_module.hpp"

#include "qf2/fan.hpp"
#include "qf2/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace qf2 {

std::string to_string(Generator k) { return k == Generator::sigma2 ? "sigma2" : "sigma4"; }

const std::array<std::string, 4>& basis_names()
{
    static const std::array<std::string, 4> names{"1", "D2", "D4", "pt"};
    return names;
}

PairingData pairing_and_dual()
{
    PairingData p;
    p.g = f2_cohomology().pairing;
    DenseMat<Rational> g(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = p.g(i, j);
    auto inv = exact_inverse(g);
    if (!inv) throw std::logic_error("Poincare pairing is degenerate");
    // <T_i, T^j> = delta_ij  =>  T^j = sum_k (g^{-1})_{kj} T_k
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) {
            const Rational& x = (*inv)[k][j];
            if (den(x) != 1) throw std::logic_error("pairing is not unimodular");
            p.duals(k, j) = static_cast<int>(num(x));
        }
    return p;
}

SeriesMatrix zero_matrix(int order)
{
    SeriesMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = Series::zero(order);
    return m;
}

SeriesMatrix identity_matrix(int order)
{
    SeriesMatrix m = zero_matrix(order);
    for (int i = 0; i < 4; ++i) m(i, i) = Series::constant(1, order);
    return m;
}

SeriesVector unit_vector(int i, int order)
{
    SeriesVector v;
    for (int k = 0; k < 4; ++k) v(k) = Series::constant(k == i ? 1 : 0, order);
    return v;
}

SeriesMatrix mul(const SeriesMatrix& a, const SeriesMatrix& b)
{
    SeriesMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Series s = a(i, 0) * b(0, j);
            for (int k = 1; k < 4; ++k) s += a(i, k) * b(k, j);
            m(i, j) = s;
        }
    return m;
}

SeriesVector mul(const SeriesMatrix& a, const SeriesVector& v)
{
    SeriesVector r;
    for (int i = 0; i < 4; ++i) {
        Series s = a(i, 0) * v(0);
        for (int k = 1; k < 4; ++k) s += a(i, k) * v(k);
        r(i) = s;
    }
    return r;
}

SeriesMatrix mul(const SeriesMatrix& a, const Series& s)
{
    SeriesMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = a(i, j) * s;
    return m;
}

SeriesVector mul(const SeriesVector& v, const Series& s)
{
    SeriesVector r;
    for (int i = 0; i < 4; ++i) r(i) = v(i) * s;
    return r;
}

SeriesMatrix add(const SeriesMatrix& a, const SeriesMatrix& b)
{
    SeriesMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = a(i, j) + b(i, j);
    return m;
}

SeriesMatrix sub(const SeriesMatrix& a, const SeriesMatrix& b)
{
    SeriesMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = a(i, j) - b(i, j);
    return m;
}

SeriesVector add(const SeriesVector& a, const SeriesVector& b)
{
    SeriesVector r;
    for (int i = 0; i < 4; ++i) r(i) = a(i) + b(i);
    return r;
}

SeriesVector sub(const SeriesVector& a, const SeriesVector& b)
{
    SeriesVector r;
    for (int i = 0; i < 4; ++i) r(i) = a(i) - b(i);
    return r;
}

bool equal(const SeriesMatrix& a, const SeriesMatrix& b)
{
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool equal(const SeriesVector& a, const SeriesVector& b)
{
    for (int i = 0; i < 4; ++i)
        if (a(i) != b(i)) return false;
    return true;
}

namespace {

int divisor_index(Generator k) { return k == Generator::sigma2 ? 1 : 2; }

// D_k . (a D2 + d D4) with D2.D2 = 0, D2.D4 = 1, D4.D4 = -2.
int degree_pairing(Generator k, int a, int d) { return k == Generator::sigma2 ? d : a - 2 * d; }

Insertion basis_insertion(int i)
{
    static const Insertion ins[4] = {Insertion::One, Insertion::D2, Insertion::D4, Insertion::Pt};
    return ins[i];
}

Series factor_series(FFactor f, int order)
{
    if (f == FFactor::none) return Series::constant(1, order);
    Series s = f_series(order);
    return f == FFactor::f ? s : s + Series::constant(1, order);
}

std::vector<TableTerm> T(std::initializer_list<TableTerm> t) { return t; }

}  // namespace

SeriesMatrix classical_matrix(Generator k, int order)
{
    const Cohomology h = f2_cohomology();
    const int dk = divisor_index(k);
    SeriesMatrix m = zero_matrix(order);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) m(i, j) = Series::constant(h.cup[j][dk][i], order);
    return m;
}

SeriesMatrix star_matrix(Generator k, int order, InvariantSource src)
{
    if (order < 0) throw std::invalid_argument("star_matrix: order must be >= 0");
    const PairingData pd = pairing_and_dual();
    SeriesMatrix m = classical_matrix(k, order);
    for (int a = 0; a <= 1; ++a)
        for (int d = 0; a + d <= order; ++d) {
            if (a == 0 && d == 0) continue;
            const int pairing = degree_pairing(k, a, d);
            if (pairing == 0) continue;
            for (int j = 0; j < 4; ++j)
                for (int i = 0; i < 4; ++i) {
                    const Rational inv = invariant({a, d, basis_insertion(j), basis_insertion(i)}, src);
                    if (inv == 0) continue;
                    const Rational c = Rational(pairing) * inv;
                    for (int r = 0; r < 4; ++r)
                        if (pd.duals(r, i) != 0)
                            m(r, j) += Series::monomial(a, d, c * Rational(pd.duals(r, i)), order);
                }
        }
    return m;
}

const std::vector<TableTerm>& table_entry(Generator k, int j)
{
    using F = FFactor;
    const Rational h = Rational(-1) / Rational(2);
    static const std::vector<TableTerm> s2[4] = {
        T({{1, 0, 0, F::none, 1}, {h, 0, 0, F::f, 2}}),
        T({{1, 1, 1, F::one_plus_f, 0}, {h, 0, 0, F::f, 3}}),
        T({{-2, 1, 1, F::one_plus_f, 0}, {1, 0, 0, F::one_plus_f, 3}}),
        T({{1, 1, 1, F::one_plus_f, 2}}),
    };
    static const std::vector<TableTerm> s4[4] = {
        T({{1, 0, 0, F::one_plus_f, 2}}),
        T({{h, 1, 0, F::f, 0}, {1, 0, 0, F::one_plus_f, 3}}),
        T({{1, 1, 0, F::one_plus_f, 0}, {-2, 0, 0, F::one_plus_f, 3}}),
        T({{1, 1, 0, F::none, 1}, {h, 1, 0, F::f, 2}}),
    };
    if (j < 0 || j > 3) throw std::out_of_range("table_entry: basis index");
    return k == Generator::sigma2 ? s2[j] : s4[j];
}

SeriesMatrix table_matrix(Generator k, int order)
{
    SeriesMatrix m = zero_matrix(order);
    for (int j = 0; j < 4; ++j)
        for (const auto& t : table_entry(k, j))
            m(t.basis, j) += Series::monomial(t.q2, t.q4, t.coef, order) * factor_series(t.factor, order);
    return m;
}

std::string format_table_entry(Generator k, int j, int order)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& t : table_entry(k, j)) {
        const int rest = order - t.q2 - t.q4;
        if (rest < 0) continue;
        std::vector<std::string> parts;
        const Rational m = t.coef < 0 ? Rational(-t.coef) : t.coef;
        if (m != 1) parts.push_back(to_string(m));
        std::string mono;
        if (t.q2) mono += t.q2 == 1 ? "q2" : "q2^" + std::to_string(t.q2);
        if (t.q4) mono += std::string(mono.empty() ? "" : "*") + (t.q4 == 1 ? "q4" : "q4^" + std::to_string(t.q4));
        if (!mono.empty()) parts.push_back(mono);
        if (t.factor != FFactor::none) {
            Series s = factor_series(t.factor, rest);
            if (s.is_zero()) continue;
            if (s != Series::constant(1, rest)) parts.push_back("(" + format_series(s) + ")");
        }
        if (t.basis != 0) parts.push_back(basis_names()[t.basis]);
        std::string body;
        for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
        if (body.empty()) body = "1";
        os << (first ? (t.coef < 0 ? "-" : "") : (t.coef < 0 ? " - " : " + ")) << body;
        first = false;
    }
    return first ? "0" : os.str();
}

Eigen::Matrix4i constant_part(const SeriesMatrix& m)
{
    Eigen::Matrix4i c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Rational x = m(i, j).constant_term();
            if (den(x) != 1) throw std::logic_error("constant_part: non-integral entry");
            c(i, j) = static_cast<int>(num(x));
        }
    return c;
}

std::string format_class(const SeriesVector& v)
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (v(i).is_zero()) continue;
        os << (first ? "" : " + ") << "(" << format_series(v(i)) << ")";
        if (i != 0) os << "*" << basis_names()[i];
        first = false;
    }
    return first ? "0" : os.str();
}

namespace {

std::string entry_name(Generator k, int j) { return to_string(k) + "*" + basis_names()[j]; }

}  // namespace

Report verify_table(int order, InvariantSource src)
{
    if (order < 1) throw std::invalid_argument("verify_table: order must be >= 1");
    Report r;
    for (Generator k : {Generator::sigma2, Generator::sigma4}) {
        const SeriesMatrix s = star_matrix(k, order, src);
        const SeriesMatrix t = table_matrix(k, order);
        for (int j = 0; j < 4; ++j) {
            std::string bad;
            for (int i = 0; i < 4; ++i)
                if (s(i, j) != t(i, j))
                    bad += " [" + basis_names()[i] + ": assembled " + format_series(s(i, j)) + " vs table " +
                           format_series(t(i, j)) + "]";
            r.check(bad.empty(), entry_name(k, j) + " at order " + std::to_string(order) + bad);
        }
    }
    return r;
}

Report verify_module_axiom(int order, InvariantSource src)
{
    if (order < 1) throw std::invalid_argument("verify_module_axiom: order must be >= 1");
    Report r;
    const SeriesMatrix s2 = star_matrix(Generator::sigma2, order, src);
    const SeriesMatrix s4 = star_matrix(Generator::sigma4, order, src);
    const SeriesMatrix c = sub(mul(s2, s4), mul(s4, s2));
    std::string bad;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!c(i, j).is_zero())
                bad += " [(" + basis_names()[i] + "," + basis_names()[j] + "): " + format_series(c(i, j)) + "]";
    r.check(bad.empty(), "[sigma2][sigma4] = [sigma4][sigma2] at order " + std::to_string(order) + bad);
    return r;
}

Report verify_quantum_relations(int order, InvariantSource src)
{
    if (order < 1) throw std::invalid_argument("verify_quantum_relations: order must be >= 1");
    Report r;
    const SeriesMatrix s2 = star_matrix(Generator::sigma2, order, src);
    const SeriesMatrix s4 = star_matrix(Generator::sigma4, order, src);
    const SeriesVector one = unit_vector(0, order);
    const SeriesVector pt = unit_vector(3, order);
    const Series q2 = Series::q2(order), q4 = Series::q4(order);
    const Series g = (Series::constant(1, order) + f_series(order)) * (Series::constant(1, order) + f_series(order));

    const SeriesVector s4_1 = mul(s4, one);
    const SeriesVector lhs1 = mul(add(mul(s2, Series::constant(2, order)), s4), s4_1);
    r.check(equal(lhs1, mul(one, q2)), "(2 sigma2 + sigma4)*(sigma4*1) = q2: " + format_class(lhs1));

    const SeriesVector s22 = mul(s2, mul(s2, one));
    const SeriesVector s44 = mul(s4, s4_1);
    r.check(equal(s22, mul(s44, q4)), "sigma2*(sigma2*1) = q4 sigma4*(sigma4*1)");
    const SeriesVector closed = mul(sub(mul(one, q2), mul(pt, Series::constant(2, order))), g);
    r.check(equal(s44, closed), "sigma4*(sigma4*1) = (1+f)^2 (q2 - 2pt): " + format_class(s44));
    r.check(equal(s22, mul(closed, q4)), "sigma2*(sigma2*1) = q4 (1+f)^2 (q2 - 2pt): " + format_class(s22));
    return r;
}

}  // namespace qf2
