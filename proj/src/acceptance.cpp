#include "qf2/acceptance.hpp"

#include "qf2/batyrev.hpp"
#include "qf2/combinatorics.hpp"
#include "qf2/fan.hpp"
#include "qf2/json_io.hpp"
#include "qf2/localization.hpp"
#include "qf2/losev_manin.hpp"
#include "qf2/quantum_module.hpp"

#include <functional>

namespace qf2 {

namespace {

class Criterion {
public:
    Criterion(int id, std::string title) { r_.id = id, r_.title = std::move(title); }

    void expect(bool pass, const std::string& what)
    {
        ++r_.checks;
        if (!pass) r_.failures.push_back(what);
    }
    void expect_eq(const Rational& got, const Rational& want, const std::string& what)
    {
        expect(got == want, what + ": got " + to_string(got) + ", expected " + to_string(want));
    }
    void absorb(const Report& rep)
    {
        for (const auto& l : rep.lines)
            if (l.rfind("note", 0) != 0) expect(l.rfind("ok", 0) == 0, l.substr(6));
    }
    CriterionResult finish()
    {
        r_.pass = r_.failures.empty() && r_.checks > 0;
        return r_;
    }
    CriterionResult guarded(const std::function<void(Criterion&)>& body)
    {
        try {
            body(*this);
        } catch (const std::exception& e) {
            expect(false, std::string("exception: ") + e.what());
        }
        return finish();
    }

private:
    CriterionResult r_;
};

Rational q(long p, long d) { return Rational(p) / Rational(d); }
Rational c2(long n) { return Rational(binom(2 * n, n)); }

constexpr int kOrder = 10;

CriterionResult criterion1()
{
    return Criterion(1, "localization <D2,1> in degree dD4 = -binom(2d,d)/(2d), d = 1..8").guarded([](Criterion& c) {
        c.expect_eq(invariant_by_localization(Family::dD4, 1, Method::assembled), -1, "d=1");
        c.expect_eq(invariant_by_localization(Family::dD4, 2, Method::assembled), q(-3, 2), "d=2");
        c.expect_eq(invariant_by_localization(Family::dD4, 3, Method::assembled), q(-10, 3), "d=3");
        for (int d = 1; d <= 8; ++d)
            for (Method m : {Method::closed, Method::assembled})
                c.expect_eq(invariant_by_localization(Family::dD4, d, m), -c2(d) / Rational(2 * d),
                            "d=" + std::to_string(d) + " (" + to_string(m) + " loci)");
    });
}

CriterionResult criterion2()
{
    return Criterion(2, "localization <D1,pt> in degree D2+dD4 = binom(2d,d)/(2(2d-1)), d = 0..8")
        .guarded([](Criterion& c) {
            for (int d = 0; d <= 8; ++d)
                for (Method m : {Method::closed, Method::assembled})
                    c.expect_eq(invariant_by_localization(Family::D2_plus_dD4, d, m),
                                c2(d) / Rational(2 * (2 * d - 1)),
                                "d=" + std::to_string(d) + " (" + to_string(m) + " loci)");
        });
}

CriterionResult criterion3()
{
    return Criterion(3, "per-locus closed values = factor-assembled V->0 values, weight degree 0, d <= 6")
        .guarded([](Criterion& c) {
            for (Family f : {Family::dD4, Family::D2_plus_dD4})
                for (int d = f == Family::dD4 ? 1 : 0; d <= 6; ++d)
                    for (const auto& g : enumerate_necessary_loci(f, d)) {
                        const std::string at = to_string(f) + " d=" + std::to_string(d) + " " + g.name();
                        const WeightedValue v = eval_at_v0(assemble_locus(g).product);
                        c.expect(v.w_exponent == 0, at + ": weight degree " + std::to_string(v.w_exponent));
                        c.expect_eq(v.value, closed_contribution(g), at);
                    }
        });
}

CriterionResult criterion4()
{
    return Criterion(4, "brute-force Cont_B = e e' 2^(2b-1)/(b W^3) multiset(b, e+e'), b <= 6, e, e' <= 4")
        .guarded([](Criterion& c) {
            for (int b = 1; b <= 6; ++b)
                for (int e = 1; e <= 4; ++e)
                    for (int e2 = 1; e2 <= 4; ++e2) {
                        const WeightedValue got = cont_b_interior_brute(b, e, e2);
                        const Rational want = Rational(e * e2) * pow(Rational(2), 2 * b - 1) / Rational(b) *
                                              Rational(multiset(b, e + e2));
                        const std::string at =
                            "b=" + std::to_string(b) + " e=" + std::to_string(e) + " e'=" + std::to_string(e2);
                        c.expect(got.w_exponent == -3, at + ": W-exponent " + std::to_string(got.w_exponent));
                        c.expect_eq(got.value, want, at);
                    }
        });
}

CriterionResult criterion5()
{
    return Criterion(5, "expansion identity b = 2..6, multiset identity b, e <= 10, central binomial identities n <= 20")
        .guarded([](Criterion& c) {
            for (int b = 2; b <= 6; ++b) c.expect(expansion_check(b), "expansion identity b=" + std::to_string(b));
            for (int b = 1; b <= 10; ++b)
                for (int e = 1; e <= 10; ++e) {
                    const std::string at = "b=" + std::to_string(b) + " e=" + std::to_string(e);
                    c.expect_eq(Rational(multiset_via_partitions(b, e)), Rational(binom(b + e - 1, e)),
                                "multiset " + at);
                    c.expect_eq(h_at_ones(b, e), Rational(binom(b + e - 1, b)), "h_b(1^e) " + at);
                }
            for (int n = 0; n <= 20; ++n) {
                Rational s = 0;
                for (int k = 0; k <= n; ++k) s += c2(k) * c2(n - k);
                c.expect_eq(s, pow(Rational(4), n), "sum binom(2k,k) binom(2n-2k,n-k), n=" + std::to_string(n));
                c.expect_eq(c2(n), pow(Rational(-4), n) * binom_rational(q(-1, 2), n),
                            "binom(2n,n) = (-4)^n binom(-1/2,n), n=" + std::to_string(n));
            }
        });
}

CriterionResult criterion6()
{
    return Criterion(6, "assembled star matrices = closed-form module table, order 10").guarded([](Criterion& c) {
        c.absorb(verify_table(kOrder, InvariantSource::assembled));
    });
}

CriterionResult criterion7()
{
    return Criterion(7, "[sigma2][sigma4] = [sigma4][sigma2] and the two quantum relations, order 10")
        .guarded([](Criterion& c) {
            c.absorb(verify_module_axiom(kOrder, InvariantSource::assembled));
            c.absorb(verify_quantum_relations(kOrder, InvariantSource::assembled));
        });
}

CriterionResult criterion8()
{
    return Criterion(8, "Batyrev isomorphism intertwines sigma2, sigma4 and det = (1+f)^3, order 10")
        .guarded([](Criterion& c) { c.absorb(verify_isomorphism(kOrder, InvariantSource::assembled)); });
}

CriterionResult criterion9()
{
    return Criterion(9, "fan pipeline on the F2 input: class matrix, primitive collections, beta, presentation")
        .guarded([](Criterion& c) {
            const Fan fan = parse_fan_json(
                R"({"rays": [[-1,2],[1,0],[0,-1],[0,1]], "max_cones": [[1,3],[3,0],[0,2],[2,1]]})");
            c.expect(validate_fan(fan).empty(), "fan validates");
            const ClassMatrix cm = class_matrix(fan);
            Eigen::MatrixXi want(2, 4);
            want << 1, 1, 2, 0, 0, 0, 1, 1;
            c.expect(cm.entries == want, "class matrix [[1,1,2,0],[0,0,1,1]]");
            c.expect(cm.basis_rays == std::vector<int>{1, 3}, "Pic basis D2, D4");
            const auto prims = primitive_collections(fan);
            c.expect(prims.size() == 2, "two primitive collections");
            if (prims.size() == 2) {
                c.expect(prims[0].rays == std::vector<int>{0, 1}, "first collection {rho1, rho2}");
                c.expect(prims[1].rays == std::vector<int>{2, 3}, "second collection {rho3, rho4}");
                c.expect(primitive_relation(fan, prims[0].rays, cm).beta == std::vector<int>{0, 1},
                         "beta{rho1,rho2} = D4 class");
                c.expect(primitive_relation(fan, prims[1].rays, cm).beta == std::vector<int>{1, 0},
                         "beta{rho3,rho4} = D2 class");
            }
            const auto x = [&](int r) { return NovikovPoly::x(4, 2, r); };
            const auto qq = [&](std::vector<int> b) { return NovikovPoly::q(4, 2, b); };
            const NovikovPoly r1 = x(1) * x(1) - qq({0, 1}) * x(3) * x(3);
            const NovikovPoly r2 = (NovikovPoly::constant(4, 2, 2) * x(1) + x(3)) * x(3) - qq({1, 0});
            const auto pres = batyrev_presentation(fan, cm);
            c.expect(pres.size() == 2, "two presentation generators");
            if (pres.size() == 2) {
                c.expect(pres[0] == r1, "x2^2 - q4 x4^2, got " + pres[0].str(cm.basis_rays));
                c.expect(pres[1] == r2, "(2x2 + x4) x4 - q2, got " + pres[1].str(cm.basis_rays));
            }
        });
}

CriterionResult criterion10()
{
    return Criterion(10, "(1+f)^2 (1-4q4) = 1 and 4q4 (1+f)^2 = f(2+f), order 12").guarded([](Criterion& c) {
        const int n = 12;
        const Series one = Series::constant(1, n), f = f_series(n), q4 = Series::q4(n);
        const Series g = (one + f) * (one + f);
        c.expect(g * (one - q4 * Series(4)) == one, "(1+f)^2 (1-4q4) = 1");
        c.expect(q4 * Series(4) * g == f * (f + Series(2)), "4q4 (1+f)^2 = f(2+f)");
    });
}

}  // namespace

std::vector<CriterionResult> run_acceptance()
{
    return {criterion1(), criterion2(), criterion3(), criterion4(), criterion5(),
            criterion6(), criterion7(), criterion8(), criterion9(), criterion10()};
}

std::string format_result(const CriterionResult& r)
{
    std::string s = std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + " (" +
                    std::to_string(r.checks) + " checks";
    if (r.pass) return s + ")";
    s += ", " + std::to_string(r.failures.size()) + " failed)";
    const std::size_t shown = std::min<std::size_t>(r.failures.size(), 3);
    for (std::size_t i = 0; i < shown; ++i) s += "\n      " + r.failures[i];
    if (r.failures.size() > shown) s += "\n      ...";
    return s;
}

}  // namespace qf2
