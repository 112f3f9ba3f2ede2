#include "qf2/localization.hpp"

#include "qf2/losev_manin.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qf2 {

std::string to_string(Family f) { return f == Family::dD4 ? "dD4" : "D2+dD4"; }
std::string to_string(Method m) { return m == Method::closed ? "closed" : "assembled"; }
std::string to_string(FixedPoint p) { return "p" + std::to_string(static_cast<int>(p) + 1); }
std::string to_string(Divisor d) { return "D" + std::to_string(static_cast<int>(d) + 1); }

Family parse_family(const std::string& s)
{
    if (s == "dD4") return Family::dD4;
    if (s == "D2+dD4") return Family::D2_plus_dD4;
    throw std::invalid_argument("unknown family '" + s + "' (expected dD4 or D2+dD4)");
}

Method parse_method(const std::string& s)
{
    if (s == "closed") return Method::closed;
    if (s == "assembled") return Method::assembled;
    throw std::invalid_argument("unknown method '" + s + "' (expected closed or assembled)");
}

int ChainGraph::degree() const
{
    int d = std::accumulate(edges.begin(), edges.end(), 0);
    return half_edge ? d + half_edge->second : d;
}

FixedPoint ChainGraph::vertex_point(int v) const
{
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex out of range");
    return v % 2 == 0 ? FixedPoint::p1 : FixedPoint::p2;
}

int ChainGraph::marking1_vertex() const { return family == Family::dD4 ? 0 : vertex_count() - 1; }

int ChainGraph::marking2_vertex() const { return family == Family::dD4 ? vertex_count() - 1 : -1; }

std::vector<std::string> ChainGraph::vertex_labels() const
{
    std::vector<std::string> out;
    if (family == Family::D2_plus_dD4) out.push_back(to_string(FixedPoint::p4));
    for (int v = 0; v < vertex_count(); ++v) out.push_back(to_string(vertex_point(v)));
    return out;
}

std::string ChainGraph::name() const
{
    auto join = [&] {
        std::string s;
        for (std::size_t i = 0; i < edges.size(); ++i) s += (i ? "," : "") + std::to_string(edges[i]);
        return s;
    };
    if (family == Family::dD4) {
        const bool end_half = half_edge && half_edge->first == 1;
        if (edges.size() == 1 && !half_edge) return "F_{" + join() + "}";
        if (edges.size() == 2 && !half_edge) return "F_{" + join() + "}";
        if ((edges.size() == 1 || edges.size() == 2) && end_half)
            return "F_{" + join() + "}^{" + std::to_string(half_edge->second) + "}";
    } else {
        if (edges.empty() && !half_edge) return "F'_vert";
        if (edges.size() == 1 && !half_edge) return "F'_{0}";
        if (edges.size() == 1 && half_edge && half_edge->first == 1)
            return "F'_{" + std::to_string(half_edge->second) + "}";
    }
    std::string s = std::string(family == Family::dD4 ? "chain" : "chain'") + "[" + join();
    if (half_edge) s += "|v" + std::to_string(half_edge->first) + ":" + std::to_string(half_edge->second);
    return s + "]";
}

ChainGraph make_graph(Family f, std::vector<int> edges, std::optional<std::pair<int, int>> half_edge)
{
    for (int e : edges)
        if (e < 1) throw std::invalid_argument("edge degrees must be positive");
    ChainGraph g{f, std::move(edges), half_edge};
    if (half_edge && (half_edge->second < 1 || half_edge->first < 0 || half_edge->first >= g.vertex_count()))
        throw std::invalid_argument("invalid half-edge");
    if (f == Family::dD4 && g.edges.empty()) throw std::invalid_argument("dD4 graphs need at least one edge");
    return g;
}

std::vector<ChainGraph> enumerate_necessary_loci(Family f, int d)
{
    std::vector<ChainGraph> out;
    if (f == Family::dD4) {
        if (d < 1) throw std::invalid_argument("dD4 family needs d >= 1");
        out.push_back(make_graph(f, {d}));
        for (int e = 1; e <= d - 1; ++e) out.push_back(make_graph(f, {e, d - e}));
        for (int b = 1; b <= d - 1; ++b) out.push_back(make_graph(f, {d - b}, std::pair{1, b}));
        for (int b = 1; b <= d - 2; ++b)
            for (int e = 1; e <= d - b - 1; ++e) out.push_back(make_graph(f, {e, d - b - e}, std::pair{1, b}));
    } else {
        if (d < 0) throw std::invalid_argument("D2+dD4 family needs d >= 0");
        if (d == 0) {
            out.push_back(ChainGraph{f, {}, std::nullopt});
        } else {
            out.push_back(make_graph(f, {d}));
            for (int b = 1; b <= d - 1; ++b) out.push_back(make_graph(f, {d - b}, std::pair{1, b}));
        }
    }
    return out;
}

VFrac v_weight(FixedPoint p)
{
    if (p == FixedPoint::p1) return VFrac::V();
    if (p == FixedPoint::p2) return VFrac::linear(1, 2);
    throw std::invalid_argument("v_weight: only p1 and p2 lie on D4");
}

VFrac w_weight(FixedPoint p)
{
    if (p == FixedPoint::p1) return VFrac::W();
    if (p == FixedPoint::p2) return -VFrac::W();
    throw std::invalid_argument("w_weight: only p1 and p2 lie on D4");
}

VFrac divisor_weight(Divisor d, FixedPoint p)
{
    if (p != FixedPoint::p1 && p != FixedPoint::p2) throw std::invalid_argument("divisor_weight: p1 or p2 only");
    const bool at1 = p == FixedPoint::p1;
    switch (d) {
    case Divisor::D1: return at1 ? VFrac(1, RPoly(0)) : -VFrac::W();
    case Divisor::D2: return at1 ? VFrac::W() : VFrac(1, RPoly(0));
    case Divisor::D3: return VFrac(1, RPoly(0));
    case Divisor::D4: return v_weight(p);
    }
    throw std::logic_error("divisor_weight");
}

VFrac edge_factor(int e)
{
    if (e < 1) throw std::invalid_argument("edge_factor: e must be >= 1");
    Rational lead = pow(Rational(e), 2 * e) / Rational(e) / Rational(factorial(e) * factorial(e)) * pow(Rational(-1), e);
    RPoly num(lead);
    for (int j = 0; j <= 2 * e - 2; ++j) num *= RPoly(std::vector<Rational>{Rational(1 + j) / Rational(e), Rational(1)});
    return VFrac(-1, num);
}

namespace {

struct VertexData {
    FixedPoint point;
    std::vector<VFrac> tangents;  // one per incident edge
};

std::vector<VertexData> vertex_data(const ChainGraph& g)
{
    std::vector<VertexData> vs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexData vd{g.vertex_point(v), {}};
        const VFrac w = w_weight(vd.point);
        if (g.family == Family::D2_plus_dD4 && v == 0) vd.tangents.push_back(VFrac::V());
        for (int i : {v - 1, v})
            if (i >= 0 && i < static_cast<int>(g.edges.size()))
                vd.tangents.push_back(w * VFrac(Rational(1) / Rational(g.edges[i])));
        vs.push_back(std::move(vd));
    }
    return vs;
}

// Cont_B at a vertex, memoized on (b, point, tangent values).
VFrac base_factor(int b, FixedPoint p, const std::vector<VFrac>& tangents)
{
    std::vector<Rational> t;
    for (const auto& x : tangents) {
        if (x.num().degree() > 0 || x.den().degree() > 0)
            throw std::invalid_argument("base component next to the vertical edge is not supported");
        t.push_back(x.at_v0());
    }
    using Key = std::tuple<int, int, std::vector<Rational>>;
    static std::mutex mu;
    static std::map<Key, RPoly> cache;
    Key key{b, static_cast<int>(p), t};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end())
            return VFrac(-1 - static_cast<int>(t.size()), it->second);
    }
    const VFrac v = v_weight(p);
    const Rational w = w_weight(p).at_v0();
    RPoly val = base_vertex_integral_forest<RPoly>(b, v.num(), w, t);
    {
        std::lock_guard lock(mu);
        cache.emplace(key, val);
    }
    return VFrac(-1 - static_cast<int>(t.size()), val);
}

}  // namespace

AssembledLocus assemble_locus(const ChainGraph& g, std::optional<Divisor> insertion)
{
    const Divisor ins = insertion.value_or(g.family == Family::dD4 ? Divisor::D2 : Divisor::D1);
    AssembledLocus out;
    auto add = [&](std::string name, VFrac f) { out.factors.emplace_back(std::move(name), std::move(f)); };

    VFrac ins_w = divisor_weight(ins, g.vertex_point(g.marking1_vertex()));
    if (g.family == Family::D2_plus_dD4) {
        // [p4] lift: c1(O(D2)) c1(O(D3)) at p4 = W * (-V)
        ins_w = ins_w * VFrac::W() * (-VFrac::V());
    }
    add("insertion", ins_w);
    if (g.family == Family::D2_plus_dD4) add("vertical edge", (VFrac::W() * VFrac::V() * VFrac::V()).reciprocal() * VFrac(-1));

    const auto vs = vertex_data(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& vd = vs[v];
        const bool base = g.half_edge && g.half_edge->first == v;
        const int n_edges = static_cast<int>(vd.tangents.size());
        const int nodes = base ? n_edges : std::max(0, n_edges - 1);
        const std::string tag = " v" + std::to_string(v);
        if (nodes > 0) {
            VFrac tw = w_weight(vd.point) * v_weight(vd.point);
            VFrac vc = VFrac(1);
            for (int i = 0; i < nodes; ++i) vc = vc * tw;
            add("vertex tangent" + tag, vc);
        }
        if (!base && n_edges == 2) add("node smoothing" + tag, (vd.tangents[0] + vd.tangents[1]).reciprocal());
        if (base) add("base b=" + std::to_string(g.half_edge->second) + tag, base_factor(g.half_edge->second, vd.point, vd.tangents));
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) add("edge e=" + std::to_string(g.edges[i]), edge_factor(g.edges[i]));

    out.product = VFrac(1);
    for (const auto& [name, f] : out.factors) out.product = out.product * f;
    return out;
}

Rational closed_contribution(const ChainGraph& g)
{
    auto c2 = [](int n) { return Rational(binom(2 * n, n)); };
    const int d = g.degree();
    const Rational sign_d = pow(Rational(-1), d);
    if (g.family == Family::dD4) {
        const bool end_half = g.half_edge && g.half_edge->first == 1;
        if (!g.half_edge && g.edges.size() == 1) return sign_d / Rational(2 * d) * c2(d);
        if (!g.half_edge && g.edges.size() == 2) return sign_d / Rational(2 * d) * c2(g.edges[0]) * c2(g.edges[1]);
        if (end_half && (g.edges.size() == 1 || g.edges.size() == 2)) {
            const int b = g.half_edge->second;
            Rational v = pow(Rational(-1), d - b) * pow(Rational(4), b) / Rational(2 * b) * Rational(binom(d - 1, b - 1));
            for (int e : g.edges) v *= c2(e);
            return v;
        }
    } else {
        if (g.edges.empty() && !g.half_edge) return 0;
        const int b = g.half_edge ? g.half_edge->second : 0;
        if (g.edges.size() == 1 && (!g.half_edge || g.half_edge->first == 1))
            return pow(Rational(-1), d - b - 1) * pow(Rational(4), b) / Rational(2) * c2(d - b) * Rational(binom(d - 1, b));
    }
    throw std::invalid_argument("closed_contribution: " + g.name() + " is not a necessary locus");
}

Contribution locus_contribution(const ChainGraph& g, Method m)
{
    if (m == Method::closed) return {g, closed_contribution(g), 0, m};
    const AssembledLocus a = assemble_locus(g);
    const WeightedValue v = eval_at_v0(a.product);
    if (v.w_exponent != 0)
        throw std::logic_error(g.name() + ": contribution has weight degree " + std::to_string(v.w_exponent));
    return {g, v.value, v.w_exponent, m};
}

std::vector<Contribution> contributions(Family f, int d, Method m)
{
    std::vector<Contribution> out;
    for (const auto& g : enumerate_necessary_loci(f, d)) out.push_back(locus_contribution(g, m));
    return out;
}

Rational invariant_by_localization(Family f, int d, Method m)
{
    Rational total = 0;
    for (const auto& c : contributions(f, d, m)) total += c.value;
    return total;
}

std::vector<Rational> dD4_resummation_stages(int d)
{
    if (d < 1) throw std::invalid_argument("dD4_resummation_stages: d >= 1");
    auto C = [](long n, long k) { return Rational(binom(n, k)); };
    auto c2 = [&](long n) { return C(2 * n, n); };
    auto sgn = [](long n) { return pow(Rational(-1), n); };
    std::vector<Rational> st;

    st.push_back(invariant_by_localization(Family::dD4, d, Method::closed));

    Rational s1 = 0;
    for (int e = 0; e <= d - 1; ++e) s1 += sgn(d) / Rational(2 * d) * c2(e) * c2(d - e);
    for (int b = 1; b <= d - 1; ++b) s1 += sgn(d - b) * pow(Rational(4), b) / Rational(2 * b) * C(d - 1, b - 1) * c2(d - b);
    for (int b = 1; b <= d - 2; ++b)
        for (int e = 1; e <= d - b - 1; ++e)
            s1 += sgn(d - b) * pow(Rational(4), b) / Rational(2 * b) * C(d - 1, b - 1) * c2(e) * c2(d - b - e);
    st.push_back(s1);

    // Merge the two base-type sums over b <= d-2; b = d-1 stays separate.
    Rational s2 = 0;
    for (int e = 0; e <= d - 1; ++e) s2 += sgn(d) / Rational(2 * d) * c2(e) * c2(d - e);
    if (d >= 2) s2 -= pow(Rational(4), d - 1);
    for (int b = 1; b <= d - 2; ++b) {
        Rational inner = 0;
        for (int e = 0; e <= d - b - 1; ++e) inner += c2(e) * c2(d - b - e);
        s2 += sgn(d - b) * pow(Rational(4), b) / Rational(2 * d) * C(d, b) * inner;
    }
    st.push_back(s2);

    Rational s3 = 0;
    for (int b = 0; b <= d - 1; ++b) {
        Rational inner = 0;
        for (int e = 0; e <= d - b - 1; ++e) inner += c2(e) * c2(d - b - e);
        s3 += sgn(d - b) * pow(Rational(4), b) / Rational(2 * d) * C(d, b) * inner;
    }
    st.push_back(s3);

    Rational s4 = 0;
    for (int b = 0; b <= d - 1; ++b)
        s4 += sgn(d - b) * pow(Rational(4), b) / Rational(2 * d) * C(d, b) * (pow(Rational(4), d - b) - c2(d - b));
    st.push_back(s4);

    Rational s5 = 0;
    for (int b = 0; b <= d; ++b) s5 += sgn(d - b - 1) * pow(Rational(4), b) / Rational(2 * d) * C(d, b) * c2(d - b);
    st.push_back(s5);

    Rational s6 = 0;
    for (int b = 0; b <= d; ++b) s6 += C(d, b) * binom_rational(Rational(-1) / Rational(2), d - b);
    st.push_back(-pow(Rational(4), d) / Rational(2 * d) * s6);

    st.push_back(-c2(d) / Rational(2 * d));
    return st;
}

std::vector<Rational> D2_resummation_stages(int d)
{
    if (d < 1) throw std::invalid_argument("D2_resummation_stages: d >= 1");
    auto C = [](long n, long k) { return Rational(binom(n, k)); };
    std::vector<Rational> st;
    st.push_back(invariant_by_localization(Family::D2_plus_dD4, d, Method::closed));
    Rational t1 = 0, t2 = 0;
    for (int b = 0; b <= d - 1; ++b) {
        t1 += pow(Rational(-1), d - b - 1) * pow(Rational(4), b) / Rational(2) * C(2 * (d - b), d - b) * C(d - 1, b);
        t2 += C(d - 1, b) * binom_rational(Rational(-1) / Rational(2), d - b);
    }
    st.push_back(t1);
    st.push_back(-pow(Rational(4), d) / Rational(2) * t2);
    st.push_back(C(2 * d, d) / Rational(2 * (2 * d - 1)));
    return st;
}

}  // namespace qf2
