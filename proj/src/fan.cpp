#include "qf2/fan.hpp"

#include "qf2/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qf2 {

namespace {

long cross(const Eigen::Vector2i& a, const Eigen::Vector2i& b)
{
    return static_cast<long>(a.x()) * b.y() - static_cast<long>(a.y()) * b.x();
}

int half_plane(const Eigen::Vector2i& v) { return (v.y() > 0 || (v.y() == 0 && v.x() > 0)) ? 0 : 1; }

std::vector<int> angular_order(const Fan& fan)
{
    std::vector<int> idx(fan.rays.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        const auto& a = fan.rays[i];
        const auto& b = fan.rays[j];
        if (half_plane(a) != half_plane(b)) return half_plane(a) < half_plane(b);
        return cross(a, b) > 0;
    });
    return idx;
}

std::string ray_name(int i) { return "ray " + std::to_string(i + 1); }

std::set<int> cone_set(const std::array<int, 2>& c) { return {c[0], c[1]}; }

// The two rays adjacent to rho, in angular order (previous, next).
std::pair<int, int> neighbours(const Fan& fan, int rho)
{
    auto order = angular_order(fan);
    const int n = static_cast<int>(order.size());
    int pos = static_cast<int>(std::find(order.begin(), order.end(), rho) - order.begin());
    return {order[(pos + n - 1) % n], order[(pos + 1) % n]};
}

// Integer inverse of [v_a v_b] (unimodular).
Eigen::Matrix2i unimodular_inverse(const Eigen::Vector2i& va, const Eigen::Vector2i& vb)
{
    const long det = cross(va, vb);
    if (det != 1 && det != -1) throw std::invalid_argument("cone is not unimodular");
    Eigen::Matrix2i inv;
    inv << vb.y(), -vb.x(), -va.y(), va.x();
    return inv * static_cast<int>(det);
}

}  // namespace

Fan f2_fan()
{
    Fan f;
    f.rays = {Eigen::Vector2i(-1, 2), Eigen::Vector2i(1, 0), Eigen::Vector2i(0, -1), Eigen::Vector2i(0, 1)};
    f.max_cones = {{1, 3}, {3, 0}, {0, 2}, {2, 1}};
    return f;
}

Fan p2_fan()
{
    Fan f;
    f.rays = {Eigen::Vector2i(1, 0), Eigen::Vector2i(0, 1), Eigen::Vector2i(-1, -1)};
    f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    return f;
}

Fan p1xp1_fan()
{
    Fan f;
    f.rays = {Eigen::Vector2i(1, 0), Eigen::Vector2i(0, 1), Eigen::Vector2i(-1, 0), Eigen::Vector2i(0, -1)};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return f;
}

std::vector<std::string> validate_fan(const Fan& fan)
{
    std::vector<std::string> bad;
    const int n = static_cast<int>(fan.rays.size());
    if (n < 3) bad.push_back("completeness: a complete 2D fan needs at least 3 rays");
    for (int i = 0; i < n; ++i) {
        const auto& v = fan.rays[i];
        if (v.x() == 0 && v.y() == 0)
            bad.push_back("primitivity: " + ray_name(i) + " is zero");
        else if (std::gcd(v.x(), v.y()) != 1)
            bad.push_back("primitivity: " + ray_name(i) + " is not primitive");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (fan.rays[i] == fan.rays[j]) bad.push_back("rays " + std::to_string(i + 1) + " and " +
                                                          std::to_string(j + 1) + " coincide");
    bool indices_ok = true;
    for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
        const auto& c = fan.max_cones[k];
        if (c[0] < 0 || c[0] >= n || c[1] < 0 || c[1] >= n || c[0] == c[1]) {
            bad.push_back("cone " + std::to_string(k + 1) + ": invalid ray indices");
            indices_ok = false;
            continue;
        }
        const long det = cross(fan.rays[c[0]], fan.rays[c[1]]);
        if (det != 1 && det != -1)
            bad.push_back("smoothness: cone " + std::to_string(k + 1) + " has determinant " + std::to_string(det));
    }
    if (!indices_ok || n < 3 || !bad.empty()) return bad;

    std::set<std::set<int>> cones;
    for (const auto& c : fan.max_cones)
        if (!cones.insert(cone_set(c)).second)
            bad.push_back("cone {" + std::to_string(c[0] + 1) + "," + std::to_string(c[1] + 1) + "} listed twice");
    auto order = angular_order(fan);
    std::set<std::set<int>> adjacent;
    for (int k = 0; k < n; ++k) {
        int i = order[k], j = order[(k + 1) % n];
        adjacent.insert({i, j});
        if (cross(fan.rays[i], fan.rays[j]) <= 0)
            bad.push_back("completeness: gap of at least pi between " + ray_name(i) + " and " + ray_name(j));
        else if (!cones.count({i, j}))
            bad.push_back("completeness: adjacent " + ray_name(i) + " and " + ray_name(j) + " span no cone");
    }
    for (const auto& c : cones)
        if (!adjacent.count(c))
            bad.push_back("overlap: cone {" + std::to_string(*c.begin() + 1) + "," + std::to_string(*c.rbegin() + 1) +
                          "} is not spanned by adjacent rays");
    return bad;
}

void require_valid(const Fan& fan)
{
    auto bad = validate_fan(fan);
    if (bad.empty()) return;
    std::string msg = "invalid fan:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw std::invalid_argument(msg);
}

bool in_some_cone(const Fan& fan, const std::vector<int>& rays)
{
    if (rays.size() <= 1) return true;
    std::set<int> s(rays.begin(), rays.end());
    for (const auto& c : fan.max_cones) {
        auto cs = cone_set(c);
        if (std::includes(cs.begin(), cs.end(), s.begin(), s.end())) return true;
    }
    return false;
}

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan)
{
    require_valid(fan);
    const int n = static_cast<int>(fan.rays.size());
    if (n > 20) throw std::invalid_argument("primitive_collections: too many rays for brute force");
    std::vector<PrimitiveCollection> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> p;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) p.push_back(i);
        if (in_some_cone(fan, p)) continue;
        bool minimal = true;
        for (std::size_t k = 0; k < p.size() && minimal; ++k) {
            auto q = p;
            q.erase(q.begin() + static_cast<long>(k));
            minimal = in_some_cone(fan, q);
        }
        if (minimal) out.push_back({p, {}, {}});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.rays < b.rays; });
    return out;
}

int default_basis_cone(const Fan& fan)
{
    int best = -1;
    std::array<int, 2> best_key{};
    for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
        auto c = fan.max_cones[k];
        std::array<int, 2> key{std::min(c[0], c[1]), std::max(c[0], c[1])};
        if (best < 0 || key < best_key) {
            best = static_cast<int>(k);
            best_key = key;
        }
    }
    if (best < 0) throw std::invalid_argument("fan has no cones");
    return best;
}

Eigen::MatrixXi character_rows(const Fan& fan)
{
    Eigen::MatrixXi m(2, static_cast<Eigen::Index>(fan.rays.size()));
    for (std::size_t i = 0; i < fan.rays.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = fan.rays[i];
    return m;
}

ClassMatrix class_matrix(const Fan& fan, int basis_cone)
{
    require_valid(fan);
    if (basis_cone < 0 || basis_cone >= static_cast<int>(fan.max_cones.size()))
        throw std::invalid_argument("class_matrix: cone index out of range");
    const int n = static_cast<int>(fan.rays.size());
    const auto [a, b] = fan.max_cones[basis_cone];
    Eigen::Matrix2i inv = unimodular_inverse(fan.rays[a], fan.rays[b]);
    ClassMatrix cm;
    for (int i = 0; i < n; ++i)
        if (i != a && i != b) cm.basis_rays.push_back(i);
    cm.entries = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(cm.basis_rays.size()), n);
    for (std::size_t k = 0; k < cm.basis_rays.size(); ++k) {
        const int rho = cm.basis_rays[k];
        Eigen::Vector2i c = -(inv * fan.rays[rho]);
        cm.entries(static_cast<Eigen::Index>(k), rho) = 1;
        cm.entries(static_cast<Eigen::Index>(k), a) = c[0];
        cm.entries(static_cast<Eigen::Index>(k), b) = c[1];
    }
    if (!(cm.entries * character_rows(fan).transpose()).isZero())
        throw std::logic_error("class_matrix: rows do not annihilate the character lattice");
    return cm;
}

ClassMatrix class_matrix(const Fan& fan) { return class_matrix(fan, default_basis_cone(fan)); }

Eigen::MatrixXi intersection_matrix(const Fan& fan)
{
    require_valid(fan);
    const int n = static_cast<int>(fan.rays.size());
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
    for (const auto& c : fan.max_cones) {
        m(c[0], c[1]) = 1;
        m(c[1], c[0]) = 1;
    }
    for (int rho = 0; rho < n; ++rho) {
        auto [p, q] = neighbours(fan, rho);
        Eigen::Vector2i s = fan.rays[p] + fan.rays[q];
        const auto& v = fan.rays[rho];
        if (cross(s, v) != 0) throw std::logic_error("neighbour sum not on the ray");
        const int k = v.x() != 0 ? s.x() / v.x() : s.y() / v.y();
        m(rho, rho) = -k;
    }
    return m;
}

PrimitiveCollection primitive_relation(const Fan& fan, const std::vector<int>& rays, const ClassMatrix& cm)
{
    require_valid(fan);
    const int n = static_cast<int>(fan.rays.size());
    if (in_some_cone(fan, rays)) throw std::invalid_argument("primitive_relation: rays span a cone");
    PrimitiveCollection pc{rays, std::vector<int>(n, 0), {}};
    Eigen::Vector2i s = Eigen::Vector2i::Zero();
    for (int r : rays) {
        s += fan.rays[r];
        pc.relation[r] += 1;
    }
    if (!s.isZero()) {
        bool found = false;
        for (const auto& c : fan.max_cones) {
            Eigen::Vector2i k = unimodular_inverse(fan.rays[c[0]], fan.rays[c[1]]) * s;
            if (k[0] < 0 || k[1] < 0) continue;
            pc.relation[c[0]] -= k[0];
            pc.relation[c[1]] -= k[1];
            found = true;
            break;
        }
        if (!found) throw std::logic_error("primitive_relation: ray sum lies in no cone");
    }
    // beta . D_rho = relation[rho], beta = sum_i beta_i D_{basis_i}
    Eigen::MatrixXi inter = intersection_matrix(fan);
    DenseMat<Rational> a(n, std::vector<Rational>(cm.basis_rays.size()));
    std::vector<Rational> rhs(n);
    for (int rho = 0; rho < n; ++rho) {
        for (std::size_t i = 0; i < cm.basis_rays.size(); ++i) a[rho][i] = inter(cm.basis_rays[i], rho);
        rhs[rho] = pc.relation[rho];
    }
    auto beta = exact_solve(a, rhs);
    if (!beta) throw std::logic_error("primitive_relation: no curve class pairs to the relation");
    for (const auto& x : *beta) {
        if (den(x) != 1) throw std::logic_error("primitive_relation: non-integral curve class");
        pc.beta.push_back(static_cast<int>(num(x)));
    }
    return pc;
}

PrimitiveCollection primitive_relation(const Fan& fan, const std::vector<int>& rays)
{
    return primitive_relation(fan, rays, class_matrix(fan));
}

Eigen::VectorXi fixed_point_weight(const Fan& fan, const ClassMatrix& cm, int cone, int rho)
{
    const int n = static_cast<int>(fan.rays.size());
    Eigen::VectorXi w = Eigen::VectorXi::Zero(n);
    const auto c = fan.max_cones.at(static_cast<std::size_t>(cone));
    if (rho != c[0] && rho != c[1]) return w;
    std::vector<int> outside;
    for (int i = 0; i < n; ++i)
        if (i != c[0] && i != c[1]) outside.push_back(i);
    // [D_rho] = sum_{tau outside} k_tau [D_tau]
    const auto r = static_cast<std::size_t>(cm.entries.rows());
    DenseMat<Rational> a(r, std::vector<Rational>(outside.size()));
    std::vector<Rational> rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < outside.size(); ++j) a[i][j] = cm.entries(static_cast<Eigen::Index>(i), outside[j]);
        rhs[i] = cm.entries(static_cast<Eigen::Index>(i), rho);
    }
    auto k = exact_solve(a, rhs);
    if (!k) throw std::logic_error("fixed_point_weight: divisors outside the cone are not a basis");
    for (std::size_t j = 0; j < outside.size(); ++j) w[outside[j]] = static_cast<int>(num((*k)[j]));
    w[rho] -= 1;
    return w;
}

NovikovPoly& NovikovPoly::operator+=(const NovikovPoly& o)
{
    for (const auto& [k, c] : o.terms) {
        auto& x = terms[k];
        x += c;
        if (x == 0) terms.erase(k);
    }
    return *this;
}

NovikovPoly operator*(const NovikovPoly& a, const NovikovPoly& b)
{
    NovikovPoly r;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            auto x = ka.first, q = ka.second;
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += kb.first[i];
            for (std::size_t i = 0; i < q.size(); ++i) q[i] += kb.second[i];
            NovikovPoly t;
            t.terms[{x, q}] = ca * cb;
            r += t;
        }
    return r;
}

NovikovPoly operator-(const NovikovPoly& a, const NovikovPoly& b)
{
    NovikovPoly r = a;
    NovikovPoly nb = b;
    for (auto& [k, c] : nb.terms) c = -c;
    return r += nb;
}

NovikovPoly NovikovPoly::x(int n_rays, int n_basis, int ray)
{
    NovikovPoly p;
    std::vector<int> e(n_rays, 0);
    e[ray] = 1;
    p.terms[{e, std::vector<int>(n_basis, 0)}] = 1;
    return p;
}

NovikovPoly NovikovPoly::q(int n_rays, int, const std::vector<int>& beta)
{
    NovikovPoly p;
    p.terms[{std::vector<int>(n_rays, 0), beta}] = 1;
    return p;
}

NovikovPoly NovikovPoly::constant(int n_rays, int n_basis, long c)
{
    NovikovPoly p;
    if (c != 0) p.terms[{std::vector<int>(n_rays, 0), std::vector<int>(n_basis, 0)}] = c;
    return p;
}

std::string NovikovPoly::str(const std::vector<int>& basis_rays) const
{
    if (terms.empty()) return "0";
    // Higher x-degree first, then q-free terms, for a stable reading order.
    std::vector<std::pair<std::pair<std::vector<int>, std::vector<int>>, BigInt>> sorted(terms.begin(), terms.end());
    auto deg = [](const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& u, const auto& v) {
        const auto& [xu, qu] = u.first;
        const auto& [xv, qv] = v.first;
        if (deg(xu) != deg(xv)) return deg(xu) > deg(xv);
        if (deg(qu) != deg(qv)) return deg(qu) < deg(qv);
        if (xu != xv) return xu > xv;
        return qu > qv;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : sorted) {
        const auto& [xe, qe] = key;
        std::string mono;
        auto put = [&](const std::string& v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        for (std::size_t i = 0; i < qe.size(); ++i) put("q" + std::to_string(basis_rays[i] + 1), qe[i]);
        for (std::size_t i = 0; i < xe.size(); ++i) put("x" + std::to_string(i + 1), xe[i]);
        BigInt m = c < 0 ? BigInt(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (mono.empty())
            os << m;
        else if (m == 1)
            os << mono;
        else
            os << m << "*" << mono;
    }
    return os.str();
}

BatyrevGenerators batyrev_generators(const Fan& fan, const ClassMatrix& cm)
{
    BatyrevGenerators g;
    Eigen::MatrixXi chars = character_rows(fan);
    for (int r = 0; r < 2; ++r) g.linear.push_back(chars.row(r).transpose());
    for (const auto& pc : primitive_collections(fan)) {
        auto full = primitive_relation(fan, pc.rays, cm);
        QuantumSRGenerator q{full.rays, full.beta, std::vector<int>(fan.rays.size(), 0)};
        for (std::size_t i = 0; i < full.relation.size(); ++i)
            if (full.relation[i] < 0) q.cone_exponents[i] = -full.relation[i];
        g.quantum_sr.push_back(std::move(q));
    }
    return g;
}

NovikovPoly linear_generator_poly(const Eigen::VectorXi& coeffs, int n_basis)
{
    const int n = static_cast<int>(coeffs.size());
    NovikovPoly p;
    for (int i = 0; i < n; ++i)
        if (coeffs[i] != 0) {
            NovikovPoly t = NovikovPoly::x(n, n_basis, i);
            for (auto& [k, c] : t.terms) c *= coeffs[i];
            p += t;
        }
    return p;
}

NovikovPoly quantum_sr_poly(const QuantumSRGenerator& g, int n_rays, int n_basis)
{
    NovikovPoly lhs = NovikovPoly::constant(n_rays, n_basis, 1);
    for (int r : g.rays) lhs = lhs * NovikovPoly::x(n_rays, n_basis, r);
    NovikovPoly rhs = NovikovPoly::q(n_rays, n_basis, g.beta);
    for (int r = 0; r < n_rays; ++r)
        for (int k = 0; k < g.cone_exponents[r]; ++k) rhs = rhs * NovikovPoly::x(n_rays, n_basis, r);
    return lhs - rhs;
}

std::vector<NovikovPoly> batyrev_presentation(const Fan& fan, const ClassMatrix& cm)
{
    const int n = static_cast<int>(fan.rays.size());
    const int r = static_cast<int>(cm.basis_rays.size());
    // x_rho = sum_i A[i][rho] x_{basis_i}
    std::vector<NovikovPoly> subst;
    for (int rho = 0; rho < n; ++rho) {
        NovikovPoly p;
        for (int i = 0; i < r; ++i)
            if (cm.entries(i, rho) != 0) {
                NovikovPoly t = NovikovPoly::x(n, r, cm.basis_rays[i]);
                for (auto& [k, c] : t.terms) c *= cm.entries(i, rho);
                p += t;
            }
        subst.push_back(p);
    }
    std::vector<NovikovPoly> out;
    for (const auto& g : batyrev_generators(fan, cm).quantum_sr) {
        NovikovPoly lhs = NovikovPoly::constant(n, r, 1);
        for (int rho : g.rays) lhs = lhs * subst[rho];
        NovikovPoly rhs = NovikovPoly::q(n, r, g.beta);
        for (int rho = 0; rho < n; ++rho)
            for (int k = 0; k < g.cone_exponents[rho]; ++k) rhs = rhs * subst[rho];
        out.push_back(lhs - rhs);
    }
    return out;
}

Cohomology f2_cohomology()
{
    const Fan fan = f2_fan();
    const Eigen::MatrixXi inter = intersection_matrix(fan);
    // Basis (1, D2, D4, pt); divisors D2, D4 are rays 1 and 3.
    const int div[2] = {1, 3};
    Cohomology h;
    for (auto& row : h.cup)
        for (auto& v : row) v.setZero();
    for (int i = 0; i < 4; ++i) {
        h.cup[0][i] = Eigen::Vector4i::Unit(i);
        h.cup[i][0] = Eigen::Vector4i::Unit(i);
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h.cup[1 + i][1 + j] = inter(div[i], div[j]) * Eigen::Vector4i::Unit(3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h.pairing(i, j) = h.cup[i][j][3];
    return h;
}

}  // namespace qf2
