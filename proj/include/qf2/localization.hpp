#pragma once

#include "qf2/rational.hpp"
#include "qf2/vfraction.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qf2 {

enum class Family { dD4, D2_plus_dD4 };
enum class Method { closed, assembled };
enum class FixedPoint { p1, p2, p3, p4 };
enum class Divisor { D1, D2, D3, D4 };

std::string to_string(Family f);
std::string to_string(Method m);
std::string to_string(FixedPoint p);
std::string to_string(Divisor d);
/// "dD4" or "D2+dD4"; throws std::invalid_argument.
Family parse_family(const std::string& s);
Method parse_method(const std::string& s);

/// Chain of D4-covers between p1 and p2, optionally with one contracted
/// base-carrying component. In the D2 + dD4 family a degree-D2 cover from
/// p1 to p4 is attached at vertex 0 and carries marking 2.
struct ChainGraph {
    Family family = Family::dD4;
    std::vector<int> edges;                       // degrees left to right
    std::optional<std::pair<int, int>> half_edge; // (vertex, b)

    int degree() const;
    int vertex_count() const { return static_cast<int>(edges.size()) + 1; }
    FixedPoint vertex_point(int v) const;
    int marking1_vertex() const;
    /// -1 for the p4 end of the vertical edge.
    int marking2_vertex() const;
    std::vector<std::string> vertex_labels() const;
    std::string name() const;

    friend bool operator==(const ChainGraph&, const ChainGraph&) = default;
    friend auto operator<=>(const ChainGraph&, const ChainGraph&) = default;
};

ChainGraph make_graph(Family f, std::vector<int> edges, std::optional<std::pair<int, int>> half_edge = std::nullopt);

/// Necessary loci in a fixed deterministic order.
std::vector<ChainGraph> enumerate_necessary_loci(Family f, int d);

/// Weight of O(D) at p1 or p2, in (V, W) at W = 1.
VFrac divisor_weight(Divisor d, FixedPoint p);
/// V_i and W_i: weights of O(D4) and O(D2 at p1, D1 at p2).
VFrac v_weight(FixedPoint p);
VFrac w_weight(FixedPoint p);

/// Cont_E(e), homogeneous of degree -1.
VFrac edge_factor(int e);

struct AssembledLocus {
    std::vector<std::pair<std::string, VFrac>> factors;
    VFrac product;
};

/// Factor-by-factor equivariant contribution; marking 1 carries `insertion`
/// (default D2 for dD4, D1 for D2 + dD4).
AssembledLocus assemble_locus(const ChainGraph& g, std::optional<Divisor> insertion = std::nullopt);

struct Contribution {
    ChainGraph graph;
    Rational value;
    int w_exponent = 0;
    Method method = Method::closed;
};

/// Closed value for a necessary locus; throws std::invalid_argument otherwise.
Rational closed_contribution(const ChainGraph& g);

Contribution locus_contribution(const ChainGraph& g, Method m);

/// <D2,1> for dD4 and <D1,pt> for D2 + dD4, summed over necessary loci.
Rational invariant_by_localization(Family f, int d, Method m = Method::closed);

/// Per-locus contributions of the necessary loci in degree d.
std::vector<Contribution> contributions(Family f, int d, Method m);

/// Successive rewritings of the dD4 locus sum; every entry equals the invariant.
std::vector<Rational> dD4_resummation_stages(int d);
/// Same for D2 + dD4; d >= 1.
std::vector<Rational> D2_resummation_stages(int d);

}  // namespace qf2
