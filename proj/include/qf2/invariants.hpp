#pragma once

#include "qf2/localization.hpp"
#include "qf2/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace qf2 {

enum class Insertion { One, D1, D2, D3, D4, Pt };

std::string to_string(Insertion i);
/// "1", "D1".."D4", "pt"; throws std::invalid_argument.
Insertion parse_insertion(const std::string& s);
int codim(Insertion i);
/// Coordinates in the basis (1, D2, D4, pt).
Eigen::Vector4i basis_coords(Insertion i);

/// beta = a D2 + d D4 and an ordered pair of insertions.
struct InvariantKey {
    int a = 0;
    int d = 0;
    Insertion first = Insertion::One;
    Insertion second = Insertion::One;
};

/// Virtual dimension check: codim sum equals 1 + 2a.
bool dimension_valid(const InvariantKey& k);

/// closed: closed forms; localization: sum of closed per-locus values;
/// assembled: sum of factor-assembled loci evaluated at V = 0.
enum class InvariantSource { closed, localization, assembled };

std::string to_string(InvariantSource s);
InvariantSource parse_source(const std::string& s);

/// Closed forms on basis insertions, extended bilinearly; 0 off dimension,
/// for a >= 2, and for beta = 0.
Rational closed_invariant(const InvariantKey& k);

/// Same table, with the base values taken from the localization engine (memoized, thread-safe).
Rational localized_invariant(const InvariantKey& k, Method m = Method::closed);

Rational invariant(const InvariantKey& k, InvariantSource src);

struct InvariantRow {
    InvariantKey key;
    Rational value;
};

/// <D_i, 1> for dD4 (d = 1..d_max) or <D_i, pt> for D2 + dD4 (d = 0..d_max), i = 1..4.
std::vector<InvariantRow> invariant_table(Family f, int d_max, InvariantSource src = InvariantSource::closed);
/// Both families, dD4 first.
std::vector<InvariantRow> invariant_table(int d_max, InvariantSource src = InvariantSource::closed);

struct Report {
    bool ok = true;
    std::vector<std::string> lines;
    void check(bool pass, const std::string& what);
    void note(const std::string& what);
};

/// Divisor relations in both families and localization against closed forms.
Report verify_relations(int d_max);

}  // namespace qf2
