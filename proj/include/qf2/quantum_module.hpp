#pragma once

#include "qf2/invariants.hpp"
#include "qf2/series.hpp"

#include <Eigen/Core>

#include <array>
#include <string>
#include <vector>

namespace qf2 {

using SeriesMatrix = Eigen::Matrix<Series, 4, 4>;
using SeriesVector = Eigen::Matrix<Series, 4, 1>;

// Eigen's operators on these types pull Boost.Multiprecision's operator templates in by ADL,
// whose constraints do not compile under C++20, so arithmetic goes through these helpers.
SeriesMatrix mul(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesVector mul(const SeriesMatrix& a, const SeriesVector& v);
SeriesMatrix mul(const SeriesMatrix& a, const Series& s);
SeriesVector mul(const SeriesVector& v, const Series& s);
SeriesMatrix add(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix sub(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesVector add(const SeriesVector& a, const SeriesVector& b);
SeriesVector sub(const SeriesVector& a, const SeriesVector& b);
bool equal(const SeriesMatrix& a, const SeriesMatrix& b);
bool equal(const SeriesVector& a, const SeriesVector& b);

enum class Generator { sigma2, sigma4 };

std::string to_string(Generator k);
/// Basis names "1", "D2", "D4", "pt".
const std::array<std::string, 4>& basis_names();

struct PairingData {
    Eigen::Matrix4i g;
    /// Column i holds the dual of T_i.
    Eigen::Matrix4i duals;
};

PairingData pairing_and_dual();

/// Entries set to zero at order N.
SeriesMatrix zero_matrix(int order);
SeriesMatrix identity_matrix(int order);
SeriesVector unit_vector(int i, int order);

/// Cup product with D2 or D4.
SeriesMatrix classical_matrix(Generator k, int order);

/// Action of sigma_k assembled from two-point invariants; columns are sigma_k * T_j.
SeriesMatrix star_matrix(Generator k, int order, InvariantSource src = InvariantSource::closed);

enum class FFactor { none, f, one_plus_f };

/// coef * q2^a q4^b * factor * T_basis
struct TableTerm {
    Rational coef;
    int q2 = 0;
    int q4 = 0;
    FFactor factor = FFactor::none;
    int basis = 0;
};

/// Closed-form table entry sigma_k * T_j as a list of terms.
const std::vector<TableTerm>& table_entry(Generator k, int j);

/// Entry with f expanded to the given order, e.g. "D2 - 1/2*(2*q4 + 6*q4^2)*D4".
std::string format_table_entry(Generator k, int j, int order);

/// The closed-form module table as matrices.
SeriesMatrix table_matrix(Generator k, int order);

/// Classical part of a series matrix (q2 = q4 = 0).
Eigen::Matrix4i constant_part(const SeriesMatrix& m);

/// "(1 + f)*pt" style rendering of one class, f expanded.
std::string format_class(const SeriesVector& v);

Report verify_table(int order, InvariantSource src = InvariantSource::closed);
Report verify_module_axiom(int order, InvariantSource src = InvariantSource::closed);
Report verify_quantum_relations(int order, InvariantSource src = InvariantSource::closed);

}  // namespace qf2
