#pragma once

#include "qf2/invariants.hpp"
#include "qf2/quantum_module.hpp"

#include <map>
#include <string>
#include <utility>

namespace qf2 {

/// Polynomial in x2, x4 with series coefficients, keyed by (deg x2, deg x4).
using BatPoly = std::map<std::pair<int, int>, Series>;

BatPoly bat_monomial(int a, int b, const Series& c);
BatPoly operator+(const BatPoly& p, const BatPoly& q);
BatPoly operator-(const BatPoly& p, const BatPoly& q);
BatPoly operator*(const BatPoly& p, const BatPoly& q);

/// Coordinates in the Nakayama basis (1, x2, x4, x2x4).
struct BatElement {
    SeriesVector coeffs;

    static BatElement zero(int order);
    BatPoly to_poly() const;
    std::string str() const;
    friend bool operator==(const BatElement& a, const BatElement& b) { return equal(a.coeffs, b.coeffs); }
};

/// Reduction by x2^2 x4 -> q2q4(1-4q4)^{-1}(x4 - 2x2), x2^2 -> q2q4 - 2q4x2x4, x4^2 -> q2 - 2x2x4.
BatElement normal_form(const BatPoly& p, int order);

/// Multiplication by x2 (sigma2) or x4 (sigma4) on the Nakayama basis.
SeriesMatrix bat_action_matrix(Generator k, int order);

/// The isomorphism onto the quantum module in the bases (1, x2, x4, x2x4) -> (1, D2, D4, pt).
SeriesMatrix phi_matrix(int order);
/// Columns 1, sigma2*1, sigma4*1, sigma2*(sigma4*1) computed from the star matrices.
SeriesMatrix phi_from_definition(int order, InvariantSource src = InvariantSource::closed);

/// Laplace expansion; no division, so exact over series.
Series determinant(const SeriesMatrix& m);

Report verify_isomorphism(int order, InvariantSource src = InvariantSource::closed);

}  // namespace qf2
