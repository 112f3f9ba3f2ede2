#pragma once

#include "qf2/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qf2 {

/// Complete 2D fan: primitive rays and maximal cones as index pairs.
struct Fan {
    std::vector<Eigen::Vector2i> rays;
    std::vector<std::array<int, 2>> max_cones;
};

/// Rays (-1,2), (1,0), (0,-1), (0,1); cones {2,4}, {4,1}, {1,3}, {3,2} (1-based).
Fan f2_fan();
Fan p2_fan();
Fan p1xp1_fan();

/// Empty when the fan is primitive, smooth and complete.
std::vector<std::string> validate_fan(const Fan& fan);

/// Throws std::invalid_argument listing the violations.
void require_valid(const Fan& fan);

struct PrimitiveCollection {
    std::vector<int> rays;
    /// Coefficient of each ray in sum_{P} v - sum_j c_j v_j = 0; empty until filled.
    std::vector<int> relation;
    /// beta_P in the Pic basis of the class matrix; empty until filled.
    std::vector<int> beta;
};

/// Ray subsets only, by brute force over all subsets.
std::vector<PrimitiveCollection> primitive_collections(const Fan& fan);

/// Whether the ray set lies in some cone of the fan (faces included).
bool in_some_cone(const Fan& fan, const std::vector<int>& rays);

struct ClassMatrix {
    Eigen::MatrixXi entries;       // rank Pic x #rays
    std::vector<int> basis_rays;   // rays whose divisors form the basis
};

/// Maximal cone with the lexicographically smallest sorted index pair.
int default_basis_cone(const Fan& fan);

/// Divisor classes in the basis of rays outside `basis_cone`.
ClassMatrix class_matrix(const Fan& fan, int basis_cone);
ClassMatrix class_matrix(const Fan& fan);

/// (<m, v_rho>)_rho for m = e1, e2, as the two rows of a matrix.
Eigen::MatrixXi character_rows(const Fan& fan);

/// D_rho . D_tau on the toric surface.
Eigen::MatrixXi intersection_matrix(const Fan& fan);

/// Fills relation and beta for a primitive collection.
PrimitiveCollection primitive_relation(const Fan& fan, const std::vector<int>& rays, const ClassMatrix& cm);
PrimitiveCollection primitive_relation(const Fan& fan, const std::vector<int>& rays);

/// Weight of O(D_rho) at the fixed point of a maximal cone, as coefficients of alpha_1..alpha_n.
Eigen::VectorXi fixed_point_weight(const Fan& fan, const ClassMatrix& cm, int cone, int rho);

/// Polynomial in ray variables x_i with coefficients in Z[q], q indexed by the Pic basis.
struct NovikovPoly {
    /// (x exponents over all rays, q exponents over the basis) -> coefficient
    std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> terms;

    NovikovPoly& operator+=(const NovikovPoly& o);
    friend NovikovPoly operator+(NovikovPoly a, const NovikovPoly& b) { return a += b; }
    friend NovikovPoly operator*(const NovikovPoly& a, const NovikovPoly& b);
    friend NovikovPoly operator-(const NovikovPoly& a, const NovikovPoly& b);
    friend bool operator==(const NovikovPoly&, const NovikovPoly&) = default;

    static NovikovPoly x(int n_rays, int n_basis, int ray);
    static NovikovPoly q(int n_rays, int n_basis, const std::vector<int>& beta);
    static NovikovPoly constant(int n_rays, int n_basis, long c);

    /// Variables x<ray+1>, q<basis ray+1>; terms in a fixed deterministic order.
    std::string str(const std::vector<int>& basis_rays) const;
};

struct QuantumSRGenerator {
    std::vector<int> rays;            // x^P
    std::vector<int> beta;            // q^{beta_P}
    std::vector<int> cone_exponents;  // c_j per ray
};

struct BatyrevGenerators {
    std::vector<Eigen::VectorXi> linear;
    std::vector<QuantumSRGenerator> quantum_sr;
};

BatyrevGenerators batyrev_generators(const Fan& fan, const ClassMatrix& cm);

NovikovPoly linear_generator_poly(const Eigen::VectorXi& coeffs, int n_basis);
NovikovPoly quantum_sr_poly(const QuantumSRGenerator& g, int n_rays, int n_basis);

/// Quantum SR generators after eliminating the non-basis variables with the class matrix.
std::vector<NovikovPoly> batyrev_presentation(const Fan& fan, const ClassMatrix& cm);

/// Cup products and Poincare pairing of H*(F2) in the basis (1, D2, D4, pt).
struct Cohomology {
    /// cup[i][j] = T_i . T_j in the basis
    std::array<std::array<Eigen::Vector4i, 4>, 4> cup;
    Eigen::Matrix4i pairing;
};

Cohomology f2_cohomology();

}  // namespace qf2
