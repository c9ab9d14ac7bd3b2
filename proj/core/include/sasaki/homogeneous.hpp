#ifndef SASAKI_HOMOGENEOUS_HPP
#define SASAKI_HOMOGENEOUS_HPP

#include <string>

#include "sasaki/structure.hpp"

namespace sasaki {

/// Structure-constant triple c_{ij}^k: [x_i, x_j] = sum_k c * x_k.
struct BracketTriple {
  int i = 0, j = 0, k = 0;
  double c = 0.0;
};

/// A real Lie algebra with a marked reductive split g = h (+) m,
/// m = sp(1) (+) g_1, carrying the block-scaled invariant metric. The basis
/// is ordered sp(1) (3), then g_1 (4n), then h, so the m part occupies the
/// leading 4n+3 coordinates.
struct LieModel {
  std::string name;
  int dim_g = 0;
  std::vector<Matrix> ad;  // ad(x_i), one per basis element
  std::vector<int> sp1_indices, g1_indices, h_indices;
  Matrix killing;
  Params params;
  Matrix metric;              // Gram matrix on the m coordinates (dim 4n+3)
  std::array<Vector, 3> xi;   // m coordinates of xi_i = delta sigma_i
  std::array<Matrix, 3> phi;  // phi_i on m: ad(xi_i)/(2 delta) on V, /delta on H

  int dim_m() const { return 4 * params.n + 3; }
  Vector bracket(const Vector& u, const Vector& v) const;  // full-g coordinates
  Vector project_m(const Vector& g_vec) const;             // leading coordinates
  Vector embed_m(const Vector& m_vec) const;
};

/// kappa(x_i, x_j) = tr(ad x_i . ad x_j).
Matrix killing_form(const std::vector<Matrix>& ad);

/// The Sp(n+1)/Sp(n) family (the sphere S^{4n+3}); requires alpha delta > 0.
LieModel build_sp_model(int n, double alpha, double delta);

/// Assemble a LieModel from raw structure constants and index sets;
/// validates the generalized data conditions and the metric signs.
LieModel make_lie_model(int dim, const std::vector<BracketTriple>& triples,
                        std::vector<int> sp1, std::vector<int> g1, std::vector<int> h,
                        double alpha, double delta, std::string name = "custom");

/// Jacobi, symmetric pair, commuting h and sp(1), quaternionic sp(1)-action,
/// Killing ad-invariance, metric sign constraints.
CheckList validate_generalized_data(const LieModel& lm);

/// Manifold-level identities evaluated on invariant tensors at the origin:
/// d eta_i = 2 alpha Phi_i + 2(alpha-delta) eta_j ^ eta_k, Reeb commutators,
/// vertical commutator parts, and the infinitesimal isometry of h on g_1.
CheckList verify_homogeneous_identities(const LieModel& lm);

/// Orthonormalize m into an adapted frame and export the pointwise model;
/// refuses if the homogeneous identities fail.
PointModel pointwise_of(const LieModel& lm);

}  // namespace sasaki

#endif
