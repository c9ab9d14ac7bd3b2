#ifndef SASAKI_STRUCTURE_HPP
#define SASAKI_STRUCTURE_HPP

#include <array>

#include "sasaki/forms.hpp"
#include "sasaki/report.hpp"

namespace sasaki {

/// The defining parameter triple (n, alpha, delta), with beta = 2(delta-2alpha)
/// derived. dim M = 4n+3.
struct Params {
  int n = 1;
  double alpha = 1.0;
  double delta = 1.0;

  Params() = default;
  Params(int n_, double alpha_, double delta_);

  double beta() const { return 2.0 * (delta - 2.0 * alpha); }
  int dim() const { return 4 * n + 3; }

  bool degenerate() const { return delta == 0.0; }
  bool positive() const { return alpha * delta > 0.0; }
  bool negative() const { return alpha * delta < 0.0; }
  bool parallel() const { return delta == 2.0 * alpha; }
};

/// Pointwise algebraic model in an adapted orthonormal frame:
/// e_0,e_1,e_2 vertical (the Reeb directions), then n quaternionic blocks
/// H_l = span{e_{4l+3-4},...}; on each block phi_i e_base = e_{base+i}.
struct PointModel {
  Params params;
  int dim = 0;
  std::array<Matrix, 3> phi;       // phi_i as matrices, columns = images
  std::array<Vector, 3> xi;        // unit Reeb vectors
  std::array<Vector, 3> eta;       // dual covectors (equal to xi here)
  std::array<PForm, 3> Phi;        // fundamental 2-forms Phi_i(X,Y) = g(X, phi_i Y)
  std::array<PForm, 3> PhiH;       // horizontal parts Phi_i + xi_j ^ xi_k
  std::array<PForm, 3> xi_wedge;   // xi_j ^ xi_k for the even permutation (i j k)

  bool is_vertical_index(int r) const { return r < 3; }
  int horizontal_dim() const { return dim - 3; }
};

/// Orthogonal decomposition Lambda^2 = Lambda^2_1 (+) Lambda^2_2 (+) Lambda^2_3.
/// Columns are orthonormal coefficient vectors in the full 2-form basis;
/// basis1 is ordered [Phi_1^H/sqrt(2n), xi_23, Phi_2^H/sqrt(2n), xi_31, ...]
/// so each N_i occupies a consecutive 2x2 block.
struct Lambda2Split {
  Matrix basis1;  // N x 6
  Matrix basis2;  // N x (6n-3 + 16 C(n,2))
  Matrix basis3;  // N x 12n
  std::vector<int> horizontal_pairs;  // full-basis ranks of Lambda^2 H
};

PointModel build_point_model(const Params& params);

Lambda2Split lambda2_split(const PointModel& model);

/// Max violation of every compatibility/normalization identity of the
/// almost 3-contact metric structure; all must be < 1e-10 on a valid model.
CheckList check_structure_axioms(const PointModel& model);

/// Derivation action of an endomorphism on 2-form coefficients,
/// a.(X^Y) = aX^Y + X^aY. Skew-adjoint for skew a, so not a SymOp.
Matrix induced_two_form_action(const Matrix& a);

}  // namespace sasaki

#endif
