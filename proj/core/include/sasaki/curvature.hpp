#ifndef SASAKI_CURVATURE_HPP
#define SASAKI_CURVATURE_HPP

#include <optional>

#include "sasaki/structure.hpp"
#include "sasaki/torsion.hpp"

namespace sasaki {

/// Every curvature operator of the model. Operators on the full 2-form space
/// use the full lexicographic pair basis; RgN, R0, R1 live on the horizontal
/// pair basis (dimension C(4n,2)).
struct CurvatureSuite {
  SymOp Rperp;   // rank 3, eigenvalue 2(n+2) on span{Phi_i - xi_jk}
  SymOp Rpar;    // zero outside Lambda^2 H
  SymOp Rcan;    // canonical curvature operator, alpha beta Rperp + Rpar
  SymOp R0;      // HP^n model operator on Lambda^2 H
  SymOp R1;      // hyper-Kaehler-type input (default zero)
  SymOp RgN;     // base curvature operator, 4 alpha delta R0 + R1
  SymOp GT;      // torsion Gram operator
  SymOp ST;      // operator of sigma_T
  SymOp Rg;      // Riemannian operator, Rcan + GT/4 + ST/4
  double nu_scal = 0.0;  // reduced scalar curvature 4 alpha delta
};

/// Local <-> global bookkeeping for the horizontal pair basis.
std::vector<int> horizontal_pair_ranks(int n);
SymOp embed_horizontal(const SymOp& h, int dim);
SymOp restrict_horizontal(const SymOp& full, int n);
PForm horizontal_two_form(const PointModel& model, const PForm& full);

SymOp operator_R_perp(const PointModel& model);

/// HP^n-model operator (g kn g + sum Phi kn Phi + 4 sum Phi (x) Phi)/8 on
/// the horizontal pair basis.
SymOp operator_R0(const PointModel& model);

/// Hyper-Kaehler-type invariants of a candidate R1 (symmetric, annihilates
/// the Phi_i^H, commutes with the induced phi_i action, Ricci-flat).
CheckList validate_hyperkaehler_type(const PointModel& model, const SymOp& r1);

/// Throws with the first failed invariant if r1 is not of hyper-Kaehler type.
SymOp operator_RgN(const PointModel& model, const SymOp& r1);

SymOp operator_R_par(const PointModel& model, const SymOp& r1);

/// Alternative route (alpha delta / 2)(g kn g + sum Phi kn Phi) + R1,
/// shipped for cross-checking.
SymOp operator_R_par_kn_route(const PointModel& model, const SymOp& r1);

SymOp operator_R(const PointModel& model, const SymOp& r1);
SymOp operator_Rg(const PointModel& model, const SymOp& r1);

/// Ricci tensor contracted from a curvature operator,
/// Ric(e_a, e_b) = sum_r <op(e_a ^ e_r), e_b ^ e_r>.
Matrix ricci_from_operator(const SymOp& rg, int dim);

/// Closed form of the Riemannian Ricci tensor.
Matrix ricci_closed_form(const PointModel& model);

/// Tensor-level identities of the canonical curvature (vanishing blocks,
/// vertical values, phi commutation, the quaternionic 2-plane identity and
/// the first Bianchi identity with right side sigma_T).
CheckList curvature_tensor_identities(const PointModel& model, const SymOp& rcan,
                                      unsigned rng_seed = 12345);

CurvatureSuite build_curvature_suite(const PointModel& model,
                                     const std::optional<SymOp>& r1 = std::nullopt);

}  // namespace sasaki

#endif
