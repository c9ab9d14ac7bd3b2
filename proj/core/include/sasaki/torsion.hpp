#ifndef SASAKI_TORSION_HPP
#define SASAKI_TORSION_HPP

#include "sasaki/structure.hpp"

namespace sasaki {

/// Torsion of the canonical connection as a 3-form, and everything built
/// quadratically from it.
struct TorsionPackage {
  PForm T3;      // torsion 3-form
  PForm sigmaT;  // the 4-form sigma_T
  PForm dT;      // exterior derivative of T; equals 2 sigma_T
  SymOp GT;      // <G_T(X^Y), Z^V> = g(T(X,Y), T(Z,V)), positive semidefinite
  SymOp ST;      // operator of sigma_T
};

/// T = 2 alpha sum_i eta_i ^ Phi_i - 2(alpha - delta) eta_123.
PForm torsion_three_form(const PointModel& model);

/// T(X,Y) as a vector, g(T(X,Y), Z) = T3(X,Y,Z).
Vector torsion_map(const PointModel& model, const Vector& x, const Vector& y);

/// Independent route: the pointwise expansion of T(X,Y) in terms of the
/// structure tensors (used to cross-check the 3-form contraction).
Vector torsion_map_formula(const PointModel& model, const Vector& x, const Vector& y);

/// Columns are T(e_a, e_b) over lexicographic frame pairs.
Matrix torsion_frame_table(const PointModel& model);

/// sigma_T(X,Y,Z,V) = g(T(X,Y),T(Z,V)) + g(T(Y,Z),T(X,V)) + g(T(Z,X),T(Y,V)),
/// assembled over all frame 4-tuples from a torsion column table.
PForm sigma_from_table(const Matrix& table, int dim);
PForm sigma_T(const PointModel& model);

/// Both closed-form lines of dT; they must agree and equal 2 sigma_T.
PForm dT_fourform(const PointModel& model);
PForm dT_fourform_horizontal_route(const PointModel& model);

SymOp operator_G_T(const PointModel& model);
SymOp operator_S_T(const PointModel& model);

TorsionPackage build_torsion_package(const PointModel& model);

}  // namespace sasaki

#endif
