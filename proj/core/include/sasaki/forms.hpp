#ifndef SASAKI_FORMS_HPP
#define SASAKI_FORMS_HPP

#include <Eigen/Dense>

#include "sasaki/combinatorics.hpp"

namespace sasaki {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Shared multi-index tables, keyed by (dim, degree). Thread-safe.
const MultiIndexSet& multi_index_set(int dim, int degree);

/// A p-form (p in {1,...,4}) on an oriented orthonormal frame of R^dim,
/// stored as the coefficient vector over lexicographic multi-indices.
/// The coefficient at multi-index (i1<...<ip) is the evaluation on
/// (e_{i1},...,e_{ip}); with an orthonormal frame that basis is orthonormal.
struct PForm {
  int degree = 0;
  int dim = 0;
  Vector coeffs;

  PForm() = default;
  PForm(int degree_, int dim_);

  /// unit coefficient on one basis multi-index (must be strictly increasing)
  static PForm basis(int degree, int dim, std::initializer_list<int> idx);

  double norm() const { return coeffs.norm(); }
};

PForm operator+(const PForm& a, const PForm& b);
PForm operator-(const PForm& a, const PForm& b);
PForm operator*(double s, const PForm& a);

/// Exterior product with shuffle signs; degree of the result capped at 4.
PForm wedge(const PForm& a, const PForm& b);

/// Gram-determinant inner product; reduces to the coefficient dot product
/// in an orthonormal frame.
double inner(const PForm& a, const PForm& b);

/// Interior product (contraction in the first slot).
PForm interior(const Vector& x, const PForm& w);

/// Evaluate a p-form on p vectors.
double evaluate(const PForm& w, const std::vector<Vector>& args);

/// e_a ^ e_b for arbitrary a != b (signed if a > b).
PForm wedge_pair(int dim, int a, int b);

PForm two_form_from_matrix(const Matrix& a);   // antisymmetric matrix
Matrix matrix_from_two_form(const PForm& w);

/// Symmetric operator on the coefficient space of 2-forms.
struct SymOp {
  Matrix mat;

  int dim2() const { return static_cast<int>(mat.rows()); }

  static SymOp zero(int n) { return SymOp{Matrix::Zero(n, n)}; }
  static SymOp identity(int n) { return SymOp{Matrix::Identity(n, n)}; }

  /// Symmetrize an assembled matrix; rejects asymmetry above tolerance.
  static SymOp from_assembled(Matrix m, double tol = 1e-12);

  PForm apply(const PForm& w) const;
  double max_abs() const { return mat.size() ? mat.cwiseAbs().maxCoeff() : 0.0; }
};

SymOp operator+(const SymOp& a, const SymOp& b);
SymOp operator-(const SymOp& a, const SymOp& b);
SymOp operator*(double s, const SymOp& a);

/// Rank-one operator w (x) w.
SymOp outer(const PForm& w);

/// The symmetric operator of a 4-form: <op(alpha), beta> = <omega, alpha^beta>.
SymOp fourform_as_operator(const PForm& omega);

/// Raw Bianchi map of a symmetric operator, b(O)(X,Y,Z,V) =
/// O(X,Y,Z,V) + O(Y,Z,X,V) + O(Z,X,Y,V), returned as a 4-form.
PForm bianchi_image(const SymOp& op, int dim);

struct BianchiSplit {
  SymOp curvature_part;  // in ker b
  PForm fourform_part;   // omega with op = curvature_part + op(omega)
};

/// Orthogonal splitting S(Lambda^2) = ker b (+) Lambda^4.
BianchiSplit bianchi_split(const SymOp& op, int dim);

/// Kulkarni-Nomizu product of two bilinear forms as an operator on 2-form
/// coefficients. Both arguments must be symmetric, or both antisymmetric
/// (2-forms as matrices). The normalization is pinned by the calibration
/// (g (kn) g + sum_i Phi_i^H (kn) Phi_i^H)(Phi_i^H) = 0 on the horizontal
/// block; see the exterior-algebra tests.
SymOp kulkarni_nomizu_operator(const Matrix& h, const Matrix& k);

/// B^T A B for an orthonormal column basis B.
Matrix conjugate(const SymOp& a, const Matrix& basis);

/// <op(e_a ^ e_b), e_c ^ e_d> for arbitrary index order; 0 on repeated indices.
double op_tensor_entry(const SymOp& op, int dim, int a, int b, int c, int d);

}  // namespace sasaki

#endif
