#ifndef SASAKI_SPECTRAL_HPP
#define SASAKI_SPECTRAL_HPP

#include <map>
#include <string>

#include "sasaki/curvature.hpp"

namespace sasaki {

struct Eigendecomposition {
  Vector values;   // ascending
  Matrix vectors;  // orthonormal columns
};

/// Full symmetric eigendecomposition; rejects non-symmetric input.
Eigendecomposition eigh(const SymOp& a, double sym_tol = 1e-9);

struct NamedFormResult {
  bool is_eigenform = false;
  double eigenvalue = 0.0;  // Rayleigh quotient
  double residual = 0.0;    // |A v - mu v| / |v|
};

struct SpectrumReport {
  std::vector<double> eigenvalues;                      // ascending
  std::vector<std::pair<double, int>> clusters;         // (mean value, multiplicity)
  std::map<std::string, NamedFormResult> distinguished; // named 2-forms
  CheckList checks;
};

/// Eigenvalues with multiplicities clustered at gap 1e-6.
SpectrumReport spectrum(const SymOp& a);

NamedFormResult residual_against(const SymOp& a, const PForm& form);

/// The six distinguished forms Phi_i - xi_jk (eigenvalue 2 alpha beta (n+2))
/// and Phi_i + (n+1) xi_jk (eigenvalue 0) against the canonical operator.
SpectrumReport verify_canonical_eigenforms(const CurvatureSuite& suite,
                                           const PointModel& model);

enum class EinsteinKind { DeltaEqualsAlpha, DeltaEquals2nPlus3Alpha, NotEinstein };

struct EinsteinClassification {
  EinsteinKind kind = EinsteinKind::NotEinstein;
  double lambda = 0.0;    // common eigenvalue in the 3-alpha-Sasaki case
  double lambda1 = 0.0;   // Phi_i - xi_jk eigenvalue in the second case
  double lambda2 = 0.0;   // Phi_i + (n+1) xi_jk eigenvalue in the second case
};

EinsteinClassification einstein_classify(const Params& params);
std::string to_string(EinsteinKind k);

/// Coefficients of Rg on the distinguished pairs and the closed forms whose
/// vanishing characterizes the Einstein condition.
struct EinsteinEquivalenceReport {
  double a = 0, b = 0, a_prime = 0, b_prime = 0;
  double a_plus_b = 0;                  // 2(delta-alpha){alpha(2n+3)-delta}
  double combo_prime = 0;               // (n+1)a' - b', = n(delta-alpha){alpha(2n+3)-delta}
  NamedFormResult first_triple;         // Phi_i - xi_jk against Rg
  NamedFormResult second_triple;        // Phi_i + (n+1) xi_jk against Rg
  CheckList checks;
};

EinsteinEquivalenceReport verify_einstein_equivalence(const CurvatureSuite& suite,
                                                      const PointModel& model);

/// Max elementwise distance of two sorted multisets (inf if sizes differ).
double multiset_distance(std::vector<double> a, std::vector<double> b);

}  // namespace sasaki

#endif
