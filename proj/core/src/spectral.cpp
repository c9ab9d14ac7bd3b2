#include "sasaki/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sasaki {

Eigendecomposition eigh(const SymOp& a, double sym_tol) {
  const double asym = (a.mat - a.mat.transpose()).cwiseAbs().maxCoeff();
  if (asym > sym_tol) throw std::invalid_argument("eigh: input operator not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: solver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SpectrumReport spectrum(const SymOp& a) {
  constexpr double kClusterGap = 1e-6;
  SpectrumReport r;
  const auto dec = eigh(a);
  r.eigenvalues.assign(dec.values.data(), dec.values.data() + dec.values.size());
  for (double v : r.eigenvalues) {
    if (!r.clusters.empty() && std::abs(v - r.clusters.back().first) < kClusterGap) {
      auto& [mean, count] = r.clusters.back();
      mean = (mean * count + v) / (count + 1);
      ++count;
    } else {
      r.clusters.emplace_back(v, 1);
    }
  }
  return r;
}

NamedFormResult residual_against(const SymOp& a, const PForm& form) {
  NamedFormResult r;
  const Vector v = form.coeffs;
  const double nv2 = v.squaredNorm();
  if (nv2 == 0.0) throw std::invalid_argument("residual_against: zero form");
  const Vector av = a.mat * v;
  r.eigenvalue = v.dot(av) / nv2;
  r.residual = (av - r.eigenvalue * v).norm() / std::sqrt(nv2);
  r.is_eigenform = r.residual < 1e-8;
  return r;
}

SpectrumReport verify_canonical_eigenforms(const CurvatureSuite& suite,
                                           const PointModel& model) {
  SpectrumReport rep = spectrum(suite.Rcan);
  const int n = model.params.n;
  const double expected1 = 2.0 * model.params.alpha * model.params.beta() * (n + 2);
  const double scale = std::max(1.0, std::abs(expected1));

  std::vector<PForm> six;
  double v_eig1 = 0.0, v_eig2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const PForm minus = model.Phi[i] - model.xi_wedge[i];
    const PForm plus = model.Phi[i] + (double(n) + 1.0) * model.xi_wedge[i];
    auto r1 = residual_against(suite.Rcan, minus);
    auto r2 = residual_against(suite.Rcan, plus);
    v_eig1 = std::max({v_eig1, r1.residual, std::abs(r1.eigenvalue - expected1)});
    v_eig2 = std::max({v_eig2, r2.residual, std::abs(r2.eigenvalue)});
    rep.distinguished["Phi_" + std::to_string(i + 1) + "-xi_jk"] = r1;
    rep.distinguished["Phi_" + std::to_string(i + 1) + "+(n+1)xi_jk"] = r2;
    six.push_back(minus);
    six.push_back(plus);
  }
  rep.checks.push_back({"eigenvalue_2ab(n+2)_triple", v_eig1, 1e-8 * scale});
  rep.checks.push_back({"kernel_triple", v_eig2, 1e-8 * scale});

  double v_orth = 0.0;
  for (std::size_t i = 0; i < six.size(); ++i)
    for (std::size_t j = i + 1; j < six.size(); ++j)
      v_orth = std::max(v_orth, std::abs(inner(six[i], six[j])));
  rep.checks.push_back({"six_forms_pairwise_orthogonal", v_orth, 1e-10});
  return rep;
}

EinsteinClassification einstein_classify(const Params& p) {
  EinsteinClassification c;
  const double scale = std::max({1.0, std::abs(p.alpha), std::abs(p.delta)});
  const double tol = 1e-9 * scale;
  const double a2 = p.alpha * p.alpha;
  const int n = p.n;
  if (std::abs(p.delta - p.alpha) < tol) {
    c.kind = EinsteinKind::DeltaEqualsAlpha;
    c.lambda = a2;
    c.lambda1 = a2;
    c.lambda2 = a2;
  } else if (std::abs(p.delta - (2 * n + 3) * p.alpha) < tol) {
    c.kind = EinsteinKind::DeltaEquals2nPlus3Alpha;
    c.lambda1 = a2 * (8.0 * n * n + 16.0 * n + 9.0);
    c.lambda2 = a2 * (2.0 * n + 1.0) * (2.0 * n + 1.0);
  }
  return c;
}

std::string to_string(EinsteinKind k) {
  switch (k) {
    case EinsteinKind::DeltaEqualsAlpha: return "Einstein_delta_eq_alpha";
    case EinsteinKind::DeltaEquals2nPlus3Alpha: return "Einstein_delta_eq_(2n+3)alpha";
    default: return "NotEinstein";
  }
}

EinsteinEquivalenceReport verify_einstein_equivalence(const CurvatureSuite& suite,
                                                      const PointModel& model) {
  EinsteinEquivalenceReport rep;
  const Params& p = model.params;
  const int n = p.n;
  const double scale = std::max({1.0, p.alpha * p.alpha, p.delta * p.delta});

  // coefficients in the (non-orthogonal) basis {Phi_i, xi_jk}; Gram matrix
  // [[2n+1, -1], [-1, 1]]
  Eigen::Matrix2d gram;
  gram << 2.0 * n + 1.0, -1.0, -1.0, 1.0;
  const Eigen::Matrix2d gram_inv = gram.inverse();

  double v_span = 0.0, v_ab = 0.0, v_combo = 0.0, v_consistent = 0.0;
  for (int i = 0; i < 3; ++i) {
    const PForm minus = model.Phi[i] - model.xi_wedge[i];
    const PForm plus = model.Phi[i] + (double(n) + 1.0) * model.xi_wedge[i];

    const Vector w1 = suite.Rg.mat * minus.coeffs;
    const Vector w2 = suite.Rg.mat * plus.coeffs;
    Eigen::Vector2d rhs1(w1.dot(model.Phi[i].coeffs), w1.dot(model.xi_wedge[i].coeffs));
    Eigen::Vector2d rhs2(w2.dot(model.Phi[i].coeffs), w2.dot(model.xi_wedge[i].coeffs));
    const Eigen::Vector2d c1 = gram_inv * rhs1;
    const Eigen::Vector2d c2 = gram_inv * rhs2;
    rep.a = c1[0];
    rep.b = c1[1];
    rep.a_prime = c2[0];
    rep.b_prime = c2[1];

    // Rg(Phi_i - xi_jk) must stay inside span{Phi_i, xi_jk}
    v_span = std::max(
        v_span,
        (w1 - c1[0] * model.Phi[i].coeffs - c1[1] * model.xi_wedge[i].coeffs).norm());
    v_span = std::max(
        v_span,
        (w2 - c2[0] * model.Phi[i].coeffs - c2[1] * model.xi_wedge[i].coeffs).norm());

    const double closed = 2.0 * (p.delta - p.alpha) * (p.alpha * (2 * n + 3) - p.delta);
    v_ab = std::max(v_ab, std::abs((c1[0] + c1[1]) - closed));
    v_combo = std::max(v_combo, std::abs(((n + 1) * c2[0] - c2[1]) - double(n) / 2.0 * closed));

    const auto r1 = residual_against(suite.Rg, minus);
    const auto r2 = residual_against(suite.Rg, plus);
    if (i == 0) {
      rep.first_triple = r1;
      rep.second_triple = r2;
    }
    // eigenform status must match the vanishing of the closed forms
    const bool vanish = std::abs(closed) < 1e-7 * scale;
    v_consistent = std::max(v_consistent, (r1.is_eigenform == vanish) ? 0.0 : 1.0);
    v_consistent = std::max(v_consistent, (r2.is_eigenform == vanish) ? 0.0 : 1.0);
  }
  rep.a_plus_b = rep.a + rep.b;
  rep.combo_prime = (n + 1) * rep.a_prime - rep.b_prime;

  rep.checks.push_back({"Rg_preserves_span_Phi_xi", v_span, 1e-9 * scale});
  rep.checks.push_back({"a_plus_b_closed_form", v_ab, 1e-9 * scale});
  rep.checks.push_back({"(n+1)a'-b'_closed_form", v_combo, 1e-9 * scale});
  rep.checks.push_back({"eigenform_iff_vanishing", v_consistent, 0.5});
  return rep;
}

double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace sasaki
