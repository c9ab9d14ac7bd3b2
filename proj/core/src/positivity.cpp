#include "sasaki/positivity.hpp"

#include <cmath>
#include <stdexcept>

namespace sasaki {

AdaptedFourForm make_adapted(const PForm& omega, const PointModel& model) {
  if (omega.degree != 4 || omega.dim != model.dim)
    throw std::invalid_argument("make_adapted: expected a 4-form on the model frame");
  AdaptedFourForm a;
  a.omega = omega;
  const SymOp full = fourform_as_operator(omega);
  const SymOp on_h = restrict_horizontal(full, model.params.n);

  double q_sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto r = residual_against(on_h, horizontal_two_form(model, model.PhiH[i]));
    a.q_residual = std::max(a.q_residual, r.residual);
    q_sum += r.eigenvalue;
  }
  a.q_eigenvalue = q_sum / 3.0;
  for (int i = 0; i < 3; ++i) {
    const auto r = residual_against(on_h, horizontal_two_form(model, model.PhiH[i]));
    a.q_residual = std::max(a.q_residual, std::abs(r.eigenvalue - a.q_eigenvalue));
  }
  if (a.q_residual > 1e-9)
    throw std::invalid_argument(
        "make_adapted: span{Phi_i^H} is not a common eigenspace of the 4-form");
  a.nu_min = eigh(on_h).values.minCoeff();
  return a;
}

BlockDecomposition block_decompose(const SymOp& a, const Lambda2Split& split) {
  BlockDecomposition d;
  d.b1 = conjugate(a, split.basis1);
  d.b2 = conjugate(a, split.basis2);
  d.b3 = conjugate(a, split.basis3);
  const Matrix c12 = split.basis1.transpose() * a.mat * split.basis2;
  const Matrix c13 = split.basis1.transpose() * a.mat * split.basis3;
  const Matrix c23 = split.basis2.transpose() * a.mat * split.basis3;
  d.offblock_norm = 0.0;
  for (const Matrix* m : {&c12, &c13, &c23})
    if (m->size()) d.offblock_norm = std::max(d.offblock_norm, m->cwiseAbs().maxCoeff());
  return d;
}

Matrix ni_block(const Params& p, double nu_p) {
  const double a = p.alpha, dl = p.delta;
  const double n = p.n;
  Matrix m(2, 2);
  m(0, 0) = 2.0 * n * a * (2.0 * dl - 3.0 * a) + nu_p;
  m(0, 1) = -std::sqrt(2.0 * n) * a * (3.0 * dl - 4.0 * a);
  m(1, 0) = m(0, 1);
  m(1, 1) = dl * dl;
  return m;
}

CisbigResult cisbig_check(const Params& p, double nu) {
  CisbigResult r;
  const double a = p.alpha, dl = p.delta;
  const double n = p.n;
  r.trace_poly = dl * dl + 4.0 * n * a * dl - 6.0 * n * a * a + nu;
  const double dm2a = dl - 2.0 * a;
  r.det_poly = 4.0 * n * a * dm2a * dm2a * dm2a + dl * dl * nu;
  r.trace_positive = r.trace_poly > 0.0;
  r.det_positive = r.det_poly > 0.0;
  r.delta_gt_2alpha = dl > 2.0 * a;
  return r;
}

std::string to_string(ModifierKind k) {
  switch (k) {
    case ModifierKind::none: return "none";
    case ModifierKind::sigma_only: return "sigma_only";
    case ModifierKind::sphere_like: return "sphere_like";
    default: return "custom";
  }
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::strongly_positive: return "strongly_positive";
    case CertificateKind::strongly_nonnegative: return "strongly_nonnegative";
    default: return "fail";
  }
}

PForm canonical_modifier(const PointModel& model, ModifierKind kind, double epsilon) {
  if (epsilon < 0.0) throw std::invalid_argument("canonical_modifier: epsilon >= 0 required");
  if (kind == ModifierKind::none) return PForm(4, model.dim);
  PForm w = (-(0.25 + epsilon)) * sigma_T(model);
  if (kind == ModifierKind::sphere_like) {
    const double ad = model.params.alpha * model.params.delta;
    for (int i = 0; i < 3; ++i)
      w = w + (0.25 * ad) * wedge(model.PhiH[i], model.PhiH[i]);
  } else if (kind != ModifierKind::sigma_only) {
    throw std::invalid_argument("canonical_modifier: custom forms are supplied by the caller");
  }
  return w;
}

PositivityCertificate certify(const CurvatureSuite& suite, const PointModel& model,
                              const PForm& modifier, ModifierKind kind, double epsilon) {
  PositivityCertificate cert;
  cert.modifier = kind;
  cert.epsilon = epsilon;

  const SymOp mod_op = fourform_as_operator(modifier);
  const SymOp m = suite.Rg + mod_op;
  const auto split = lambda2_split(model);
  const auto blocks = block_decompose(m, split);
  cert.offblock_coupling = blocks.offblock_norm;
  cert.block1_min = eigh(SymOp::from_assembled(blocks.b1, 1e-9)).values.minCoeff();
  cert.block2_min = eigh(SymOp::from_assembled(blocks.b2, 1e-9)).values.minCoeff();
  cert.block3_min = eigh(SymOp::from_assembled(blocks.b3, 1e-9)).values.minCoeff();
  for (int i = 0; i < 3; ++i) {
    const Matrix ni = blocks.b1.block<2, 2>(2 * i, 2 * i);
    cert.ni[i].trace = ni.trace();
    cert.ni[i].det = ni.determinant();
    cert.ni[i].lambda_min =
        0.5 * (ni.trace() - std::sqrt(std::max(0.0, ni.trace() * ni.trace() -
                                                         4.0 * ni.determinant())));
  }

  cert.lambda_min_modified = eigh(m).values.minCoeff();

  // modifiers never change sectional curvature: <omega(sigma), sigma> = 0
  const auto& mis2 = multi_index_set(model.dim, 2);
  for (int r = 0; r < mis2.size(); ++r)
    cert.frame_plane_omega_max =
        std::max(cert.frame_plane_omega_max, std::abs(mod_op.mat(r, r)));

  const double scale = std::max(1.0, suite.Rg.max_abs());
  if (cert.lambda_min_modified > 1e-9 * scale)
    cert.kind = CertificateKind::strongly_positive;
  else if (cert.lambda_min_modified > -1e-9)
    cert.kind = CertificateKind::strongly_nonnegative;
  else
    cert.kind = CertificateKind::fail;

  if (model.params.n == 1 && kind == ModifierKind::sigma_only)
    cert.notes.push_back(
        "7-dimensional base constants beyond the zero hyper-Kaehler part are "
        "unverified; only the self-dual/anti-self-dual block mechanics are covered");
  return cert;
}

double choose_epsilon(const CurvatureSuite& suite, const PointModel& model,
                      ModifierKind kind) {
  const double ab = model.params.alpha * model.params.beta();
  const double eps0 = std::abs(ab) / 10.0;
  if (eps0 == 0.0) return 0.0;
  const auto split = lambda2_split(model);
  const double scale = std::max(1.0, suite.Rg.max_abs());

  auto block_mins = [&](double eps) {
    const PForm w = canonical_modifier(model, kind, eps);
    const SymOp m = suite.Rg + fourform_as_operator(w);
    const auto blocks = block_decompose(m, split);
    return std::array<double, 3>{
        eigh(SymOp::from_assembled(blocks.b1, 1e-9)).values.minCoeff(),
        eigh(SymOp::from_assembled(blocks.b2, 1e-9)).values.minCoeff(),
        eigh(SymOp::from_assembled(blocks.b3, 1e-9)).values.minCoeff()};
  };

  const auto base = block_mins(0.0);
  std::array<bool, 3> positive_at_zero{};
  for (int i = 0; i < 3; ++i) positive_at_zero[i] = base[i] > 1e-9 * scale;

  double eps = eps0;
  for (int iter = 0; iter < 60; ++iter, eps *= 0.5) {
    const auto mins = block_mins(eps);
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      if (positive_at_zero[i] && mins[i] <= 0.0) ok = false;
    if (ok) return eps;
  }
  return 0.0;
}

SymOp fatness_operator(const PointModel& model) {
  const auto split = lambda2_split(model);
  const SymOp gt = operator_G_T(model);
  const double a = model.params.alpha, d = model.params.delta;
  Matrix g3 = conjugate(gt, split.basis3);
  return SymOp::from_assembled((d * d / (4.0 * a * a)) * g3, 1e-9);
}

}  // namespace sasaki
