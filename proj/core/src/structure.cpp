#include "sasaki/structure.hpp"

#include <cmath>
#include <stdexcept>

namespace sasaki {

Params::Params(int n_, double alpha_, double delta_) : n(n_), alpha(alpha_), delta(delta_) {
  if (n < 1) throw std::invalid_argument("Params: n >= 1 required");
  if (alpha == 0.0) throw std::invalid_argument("Params: alpha != 0 required");
}

namespace {

// even permutations of (0,1,2)
constexpr int kEven[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

// left quaternion multiplication by i, j, k on (1, i, j, k) coordinates;
// compatibility of the three structures forces exactly these blocks once
// phi_i e_base = e_{base+i} is fixed
Matrix left_mult(int i) {
  Matrix l = Matrix::Zero(4, 4);
  switch (i) {
    case 0:
      l(1, 0) = 1; l(0, 1) = -1; l(3, 2) = 1; l(2, 3) = -1;
      break;
    case 1:
      l(2, 0) = 1; l(3, 1) = -1; l(0, 2) = -1; l(1, 3) = 1;
      break;
    default:
      l(3, 0) = 1; l(2, 1) = 1; l(1, 2) = -1; l(0, 3) = -1;
      break;
  }
  return l;
}

}  // namespace

PointModel build_point_model(const Params& params) {
  PointModel m;
  m.params = params;
  const int d = params.dim();
  m.dim = d;

  for (int i = 0; i < 3; ++i) {
    m.xi[i] = Vector::Zero(d);
    m.xi[i][i] = 1.0;
    m.eta[i] = m.xi[i];
  }

  for (int i = 0; i < 3; ++i) {
    Matrix p = Matrix::Zero(d, d);
    const int j = kEven[i][1], k = kEven[i][2];
    p(k, j) = 1.0;   // phi_i xi_j = xi_k
    p(j, k) = -1.0;  // phi_i xi_k = -xi_j
    const Matrix block = left_mult(i);
    for (int l = 0; l < params.n; ++l) {
      const int base = 3 + 4 * l;
      p.block<4, 4>(base, base) = block;
    }
    m.phi[i] = std::move(p);
  }

  for (int i = 0; i < 3; ++i) {
    m.Phi[i] = two_form_from_matrix(m.phi[i]);
    const int j = kEven[i][1], k = kEven[i][2];
    m.xi_wedge[i] = wedge_pair(d, j, k);
    m.PhiH[i] = m.Phi[i] + m.xi_wedge[i];
  }
  return m;
}

Lambda2Split lambda2_split(const PointModel& model) {
  const int d = model.dim;
  const auto& mis2 = multi_index_set(d, 2);
  const int n2 = mis2.size();
  const double inv_norm = 1.0 / std::sqrt(2.0 * model.params.n);

  Lambda2Split split;
  split.basis1 = Matrix::Zero(n2, 6);
  for (int i = 0; i < 3; ++i) {
    split.basis1.col(2 * i) = inv_norm * model.PhiH[i].coeffs;
    split.basis1.col(2 * i + 1) = model.xi_wedge[i].coeffs;
  }

  std::vector<int> mixed_pairs;
  for (int r = 0; r < n2; ++r) {
    const int a = mis2.at(r)[0], b = mis2.at(r)[1];
    if (a < 3 && b >= 3) mixed_pairs.push_back(r);
    if (a >= 3) split.horizontal_pairs.push_back(r);
  }

  split.basis3 = Matrix::Zero(n2, static_cast<int>(mixed_pairs.size()));
  for (std::size_t c = 0; c < mixed_pairs.size(); ++c)
    split.basis3(mixed_pairs[c], static_cast<int>(c)) = 1.0;

  // Lambda^2_2: horizontal pairs with the quaternionic span projected out,
  // then modified Gram-Schmidt
  const int nh = static_cast<int>(split.horizontal_pairs.size());
  Matrix q(n2, 3);
  for (int i = 0; i < 3; ++i) q.col(i) = inv_norm * model.PhiH[i].coeffs;
  std::vector<Vector> kept;
  kept.reserve(nh - 3);
  for (int c = 0; c < nh; ++c) {
    Vector v = Vector::Zero(n2);
    v[split.horizontal_pairs[c]] = 1.0;
    v -= q * (q.transpose() * v);
    for (const auto& u : kept) v -= u.dot(v) * u;
    const double nv = v.norm();
    if (nv > 1e-8) kept.push_back(v / nv);
  }
  split.basis2 = Matrix::Zero(n2, static_cast<int>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) split.basis2.col(static_cast<int>(c)) = kept[c];

  const int expected2 = 6 * model.params.n - 3 +
                        16 * static_cast<int>(binom(model.params.n, 2));
  if (static_cast<int>(kept.size()) != expected2)
    throw std::runtime_error("lambda2_split: unexpected Lambda^2_2 dimension");
  return split;
}

namespace {

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

CheckList check_structure_axioms(const PointModel& m) {
  const int d = m.dim;
  const Matrix id = Matrix::Identity(d, d);
  const double tol = 1e-10;
  CheckList out;
  auto push = [&out, tol](const std::string& name, double v) {
    out.push_back({name, v, tol});
  };

  double v_sq = 0, v_dual = 0, v_phixi = 0, v_etaphi = 0, v_metric = 0, v_skew = 0;
  for (int i = 0; i < 3; ++i) {
    v_sq = std::max(v_sq, max_abs(m.phi[i] * m.phi[i] + id - m.xi[i] * m.eta[i].transpose()));
    for (int j = 0; j < 3; ++j)
      v_dual = std::max(v_dual, std::abs(m.eta[i].dot(m.xi[j]) - (i == j ? 1.0 : 0.0)));
    v_phixi = std::max(v_phixi, (m.phi[i] * m.xi[i]).norm());
    v_etaphi = std::max(v_etaphi, (m.eta[i].transpose() * m.phi[i]).norm());
    v_metric = std::max(
        v_metric,
        max_abs(m.phi[i].transpose() * m.phi[i] - id + m.eta[i] * m.eta[i].transpose()));
    v_skew = std::max(v_skew, max_abs(m.phi[i] + m.phi[i].transpose()));
  }
  push("phi_squared", v_sq);
  push("eta_xi_duality", v_dual);
  push("phi_annihilates_xi", v_phixi);
  push("eta_circ_phi", v_etaphi);
  push("metric_compatibility", v_metric);
  push("phi_skew_symmetric", v_skew);

  double v_cphi = 0, v_cxi = 0, v_ceta = 0;
  for (const auto& p : kEven) {
    const int i = p[0], j = p[1], k = p[2];
    v_cphi = std::max(v_cphi, max_abs(m.phi[k] - m.phi[i] * m.phi[j] +
                                      m.xi[i] * m.eta[j].transpose()));
    v_cphi = std::max(v_cphi, max_abs(m.phi[k] + m.phi[j] * m.phi[i] -
                                      m.xi[j] * m.eta[i].transpose()));
    v_cxi = std::max(v_cxi, (m.xi[k] - m.phi[i] * m.xi[j]).norm());
    v_cxi = std::max(v_cxi, (m.xi[k] + m.phi[j] * m.xi[i]).norm());
    v_ceta = std::max(v_ceta,
                      (m.eta[k].transpose() - m.eta[i].transpose() * m.phi[j]).norm());
  }
  push("compatibility_phi", v_cphi);
  push("compatibility_xi", v_cxi);
  push("compatibility_eta", v_ceta);

  // Phi_i = -1/2 sum_r e_r ^ phi_i e_r
  double v_fund = 0;
  for (int i = 0; i < 3; ++i) {
    PForm acc(2, d);
    for (int r = 0; r < d; ++r) {
      PForm er(1, d), im(1, d);
      er.coeffs[r] = 1.0;
      im.coeffs = m.phi[i].col(r);
      acc = acc + wedge(er, im);
    }
    v_fund = std::max(v_fund, (m.Phi[i] - (-0.5) * acc).norm());
  }
  push("fundamental_two_form", v_fund);

  // adapted-frame expression of the horizontal part
  double v_adapted = 0;
  for (const auto& p : kEven) {
    const int i = p[0], j = p[1], k = p[2];
    PForm acc(2, d);
    for (int r = 3; r < d; ++r) {
      PForm er(1, d), pi(1, d), pj(1, d), pk(1, d);
      er.coeffs[r] = 1.0;
      pi.coeffs = m.phi[i].col(r);
      pj.coeffs = m.phi[j].col(r);
      pk.coeffs = m.phi[k].col(r);
      acc = acc + wedge(er, pi) + wedge(pj, pk);
    }
    v_adapted = std::max(v_adapted, (m.PhiH[i] - (-0.25) * acc).norm());
  }
  push("adapted_horizontal_form", v_adapted);

  return out;
}

Matrix induced_two_form_action(const Matrix& a) {
  const int d = static_cast<int>(a.rows());
  const auto& mis2 = multi_index_set(d, 2);
  const int n2 = mis2.size();
  Matrix m = Matrix::Zero(n2, n2);
  for (int c = 0; c < n2; ++c) {
    const int p = mis2.at(c)[0], q = mis2.at(c)[1];
    PForm ep(1, d), eq(1, d), ap(1, d), aq(1, d);
    ep.coeffs[p] = 1.0;
    eq.coeffs[q] = 1.0;
    ap.coeffs = a.col(p);
    aq.coeffs = a.col(q);
    m.col(c) = (wedge(ap, eq) + wedge(ep, aq)).coeffs;
  }
  return m;
}

}  // namespace sasaki
