#include "sasaki/curvature.hpp"

#include <random>
#include <stdexcept>

namespace sasaki {

namespace {

constexpr int kEven[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::vector<int> horizontal_pair_ranks(int n) {
  const int d = 4 * n + 3;
  const auto& mis2 = multi_index_set(d, 2);
  std::vector<int> out;
  out.reserve(binom(4 * n, 2));
  for (int r = 0; r < mis2.size(); ++r)
    if (mis2.at(r)[0] >= 3) out.push_back(r);
  return out;
}

SymOp embed_horizontal(const SymOp& h, int dim) {
  const int n = (dim - 3) / 4;
  const auto hp = horizontal_pair_ranks(n);
  if (static_cast<int>(hp.size()) != h.dim2())
    throw std::invalid_argument("embed_horizontal: size mismatch");
  Matrix m = Matrix::Zero(binom(dim, 2), binom(dim, 2));
  for (std::size_t i = 0; i < hp.size(); ++i)
    for (std::size_t j = 0; j < hp.size(); ++j)
      m(hp[i], hp[j]) = h.mat(static_cast<int>(i), static_cast<int>(j));
  return SymOp{std::move(m)};
}

SymOp restrict_horizontal(const SymOp& full, int n) {
  const auto hp = horizontal_pair_ranks(n);
  const int nh = static_cast<int>(hp.size());
  Matrix m(nh, nh);
  for (int i = 0; i < nh; ++i)
    for (int j = 0; j < nh; ++j) m(i, j) = full.mat(hp[i], hp[j]);
  return SymOp{std::move(m)};
}

PForm horizontal_two_form(const PointModel& model, const PForm& full) {
  const auto hp = horizontal_pair_ranks(model.params.n);
  PForm w(2, model.horizontal_dim());
  for (std::size_t i = 0; i < hp.size(); ++i) w.coeffs[static_cast<int>(i)] = full.coeffs[hp[i]];
  return w;
}

SymOp operator_R_perp(const PointModel& m) {
  const int n2 = static_cast<int>(binom(m.dim, 2));
  SymOp r = SymOp::zero(n2);
  for (int i = 0; i < 3; ++i) r = r + outer(m.Phi[i] - m.xi_wedge[i]);
  return r;
}

SymOp operator_R0(const PointModel& m) {
  const int dh = m.horizontal_dim();
  const Matrix g = Matrix::Identity(dh, dh);
  SymOp r0 = kulkarni_nomizu_operator(g, g);
  for (int i = 0; i < 3; ++i) {
    const Matrix phih = m.phi[i].block(3, 3, dh, dh);
    const PForm ph = horizontal_two_form(m, m.PhiH[i]);
    r0 = r0 + kulkarni_nomizu_operator(phih, phih) + 4.0 * outer(ph);
  }
  return 0.125 * r0;
}

CheckList validate_hyperkaehler_type(const PointModel& m, const SymOp& r1) {
  const int dh = m.horizontal_dim();
  const int nh = static_cast<int>(binom(dh, 2));
  const double tol = 1e-9;
  CheckList out;
  if (r1.dim2() != nh) {
    out.push_back({"r1_dimension", 1.0, 0.5});
    return out;
  }
  out.push_back({"r1_symmetric", max_abs(r1.mat - r1.mat.transpose()), tol});

  double v_ann = 0.0;
  for (int i = 0; i < 3; ++i)
    v_ann = std::max(v_ann, (r1.mat * horizontal_two_form(m, m.PhiH[i]).coeffs).norm());
  out.push_back({"r1_annihilates_quaternionic_span", v_ann, tol});

  double v_comm = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Matrix act = induced_two_form_action(m.phi[i].block(3, 3, dh, dh));
    v_comm = std::max(v_comm, max_abs(r1.mat * act - act * r1.mat));
  }
  out.push_back({"r1_commutes_with_quaternionic_structure", v_comm, tol});

  const Matrix ric = ricci_from_operator(r1, dh);
  out.push_back({"r1_ricci_flat", max_abs(ric), tol});
  return out;
}

SymOp operator_RgN(const PointModel& m, const SymOp& r1) {
  const auto checks = validate_hyperkaehler_type(m, r1);
  for (const auto& c : checks)
    if (!c.pass())
      throw std::invalid_argument("operator_RgN: R1 is not of hyper-Kaehler type, failed " +
                                  c.name);
  return (4.0 * m.params.alpha * m.params.delta) * operator_R0(m) + r1;
}

SymOp operator_R_par(const PointModel& m, const SymOp& r1) {
  SymOp h = operator_RgN(m, r1);
  const double ad = m.params.alpha * m.params.delta;
  for (int i = 0; i < 3; ++i) h = h - (2.0 * ad) * outer(horizontal_two_form(m, m.PhiH[i]));
  return embed_horizontal(h, m.dim);
}

SymOp operator_R_par_kn_route(const PointModel& m, const SymOp& r1) {
  const int dh = m.horizontal_dim();
  const Matrix g = Matrix::Identity(dh, dh);
  SymOp h = kulkarni_nomizu_operator(g, g);
  for (int i = 0; i < 3; ++i) {
    const Matrix phih = m.phi[i].block(3, 3, dh, dh);
    h = h + kulkarni_nomizu_operator(phih, phih);
  }
  h = (0.5 * m.params.alpha * m.params.delta) * h + r1;
  return embed_horizontal(h, m.dim);
}

SymOp operator_R(const PointModel& m, const SymOp& r1) {
  return (m.params.alpha * m.params.beta()) * operator_R_perp(m) + operator_R_par(m, r1);
}

SymOp operator_Rg(const PointModel& m, const SymOp& r1) {
  return operator_R(m, r1) + 0.25 * operator_G_T(m) + 0.25 * operator_S_T(m);
}

Matrix ricci_from_operator(const SymOp& rg, int dim) {
  Matrix ric = Matrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      double s = 0.0;
      for (int r = 0; r < dim; ++r) s += op_tensor_entry(rg, dim, a, r, b, r);
      ric(a, b) = s;
      ric(b, a) = s;
    }
  return ric;
}

Matrix ricci_closed_form(const PointModel& m) {
  const double a = m.params.alpha, d = m.params.delta;
  const int n = m.params.n;
  const double c0 = 2.0 * a * (2.0 * d * (n + 2) - 3.0 * a);
  const double c1 = 2.0 * (a - d) * ((2 * n + 3) * a - d);
  Matrix ric = c0 * Matrix::Identity(m.dim, m.dim);
  for (int i = 0; i < 3; ++i) ric += c1 * m.eta[i] * m.eta[i].transpose();
  return ric;
}

CheckList curvature_tensor_identities(const PointModel& m, const SymOp& rcan,
                                      unsigned rng_seed) {
  const int d = m.dim;
  const double ab = m.params.alpha * m.params.beta();
  const double scale = std::max(1.0, rcan.max_abs());
  const double tol = 1e-9 * scale;
  const auto& mis2 = multi_index_set(d, 2);
  CheckList out;

  out.push_back({"pair_symmetry", max_abs(rcan.mat - rcan.mat.transpose()), 1e-12});

  // operator vanishes on V ^ H
  double v_mixed = 0.0;
  for (int r = 0; r < mis2.size(); ++r) {
    const int p = mis2.at(r)[0], q = mis2.at(r)[1];
    if (p < 3 && q >= 3) {
      v_mixed = std::max(v_mixed, rcan.mat.row(r).cwiseAbs().maxCoeff());
    }
  }
  out.push_back({"vanishes_on_V_wedge_H", v_mixed, tol});

  // purely vertical entries, R(xi_i,xi_j,xi_k,xi_l) = -4ab(d_ik d_jl - d_il d_jk)
  double v_vert = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const double expected =
              -4.0 * ab * ((i == k && j == l ? 1.0 : 0.0) - (i == l && j == k ? 1.0 : 0.0));
          const double got = -op_tensor_entry(rcan, d, i, j, k, l);
          v_vert = std::max(v_vert, std::abs(got - expected));
        }
  out.push_back({"vertical_entries", v_vert, tol});

  // R(xi_i, xi_j, X, Y) = 2ab Phi_k(X,Y), even permutations, horizontal X,Y
  double v_off = 0.0;
  for (const auto& p : kEven) {
    const int i = p[0], j = p[1], k = p[2];
    for (int a = 3; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        const double expected = 2.0 * ab * m.phi[k](a, b);
        const double got = -op_tensor_entry(rcan, d, i, j, a, b);
        v_off = std::max(v_off, std::abs(got - expected));
      }
  }
  out.push_back({"vertical_horizontal_coupling", v_off, tol});

  // R(X,Y) phi_i - phi_i R(X,Y) against the structure-tensor expression
  double v_phi = 0.0, v_xi = 0.0;
  for (int ra = 0; ra < mis2.size(); ++ra) {
    const int a = mis2.at(ra)[0], b = mis2.at(ra)[1];
    Matrix rxy(d, d);  // (v,c) entry = g(R(e_a,e_b) e_c, e_v)
    for (int c = 0; c < d; ++c)
      for (int v = 0; v < d; ++v) rxy(v, c) = -op_tensor_entry(rcan, d, a, b, c, v);
    for (const auto& p : kEven) {
      const int i = p[0], j = p[1], k = p[2];
      const double phik_ab = m.phi[k](a, b), phij_ab = m.phi[j](a, b);
      const double eij = m.eta[i][a] * m.eta[j][b] - m.eta[j][a] * m.eta[i][b];
      const double eki = m.eta[k][a] * m.eta[i][b] - m.eta[i][a] * m.eta[k][b];
      const Matrix lhs = rxy * m.phi[i] - m.phi[i] * rxy;
      const Matrix rhs = 2.0 * ab *
                         ((phik_ab - eij) * m.phi[j] - (phij_ab - eki) * m.phi[k]);
      v_phi = std::max(v_phi, max_abs(lhs - rhs));
      const Vector lhs_xi = rxy * m.xi[i];
      const Vector rhs_xi =
          2.0 * ab * ((phik_ab - eij) * m.xi[j] - (phij_ab - eki) * m.xi[k]);
      v_xi = std::max(v_xi, (lhs_xi - rhs_xi).norm());
    }
  }
  out.push_back({"phi_commutation", v_phi, tol});
  out.push_back({"reeb_curvature", v_xi, tol});

  // R(X,Y,Z,phi_i Z) + R(X,Y,phi_j Z,phi_k Z) = 2ab Phi_i(X,Y) |Z|^2
  std::mt19937 rng(rng_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double v_2curv = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    Vector z = Vector::Zero(d);
    for (int r = 3; r < d; ++r) z[r] = gauss(rng);
    std::vector<PForm> planes(3, PForm(2, d));
    for (const auto& p : kEven) {
      const Vector pzi = m.phi[p[0]] * z, pzj = m.phi[p[1]] * z, pzk = m.phi[p[2]] * z;
      planes[p[0]] =
          two_form_from_matrix(z * pzi.transpose() - pzi * z.transpose() +
                               pzj * pzk.transpose() - pzk * pzj.transpose());
    }
    for (int a = 3; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        const PForm xy = wedge_pair(d, a, b);
        for (int i = 0; i < 3; ++i) {
          const double lhs = -xy.coeffs.dot(rcan.mat * planes[i].coeffs);
          const double rhs = 2.0 * ab * m.phi[i](a, b) * z.squaredNorm();
          v_2curv = std::max(v_2curv, std::abs(lhs - rhs) / std::max(1.0, z.squaredNorm()));
        }
      }
  }
  out.push_back({"quaternionic_two_plane_identity", v_2curv, tol});

  // first Bianchi identity with torsion: cyclic sum of R equals sigma_T
  const PForm st = sigma_T(m);
  out.push_back(
      {"first_bianchi_exhaustive", (bianchi_image(rcan, d) + st).coeffs.cwiseAbs().maxCoeff(),
       tol});

  double v_bianchi = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vector> v(4);
    for (auto& x : v) {
      x = Vector::Zero(d);
      for (int r = 0; r < d; ++r) x[r] = gauss(rng);
      x.normalize();
    }
    auto r_of = [&](const Vector& x, const Vector& y, const Vector& z, const Vector& w) {
      const PForm xy = two_form_from_matrix(x * y.transpose() - y * x.transpose());
      const PForm zw = two_form_from_matrix(z * w.transpose() - w * z.transpose());
      return -xy.coeffs.dot(rcan.mat * zw.coeffs);
    };
    const double cyc = r_of(v[0], v[1], v[2], v[3]) + r_of(v[1], v[2], v[0], v[3]) +
                       r_of(v[2], v[0], v[1], v[3]);
    const double rhs = evaluate(st, v);
    v_bianchi = std::max(v_bianchi, std::abs(cyc - rhs));
  }
  out.push_back({"first_bianchi_random_tuples", v_bianchi, 1e-8 * scale});

  return out;
}

CurvatureSuite build_curvature_suite(const PointModel& m, const std::optional<SymOp>& r1) {
  CurvatureSuite s;
  const int nh = static_cast<int>(binom(m.horizontal_dim(), 2));
  s.R1 = r1.value_or(SymOp::zero(nh));
  s.Rperp = operator_R_perp(m);
  s.R0 = operator_R0(m);
  s.RgN = operator_RgN(m, s.R1);
  SymOp h = s.RgN;
  const double ad = m.params.alpha * m.params.delta;
  for (int i = 0; i < 3; ++i) h = h - (2.0 * ad) * outer(horizontal_two_form(m, m.PhiH[i]));
  s.Rpar = embed_horizontal(h, m.dim);
  s.Rcan = (m.params.alpha * m.params.beta()) * s.Rperp + s.Rpar;
  s.GT = operator_G_T(m);
  s.ST = operator_S_T(m);
  s.Rg = s.Rcan + 0.25 * s.GT + 0.25 * s.ST;
  s.nu_scal = 4.0 * ad;
  return s;
}

}  // namespace sasaki
