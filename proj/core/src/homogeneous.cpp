#include "sasaki/homogeneous.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace sasaki {

namespace {

constexpr int kEven[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

struct Quat {
  double w = 0, x = 0, y = 0, z = 0;
};

Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
Quat conj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }
Quat unit_quat(int u) {
  Quat q;
  (u == 0 ? q.w : u == 1 ? q.x : u == 2 ? q.y : q.z) = 1.0;
  return q;
}
double re_inner(const Quat& a, const Quat& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;  // Re(a conj(b))
}

// m x m matrix over the quaternions, row-major
struct QMatrix {
  int m = 0;
  std::vector<Quat> e;
  explicit QMatrix(int m_) : m(m_), e(static_cast<std::size_t>(m_) * m_) {}
  Quat& at(int r, int c) { return e[static_cast<std::size_t>(r) * m + c]; }
  const Quat& at(int r, int c) const { return e[static_cast<std::size_t>(r) * m + c]; }
};

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.m);
  for (int i = 0; i < a.m; ++i)
    for (int j = 0; j < a.m; ++j) {
      Quat s{};
      for (int k = 0; k < a.m; ++k) {
        const Quat ab = a.at(i, k) * b.at(k, j);
        const Quat ba = b.at(i, k) * a.at(k, j);
        s = {s.w + ab.w - ba.w, s.x + ab.x - ba.x, s.y + ab.y - ba.y, s.z + ab.z - ba.z};
      }
      r.at(i, j) = s;
    }
  return r;
}

double frob_inner(const QMatrix& a, const QMatrix& b) {
  double s = 0.0;
  for (std::size_t t = 0; t < a.e.size(); ++t) s += re_inner(a.e[t], b.e[t]);
  return s;
}

}  // namespace

Vector LieModel::bracket(const Vector& u, const Vector& v) const {
  Vector r = Vector::Zero(dim_g);
  for (int i = 0; i < dim_g; ++i)
    if (u[i] != 0.0) r += u[i] * (ad[i] * v);
  return r;
}

Vector LieModel::project_m(const Vector& g_vec) const { return g_vec.head(dim_m()); }

Vector LieModel::embed_m(const Vector& m_vec) const {
  Vector r = Vector::Zero(dim_g);
  r.head(dim_m()) = m_vec;
  return r;
}

Matrix killing_form(const std::vector<Matrix>& ad) {
  const int n = static_cast<int>(ad.size());
  Matrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      k(i, j) = (ad[i] * ad[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

namespace {

void finish_model(LieModel& lm, double alpha, double delta) {
  lm.params = Params(static_cast<int>(lm.g1_indices.size()) / 4, alpha, delta);
  lm.killing = killing_form(lm.ad);

  const int n = lm.params.n;
  const int dm = lm.dim_m();
  lm.metric = Matrix::Zero(dm, dm);
  const double v_scale = -1.0 / (4.0 * delta * delta * (n + 2));
  const double h_scale = -1.0 / (8.0 * alpha * delta * (n + 2));
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j) {
      const bool iv = i < 3, jv = j < 3;
      if (iv && jv)
        lm.metric(i, j) = v_scale * lm.killing(i, j);
      else if (!iv && !jv)
        lm.metric(i, j) = h_scale * lm.killing(i, j);
    }

  Eigen::SelfAdjointEigenSolver<Matrix> es(lm.metric);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument(
        "LieModel: invariant metric not positive definite; the sign constraint on "
        "alpha delta does not match the type of g");

  for (int i = 0; i < 3; ++i) {
    lm.xi[i] = Vector::Zero(dm);
    lm.xi[i][i] = delta;
  }
  for (int i = 0; i < 3; ++i) {
    Matrix p = Matrix::Zero(dm, dm);
    const Vector xi_g = lm.embed_m(lm.xi[i]);
    for (int c = 0; c < dm; ++c) {
      Vector x = Vector::Zero(lm.dim_g);
      x[c] = 1.0;
      const Vector img = lm.project_m(lm.bracket(xi_g, x));
      p.col(c) = (c < 3 ? 1.0 / (2.0 * delta) : 1.0 / delta) * img;
    }
    lm.phi[i] = std::move(p);
  }
}

}  // namespace

LieModel build_sp_model(int n, double alpha, double delta) {
  if (n < 1) throw std::invalid_argument("build_sp_model: n >= 1 required");
  if (alpha * delta <= 0.0)
    throw std::invalid_argument("build_sp_model: compact type requires alpha delta > 0");

  const int m = n + 1;
  std::vector<QMatrix> basis;
  std::vector<double> norm2;
  // sp(1): pure imaginary units in the (0,0) slot
  for (int u = 1; u <= 3; ++u) {
    QMatrix b(m);
    b.at(0, 0) = unit_quat(u);
    basis.push_back(b);
    norm2.push_back(1.0);
  }
  // g_1: first row/column, x at (0,q) and -conj(x) at (q,0)
  for (int q = 1; q <= n; ++q)
    for (int u = 0; u <= 3; ++u) {
      QMatrix b(m);
      b.at(0, q) = unit_quat(u);
      const Quat c = conj(unit_quat(u));
      b.at(q, 0) = {-c.w, -c.x, -c.y, -c.z};
      basis.push_back(b);
      norm2.push_back(2.0);
    }
  // h = sp(n): diagonal imaginary units, then off-diagonal pairs
  for (int q = 1; q <= n; ++q)
    for (int u = 1; u <= 3; ++u) {
      QMatrix b(m);
      b.at(q, q) = unit_quat(u);
      basis.push_back(b);
      norm2.push_back(1.0);
    }
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int u = 0; u <= 3; ++u) {
        QMatrix b(m);
        b.at(p, q) = unit_quat(u);
        const Quat c = conj(unit_quat(u));
        b.at(q, p) = {-c.w, -c.x, -c.y, -c.z};
        basis.push_back(b);
        norm2.push_back(2.0);
      }

  const int dim = static_cast<int>(basis.size());
  LieModel lm;
  lm.name = "sp(" + std::to_string(n + 1) + ")/sp(" + std::to_string(n) + ")";
  lm.dim_g = dim;
  for (int i = 0; i < 3; ++i) lm.sp1_indices.push_back(i);
  for (int i = 3; i < 3 + 4 * n; ++i) lm.g1_indices.push_back(i);
  for (int i = 3 + 4 * n; i < dim; ++i) lm.h_indices.push_back(i);

  // structure constants by expanding commutators in the orthogonal basis
  std::vector<Matrix> c_of_k(dim, Matrix::Zero(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const QMatrix br = commutator(basis[i], basis[j]);
      for (int k = 0; k < dim; ++k) {
        const double c = frob_inner(br, basis[k]) / norm2[k];
        if (c != 0.0) {
          c_of_k[k](i, j) = c;
          c_of_k[k](j, i) = -c;
        }
      }
    }
  lm.ad.assign(dim, Matrix::Zero(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) lm.ad[i].row(k) = c_of_k[k].row(i);

  finish_model(lm, alpha, delta);
  return lm;
}

LieModel make_lie_model(int dim, const std::vector<BracketTriple>& triples,
                        std::vector<int> sp1, std::vector<int> g1, std::vector<int> h,
                        double alpha, double delta, std::string name) {
  if (sp1.size() != 3) throw std::invalid_argument("make_lie_model: sp(1) needs 3 indices");
  if (g1.size() % 4 != 0 || g1.empty())
    throw std::invalid_argument("make_lie_model: dim g_1 must be a positive multiple of 4");
  std::vector<bool> seen(dim, false);
  std::vector<int> order;
  for (const auto* set : {&sp1, &g1, &h})
    for (int i : *set) {
      if (i < 0 || i >= dim || seen[i])
        throw std::invalid_argument("make_lie_model: index sets must partition 0..dim-1");
      seen[i] = true;
      order.push_back(i);
    }
  if (static_cast<int>(order.size()) != dim)
    throw std::invalid_argument("make_lie_model: index sets must cover all basis elements");

  // permute so the basis is ordered sp(1), g_1, h
  std::vector<int> pos(dim);
  for (int t = 0; t < dim; ++t) pos[order[t]] = t;

  LieModel lm;
  lm.name = std::move(name);
  lm.dim_g = dim;
  for (int i = 0; i < 3; ++i) lm.sp1_indices.push_back(i);
  for (int i = 3; i < 3 + static_cast<int>(g1.size()); ++i) lm.g1_indices.push_back(i);
  for (int i = 3 + static_cast<int>(g1.size()); i < dim; ++i) lm.h_indices.push_back(i);

  lm.ad.assign(dim, Matrix::Zero(dim, dim));
  for (const auto& t : triples) {
    if (t.i < 0 || t.i >= dim || t.j < 0 || t.j >= dim || t.k < 0 || t.k >= dim)
      throw std::invalid_argument("make_lie_model: triple index out of range");
    const int i = pos[t.i], j = pos[t.j], k = pos[t.k];
    lm.ad[i](k, j) += t.c;
    lm.ad[j](k, i) -= t.c;
  }
  finish_model(lm, alpha, delta);
  return lm;
}

namespace {

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// worst violation of [span_a, span_b] inside span_c (index sets on g)
double closure_violation(const LieModel& lm, const std::vector<int>& a,
                         const std::vector<int>& b, std::vector<int> c) {
  std::vector<bool> inside(lm.dim_g, false);
  for (int i : c) inside[i] = true;
  double v = 0.0;
  for (int i : a)
    for (int j : b) {
      const Vector br = lm.ad[i].col(j);
      for (int k = 0; k < lm.dim_g; ++k)
        if (!inside[k]) v = std::max(v, std::abs(br[k]));
    }
  return v;
}

}  // namespace

CheckList validate_generalized_data(const LieModel& lm) {
  CheckList out;
  const double tol = 1e-10;
  const int dim = lm.dim_g;

  double v_jac = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const Vector bij = lm.ad[i].col(j);
      for (int k = j + 1; k < dim; ++k) {
        // [[x_i,x_j],x_k] + cyclic = -(ad_k [x_i,x_j] + ad_i [x_j,x_k] + ad_j [x_k,x_i])
        const Vector cyc =
            lm.ad[k] * bij + lm.ad[i] * lm.ad[j].col(k) + lm.ad[j] * lm.ad[k].col(i);
        v_jac = std::max(v_jac, cyc.cwiseAbs().maxCoeff());
      }
    }
  out.push_back({"jacobi", v_jac, tol});

  out.push_back({"h_sp1_commute",
                 closure_violation(lm, lm.h_indices, lm.sp1_indices, {}), tol});

  std::vector<int> g0 = lm.sp1_indices;
  g0.insert(g0.end(), lm.h_indices.begin(), lm.h_indices.end());
  double v_sym = closure_violation(lm, lm.g1_indices, lm.g1_indices, g0);
  v_sym = std::max(v_sym, closure_violation(lm, g0, lm.g1_indices, lm.g1_indices));
  v_sym = std::max(v_sym, closure_violation(lm, g0, g0, g0));
  out.push_back({"symmetric_pair", v_sym, tol});

  // sp(1) acts on g_1 as a quaternionic structure
  double v_quat = 0.0;
  const int dm = lm.dim_m();
  const Matrix id_h = Matrix::Identity(dm - 3, dm - 3);
  std::array<Matrix, 3> phih;
  for (int i = 0; i < 3; ++i) phih[i] = lm.phi[i].block(3, 3, dm - 3, dm - 3);
  for (int i = 0; i < 3; ++i) v_quat = std::max(v_quat, max_abs(phih[i] * phih[i] + id_h));
  for (const auto& p : kEven)
    v_quat = std::max(v_quat, max_abs(phih[p[0]] * phih[p[1]] - phih[p[2]]));
  out.push_back({"sp1_action_quaternionic", v_quat, tol});

  double v_reeb = 0.0;
  for (const auto& p : kEven) {
    const Vector br =
        lm.project_m(lm.bracket(lm.embed_m(lm.xi[p[0]]), lm.embed_m(lm.xi[p[1]])));
    v_reeb = std::max(v_reeb,
                      (br - 2.0 * lm.params.delta * lm.xi[p[2]]).cwiseAbs().maxCoeff());
  }
  out.push_back({"reeb_commutators", v_reeb, tol});

  double v_adinv = 0.0;
  for (int z = 0; z < dim; ++z) {
    const Matrix zk = lm.ad[z].transpose() * lm.killing + lm.killing * lm.ad[z];
    v_adinv = std::max(v_adinv, max_abs(zk));
  }
  const double kscale = std::max(1.0, max_abs(lm.killing));
  out.push_back({"killing_ad_invariance", v_adinv, 1e-9 * kscale});

  return out;
}

CheckList verify_homogeneous_identities(const LieModel& lm) {
  CheckList out = validate_generalized_data(lm);
  const double tol = 1e-9;
  const int dm = lm.dim_m();
  const double a = lm.params.alpha, dl = lm.params.delta;

  std::array<Vector, 3> eta;  // eta_i = g(xi_i, .)
  std::array<Matrix, 3> phi_form;
  for (int i = 0; i < 3; ++i) {
    eta[i] = lm.metric * lm.xi[i];
    phi_form[i] = lm.metric * lm.phi[i];  // Phi_i(x,y) = x^T G phi_i y
  }

  double v_deta = 0.0, v_vcomm = 0.0, v_etak = 0.0;
  for (int s = 0; s < dm; ++s)
    for (int t = s + 1; t < dm; ++t) {
      const Vector xs = Vector::Unit(dm, s), xt = Vector::Unit(dm, t);
      const Vector br = lm.project_m(lm.bracket(lm.embed_m(xs), lm.embed_m(xt)));
      for (const auto& p : kEven) {
        const int i = p[0], j = p[1], k = p[2];
        const double lhs = -eta[i].dot(br);
        const double rhs = 2.0 * a * phi_form[i](s, t) +
                           2.0 * (a - dl) * (eta[j][s] * eta[k][t] - eta[k][s] * eta[j][t]);
        v_deta = std::max(v_deta, std::abs(lhs - rhs));
      }
      if (s >= 3 && t >= 3) {
        Vector vert = br;
        vert.tail(dm - 3).setZero();
        Vector rhs = Vector::Zero(dm);
        for (int i = 0; i < 3; ++i) rhs -= 2.0 * a * phi_form[i](s, t) * lm.xi[i];
        v_vcomm = std::max(v_vcomm, (vert - rhs).cwiseAbs().maxCoeff());
      }
      if (s < 3 && t >= 3) {
        for (int i = 0; i < 3; ++i) v_etak = std::max(v_etak, std::abs(eta[i].dot(br)));
      }
    }
  out.push_back({"differential_eta", v_deta, tol});
  out.push_back({"vertical_commutators", v_vcomm, tol});
  out.push_back({"reeb_horizontal_invariance", v_etak, tol});

  // h acts on g_1 by infinitesimal isometries of the invariant metric
  double v_iso = 0.0;
  for (int z : lm.h_indices) {
    Matrix act(dm - 3, dm - 3);  // g_1 block of ad(z)
    for (int c = 0; c < dm - 3; ++c)
      act.col(c) = lm.ad[z].col(3 + c).segment(3, dm - 3);
    const Matrix gh = lm.metric.block(3, 3, dm - 3, dm - 3);
    v_iso = std::max(v_iso, max_abs(act.transpose() * gh + gh * act));
  }
  out.push_back({"h_infinitesimal_isometry", v_iso, tol});

  out.push_back(
      {"g1_dimension_4n",
       static_cast<double>(std::abs(static_cast<int>(lm.g1_indices.size()) - 4 * lm.params.n)),
       0.5});
  return out;
}

PointModel pointwise_of(const LieModel& lm) {
  const auto checks = verify_homogeneous_identities(lm);
  for (const auto& c : checks)
    if (!c.pass())
      throw std::invalid_argument("pointwise_of: homogeneous identities fail at " + c.name);

  const int dm = lm.dim_m();
  const Matrix& g = lm.metric;
  std::vector<Vector> frame;
  frame.reserve(dm);
  for (int i = 0; i < 3; ++i) {
    Vector v = lm.xi[i];
    frame.push_back(v / std::sqrt(v.dot(g * v)));
  }
  auto g_project_out = [&](Vector v) {
    for (const auto& f : frame) v -= f.dot(g * v) * f;
    return v;
  };
  for (int c = 3; c < dm && static_cast<int>(frame.size()) < dm; ++c) {
    Vector v = g_project_out(Vector::Unit(dm, c));
    const double nv = std::sqrt(std::max(0.0, v.dot(g * v)));
    if (nv < 1e-8) continue;
    v /= nv;
    frame.push_back(v);
    for (int i = 0; i < 3; ++i) {
      Vector w = lm.phi[i] * v;
      frame.push_back(w / std::sqrt(w.dot(g * w)));
    }
  }
  if (static_cast<int>(frame.size()) != dm)
    throw std::runtime_error("pointwise_of: failed to complete an adapted frame");

  Matrix f(dm, dm);
  for (int c = 0; c < dm; ++c) f.col(c) = frame[c];

  PointModel model;
  model.params = lm.params;
  model.dim = dm;
  for (int i = 0; i < 3; ++i) {
    model.xi[i] = Vector::Unit(dm, i);
    model.eta[i] = model.xi[i];
    model.phi[i] = f.transpose() * g * lm.phi[i] * f;
  }
  for (int i = 0; i < 3; ++i) {
    model.Phi[i] = two_form_from_matrix(model.phi[i]);
    model.xi_wedge[i] = wedge_pair(dm, kEven[i][1], kEven[i][2]);
    model.PhiH[i] = model.Phi[i] + model.xi_wedge[i];
  }
  return model;
}

}  // namespace sasaki
