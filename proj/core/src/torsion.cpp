#include "sasaki/torsion.hpp"

#include <stdexcept>

namespace sasaki {

namespace {

constexpr int kEven[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

PForm eta_form(const PointModel& m, int i) {
  PForm e(1, m.dim);
  e.coeffs = m.eta[i];
  return e;
}

}  // namespace

PForm torsion_three_form(const PointModel& m) {
  const double a = m.params.alpha, d = m.params.delta;
  PForm t(3, m.dim);
  for (int i = 0; i < 3; ++i) t = t + 2.0 * a * wedge(eta_form(m, i), m.Phi[i]);
  const PForm eta123 = wedge(eta_form(m, 0), wedge(eta_form(m, 1), eta_form(m, 2)));
  return t - (2.0 * (a - d)) * eta123;
}

Vector torsion_map(const PointModel& m, const Vector& x, const Vector& y) {
  const PForm t3 = torsion_three_form(m);
  return interior(y, interior(x, t3)).coeffs;
}

Vector torsion_map_formula(const PointModel& m, const Vector& x, const Vector& y) {
  const double a = m.params.alpha, d = m.params.delta;
  Vector t = Vector::Zero(m.dim);
  for (int i = 0; i < 3; ++i) {
    const double ex = m.eta[i].dot(x), ey = m.eta[i].dot(y);
    const double phi_xy = x.dot(m.phi[i] * y);  // Phi_i(X,Y) = g(X, phi_i Y)
    t += 2.0 * a * (ey * (m.phi[i] * x) - ex * (m.phi[i] * y) + phi_xy * m.xi[i]);
  }
  for (const auto& p : kEven) {
    const int i = p[0], j = p[1], k = p[2];
    const double eij = m.eta[i].dot(x) * m.eta[j].dot(y) - m.eta[j].dot(x) * m.eta[i].dot(y);
    t -= 2.0 * (a - d) * eij * m.xi[k];
  }
  return t;
}

Matrix torsion_frame_table(const PointModel& m) {
  const auto& mis2 = multi_index_set(m.dim, 2);
  const PForm t3 = torsion_three_form(m);
  Matrix table(m.dim, mis2.size());
  for (int r = 0; r < mis2.size(); ++r) {
    Vector ea = Vector::Zero(m.dim), eb = Vector::Zero(m.dim);
    ea[mis2.at(r)[0]] = 1.0;
    eb[mis2.at(r)[1]] = 1.0;
    table.col(r) = interior(eb, interior(ea, t3)).coeffs;
  }
  return table;
}

PForm sigma_from_table(const Matrix& t, int dim) {
  const auto& mis2 = multi_index_set(dim, 2);
  const auto& mis4 = multi_index_set(dim, 4);
  if (t.rows() != dim || t.cols() != mis2.size())
    throw std::invalid_argument("sigma_from_table: table shape mismatch");
  PForm w(4, dim);
  for (int r = 0; r < mis4.size(); ++r) {
    const auto& q = mis4.at(r);
    const int pq = mis2.rank2(q[0], q[1]), rs = mis2.rank2(q[2], q[3]);
    const int qr = mis2.rank2(q[1], q[2]), ps = mis2.rank2(q[0], q[3]);
    const int pr = mis2.rank2(q[0], q[2]), qs = mis2.rank2(q[1], q[3]);
    // g(T(p,q),T(r,s)) + g(T(q,r),T(p,s)) + g(T(r,p),T(q,s))
    w.coeffs[r] = t.col(pq).dot(t.col(rs)) + t.col(qr).dot(t.col(ps)) -
                  t.col(pr).dot(t.col(qs));
  }
  return w;
}

PForm sigma_T(const PointModel& m) { return sigma_from_table(torsion_frame_table(m), m.dim); }

PForm dT_fourform(const PointModel& m) {
  const double a = m.params.alpha, d = m.params.delta;
  PForm w(4, m.dim);
  for (int i = 0; i < 3; ++i) w = w + (4.0 * a * a) * wedge(m.Phi[i], m.Phi[i]);
  for (int i = 0; i < 3; ++i)
    w = w + (8.0 * a * (d - a)) * wedge(m.Phi[i], m.xi_wedge[i]);
  return w;
}

PForm dT_fourform_horizontal_route(const PointModel& m) {
  const double a = m.params.alpha, d = m.params.delta;
  PForm w(4, m.dim);
  for (int i = 0; i < 3; ++i) w = w + (4.0 * a * a) * wedge(m.PhiH[i], m.PhiH[i]);
  for (int i = 0; i < 3; ++i)
    w = w + (8.0 * a * (d - 2.0 * a)) * wedge(m.PhiH[i], m.xi_wedge[i]);
  return w;
}

SymOp operator_G_T(const PointModel& m) {
  const Matrix t = torsion_frame_table(m);
  return SymOp::from_assembled(t.transpose() * t);
}

SymOp operator_S_T(const PointModel& m) { return fourform_as_operator(sigma_T(m)); }

TorsionPackage build_torsion_package(const PointModel& m) {
  TorsionPackage p;
  p.T3 = torsion_three_form(m);
  p.sigmaT = sigma_T(m);
  p.dT = dT_fourform(m);
  p.GT = operator_G_T(m);
  p.ST = fourform_as_operator(p.sigmaT);
  return p;
}

}  // namespace sasaki
