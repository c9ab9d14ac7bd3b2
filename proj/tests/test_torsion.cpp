#include <random>

#include "doctest.h"
#include "sasaki/checks.hpp"

using namespace sasaki;

TEST_CASE("torsion check suite passes across the parameter classes") {
  for (int n : {1, 2, 3}) {
    for (auto [alpha, delta] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {1.0, 2.0}, {1.0, 0.0}, {-1.0, 1.5}, {0.7, -1.3}, {2.0, 0.5}}) {
      const PointModel m = build_point_model(Params(n, alpha, delta));
      for (const auto& c : run_torsion_checks(m)) {
        INFO("n=" << n << " alpha=" << alpha << " delta=" << delta << " " << c.name);
        CHECK(c.pass());
      }
    }
  }
}

TEST_CASE("torsion on the Reeb plane: T(xi_2, xi_3) = 2(delta-4alpha) xi_1") {
  const PointModel m = build_point_model(Params(1, 1.0, 1.0));
  const Vector t = torsion_map(m, m.xi[1], m.xi[2]);
  CHECK((t + 6.0 * m.xi[0]).norm() < 1e-13);
}

TEST_CASE("eta_123 coefficient of the torsion vanishes for alpha = delta") {
  const PointModel m = build_point_model(Params(1, 1.3, 1.3));
  PForm expected(3, m.dim);
  for (int i = 0; i < 3; ++i) {
    PForm eta(1, m.dim);
    eta.coeffs = m.eta[i];
    expected = expected + (2.0 * 1.3) * wedge(eta, m.Phi[i]);
  }
  CHECK((torsion_three_form(m) - expected).coeffs.cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("torsion of adapted horizontal planes: T(e_l, phi_i e_l) = -2 alpha xi_i") {
  const PointModel m = build_point_model(Params(2, 1.5, 0.7));
  for (int i = 0; i < 3; ++i)
    for (int l = 3; l < m.dim; ++l) {
      const Vector el = Vector::Unit(m.dim, l);
      const Vector t = torsion_map(m, el, m.phi[i] * el);
      CHECK((t + 2.0 * 1.5 * m.xi[i]).norm() < 1e-12);
    }
}

TEST_CASE("torsion vanishes across distinct quaternionic blocks") {
  const PointModel m = build_point_model(Params(2, 1.0, 3.0));
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    Vector x = Vector::Zero(m.dim), y = Vector::Zero(m.dim);
    for (int r = 3; r < 7; ++r) x[r] = gauss(rng);
    for (int r = 7; r < 11; ++r) y[r] = gauss(rng);
    CHECK(torsion_map(m, x, y).norm() < 1e-12);
  }
  CHECK(torsion_map(m, m.xi[0], m.xi[0]).norm() == 0.0);
}

TEST_CASE("sigma_T restricted to the horizontal 4-space (n=1) is 12 alpha^2 dVol") {
  for (double delta : {1.0, 2.0, 3.0}) {
    const PointModel m = build_point_model(Params(1, 1.25, delta));
    const PForm st = sigma_T(m);
    const double coeff = inner(st, PForm::basis(4, 7, {3, 4, 5, 6}));
    CHECK(coeff == doctest::Approx(12.0 * 1.25 * 1.25).epsilon(1e-12));
  }
}

TEST_CASE("zero torsion table gives the zero 4-form") {
  const int d = 7;
  const Matrix zero_table = Matrix::Zero(d, binom(d, 2));
  CHECK(sigma_from_table(zero_table, d).coeffs.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dT contracted with two Reeb fields (n=1, random horizontal X, Y)") {
  const Params p(1, 1.0, 2.5);
  const PointModel m = build_point_model(p);
  const PForm dt = dT_fourform(m);
  std::mt19937 rng(23);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double ab4 = 4.0 * p.alpha * p.beta();
  for (int trial = 0; trial < 20; ++trial) {
    Vector x(m.dim), y(m.dim);
    for (int r = 0; r < m.dim; ++r) {
      x[r] = gauss(rng);
      y[r] = gauss(rng);
    }
    for (const auto& [i, j, k] : std::vector<std::array<int, 3>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
      const double lhs = evaluate(dt, {x, y, m.xi[i], m.xi[j]});
      const double phik = x.dot(m.phi[k] * y);
      const double etaij = m.eta[i].dot(x) * m.eta[j].dot(y) - m.eta[j].dot(x) * m.eta[i].dot(y);
      CHECK(lhs == doctest::Approx(ab4 * (phik + etaij)).epsilon(1e-9));
    }
  }
}

TEST_CASE("dT vanishes on three horizontal arguments and one Reeb field") {
  const PointModel m = build_point_model(Params(1, 1.0, 3.0));
  const PForm dt = dT_fourform(m);
  for (int a = 3; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c)
        for (int r = 0; r < 3; ++r)
          CHECK(std::abs(evaluate(dt, {Vector::Unit(7, a), Vector::Unit(7, b),
                                       Vector::Unit(7, c), m.xi[r]})) < 1e-13);
}

TEST_CASE("parallel case: dT is the pure quaternionic wedge sum") {
  const PointModel m = build_point_model(Params(1, 1.0, 2.0));  // beta = 0
  PForm expected(4, m.dim);
  for (int i = 0; i < 3; ++i) expected = expected + 4.0 * wedge(m.PhiH[i], m.PhiH[i]);
  CHECK((dT_fourform(m) - expected).coeffs.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("operator actions at alpha = delta = 1 (frozen values)") {
  const PointModel m = build_point_model(Params(1, 1.0, 1.0));
  const TorsionPackage pkg = build_torsion_package(m);

  // G_T(xi_23) = -12 Phi_1 + 24 xi_23
  const PForm gt = pkg.GT.apply(m.xi_wedge[0]);
  CHECK((gt - (-12.0 * m.Phi[0] + 24.0 * m.xi_wedge[0])).coeffs.cwiseAbs().maxCoeff() < 1e-12);

  // S_T(xi_23) = -4 (Phi_1 + xi_23)
  const PForm st = pkg.ST.apply(m.xi_wedge[0]);
  CHECK((st + 4.0 * (m.Phi[0] + m.xi_wedge[0])).coeffs.cwiseAbs().maxCoeff() < 1e-12);

  // S_T(Phi_1) = 16 Phi_1 + 8 xi_23 (from 4a^2(2n+1) +- 2ab with beta = -2)
  const PForm stp = pkg.ST.apply(m.Phi[0]);
  CHECK((stp - (16.0 * m.Phi[0] + 8.0 * m.xi_wedge[0])).coeffs.cwiseAbs().maxCoeff() < 1e-12);
}
