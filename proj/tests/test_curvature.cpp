#include <random>

#include "doctest.h"
#include "sasaki/checks.hpp"

using namespace sasaki;

namespace {

// trace-free symmetric operator supported on the anti-self-dual 3-space of
// the n=1 horizontal block: a genuine hyper-Kaehler-type operator
SymOp asd_hyperkaehler_r1(double c1, double c2) {
  const int nh = 6;  // C(4,2)
  Matrix basis(nh, 3);
  basis.setZero();
  const auto& mis = multi_index_set(4, 2);
  auto put = [&](int col, int a, int b, double v) { basis(mis.rank2(a, b), col) = v; };
  // a_1 = e01 - e23, a_2 = e02 + e13, a_3 = e03 - e12 (anti-self-dual)
  put(0, 0, 1, 1.0); put(0, 2, 3, -1.0);
  put(1, 0, 2, 1.0); put(1, 1, 3, 1.0);
  put(2, 0, 3, 1.0); put(2, 1, 2, -1.0);
  basis /= std::sqrt(2.0);
  const Matrix m = c1 * basis.col(0) * basis.col(0).transpose() +
                   c2 * basis.col(1) * basis.col(1).transpose() +
                   (-c1 - c2) * basis.col(2) * basis.col(2).transpose();
  return SymOp::from_assembled(m);
}

}  // namespace

TEST_CASE("curvature check suite passes over the parameter grid") {
  for (int n : {1, 2}) {
    for (auto [alpha, delta] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {1.0, 3.0}, {1.0, 2.0}, {-1.0, -2.0}, {0.8, 0.0}, {1.0, 5.0}}) {
      const PointModel m = build_point_model(Params(n, alpha, delta));
      const CurvatureSuite s = build_curvature_suite(m);
      for (const auto& c : run_curvature_checks(m, s)) {
        INFO("n=" << n << " alpha=" << alpha << " delta=" << delta << " " << c.name);
        CHECK(c.pass());
      }
    }
  }
}

TEST_CASE("R_perp spectrum: 2(n+2) with multiplicity 3") {
  const PointModel m = build_point_model(Params(1, 1.0, 1.0));
  const SymOp rp = operator_R_perp(m);
  const auto eig = eigh(rp).values;
  for (int i = 0; i < eig.size() - 3; ++i) CHECK(std::abs(eig[i]) < 1e-12);
  for (int i = static_cast<int>(eig.size()) - 3; i < eig.size(); ++i)
    CHECK(eig[i] == doctest::Approx(6.0));

  // vanishes on the other two blocks
  const auto split = lambda2_split(m);
  CHECK((rp.mat * split.basis2).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((rp.mat * split.basis3).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("R0 has the quaternionic span as the n-eigenspace") {
  for (int n : {1, 2}) {
    const PointModel m = build_point_model(Params(n, 1.0, 1.0));
    const SymOp r0 = operator_R0(m);
    for (int i = 0; i < 3; ++i) {
      const PForm ph = horizontal_two_form(m, m.PhiH[i]);
      CHECK((r0.apply(ph) - double(n) * ph).coeffs.norm() < 1e-12);
    }
  }
}

TEST_CASE("base operator eigenvalue and degenerate case") {
  const PointModel m = build_point_model(Params(1, 1.0, 1.0));
  const CurvatureSuite s = build_curvature_suite(m);
  for (int i = 0; i < 3; ++i) {
    const PForm ph = horizontal_two_form(m, m.PhiH[i]);
    CHECK((s.RgN.apply(ph) - 4.0 * ph).coeffs.norm() < 1e-12);
  }
  // alpha delta > 0 and R1 = 0: the base operator is nonnegative
  CHECK(eigh(s.RgN).values.minCoeff() > -1e-12);

  // degenerate case delta = 0: RgN = R1 and Rpar = R1
  const PointModel md = build_point_model(Params(1, 1.0, 0.0));
  const SymOp r1 = asd_hyperkaehler_r1(0.4, -0.1);
  const CurvatureSuite sd = build_curvature_suite(md, r1);
  CHECK((sd.RgN.mat - r1.mat).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((restrict_horizontal(sd.Rpar, 1).mat - r1.mat).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("R1 validation accepts hyper-Kaehler type and rejects others") {
  const PointModel m = build_point_model(Params(1, 1.0, 1.0));
  CHECK(all_pass(validate_hyperkaehler_type(m, asd_hyperkaehler_r1(1.0, 0.5))));

  // non-trace-free operator on the anti-self-dual space is not Ricci-flat
  const int nh = 6;
  SymOp bad1 = SymOp::identity(nh);
  const auto checks1 = validate_hyperkaehler_type(m, bad1);
  bool ricci_failed = false, annihilate_failed = false;
  for (const auto& c : checks1) {
    if (c.name == "r1_ricci_flat" && !c.pass()) ricci_failed = true;
    if (c.name == "r1_annihilates_quaternionic_span" && !c.pass()) annihilate_failed = true;
  }
  CHECK(ricci_failed);
  CHECK(annihilate_failed);
  CHECK_THROWS_AS((void)operator_RgN(m, bad1), std::invalid_argument);

  // wrong dimension is rejected outright
  CHECK_FALSE(all_pass(validate_hyperkaehler_type(m, SymOp::zero(5))));
}

TEST_CASE("canonical operator on the distinguished forms (frozen values)") {
  const PointModel m = build_point_model(Params(1, 1.0, 1.0));  // alpha beta = -2
  const CurvatureSuite s = build_curvature_suite(m);

  for (int i = 0; i < 3; ++i) {
    const PForm diff = m.Phi[i] - m.xi_wedge[i];
    // R(Phi_i) = 2ab(n+1)(Phi_i - xi_jk) = -8 (Phi_i - xi_jk)
    CHECK((s.Rcan.apply(m.Phi[i]) - (-8.0) * diff).coeffs.cwiseAbs().maxCoeff() < 1e-12);
    // R(xi_jk) = -2ab(Phi_i - xi_jk) = 4 (Phi_i - xi_jk)
    CHECK((s.Rcan.apply(m.xi_wedge[i]) - 4.0 * diff).coeffs.cwiseAbs().maxCoeff() < 1e-12);
  }

  // R vanishes on V ^ H
  for (int v = 0; v < 3; ++v)
    for (int h = 3; h < 7; ++h)
      CHECK((s.Rcan.mat * wedge_pair(7, v, h).coeffs).norm() < 1e-12);
}

TEST_CASE("round sphere oracle: n=1, alpha=delta=1 is the unit-curvature S^7") {
  const PointModel m = build_point_model(Params(1, 1.0, 1.0));
  const CurvatureSuite s = build_curvature_suite(m);

  // every frame 2-plane has sectional curvature 1
  const auto& mis2 = multi_index_set(7, 2);
  for (int r = 0; r < mis2.size(); ++r)
    CHECK(s.Rg.mat(r, r) == doctest::Approx(1.0).epsilon(1e-10));

  // in fact the full Riemannian operator is the identity
  CHECK((s.Rg.mat - Matrix::Identity(21, 21)).cwiseAbs().maxCoeff() < 1e-12);

  // Einstein constant 6: Ric = 6 g
  const Matrix ric = ricci_from_operator(s.Rg, 7);
  CHECK((ric - 6.0 * Matrix::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("ricci closed form across the Einstein transition") {
  // delta = (2n+3) alpha = 5: Einstein again
  const PointModel m5 = build_point_model(Params(1, 1.0, 5.0));
  const CurvatureSuite s5 = build_curvature_suite(m5);
  const Matrix ric5 = ricci_from_operator(s5.Rg, 7);
  const double mean = ric5.trace() / 7.0;
  CHECK((ric5 - mean * Matrix::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-10);

  // delta = 2: vertical and horizontal Ricci eigenvalues differ by -6
  const PointModel m2 = build_point_model(Params(1, 1.0, 2.0));
  const CurvatureSuite s2 = build_curvature_suite(m2);
  const Matrix ric2 = ricci_from_operator(s2.Rg, 7);
  CHECK(ric2(0, 0) - ric2(3, 3) == doctest::Approx(-6.0).epsilon(1e-10));
}

TEST_CASE("parallel case: canonical curvature kills the vertical directions") {
  const PointModel m = build_point_model(Params(1, 1.0, 2.0));  // beta = 0
  const CurvatureSuite s = build_curvature_suite(m);
  for (int i = 0; i < 3; ++i) {
    CHECK((s.Rcan.mat * m.xi_wedge[i].coeffs).norm() < 1e-12);
    // R = Rpar
    CHECK((s.Rcan.mat - s.Rpar.mat).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("bianchi split of the canonical operator reproduces sigma_T") {
  const PointModel m = build_point_model(Params(1, 1.0, 1.0));
  const CurvatureSuite s = build_curvature_suite(m);
  const PForm st = sigma_T(m);

  // the raw Bianchi image of the operator is exactly -sigma_T
  CHECK((bianchi_image(s.Rcan, 7) + st).coeffs.cwiseAbs().maxCoeff() < 1e-11);

  // hence the Lambda^4 component of the split is -sigma_T / 3
  const auto split = bianchi_split(s.Rcan, 7);
  CHECK((split.fourform_part + (1.0 / 3.0) * st).coeffs.cwiseAbs().maxCoeff() < 1e-11);
  const SymOp back = split.curvature_part + fourform_as_operator(split.fourform_part);
  CHECK((back.mat - s.Rcan.mat).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("curvature suite with a nonzero hyper-Kaehler part keeps the identities") {
  const PointModel m = build_point_model(Params(1, 1.0, 2.5));
  const CurvatureSuite s = build_curvature_suite(m, asd_hyperkaehler_r1(0.6, -0.2));
  for (const auto& c : run_curvature_checks(m, s)) {
    INFO(c.name);
    CHECK(c.pass());
  }
}
