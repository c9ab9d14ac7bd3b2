#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "sasaki/checks.hpp"
#include "sasaki/json_io.hpp"

using namespace sasaki;

TEST_CASE("killing form oracles") {
  SUBCASE("abelian algebra has vanishing killing form") {
    std::vector<Matrix> ad(4, Matrix::Zero(4, 4));
    CHECK(killing_form(ad).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("su(2) in the sigma basis: kappa = -8 I (equals 4 tr(XY))") {
    // [s1,s2] = 2 s3 and cyclic; 4 tr(s_i s_j) = -8 delta_ij in the defining
    // representation
    std::vector<Matrix> ad(3, Matrix::Zero(3, 3));
    ad[0](2, 1) = 2;  ad[0](1, 2) = -2;
    ad[1](0, 2) = 2;  ad[1](2, 0) = -2;
    ad[2](1, 0) = 2;  ad[2](0, 1) = -2;
    const Matrix k = killing_form(ad);
    CHECK((k + 8.0 * Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-13);
  }

  SUBCASE("sp(2) is of compact type: kappa negative definite") {
    const LieModel lm = build_sp_model(1, 1.0, 1.0);
    Eigen::SelfAdjointEigenSolver<Matrix> es(lm.killing);
    CHECK(es.eigenvalues().maxCoeff() < -1e-9);
  }
}

TEST_CASE("sp(n+1)/sp(n) model dimensions and constraints") {
  const LieModel lm = build_sp_model(1, 1.0, 1.0);
  CHECK(lm.dim_g == 10);
  CHECK(lm.dim_m() == 7);
  CHECK(lm.g1_indices.size() == 4);
  CHECK(lm.h_indices.size() == 3);
  CHECK_THROWS_AS((void)build_sp_model(1, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)build_sp_model(0, 1.0, 1.0), std::invalid_argument);

  const LieModel lm2 = build_sp_model(2, 1.0, 1.0);
  CHECK(lm2.dim_g == 21);
  CHECK(lm2.dim_m() == 11);
}

TEST_CASE("reeb commutators on the sphere models") {
  for (double delta : {1.0, 2.0, 3.0}) {
    const LieModel lm = build_sp_model(1, 1.0, delta);
    for (const auto& [i, j, k] :
         std::vector<std::array<int, 3>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
      const Vector br =
          lm.project_m(lm.bracket(lm.embed_m(lm.xi[i]), lm.embed_m(lm.xi[j])));
      CHECK((br - 2.0 * delta * lm.xi[k]).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("homogeneous identities hold for the sphere family") {
  for (auto [n, alpha, delta] : std::vector<std::array<double, 3>>{
           {1, 1.0, 1.0}, {1, 1.0, 2.0}, {1, 1.0, 3.0}, {1, 0.5, 1.5}, {2, 1.0, 1.0},
           {2, 1.0, 2.5}}) {
    const LieModel lm = build_sp_model(static_cast<int>(n), alpha, delta);
    for (const auto& c : verify_homogeneous_identities(lm)) {
      INFO("n=" << n << " alpha=" << alpha << " delta=" << delta << " " << c.name);
      CHECK(c.pass());
    }
    CHECK(lm.params.parallel() == (delta == 2.0 * alpha));
  }
}

TEST_CASE("perturbed horizontal metric is detected") {
  LieModel lm = build_sp_model(1, 1.0, 1.0);
  lm.metric.block(3, 3, 4, 4) *= 1.1;
  bool flagged = false;
  for (const auto& c : verify_homogeneous_identities(lm))
    if (c.name == "differential_eta" && !c.pass()) flagged = true;
  CHECK(flagged);
}

TEST_CASE("pointwise model from the Lie model") {
  SUBCASE("structure axioms and round-sphere curvature at alpha=delta=1") {
    const LieModel lm = build_sp_model(1, 1.0, 1.0);
    const PointModel m = pointwise_of(lm);
    for (const auto& c : check_structure_axioms(m)) {
      INFO(c.name);
      CHECK(c.pass());
    }
    const CurvatureSuite s = build_curvature_suite(m);
    CHECK((s.Rg.mat - Matrix::Identity(21, 21)).cwiseAbs().maxCoeff() < 1e-10);
  }

  SUBCASE("alpha=1, delta=3 certifies strongly positive") {
    const LieModel lm = build_sp_model(1, 1.0, 3.0);
    const PointModel m = pointwise_of(lm);
    const CurvatureSuite s = build_curvature_suite(m);
    const double eps = choose_epsilon(s, m, ModifierKind::sphere_like);
    const auto cert = certify(s, m, canonical_modifier(m, ModifierKind::sphere_like, eps),
                              ModifierKind::sphere_like, eps);
    CHECK(cert.kind == CertificateKind::strongly_positive);
  }

  SUBCASE("n=2 end-to-end smoke") {
    const LieModel lm = build_sp_model(2, 1.0, 1.0);
    const PointModel m = pointwise_of(lm);
    CHECK(m.dim == 11);
    const CurvatureSuite s = build_curvature_suite(m);
    CHECK(s.Rcan.dim2() == 55);
    for (const auto& c : run_spectral_checks(m, s)) {
      INFO(c.name);
      CHECK(c.pass());
    }
  }

  SUBCASE("refuses a model with broken identities") {
    LieModel lm = build_sp_model(1, 1.0, 1.0);
    lm.metric.block(3, 3, 4, 4) *= 2.0;
    CHECK_THROWS_AS((void)pointwise_of(lm), std::invalid_argument);
  }
}

TEST_CASE("homogeneous definiteness tracks the sign of alpha beta") {
  for (double delta : {1.0, 1.5, 2.0, 2.5, 3.0}) {
    const LieModel lm = build_sp_model(1, 1.0, delta);
    const PointModel m = pointwise_of(lm);
    const CurvatureSuite s = build_curvature_suite(m);
    const double ab = 1.0 * 2.0 * (delta - 2.0);
    const double lmin = eigh(s.Rcan).values.minCoeff();
    if (ab >= 0.0) CHECK(lmin > -1e-9);
    if (ab < -1e-9) CHECK(lmin < -1e-9);
  }
}

TEST_CASE("custom structure constants reproduce the built-in sphere model") {
  const LieModel ref = build_sp_model(1, 1.0, 2.0);

  // export the reference brackets as raw triples and rebuild
  std::vector<BracketTriple> triples;
  for (int i = 0; i < ref.dim_g; ++i)
    for (int j = i + 1; j < ref.dim_g; ++j)
      for (int k = 0; k < ref.dim_g; ++k)
        if (ref.ad[i](k, j) != 0.0) triples.push_back({i, j, k, ref.ad[i](k, j)});

  const LieModel custom =
      make_lie_model(ref.dim_g, triples, {0, 1, 2}, {3, 4, 5, 6}, {7, 8, 9}, 1.0, 2.0, "S7");
  for (const auto& c : run_homogeneous_checks(custom)) {
    INFO(c.name);
    CHECK(c.pass());
  }
  CHECK((custom.metric - ref.metric).cwiseAbs().maxCoeff() < 1e-12);

  // the same document through the JSON interface
  ojson doc{{"dim", ref.dim_g},
            {"sp1_indices", {0, 1, 2}},
            {"g1_indices", {3, 4, 5, 6}},
            {"h_indices", {7, 8, 9}},
            {"name", "S7-json"}};
  ojson arr = ojson::array();
  for (const auto& t : triples) arr.push_back({t.i, t.j, t.k, t.c});
  doc["triples"] = arr;
  const LieModel parsed = lie_model_from_json(doc, 1.0, 2.0);
  CHECK((parsed.metric - ref.metric).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(all_pass(verify_homogeneous_identities(parsed)));
}

TEST_CASE("sign constraint: compact data with alpha delta < 0 is rejected") {
  const LieModel ref = build_sp_model(1, 1.0, 1.0);
  std::vector<BracketTriple> triples;
  for (int i = 0; i < ref.dim_g; ++i)
    for (int j = i + 1; j < ref.dim_g; ++j)
      for (int k = 0; k < ref.dim_g; ++k)
        if (ref.ad[i](k, j) != 0.0) triples.push_back({i, j, k, ref.ad[i](k, j)});
  CHECK_THROWS_AS((void)make_lie_model(ref.dim_g, triples, {0, 1, 2}, {3, 4, 5, 6},
                                       {7, 8, 9}, 1.0, -1.0),
                  std::invalid_argument);
}
