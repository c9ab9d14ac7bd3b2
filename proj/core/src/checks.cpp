#include "sasaki/checks.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <random>

namespace sasaki {

namespace {

constexpr int kEven[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

PForm decomposable(const Vector& x, const Vector& y) {
  return two_form_from_matrix(x * y.transpose() - y * x.transpose());
}

}  // namespace

CheckList run_structure_checks(const PointModel& m) {
  CheckList out = check_structure_axioms(m);
  const int n = m.params.n;
  const double tol = 1e-10;

  double v_phi_norm = 0, v_phih_norm = 0, v_phi_xi = 0, v_phih_orth = 0, v_phi_pair = 0;
  for (int i = 0; i < 3; ++i) {
    v_phi_norm = std::max(v_phi_norm, std::abs(inner(m.Phi[i], m.Phi[i]) - (2.0 * n + 1.0)));
    v_phih_norm = std::max(v_phih_norm, std::abs(inner(m.PhiH[i], m.PhiH[i]) - 2.0 * n));
    v_phi_xi = std::max(v_phi_xi, std::abs(inner(m.Phi[i], m.xi_wedge[i]) + 1.0));
    v_phih_orth = std::max(v_phih_orth, std::abs(inner(m.PhiH[i], m.xi_wedge[i])));
    for (int j = 0; j < 3; ++j)
      if (i != j) v_phi_pair = std::max(v_phi_pair, std::abs(inner(m.Phi[i], m.Phi[j])));
  }
  out.push_back({"Phi_norm_2n+1", v_phi_norm, tol});
  out.push_back({"PhiH_norm_2n", v_phih_norm, tol});
  out.push_back({"Phi_xi_pairing_-1", v_phi_xi, tol});
  out.push_back({"PhiH_orthogonal_to_xi", v_phih_orth, tol});
  out.push_back({"Phi_pairwise_orthogonal", v_phi_pair, tol});

  // Phi_i(xi_j, xi_k) = -1 for even permutations
  double v_phi_vert = 0;
  for (const auto& p : kEven)
    v_phi_vert = std::max(v_phi_vert, std::abs(m.phi[p[0]](p[1], p[2]) + 1.0));
  out.push_back({"Phi_on_reeb_pairs", v_phi_vert, tol});

  // split dimensions and orthogonality
  const auto split = lambda2_split(m);
  const bool dims_ok = split.basis1.cols() == 6 &&
                       split.basis2.cols() == 6 * n - 3 + 16 * binom(n, 2) &&
                       split.basis3.cols() == 12 * n &&
                       split.basis1.rows() == binom(4 * n + 3, 2);
  out.push_back({"lambda2_block_dimensions", dims_ok ? 0.0 : 1.0, 0.5});

  Matrix all(split.basis1.rows(), split.basis1.cols() + split.basis2.cols() + split.basis3.cols());
  all << split.basis1, split.basis2, split.basis3;
  const Matrix gram = all.transpose() * all;
  out.push_back({"lambda2_bases_orthonormal",
                 (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff(),
                 1e-10});

  // span{Phi_i^H} closed under the induced phi action on Lambda^2 H
  const int dh = m.horizontal_dim();
  Matrix q(binom(dh, 2), 3);
  for (int i = 0; i < 3; ++i)
    q.col(i) = horizontal_two_form(m, m.PhiH[i]).coeffs / std::sqrt(2.0 * n);
  double v_closed = 0;
  for (int i = 0; i < 3; ++i) {
    const Matrix act = induced_two_form_action(m.phi[i].block(3, 3, dh, dh));
    for (int j = 0; j < 3; ++j) {
      const Vector img = act * q.col(j);
      v_closed = std::max(v_closed, (img - q * (q.transpose() * img)).norm());
    }
  }
  out.push_back({"quaternionic_span_invariant", v_closed, 1e-9});
  return out;
}

CheckList run_torsion_checks(const PointModel& m) {
  CheckList out;
  const Params& p = m.params;
  const double a = p.alpha, dl = p.delta, b = p.beta();
  const double scale = std::max({1.0, a * a, std::abs(a * dl), dl * dl});
  const double tol9 = 1e-9 * scale, tol10 = 1e-10 * scale;

  const TorsionPackage pkg = build_torsion_package(m);

  out.push_back({"dT_two_routes_agree",
                 (pkg.dT - dT_fourform_horizontal_route(m)).coeffs.cwiseAbs().maxCoeff(),
                 tol10});
  out.push_back({"dT_equals_2_sigmaT",
                 (pkg.dT - 2.0 * pkg.sigmaT).coeffs.cwiseAbs().maxCoeff(), tol10});

  // independent torsion-map route (pointwise structure-tensor expansion)
  const auto& mis2 = multi_index_set(m.dim, 2);
  Matrix table_formula(m.dim, mis2.size());
  for (int r = 0; r < mis2.size(); ++r)
    table_formula.col(r) = torsion_map_formula(m, Vector::Unit(m.dim, mis2.at(r)[0]),
                                               Vector::Unit(m.dim, mis2.at(r)[1]));
  const Matrix table = torsion_frame_table(m);
  out.push_back(
      {"torsion_map_two_routes_agree", (table - table_formula).cwiseAbs().maxCoeff(), tol10});
  out.push_back({"GT_formula_route_agrees",
                 (pkg.GT.mat - table_formula.transpose() * table_formula).cwiseAbs().maxCoeff(),
                 tol10});

  out.push_back({"GT_positive_semidefinite",
                 std::max(0.0, -eigh(pkg.GT).values.minCoeff()), tol9});

  // structural mapping: horizontal or vertical pairs map into V, mixed into H
  double v_struct = 0;
  for (int r = 0; r < mis2.size(); ++r) {
    const int i = mis2.at(r)[0], j = mis2.at(r)[1];
    const Vector& t = table.col(r);
    if (i < 3 && j >= 3)
      v_struct = std::max(v_struct, t.head(3).cwiseAbs().maxCoeff());
    else
      v_struct = std::max(v_struct, t.tail(m.dim - 3).cwiseAbs().maxCoeff());
  }
  out.push_back({"torsion_block_mapping", v_struct, tol10});

  // T(xi_j, xi_k) = 2(delta - 4 alpha) xi_i
  double v_reeb = 0;
  for (const auto& q : kEven) {
    const Vector t = table.col(mis2.rank2(std::min(q[1], q[2]), std::max(q[1], q[2])));
    const double sign = q[1] < q[2] ? 1.0 : -1.0;
    v_reeb = std::max(v_reeb, (sign * t - 2.0 * (dl - 4.0 * a) * m.xi[q[0]]).norm());
  }
  out.push_back({"torsion_on_reeb_pairs", v_reeb, tol9});

  // T(e_l, xi_i) = -T(xi_i, e_l) = 2 alpha phi_i e_l
  double v_vh = 0;
  for (int i = 0; i < 3; ++i)
    for (int l = 3; l < m.dim; ++l) {
      const Vector t = table.col(mis2.rank2(i, l));  // T(xi_i, e_l)
      v_vh = std::max(v_vh, (t + 2.0 * a * m.phi[i].col(l)).norm());
    }
  out.push_back({"torsion_mixed_pairs", v_vh, tol9});

  // operator actions on the distinguished forms
  double v_st_xi = 0, v_st_phi = 0, v_gt_xi = 0, v_gt_phi = 0;
  const double c_phi = 4.0 * a * a * (2.0 * p.n + 1.0);
  for (int i = 0; i < 3; ++i) {
    const PForm st_xi = pkg.ST.apply(m.xi_wedge[i]);
    v_st_xi = std::max(
        v_st_xi, (st_xi - (2.0 * a * b) * (m.Phi[i] + m.xi_wedge[i])).coeffs.cwiseAbs().maxCoeff());

    const PForm st_phi = pkg.ST.apply(m.Phi[i]);
    const PForm st_phi_expected = (c_phi - 2.0 * a * b) * m.Phi[i] +
                                  (c_phi + 2.0 * a * b * (2.0 * p.n - 1.0)) * m.xi_wedge[i];
    v_st_phi = std::max(v_st_phi, (st_phi - st_phi_expected).coeffs.cwiseAbs().maxCoeff());

    const PForm gt_xi = pkg.GT.apply(m.xi_wedge[i]);
    const PForm gt_xi_expected =
        (b - 4.0 * a) * ((2.0 * a) * m.Phi[i] + (b - 2.0 * a) * m.xi_wedge[i]);
    v_gt_xi = std::max(v_gt_xi, (gt_xi - gt_xi_expected).coeffs.cwiseAbs().maxCoeff());

    const PForm gt_phi = pkg.GT.apply(m.Phi[i]);
    const double c1 = 8.0 * a * a * (p.n + 1.0) - 2.0 * a * b;
    const double c2 = -8.0 * a * a * (p.n + 1.0) - b * b + 2.0 * a * b * (2.0 * p.n + 3.0);
    const PForm gt_phi_expected = c1 * m.Phi[i] + c2 * m.xi_wedge[i];
    v_gt_phi = std::max(v_gt_phi, (gt_phi - gt_phi_expected).coeffs.cwiseAbs().maxCoeff());
  }
  out.push_back({"ST_on_xi_pairs", v_st_xi, tol9});
  out.push_back({"ST_on_Phi", v_st_phi, tol9});
  out.push_back({"GT_on_xi_pairs", v_gt_xi, tol9});
  out.push_back({"GT_on_Phi", v_gt_phi, tol9});
  return out;
}

CheckList run_curvature_checks(const PointModel& m, const CurvatureSuite& s) {
  const Params& p = m.params;
  const double a = p.alpha, dl = p.delta;
  const int n = p.n;
  const double scale = std::max(1.0, s.Rg.max_abs());
  const double tol = 1e-9 * scale;

  CheckList out = curvature_tensor_identities(m, s.Rcan);

  double v_perp_ev = 0, v_perp_ker = 0, v_par_phih = 0, v_rgn_phih = 0;
  for (int i = 0; i < 3; ++i) {
    const PForm minus = m.Phi[i] - m.xi_wedge[i];
    v_perp_ev = std::max(v_perp_ev,
                         (s.Rperp.apply(minus) - (2.0 * (n + 2.0)) * minus).coeffs.norm());
    const PForm plus = m.Phi[i] + (n + 1.0) * m.xi_wedge[i];
    v_perp_ker = std::max(v_perp_ker, s.Rperp.apply(plus).coeffs.norm());
    v_par_phih = std::max(v_par_phih, (s.Rpar.mat * m.PhiH[i].coeffs).norm());
    const PForm ph = horizontal_two_form(m, m.PhiH[i]);
    v_rgn_phih = std::max(
        v_rgn_phih, (s.RgN.apply(ph) - (4.0 * a * dl * n) * ph).coeffs.norm());
  }
  out.push_back({"Rperp_eigenvalue_2(n+2)", v_perp_ev, tol});
  out.push_back({"Rperp_kernel_triple", v_perp_ker, tol});
  out.push_back({"Rpar_annihilates_PhiH", v_par_phih, tol});
  out.push_back({"RgN_PhiH_eigenvalue_4adn", v_rgn_phih, tol});

  // Z ^ phi_i Z + phi_j Z ^ phi_k Z in ker Rpar
  std::mt19937 rng(777);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double v_par_ker = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Vector z = Vector::Zero(m.dim);
    for (int r = 3; r < m.dim; ++r) z[r] = gauss(rng);
    for (const auto& q : kEven) {
      const PForm w = decomposable(z, m.phi[q[0]] * z) +
                      decomposable(m.phi[q[1]] * z, m.phi[q[2]] * z);
      v_par_ker = std::max(v_par_ker, (s.Rpar.mat * w.coeffs).norm() / z.squaredNorm());
    }
  }
  out.push_back({"Rpar_kernel_quaternionic_planes", v_par_ker, tol});

  out.push_back({"Rpar_two_routes_agree",
                 (s.Rpar.mat - operator_R_par_kn_route(m, s.R1).mat).cwiseAbs().maxCoeff(),
                 1e-10 * scale});

  // Rg actions on the distinguished pairs
  double v_rg_xi = 0, v_rg_phi = 0;
  for (int i = 0; i < 3; ++i) {
    const PForm rg_xi = s.Rg.apply(m.xi_wedge[i]);
    const PForm rg_xi_expected = (2.0 * a * (a - dl)) * m.Phi[i] +
                                 (a * a + (a - dl) * (a - dl)) * m.xi_wedge[i];
    v_rg_xi = std::max(v_rg_xi, (rg_xi - rg_xi_expected).coeffs.cwiseAbs().maxCoeff());

    const PForm rg_phi = s.Rg.apply(m.Phi[i]);
    const PForm rg_phi_expected = (a * (dl - a) * (4.0 * n + 1.0) + a * dl) * m.Phi[i] -
                                  ((a - dl) * (a - dl)) * m.xi_wedge[i];
    v_rg_phi = std::max(v_rg_phi, (rg_phi - rg_phi_expected).coeffs.cwiseAbs().maxCoeff());
  }
  out.push_back({"Rg_on_xi_pairs", v_rg_xi, tol});
  out.push_back({"Rg_on_Phi", v_rg_phi, tol});

  out.push_back({"ricci_matches_closed_form",
                 (ricci_from_operator(s.Rg, m.dim) - ricci_closed_form(m)).cwiseAbs().maxCoeff(),
                 tol});
  return out;
}

CheckList run_spectral_checks(const PointModel& m, const CurvatureSuite& s) {
  const Params& p = m.params;
  const double scale = std::max(1.0, s.Rcan.max_abs());
  CheckList out = verify_canonical_eigenforms(s, m).checks;

  // Spec(R) (+) {0 x3} = Spec(Rpar) (+) {2ab(n+2) x3}
  const double ev_perp = 2.0 * p.alpha * p.beta() * (p.n + 2.0);
  auto with = [](std::vector<double> v, double x, int k) {
    v.insert(v.end(), k, x);
    return v;
  };
  const auto eig_r = spectrum(s.Rcan).eigenvalues;
  const auto eig_par = spectrum(s.Rpar).eigenvalues;
  out.push_back({"SpecR_multiset_identity",
                 multiset_distance(with(eig_r, 0.0, 3), with(eig_par, ev_perp, 3)),
                 1e-7 * scale});

  const auto eig_rgn = spectrum(s.RgN).eigenvalues;
  const auto eig_par_h = spectrum(restrict_horizontal(s.Rpar, p.n)).eigenvalues;
  out.push_back({"SpecRN_multiset_identity",
                 multiset_distance(with(eig_rgn, 0.0, 3),
                                   with(eig_par_h, 4.0 * p.alpha * p.delta * p.n, 3)),
                 1e-7 * scale});
  return out;
}

CheckList run_einstein_checks(const PointModel& m, const CurvatureSuite& s) {
  const Params& p = m.params;
  const double scale = std::max({1.0, p.alpha * p.alpha, p.delta * p.delta});
  auto eq = verify_einstein_equivalence(s, m);
  CheckList out = eq.checks;

  const auto cls = einstein_classify(p);
  const Matrix ric = ricci_from_operator(s.Rg, m.dim);
  const double mean = ric.trace() / m.dim;
  const double iso = (ric - mean * Matrix::Identity(m.dim, m.dim)).cwiseAbs().maxCoeff();
  const bool ricci_einstein = iso < 1e-7 * scale;
  const bool classified = cls.kind != EinsteinKind::NotEinstein;
  out.push_back({"einstein_iff_classified", classified == ricci_einstein ? 0.0 : 1.0, 0.5});

  if (classified) {
    double v = 0;
    for (int i = 0; i < 3; ++i) {
      const PForm minus = m.Phi[i] - m.xi_wedge[i];
      const PForm plus = m.Phi[i] + (p.n + 1.0) * m.xi_wedge[i];
      const double l1 = cls.kind == EinsteinKind::DeltaEqualsAlpha ? cls.lambda : cls.lambda1;
      const double l2 = cls.kind == EinsteinKind::DeltaEqualsAlpha ? cls.lambda : cls.lambda2;
      v = std::max(v, (s.Rg.apply(minus) - l1 * minus).coeffs.norm() / minus.norm());
      v = std::max(v, (s.Rg.apply(plus) - l2 * plus).coeffs.norm() / plus.norm());

      // in the Einstein case the kernel triple of Rcan picks up the full
      // eigenvalue from (G_T + S_T)/4
      const PForm gs = 0.25 * (s.GT.apply(plus) + s.ST.apply(plus));
      v = std::max(v, (gs - l2 * plus).coeffs.norm() / plus.norm());
    }
    out.push_back({"einstein_eigenvalues", v, 1e-8 * scale});
  }
  return out;
}

CheckList run_positivity_checks(const PointModel& m, const CurvatureSuite& s) {
  const Params& p = m.params;
  const double a = p.alpha, ab = p.alpha * p.beta();
  const double scale = std::max(1.0, s.Rg.max_abs());
  const double tol9 = 1e-9 * std::max(1.0, scale);
  CheckList out;

  const auto split = lambda2_split(m);
  double v_coupling = 0;
  for (const SymOp* op : {&s.Rcan, &s.GT, &s.ST})
    v_coupling = std::max(v_coupling, block_decompose(*op, split).offblock_norm);
  out.push_back({"block_coupling_R_GT_ST", v_coupling, 1e-9 * scale});

  const auto gt_blocks = block_decompose(s.GT, split);
  out.push_back({"G2_vanishes",
                 gt_blocks.b2.size() ? gt_blocks.b2.cwiseAbs().maxCoeff() : 0.0, tol9});

  std::vector<double> g3_expected(8 * p.n, 0.0);
  g3_expected.insert(g3_expected.end(), 4 * p.n, 12.0 * a * a);
  const auto g3_eigs = eigh(SymOp::from_assembled(gt_blocks.b3, 1e-9)).values;
  out.push_back({"G3_spectrum",
                 multiset_distance(std::vector<double>(g3_eigs.data(),
                                                       g3_eigs.data() + g3_eigs.size()),
                                   g3_expected),
                 1e-7 * scale});

  // ker G3 basis e_r ^ xi_i + phi_j e_r ^ xi_k: 8n-dimensional, S_T acts as
  // -2 alpha beta id on it
  std::vector<Vector> kervecs;
  double v_ker_gt = 0, v_ker_st = 0;
  for (int r = 3; r < m.dim; ++r)
    for (const auto& q : kEven) {
      const PForm v = decomposable(Vector::Unit(m.dim, r), m.xi[q[0]]) +
                      decomposable(m.phi[q[1]] * Vector::Unit(m.dim, r), m.xi[q[2]]);
      kervecs.push_back(v.coeffs);
      v_ker_gt = std::max(v_ker_gt, (s.GT.mat * v.coeffs).norm());
      v_ker_st =
          std::max(v_ker_st, (s.ST.mat * v.coeffs + 2.0 * ab * v.coeffs).norm());
    }
  out.push_back({"G3_kernel_vectors", v_ker_gt, tol9});
  out.push_back({"ST_minus_2ab_on_ker_G3", v_ker_st, tol9});

  Matrix kmat(kervecs.front().size(), kervecs.size());
  for (std::size_t c = 0; c < kervecs.size(); ++c) kmat.col(static_cast<int>(c)) = kervecs[c];
  const auto svals = Eigen::JacobiSVD<Matrix>(kmat).singularValues();
  int rank = 0;
  for (int i = 0; i < svals.size(); ++i)
    if (svals[i] > 1e-8) ++rank;
  out.push_back({"ker_G3_rank_8n", rank == 8 * p.n ? 0.0 : 1.0, 0.5});

  // N_i 2x2 of alpha beta Rperp + GT/4 matches the closed form (nu_p = 0)
  const SymOp theorem_op = ab * s.Rperp + 0.25 * s.GT;
  const auto th_blocks = block_decompose(theorem_op, split);
  double v_ni = 0;
  const Matrix ni_expected = ni_block(p, 0.0);
  for (int i = 0; i < 3; ++i)
    v_ni = std::max(v_ni,
                    (th_blocks.b1.block<2, 2>(2 * i, 2 * i) - ni_expected).cwiseAbs().maxCoeff());
  out.push_back({"ni_block_matches_assembled", v_ni, tol9});

  // positivity of the Lambda^2_1 block tracks the sign of alpha beta
  const double l1_min = eigh(SymOp::from_assembled(th_blocks.b1, 1e-9)).values.minCoeff();
  double corn_viol = 0.0;
  if (ab > 1e-12 && l1_min <= 0.0) corn_viol = 1.0;
  if (ab < -1e-12 && l1_min >= 0.0) corn_viol = 1.0;
  out.push_back({"corn_sign_consistency", corn_viol, 0.5});

  // fatness operator spectrum {3 delta^2 x 4n, 0 x 8n}
  const auto f_eigs = eigh(fatness_operator(m)).values;
  std::vector<double> f_expected(8 * p.n, 0.0);
  f_expected.insert(f_expected.end(), 4 * p.n, 3.0 * p.delta * p.delta);
  out.push_back({"fatness_spectrum",
                 multiset_distance(std::vector<double>(f_eigs.data(),
                                                       f_eigs.data() + f_eigs.size()),
                                   f_expected),
                 1e-7 * std::max(1.0, p.delta * p.delta)});
  return out;
}

CheckList run_homogeneous_checks(const LieModel& lm) {
  CheckList out = verify_homogeneous_identities(lm);
  const PointModel model = pointwise_of(lm);
  const auto structure = check_structure_axioms(model);
  double v = 0;
  for (const auto& c : structure) v = std::max(v, c.max_violation);
  out.push_back({"pointwise_model_structure_axioms", v, 1e-9});
  return out;
}

}  // namespace sasaki
