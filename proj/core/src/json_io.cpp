#include "sasaki/json_io.hpp"

#include <cstdio>

namespace sasaki {

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

ojson jnum(double v) { return format_sci(v); }

ojson to_json(const CheckReport& c) {
  return ojson{{"name", c.name},
               {"max_violation", jnum(c.max_violation)},
               {"tolerance", jnum(c.tolerance)},
               {"pass", c.pass()}};
}

ojson to_json(const CheckList& l) {
  ojson arr = ojson::array();
  for (const auto& c : l) arr.push_back(to_json(c));
  return arr;
}

ojson to_json(const Params& p) {
  return ojson{{"n", p.n},
               {"alpha", jnum(p.alpha)},
               {"delta", jnum(p.delta)},
               {"beta", jnum(p.beta())},
               {"class", p.degenerate() ? "degenerate" : (p.positive() ? "positive" : "negative")},
               {"parallel", p.parallel()}};
}

ojson matrix_to_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(jnum(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson to_json(const PointModel& m) {
  ojson phis = ojson::array();
  for (int i = 0; i < 3; ++i) phis.push_back(matrix_to_json(m.phi[i]));
  return ojson{{"n", m.params.n},
               {"alpha", jnum(m.params.alpha)},
               {"delta", jnum(m.params.delta)},
               {"frame_convention", "vertical-first-adapted-lex"},
               {"phi", std::move(phis)}};
}

ojson to_json(const SpectrumReport& r) {
  ojson eigs = ojson::array();
  for (double v : r.eigenvalues) eigs.push_back(jnum(v));
  ojson clusters = ojson::array();
  for (const auto& [v, mult] : r.clusters)
    clusters.push_back(ojson{{"value", jnum(v)}, {"multiplicity", mult}});
  ojson named = ojson::object();
  for (const auto& [name, res] : r.distinguished)
    named[name] = ojson{{"is_eigenform", res.is_eigenform},
                        {"eigenvalue", jnum(res.eigenvalue)},
                        {"residual", jnum(res.residual)}};
  return ojson{{"eigenvalues", std::move(eigs)},
               {"clusters", std::move(clusters)},
               {"distinguished", std::move(named)},
               {"checks", to_json(r.checks)}};
}

ojson to_json(const EinsteinClassification& c) {
  ojson j{{"kind", to_string(c.kind)}};
  if (c.kind == EinsteinKind::DeltaEqualsAlpha) j["lambda"] = jnum(c.lambda);
  if (c.kind == EinsteinKind::DeltaEquals2nPlus3Alpha) {
    j["lambda1"] = jnum(c.lambda1);
    j["lambda2"] = jnum(c.lambda2);
  }
  return j;
}

ojson to_json(const EinsteinEquivalenceReport& r) {
  return ojson{{"a", jnum(r.a)},
               {"b", jnum(r.b)},
               {"a_prime", jnum(r.a_prime)},
               {"b_prime", jnum(r.b_prime)},
               {"a_plus_b", jnum(r.a_plus_b)},
               {"(n+1)a_prime-b_prime", jnum(r.combo_prime)},
               {"first_triple_residual", jnum(r.first_triple.residual)},
               {"second_triple_residual", jnum(r.second_triple.residual)},
               {"checks", to_json(r.checks)}};
}

ojson to_json(const PositivityCertificate& c) {
  ojson ni = ojson::array();
  for (const auto& e : c.ni)
    ni.push_back(ojson{{"trace", jnum(e.trace)},
                       {"det", jnum(e.det)},
                       {"lambda_min", jnum(e.lambda_min)}});
  return ojson{{"verdict", to_string(c.kind)},
               {"modifier", to_string(c.modifier)},
               {"epsilon", jnum(c.epsilon)},
               {"lambda_min_modified", jnum(c.lambda_min_modified)},
               {"block_evidence",
                ojson{{"lambda1_min", jnum(c.block1_min)},
                      {"lambda2_min", jnum(c.block2_min)},
                      {"lambda3_min", jnum(c.block3_min)},
                      {"ni", std::move(ni)},
                      {"offblock_coupling", jnum(c.offblock_coupling)}}},
               {"frame_plane_omega_max", jnum(c.frame_plane_omega_max)},
               {"notes", c.notes}};
}

ojson to_json(const CisbigResult& r) {
  return ojson{{"trace_poly", jnum(r.trace_poly)},
               {"det_poly", jnum(r.det_poly)},
               {"trace_positive", r.trace_positive},
               {"det_positive", r.det_positive},
               {"delta_gt_2alpha", r.delta_gt_2alpha}};
}

LieModel lie_model_from_json(const ojson& doc, double alpha, double delta) {
  const int dim = doc.at("dim").get<int>();
  std::vector<BracketTriple> triples;
  for (const auto& t : doc.at("triples")) {
    if (!t.is_array() || t.size() != 4)
      throw std::invalid_argument("lie model: each triple must be [i, j, k, c]");
    triples.push_back(
        {t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<double>()});
  }
  auto indices = [&doc](const char* key) {
    std::vector<int> v;
    for (const auto& i : doc.at(key)) v.push_back(i.get<int>());
    return v;
  };
  return make_lie_model(dim, triples, indices("sp1_indices"), indices("g1_indices"),
                        indices("h_indices"), alpha, delta,
                        doc.value("name", std::string("custom")));
}

SymOp symop_from_json(const ojson& doc, int expected_dim2) {
  const ojson& rows = doc.is_object() ? doc.at("mat") : doc;
  if (!rows.is_array() || static_cast<int>(rows.size()) != expected_dim2)
    throw std::invalid_argument("operator: expected a " + std::to_string(expected_dim2) +
                                " x " + std::to_string(expected_dim2) + " row-major matrix");
  Matrix m(expected_dim2, expected_dim2);
  for (int r = 0; r < expected_dim2; ++r) {
    const auto& row = rows[r];
    if (static_cast<int>(row.size()) != expected_dim2)
      throw std::invalid_argument("operator: ragged row in matrix");
    for (int c = 0; c < expected_dim2; ++c) m(r, c) = row[c].get<double>();
  }
  return SymOp::from_assembled(std::move(m), 1e-9);
}

}  // namespace sasaki
