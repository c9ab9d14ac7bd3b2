// sasaki-lab: build pointwise or homogeneous 3-(alpha,delta)-Sasaki models,
// verify the curvature/torsion identity suites, certify strong positivity,
// sweep parameter grids, and export operators. Reports are deterministic
// JSON (fixed field order, every float rendered as %.12e).

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sasaki/json_io.hpp"

using namespace sasaki;

namespace {

struct CliConfig {
  std::string model = "point";
  int n = 1;
  double alpha = 1.0;
  double delta = 1.0;
  std::string lie_file;
  std::string r1_file;
  std::string modifier = "sigma_only";
  std::string modifier_file;
  std::string epsilon = "0";  // number or "auto"
  std::vector<std::string> checks = {"all"};
  std::string output;  // empty = stdout
  double nu = 0.0;
  std::vector<double> alphas, deltas;  // sweep grid
};

int thread_budget() {
  if (const char* env = std::getenv("SASAKI_LAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

ojson read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  ojson doc;
  in >> doc;
  return doc;
}

void emit(const ojson& doc, const std::string& output) {
  const std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot write output file: " + output);
    out << text;
  }
}

struct ModelBundle {
  PointModel model;
  std::optional<LieModel> lie;
  std::optional<SymOp> r1;
};

// "sp(k)/sp(k-1)" selects the built-in homogeneous family with n = k-1
std::optional<int> parse_sp_name(const std::string& name) {
  int k = 0, h = 0;
  if (std::sscanf(name.c_str(), "sp(%d)/sp(%d)", &k, &h) == 2 && h == k - 1 && h >= 1)
    return h;
  return std::nullopt;
}

ModelBundle build_bundle(const CliConfig& cfg) {
  ModelBundle b;
  const Params params(cfg.n, cfg.alpha, cfg.delta);
  if (cfg.model == "point") {
    b.model = build_point_model(params);
  } else if (cfg.model == "sp_homogeneous" || parse_sp_name(cfg.model)) {
    const int n = parse_sp_name(cfg.model).value_or(cfg.n);
    if (parse_sp_name(cfg.model) && n != cfg.n && cfg.n != 1)
      throw std::invalid_argument("model name and --n disagree");
    b.lie = build_sp_model(n, cfg.alpha, cfg.delta);
    b.model = pointwise_of(*b.lie);
  } else if (cfg.model == "custom_lie") {
    if (cfg.lie_file.empty())
      throw std::invalid_argument("custom_lie model requires --lie-file");
    b.lie = lie_model_from_json(read_json_file(cfg.lie_file), cfg.alpha, cfg.delta);
    if (b.lie->params.n != cfg.n)
      throw std::invalid_argument("lie model g_1 dimension disagrees with --n");
    b.model = pointwise_of(*b.lie);
  } else {
    throw std::invalid_argument("unknown model kind: " + cfg.model);
  }
  if (!cfg.r1_file.empty()) {
    const int nh = static_cast<int>(binom(4 * b.model.params.n, 2));
    b.r1 = symop_from_json(read_json_file(cfg.r1_file), nh);
  }
  return b;
}

ojson config_json(const CliConfig& cfg, const char* command) {
  ojson j{{"command", command},
          {"model", cfg.model},
          {"n", cfg.n},
          {"alpha", jnum(cfg.alpha)},
          {"delta", jnum(cfg.delta)}};
  if (!cfg.lie_file.empty()) j["lie_file"] = cfg.lie_file;
  if (!cfg.r1_file.empty()) j["r1_file"] = cfg.r1_file;
  return j;
}

ModifierKind parse_modifier(const std::string& name) {
  if (name == "none") return ModifierKind::none;
  if (name == "sigma_only") return ModifierKind::sigma_only;
  if (name == "sphere_like") return ModifierKind::sphere_like;
  if (name == "custom") return ModifierKind::custom;
  throw std::invalid_argument("unknown modifier kind: " + name);
}

PForm load_custom_modifier(const std::string& path, int dim) {
  const ojson doc = read_json_file(path);
  const ojson& arr = doc.is_object() ? doc.at("coeffs") : doc;
  PForm w(4, dim);
  if (!arr.is_array() || static_cast<int>(arr.size()) != w.coeffs.size())
    throw std::invalid_argument("modifier file: expected " +
                                std::to_string(w.coeffs.size()) + " coefficients");
  for (int i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] = arr[i].get<double>();
  return w;
}

bool wants(const std::vector<std::string>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c == "all" || c == name) return true;
  return false;
}

int run_verify(const CliConfig& cfg) {
  const ModelBundle b = build_bundle(cfg);
  const CurvatureSuite suite = build_curvature_suite(b.model, b.r1);

  ojson results = ojson::object();
  bool pass = true;
  auto section = [&](const std::string& name, const CheckList& checks, ojson extra = {}) {
    ojson sec{{"checks", to_json(checks)}, {"pass", all_pass(checks)}};
    if (!extra.is_null())
      for (auto& [k, v] : extra.items()) sec[k] = v;
    pass = pass && all_pass(checks);
    results[name] = std::move(sec);
  };

  if (wants(cfg.checks, "structure")) section("structure", run_structure_checks(b.model));
  if (wants(cfg.checks, "torsion")) section("torsion", run_torsion_checks(b.model));
  if (wants(cfg.checks, "curvature"))
    section("curvature", run_curvature_checks(b.model, suite));
  if (wants(cfg.checks, "spectra")) {
    const auto rep = verify_canonical_eigenforms(suite, b.model);
    ojson extra{{"canonical_spectrum", to_json(rep)}};
    extra["notes"] = ojson::array(
        {"base operator eigenvalue on span{Phi_i^H} is 4*alpha*delta*n; "
         "it coincides with 4*alpha*delta only for n=1"});
    section("spectra", run_spectral_checks(b.model, suite), std::move(extra));
  }
  if (wants(cfg.checks, "einstein")) {
    const auto cls = einstein_classify(b.model.params);
    const auto eq = verify_einstein_equivalence(suite, b.model);
    section("einstein", run_einstein_checks(b.model, suite),
            ojson{{"classification", to_json(cls)}, {"equivalence", to_json(eq)}});
  }
  if (wants(cfg.checks, "positivity"))
    section("positivity", run_positivity_checks(b.model, suite),
            ojson{{"cisbig_nu0", to_json(cisbig_check(b.model.params, cfg.nu))}});
  if (b.lie && wants(cfg.checks, "homogeneous"))
    section("homogeneous", run_homogeneous_checks(*b.lie));

  ojson doc{{"schema", "1"},
            {"config", config_json(cfg, "verify")},
            {"params", to_json(b.model.params)},
            {"results", std::move(results)},
            {"pass", pass}};
  emit(doc, cfg.output);
  return pass ? 0 : 1;
}

int run_certify(const CliConfig& cfg) {
  const ModelBundle b = build_bundle(cfg);
  const CurvatureSuite suite = build_curvature_suite(b.model, b.r1);
  const ModifierKind kind = parse_modifier(cfg.modifier);

  double eps = 0.0;
  if (cfg.epsilon == "auto") {
    if (kind == ModifierKind::custom || kind == ModifierKind::none)
      throw std::invalid_argument("epsilon auto needs a canonical modifier kind");
    eps = choose_epsilon(suite, b.model, kind);
  } else {
    eps = std::stod(cfg.epsilon);
    if (eps < 0.0) throw std::invalid_argument("epsilon must be >= 0");
  }

  PForm modifier(4, b.model.dim);
  if (kind == ModifierKind::custom) {
    if (cfg.modifier_file.empty())
      throw std::invalid_argument("custom modifier requires --modifier-file");
    modifier = load_custom_modifier(cfg.modifier_file, b.model.dim);
  } else {
    modifier = canonical_modifier(b.model, kind, eps);
  }

  const auto cert = certify(suite, b.model, modifier, kind, eps);
  ojson cfgj = config_json(cfg, "certify");
  cfgj["modifier"] = cfg.modifier;
  cfgj["epsilon"] = cfg.epsilon == "auto" ? ojson("auto") : jnum(eps);
  const bool ok = cert.kind != CertificateKind::fail;
  ojson doc{{"schema", "1"},
            {"config", std::move(cfgj)},
            {"params", to_json(b.model.params)},
            {"certificate", to_json(cert)},
            {"pass", ok}};
  emit(doc, cfg.output);
  return ok ? 0 : 1;
}

struct SweepRow {
  double alpha, delta;
  ojson json;
  std::string line;
};

int run_sweep(const CliConfig& cfg) {
  if (cfg.alphas.empty() || cfg.deltas.empty())
    throw std::invalid_argument("sweep requires nonempty --alphas and --deltas");
  for (double a : cfg.alphas)
    if (a == 0.0) throw std::invalid_argument("alpha = 0 is not admissible");

  std::vector<std::pair<double, double>> grid;
  for (double a : cfg.alphas)
    for (double d : cfg.deltas) grid.emplace_back(a, d);

  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
      const auto [a, d] = grid[i];
      const Params p(cfg.n, a, d);
      const PointModel m = build_point_model(p);
      const CurvatureSuite s = build_curvature_suite(m);
      const auto cis = cisbig_check(p, cfg.nu);
      const auto cls = einstein_classify(p);
      const double lmin = eigh(s.Rcan).values.minCoeff();
      const double ab = p.alpha * p.beta();
      const bool nonneg = lmin > -1e-9 * std::max(1.0, s.Rcan.max_abs());

      rows[i].alpha = a;
      rows[i].delta = d;
      rows[i].json = ojson{{"alpha", jnum(a)},
                           {"delta", jnum(d)},
                           {"beta", jnum(p.beta())},
                           {"alpha_beta", jnum(ab)},
                           {"cisbig", to_json(cis)},
                           {"einstein", to_string(cls.kind)},
                           {"R_lambda_min", jnum(lmin)},
                           {"R_nonnegative", nonneg}};
      char line[160];
      std::snprintf(line, sizeof(line), "%10.4f %10.4f %8s %8s %8s  %-28s %12.4e %s",
                    a, d, cis.trace_positive ? "T" : "F", cis.det_positive ? "T" : "F",
                    cis.delta_gt_2alpha ? "T" : "F", to_string(cls.kind).c_str(), lmin,
                    nonneg ? "R>=0" : "R indef");
      rows[i].line = line;
    }
  };

  const int workers =
      std::max(1, std::min<int>(thread_budget(), static_cast<int>(grid.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  ojson arr = ojson::array();
  std::ostringstream table;
  table << "     alpha      delta    trace      det    d>2a  einstein"
           "                      lambda_min(R)\n";
  for (const auto& r : rows) {
    arr.push_back(r.json);
    table << r.line << "\n";
  }
  ojson doc{{"schema", "1"},
            {"config", config_json(cfg, "sweep")},
            {"nu", jnum(cfg.nu)},
            {"grid", std::move(arr)},
            {"table", table.str()}};
  emit(doc, cfg.output);
  if (!cfg.output.empty() && cfg.output != "-") std::cout << table.str();
  return 0;
}

ojson form_to_json(const PForm& w) {
  ojson coeffs = ojson::array();
  for (int i = 0; i < w.coeffs.size(); ++i) coeffs.push_back(jnum(w.coeffs[i]));
  return ojson{{"degree", w.degree},
               {"dim", w.dim},
               {"basis", "lexicographic multi-indices"},
               {"coeffs", std::move(coeffs)}};
}

int run_export(const CliConfig& cfg, const std::string& name) {
  const ModelBundle b = build_bundle(cfg);
  ojson doc{{"schema", "1"}, {"config", config_json(cfg, "export-operator")}, {"name", name}};
  if (name == "model") {
    doc["model"] = to_json(b.model);
    emit(doc, cfg.output);
    return 0;
  }
  if (name == "T" || name == "sigmaT" || name == "dT") {
    const PForm w = name == "T"        ? torsion_three_form(b.model)
                    : name == "sigmaT" ? sigma_T(b.model)
                                       : dT_fourform(b.model);
    doc["form"] = form_to_json(w);
    emit(doc, cfg.output);
    return 0;
  }
  const CurvatureSuite s = build_curvature_suite(b.model, b.r1);
  const SymOp* op = nullptr;
  if (name == "R") op = &s.Rcan;
  else if (name == "Rg") op = &s.Rg;
  else if (name == "Rperp") op = &s.Rperp;
  else if (name == "Rpar") op = &s.Rpar;
  else if (name == "RgN") op = &s.RgN;
  else if (name == "R0") op = &s.R0;
  else if (name == "R1") op = &s.R1;
  else if (name == "GT") op = &s.GT;
  else if (name == "ST") op = &s.ST;
  SymOp f = SymOp::zero(1);
  if (name == "F") {
    f = fatness_operator(b.model);
    op = &f;
  }
  if (op == nullptr) throw std::invalid_argument("unknown operator name: " + name);
  const char* basis = "lexicographic frame pairs";
  if (name == "RgN" || name == "R0" || name == "R1") basis = "lexicographic horizontal pairs";
  if (name == "F") basis = "orthonormal Lambda^2_3 basis";
  doc["basis"] = basis;
  doc["dim2"] = op->dim2();
  doc["mat"] = matrix_to_json(op->mat);
  emit(doc, cfg.output);
  return 0;
}

void apply_config_file(CliConfig& cfg, const std::string& path) {
  const ojson doc = read_json_file(path);
  if (doc.contains("model")) cfg.model = doc["model"].get<std::string>();
  if (doc.contains("n")) cfg.n = doc["n"].get<int>();
  if (doc.contains("alpha")) cfg.alpha = doc["alpha"].get<double>();
  if (doc.contains("delta")) cfg.delta = doc["delta"].get<double>();
  if (doc.contains("lie_file")) cfg.lie_file = doc["lie_file"].get<std::string>();
  if (doc.contains("r1")) cfg.r1_file = doc["r1"].get<std::string>();
  if (doc.contains("modifier")) cfg.modifier = doc["modifier"].get<std::string>();
  if (doc.contains("modifier_file"))
    cfg.modifier_file = doc["modifier_file"].get<std::string>();
  if (doc.contains("epsilon")) {
    const auto& e = doc["epsilon"];
    cfg.epsilon = e.is_string() ? e.get<std::string>() : format_sci(e.get<double>());
  }
  if (doc.contains("checks")) {
    cfg.checks.clear();
    for (const auto& c : doc["checks"]) cfg.checks.push_back(c.get<std::string>());
  }
  if (doc.contains("output")) cfg.output = doc["output"].get<std::string>();
  if (doc.contains("nu")) cfg.nu = doc["nu"].get<double>();
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;

  // a config file provides defaults; explicit flags override it
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") {
      try {
        apply_config_file(cfg, argv[i + 1]);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }

  CLI::App app{"algebraic curvature models of 3-(alpha,delta)-Sasaki manifolds"};
  app.require_subcommand(1);
  std::string config_path;

  auto add_model_flags = [&cfg, &config_path](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file with defaults");
    sub->add_option("--model", cfg.model, "point | sp_homogeneous | custom_lie");
    sub->add_option("--n", cfg.n, "quaternionic dimension (dim M = 4n+3)");
    sub->add_option("--alpha", cfg.alpha, "alpha != 0");
    sub->add_option("--delta", cfg.delta, "delta");
    sub->add_option("--lie-file", cfg.lie_file, "structure constants (custom_lie)");
    sub->add_option("--r1", cfg.r1_file, "hyper-Kaehler-type operator file");
    sub->add_option("--output", cfg.output, "report path (default stdout)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_model_flags(verify);
  verify->add_option("--checks", cfg.checks,
                     "structure, torsion, curvature, spectra, einstein, positivity, "
                     "homogeneous or all")
      ->delimiter(',');
  verify->add_option("--nu", cfg.nu, "adapted-form eigenvalue bound for cisbig report");

  CLI::App* certify_cmd = app.add_subcommand("certify", "strong positivity certificate");
  add_model_flags(certify_cmd);
  certify_cmd->add_option("--modifier", cfg.modifier,
                          "none | sigma_only | sphere_like | custom");
  certify_cmd->add_option("--modifier-file", cfg.modifier_file, "custom 4-form coefficients");
  certify_cmd->add_option("--epsilon", cfg.epsilon, "epsilon >= 0 or 'auto'");

  CLI::App* sweep = app.add_subcommand("sweep", "parameter grid report");
  add_model_flags(sweep);
  sweep->add_option("--alphas", cfg.alphas, "alpha grid values")
      ->delimiter(',')
      ->check(CLI::Number);
  sweep->add_option("--deltas", cfg.deltas, "delta grid values")
      ->delimiter(',')
      ->check(CLI::Number);
  sweep->add_option("--nu", cfg.nu, "adapted-form eigenvalue bound");

  std::string export_name = "Rg";
  CLI::App* exp = app.add_subcommand("export-operator", "dense operator or model dump");
  add_model_flags(exp);
  exp->add_option("--name", export_name,
                  "model | R | Rg | Rperp | Rpar | RgN | R0 | R1 | GT | ST | F | "
                  "T | sigmaT | dT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(cfg);
    if (certify_cmd->parsed()) return run_certify(cfg);
    if (sweep->parsed()) return run_sweep(cfg);
    if (exp->parsed()) return run_export(cfg, export_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
