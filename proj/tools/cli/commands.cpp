#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "spectraljet/errors.hpp"
#include "spectraljet/format.hpp"
#include "spectraljet/lattice.hpp"
#include "spectraljet/wick.hpp"

namespace spectraljet::cli {

namespace {

struct Flags {
  std::string config_path;
  std::string model;
  double radius = 1.0;
  std::string radii;
  std::string alpha;
  std::string beta;
  int n = 2;
  int max_degree = 4;
  double t = 0.0;
  std::string t_grid;
  double policy_eps = 1e-14;
  std::uint64_t seed = 42;
  std::size_t count = 10000;
  std::string out;
  std::string csv;
  std::string summary;
  std::vector<std::string> inputs;
  bool graphs = false;
  bool oracle = false;

  std::vector<std::pair<std::string, CLI::Option*>> options;

  bool given(const std::string& name) const {
    for (const auto& [k, opt] : options) {
      if (k == name && opt->count() > 0) return true;
    }
    return false;
  }
};

CLI::Option* add(Flags& f, CLI::App* app, const std::string& name, auto& target,
                 const std::string& help) {
  CLI::Option* opt = app->add_option("--" + name, target, help);
  f.options.emplace_back(name, opt);
  return opt;
}

void add_common(Flags& f, CLI::App* app) {
  add(f, app, "config", f.config_path, "JSON run configuration; flags override its values");
  add(f, app, "out", f.out, "output file (stdout when omitted)");
}

void add_model(Flags& f, CLI::App* app) {
  add(f, app, "model", f.model, "circle | torus | sphere2 | sphere3");
  add(f, app, "radius", f.radius, "radius for circle and spheres");
  add(f, app, "radii", f.radii, "comma-separated torus radii");
  add(f, app, "t", f.t, "single time value");
  add(f, app, "t-grid", f.t_grid, "geometric grid start:ratio:count");
  add(f, app, "policy-eps", f.policy_eps, "relative tail tolerance of the spectral sums");
}

RunConfig effective_config(const Flags& f) {
  RunConfig c = f.config_path.empty() ? RunConfig{} : load_config_file(f.config_path);
  if (f.given("model")) c.model = f.model;
  if (f.given("radius")) c.radius = f.radius;
  if (f.given("radii")) c.radii = parse_radii(f.radii);
  if (f.given("n")) c.n = f.n;
  if (f.given("max-degree")) c.max_degree = f.max_degree;
  if (f.given("t") && f.given("t-grid")) throw ValidationError("--t and --t-grid are exclusive");
  if (f.given("t")) c.grid = GridSpec{f.t, 0.5, 1};
  if (f.given("t-grid")) c.grid = parse_grid(f.t_grid);
  if (f.given("policy-eps")) c.policy_eps = f.policy_eps;
  if (f.given("seed")) c.seed = f.seed;
  if (f.given("count")) c.count = f.count;
  if (c.n < 1) throw ValidationError("--n must be positive");
  if (!(c.policy_eps > 0.0)) throw ValidationError("--policy-eps must be positive");
  return c;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_wick(const Flags& f, std::ostream& out) {
  const RunConfig c = effective_config(f);
  const MultiIndex alpha = MultiIndex::parse(f.alpha, c.n);
  const MultiIndex beta = MultiIndex::parse(f.beta, c.n);
  const WickA a = wick_a(alpha, beta);
  const WickB b = wick_b(alpha, beta);
  std::ostringstream os;
  os << "A=" << a.to_string() << " B=" << b.exact_string();
  if (b.sign != 0) os << " (" << fmt17(b.value) << ")";
  os << "\n";
  os << "sign=" << (a.sign > 0 ? "+1" : a.sign < 0 ? "-1" : "0") << " magnitude=" << a.magnitude.str()
     << " B^2=" << b.square_string() << "\n";
  if (f.graphs) {
    const GraphCount g = enumerate_admissible_graphs(alpha, beta);
    os << "graphs=" << g.count.str();
    if (g.count > 0) os << " sign=" << (g.common_sign > 0 ? "+1" : "-1");
    os << "\n";
  }
  if (f.oracle) {
    os << "oracle=" << fmt17(gaussian_moment_oracle(alpha, beta))
       << " gauss_hermite=" << fmt17(gauss_hermite_moment(alpha, beta)) << "\n";
  }
  write_text(f.out, os.str(), out);
  return kExitPass;
}

int cmd_lattice_sample(const Flags& f, std::ostream& out) {
  RunConfig c = effective_config(f);
  if (!f.given("max-degree") && f.config_path.empty()) c.max_degree = 8;
  if (c.max_degree < 0) throw ValidationError("--max-degree must be non-negative");
  const auto samples = sample_triples(c.n, c.max_degree, c.count, c.seed);
  write_text(f.out, lattice_csv(samples), out);
  const MetricReport r = verify_metric_axioms(c.n, c.max_degree, c.count, c.seed);
  Json j;
  j["command"] = "lattice sample";
  j["config"] = to_json(c);
  j["samples"] = r.samples;
  j["violations"] = {{"symmetry", r.symmetry_violations},
                     {"identity", r.identity_violations},
                     {"triangle", r.triangle_violations},
                     {"orthogonality", r.orthogonality_violations},
                     {"comparison", r.comparison_violations},
                     {"stabilization", r.stabilization_violations}};
  j["worst_slack"] = r.worst_slack;
  j["worst_triple"] = r.worst_triple;
  j["delta"] = kComparisonDelta;
  j["admissible_delta_min"] = r.min_admissible_delta;
  j["admissible_delta_max"] = r.max_admissible_delta;
  j["pass"] = r.ok();
  if (!f.summary.empty()) write_text(f.summary, dump(j), out);
  if (!f.out.empty() && f.summary.empty()) out << dump(j);
  return r.ok() ? kExitPass : kExitFailure;
}

Json document(const std::string& command, const RunConfig& c, const std::vector<SuiteReport>& suites) {
  Json j;
  j["command"] = command;
  j["config"] = to_json(c);
  j["suites"] = Json::array();
  bool pass = true;
  for (const auto& s : suites) {
    j["suites"].push_back(suite_json(s));
    pass = pass && s.pass();
  }
  j["pass"] = pass;
  return j;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const RunConfig c = effective_config(f);
  const SpectralModel model = c.make_model();
  const SuiteReport report = jet_relation_suite(model, c.max_degree, c.suite_options());
  if (!f.csv.empty()) write_text(f.csv, records_csv(report.records), out);
  write_text(f.out, dump(document("verify", c, {report})), out);
  return report.pass() ? kExitPass : kExitFailure;
}

int cmd_curvature(const Flags& f, std::ostream& out) {
  const RunConfig c = effective_config(f);
  const SpectralModel model = c.make_model();
  const SuiteOptions o = c.suite_options();
  std::vector<SuiteReport> suites;
  suites.push_back(isometry_suite(model, o));
  suites.push_back(scalar_suite(model, o));
  suites.push_back(mean_curvature_suite(model, o));
  suites.push_back(umbilical_suite(model, o));
  if (model.dim() >= 2) {
    suites.push_back(curvature_suite(model, o));
    PolynomialField field;
    field.k = 2;
    field.linear.assign(static_cast<std::size_t>(model.dim()), 0.0);
    field.linear[0] = 1.0;
    suites.push_back(levi_civita_suite(model, 1, field, o));
  }
  const Json doc = document("curvature", c, suites);
  write_text(f.out, dump(doc), out);
  return doc["pass"].get<bool>() ? kExitPass : kExitFailure;
}

int cmd_report(const Flags& f, std::ostream& out) {
  const RunConfig c = effective_config(f);
  if (f.inputs.empty()) throw ValidationError("report needs --inputs");
  Json j;
  j["command"] = "report";
  j["config"] = to_json(c);
  j["reports"] = Json::array();
  bool pass = true;
  for (const auto& path : f.inputs) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open report '" + path + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("report '" + path + "': " + e.what());
    }
    if (!doc.is_object() || !doc.contains("pass")) {
      throw ValidationError("report '" + path + "' is not a spectraljet summary");
    }
    pass = pass && doc["pass"].get<bool>();
    j["reports"].push_back({{"source", path}, {"document", doc}});
  }
  j["pass"] = pass;
  write_text(f.out, dump(j), out);
  return pass ? kExitPass : kExitFailure;
}

}  // namespace

Json suite_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["model"] = report.model;
  j["pass"] = report.pass();
  j["failures"] = report.failures();
  j["checks"] = Json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"quantity", c.quantity},
                           {"target", c.target},
                           {"fitted_c0", c.fitted_c0},
                           {"fitted_c1", c.fitted_c1},
                           {"stderr", c.stderr_c0},
                           {"tolerance", c.tolerance},
                           {"relative", c.relative},
                           {"asserted", c.asserted},
                           {"pass", c.pass}});
  }
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heat-kernel jet relations: Wick constants, lattice geometry and spectral checks"};
  app.name("spectraljet");
  app.require_subcommand(1);
  Flags f;

  auto* wick = app.add_subcommand("wick", "Wick constants A and B of a pair of multi-indices");
  add_common(f, wick);
  add(f, wick, "alpha", f.alpha, "first multi-index, e.g. 1,1,2")->required();
  add(f, wick, "beta", f.beta, "second multi-index")->required();
  add(f, wick, "n", f.n, "ambient dimension");
  wick->add_flag("--graphs", f.graphs, "also enumerate admissible graphs");
  wick->add_flag("--oracle", f.oracle, "also evaluate the Gaussian-moment oracle");

  auto* lattice = app.add_subcommand("lattice", "Angle-distance geometry of the lattice");
  lattice->require_subcommand(1);
  auto* sample = lattice->add_subcommand("sample", "Seeded random triples to CSV");
  add_common(f, sample);
  add(f, sample, "n", f.n, "ambient dimension");
  add(f, sample, "max-degree", f.max_degree, "largest multi-index degree");
  add(f, sample, "count", f.count, "number of triples");
  add(f, sample, "seed", f.seed, "master seed");
  add(f, sample, "summary", f.summary, "write the JSON summary here");

  auto* verify = app.add_subcommand("verify", "Normalized jets against the Wick constants");
  add_common(f, verify);
  add_model(f, verify);
  add(f, verify, "max-degree", f.max_degree, "largest |alpha|+|beta|");
  add(f, verify, "csv", f.csv, "write one row per (alpha, beta, t) here");

  auto* curvature = app.add_subcommand("curvature", "Isometry, scalar, mean, umbilical and Gauss suites");
  add_common(f, curvature);
  add_model(f, curvature);

  auto* report = app.add_subcommand("report", "Merge JSON summaries");
  add_common(f, report);
  add(f, report, "inputs", f.inputs, "summary files to merge")->expected(1, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*wick) return cmd_wick(f, out);
    if (*sample) return cmd_lattice_sample(f, out);
    if (*verify) return cmd_verify(f, out);
    if (*curvature) return cmd_curvature(f, out);
    if (*report) return cmd_report(f, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace spectraljet::cli
