#include "config.hpp"

#include <fstream>
#include <sstream>

#include "spectraljet/errors.hpp"

namespace spectraljet::cli {

SpectralModel RunConfig::make_model() const {
  return SpectralModel::from_spec(model, radius, radii);
}

TruncationPolicy RunConfig::policy() const {
  TruncationPolicy p = TruncationPolicy::relative_tail(policy_eps);
  p.sphere_cap = sphere_cap;
  p.torus_cap = torus_cap;
  return p;
}

std::vector<double> RunConfig::t_grid() const {
  return geometric_grid(grid.start, grid.ratio, grid.count);
}

SuiteOptions RunConfig::suite_options() const {
  SuiteOptions o;
  o.grid = t_grid();
  o.policy = policy();
  o.sphere_relative_tol = sphere_relative_tol;
  o.flat_abs_tol = flat_abs_tol;
  return o;
}

Json to_json(const RunConfig& c) {
  Json j;
  j["model"] = c.model;
  j["radius"] = c.radius;
  j["radii"] = c.radii;
  j["t_grid"] = {{"start", c.grid.start}, {"ratio", c.grid.ratio}, {"count", c.grid.count}};
  j["max_degree"] = c.max_degree;
  j["policy"] = {{"eps", c.policy_eps}, {"sphere_cap", c.sphere_cap}, {"torus_cap", c.torus_cap}};
  j["seed"] = c.seed;
  j["count"] = c.count;
  j["n"] = c.n;
  j["tolerances"] = {{"sphere_relative", c.sphere_relative_tol}, {"flat_abs", c.flat_abs_tol}};
  return j;
}

namespace {

template <class T>
void take(const Json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw ValidationError("config: unknown key '" + k + "' in " + where);
  }
}

}  // namespace

void merge_json(RunConfig& c, const Json& j) {
  if (!j.is_object()) throw ValidationError("config: top level must be an object");
  try {
    reject_unknown(j,
                   {"model", "radius", "radii", "t_grid", "max_degree", "policy", "seed", "count",
                    "n", "tolerances"},
                   "config");
    take(j, "model", c.model);
    take(j, "radius", c.radius);
    take(j, "radii", c.radii);
    take(j, "max_degree", c.max_degree);
    take(j, "seed", c.seed);
    take(j, "count", c.count);
    take(j, "n", c.n);
    if (j.contains("t_grid")) {
      const Json& g = j.at("t_grid");
      reject_unknown(g, {"start", "ratio", "count"}, "t_grid");
      take(g, "start", c.grid.start);
      take(g, "ratio", c.grid.ratio);
      take(g, "count", c.grid.count);
    }
    if (j.contains("policy")) {
      const Json& p = j.at("policy");
      reject_unknown(p, {"eps", "sphere_cap", "torus_cap"}, "policy");
      take(p, "eps", c.policy_eps);
      take(p, "sphere_cap", c.sphere_cap);
      take(p, "torus_cap", c.torus_cap);
    }
    if (j.contains("tolerances")) {
      const Json& t = j.at("tolerances");
      reject_unknown(t, {"sphere_relative", "flat_abs"}, "tolerances");
      take(t, "sphere_relative", c.sphere_relative_tol);
      take(t, "flat_abs", c.flat_abs_tol);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("config file '" + path + "': " + e.what());
  }
  RunConfig c;
  merge_json(c, j);
  return c;
}

GridSpec parse_grid(const std::string& text) {
  std::istringstream is(text);
  GridSpec g;
  char c1 = 0, c2 = 0;
  if (!(is >> g.start >> c1 >> g.ratio >> c2 >> g.count) || c1 != ':' || c2 != ':' ||
      !(is >> std::ws).eof()) {
    throw ValidationError("--t-grid expects start:ratio:count, got '" + text + "'");
  }
  if (!(g.start > 0.0) || !(g.ratio > 0.0) || g.count < 1) {
    throw ValidationError("--t-grid needs start > 0, ratio > 0, count >= 1");
  }
  return g;
}

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("--radii expects comma-separated numbers, got '" + text + "'");
    }
  }
  if (out.empty()) throw ValidationError("--radii is empty");
  return out;
}

}  // namespace spectraljet::cli
