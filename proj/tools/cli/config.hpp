#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectraljet/asymptotics.hpp"
#include "spectraljet/manifolds.hpp"

namespace spectraljet::cli {

using Json = nlohmann::ordered_json;

struct GridSpec {
  double start = 0.1;
  double ratio = 0.5;
  int count = 7;
};

struct RunConfig {
  std::string model = "sphere3";
  double radius = 1.0;
  std::vector<double> radii{1.0, 1.0};
  GridSpec grid;
  int max_degree = 4;
  double policy_eps = 1e-14;
  long sphere_cap = 5000;
  long torus_cap = 200000;
  std::uint64_t seed = 42;
  std::size_t count = 10000;
  int n = 2;
  double sphere_relative_tol = 1e-2;
  double flat_abs_tol = 1e-6;

  SpectralModel make_model() const;
  TruncationPolicy policy() const;
  std::vector<double> t_grid() const;
  SuiteOptions suite_options() const;
};

Json to_json(const RunConfig& config);
// Fields missing from j keep their current values; unknown keys are rejected.
void merge_json(RunConfig& config, const Json& j);
RunConfig load_config_file(const std::string& path);

// "start:ratio:count"
GridSpec parse_grid(const std::string& text);
std::vector<double> parse_radii(const std::string& text);

}  // namespace spectraljet::cli
