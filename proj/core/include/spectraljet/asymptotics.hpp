#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spectraljet/manifolds.hpp"
#include "spectraljet/multiindex.hpp"

namespace spectraljet {

struct LimitFit {
  int order = 1;
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  double stderr_c0 = 0.0;
  double rms = 0.0;
  double condition = 1.0;
  std::vector<double> grid;
};

// Least-squares fit y ~ c0 + c1 t (+ c2 t^2). Needs >= order+2 distinct positive t.
LimitFit limit_fit(const std::vector<std::pair<double, double>>& samples, int order);

// start, start*ratio, ..., count values
std::vector<double> geometric_grid(double start, double ratio, int count);
// 0.1 * 2^-m, m = 0..6
std::vector<double> default_grid();

// Quadratic fit on the smallest five samples when there are at least four;
// otherwise the value at the smallest t with zero slope.
LimitFit small_t_fit(std::vector<std::pair<double, double>> samples);

struct ConvergenceRecord {
  std::string model;
  MultiIndex alpha, beta;
  double t = 0.0;
  double raw_jet = 0.0;
  double normalized = 0.0;
  double target = 0.0;
  double abs_err = 0.0;
};

std::string records_csv(const std::vector<ConvergenceRecord>& records);

struct SuiteCheck {
  std::string name;
  std::string quantity = "c0";  // which fitted coefficient is compared
  double target = 0.0;
  double fitted_c0 = 0.0;
  double fitted_c1 = 0.0;
  double stderr_c0 = 0.0;
  double tolerance = 0.0;
  bool relative = false;
  bool asserted = true;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::string model;
  std::vector<SuiteCheck> checks;
  std::vector<ConvergenceRecord> records;

  bool pass() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  std::vector<double> grid = default_grid();
  TruncationPolicy policy;
  // fitted limits vs Wick constants on curved models
  double sphere_relative_tol = 1e-2;
  // |normalized - target| on flat models
  double flat_abs_tol = 1e-6;
};

// Normalized jets and angles against wick_a/wick_b for |alpha|+|beta| <= max_degree.
SuiteReport jet_relation_suite(const SpectralModel& model, int max_degree,
                               const SuiteOptions& options = {});

SuiteReport isometry_suite(const SpectralModel& model, const SuiteOptions& options = {});
SuiteReport scalar_suite(const SpectralModel& model, const SuiteOptions& options = {});
SuiteReport mean_curvature_suite(const SpectralModel& model, const SuiteOptions& options = {});
SuiteReport umbilical_suite(const SpectralModel& model, const SuiteOptions& options = {});
SuiteReport curvature_suite(const SpectralModel& model, const SuiteOptions& options = {});
SuiteReport levi_civita_suite(const SpectralModel& model, int i, const PolynomialField& field,
                              const SuiteOptions& options = {});

// Fitted Gauss-formula tensor and its symmetry residuals, relative to max |R|
// (absolute when the tensor vanishes).
struct CurvatureTensorFit {
  int n = 0;
  std::vector<double> tensor;  // flat (i,j,k,l), 0-based, row-major
  double max_abs = 0.0;
  double antisym_first = 0.0;   // R_ijkl + R_jikl
  double antisym_second = 0.0;  // R_ijkl + R_ijlk
  double pair_symmetry = 0.0;   // R_ijkl - R_klij
  double bianchi = 0.0;         // R_ijkl + R_jkil + R_kijl

  double at(int i, int j, int k, int l) const;
};

CurvatureTensorFit fit_curvature_tensor(const SpectralModel& model, const SuiteOptions& options = {});

// Scalar curvature of the model (0 for flat models).
double model_scalar_curvature(const SpectralModel& model);
// Ricci curvature component (constant-curvature models are Einstein).
double model_ricci(const SpectralModel& model, int i, int j);
// Sectional curvature of the model.
double model_sectional_curvature(const SpectralModel& model);

}  // namespace spectraljet
