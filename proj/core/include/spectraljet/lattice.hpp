#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spectraljet/multiindex.hpp"
#include "spectraljet/wick.hpp"

namespace spectraljet {

struct AngleDistance {
  double radians = 0.0;
  WickB exact_cos;
};

AngleDistance angle_distance(const MultiIndex& alpha, const MultiIndex& beta);
bool is_orthogonal(const MultiIndex& alpha, const MultiIndex& beta);
std::vector<int> coset_of(const MultiIndex& alpha);

inline constexpr double kComparisonDelta = 0.25;

struct Comparison {
  double lhs = 0.0;  // |cos d|
  double rhs = 0.0;  // 1 - delta |alpha - beta| / (|alpha| + |beta|)
  bool holds = false;
  // (1 - lhs)(|alpha|+|beta|)/|alpha - beta|, the largest delta this pair allows
  double admissible_delta = 0.0;
};

Comparison distance_comparison_check(const MultiIndex& alpha, const MultiIndex& beta);

struct LatticeStabilization {
  std::vector<AngleDistance> diagonal;
  std::vector<AngleDistance> one_sided;
  AngleDistance limit;        // actual diagonal limit
  AngleDistance stripped_limit;  // d(alpha*, beta*)
  bool contraction = true;    // |d - pi/2| non-decreasing along the diagonal
  double diagonal_gap = 0.0;  // |d_kmax - limit|
  double one_sided_gap = 0.0; // |d(alpha, beta + kmax e_j) - pi/2|
};

LatticeStabilization stabilization_scan(const MultiIndex& alpha, const MultiIndex& beta, int j,
                                        int k_max);

struct TripleSample {
  MultiIndex alpha, beta, gamma;
  double d_ab = 0.0, d_bc = 0.0, d_ac = 0.0;
  double triangle_slack = 0.0;
  double comparison_lhs = 0.0, comparison_rhs = 0.0;
};

// Uniform draw from all multi-indices of dimension n and degree <= max_degree.
// Triple i uses its own generator seeded from (seed, i).
std::vector<TripleSample> sample_triples(int n, int max_degree, std::size_t count,
                                         std::uint64_t seed);

std::string lattice_csv(const std::vector<TripleSample>& samples);

struct MetricReport {
  std::size_t samples = 0;
  std::size_t symmetry_violations = 0;
  std::size_t identity_violations = 0;
  std::size_t triangle_violations = 0;
  std::size_t orthogonality_violations = 0;
  std::size_t comparison_violations = 0;
  std::size_t stabilization_violations = 0;
  double worst_slack = 0.0;
  std::string worst_triple;
  double min_admissible_delta = 0.0;
  double max_admissible_delta = 0.0;

  bool ok() const {
    return symmetry_violations + identity_violations + triangle_violations +
               orthogonality_violations + comparison_violations + stabilization_violations ==
           0;
  }
};

inline constexpr double kTriangleTolerance = 1e-12;

MetricReport verify_metric_axioms(int n, int max_degree, std::size_t sample_count,
                                  std::uint64_t seed);

}  // namespace spectraljet
