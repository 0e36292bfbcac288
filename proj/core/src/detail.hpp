#pragma once

#include <span>

#include "spectraljet/manifolds.hpp"

namespace spectraljet::detail {

JetValue torus_jet(const SpectralModel& model, double t, const MultiIndex& alpha,
                   const MultiIndex& beta, const TruncationPolicy& policy);
JetValue torus_jet_at(const SpectralModel& model, double t, const MultiIndex& alpha,
                      const MultiIndex& beta, std::span<const double> point,
                      const TruncationPolicy& policy);
double torus_kernel(const SpectralModel& model, double t, std::span<const double> x,
                    std::span<const double> y, const TruncationPolicy& policy);

JetValue sphere_jet_difference(const SpectralModel& model, double t, const MultiIndex& alpha1,
                               const MultiIndex& beta1, const MultiIndex* alpha2,
                               const MultiIndex* beta2, const TruncationPolicy& policy);
double sphere_kernel(const SpectralModel& model, double t, std::span<const double> x,
                     std::span<const double> y, const TruncationPolicy& policy);

// Past-the-peak stopping rule shared by all spectral sums.
struct TailTracker {
  const TruncationPolicy& policy;
  double peak_threshold;  // stop only once lambda t >= this
  double previous = 0.0;
  double total = 0.0;

  // bound: magnitude bound of the term just added; lambda_t: its eigenvalue times t
  bool done(long index, double bound, double lambda_t);
};

}  // namespace spectraljet::detail
