#include <cmath>
#include <numbers>

#include "detail.hpp"
#include "spectraljet/errors.hpp"
#include "spectraljet/numerics.hpp"

namespace spectraljet::detail {

namespace {

constexpr double kPi = std::numbers::pi;

struct AxisSum {
  double value = 0.0;
  long cutoff = 0;
};

long axis_cap(const TruncationPolicy& policy) { return policy.torus_cap; }

// Sum over k in Z of e^{-k^2 t/R^2} (k/R)^e, ascending |k|; `term(k)` gives the k >= 1 summand.
template <class Term>
AxisSum axis_series(double radius, double t, int e, const TruncationPolicy& policy, double zero_term,
                    Term&& term) {
  NeumaierSum sum;
  sum.add(zero_term);
  TailTracker tail{policy, (e + 1) / 2.0 + 1.0};
  tail.total = std::abs(zero_term);
  for (long k = 1;; ++k) {
    if (k > axis_cap(policy)) {
      throw CutoffError("torus jet: cutoff exceeded hard cap " + std::to_string(axis_cap(policy)),
                        k);
    }
    const double kappa = static_cast<double>(k) / radius;
    const double weight = std::exp(-kappa * kappa * t);
    const double bound = weight * std::pow(kappa, e);
    sum.add(term(kappa, weight));
    if (tail.done(k, bound, kappa * kappa * t)) return {sum.value(), k};
  }
}

AxisSum axis_jet(double radius, double t, int a, int b, const TruncationPolicy& policy) {
  const int e = a + b;
  if (e % 2 != 0) return {0.0, 0};
  const double sign = ((a - b) / 2) % 2 == 0 ? 1.0 : -1.0;
  const double norm = 1.0 / (2.0 * kPi * radius);
  AxisSum s = axis_series(radius, t, e, policy, e == 0 ? norm : 0.0,
                          [&](double kappa, double weight) {
                            return 2.0 * norm * weight * std::pow(kappa, e);
                          });
  s.value *= sign;
  return s;
}

// cos/sin eigenfunctions evaluated at p
AxisSum axis_jet_at(double radius, double t, int a, int b, double p,
                    const TruncationPolicy& policy) {
  const int e = a + b;
  const double zero = e == 0 ? 1.0 / (2.0 * kPi * radius) : 0.0;
  const double norm = 1.0 / (kPi * radius);
  return axis_series(radius, t, e + (e % 2), policy, zero, [&](double kappa, double weight) {
    const double pa = kappa * p + a * kPi / 2;
    const double pb = kappa * p + b * kPi / 2;
    return norm * weight * std::pow(kappa, e) *
           (std::cos(pa) * std::cos(pb) + std::sin(pa) * std::sin(pb));
  });
}

}  // namespace

JetValue torus_jet(const SpectralModel& model, double t, const MultiIndex& alpha,
                   const MultiIndex& beta, const TruncationPolicy& policy) {
  JetValue out{1.0, 0};
  for (int j = 1; j <= model.dim(); ++j) {
    const AxisSum s =
        axis_jet(model.radii()[static_cast<std::size_t>(j - 1)], t, alpha.count(j), beta.count(j), policy);
    out.value *= s.value;
    out.cutoff = std::max(out.cutoff, s.cutoff);
    if (out.value == 0.0) return {0.0, out.cutoff};
  }
  return out;
}

JetValue torus_jet_at(const SpectralModel& model, double t, const MultiIndex& alpha,
                      const MultiIndex& beta, std::span<const double> point,
                      const TruncationPolicy& policy) {
  JetValue out{1.0, 0};
  for (int j = 1; j <= model.dim(); ++j) {
    const auto idx = static_cast<std::size_t>(j - 1);
    const AxisSum s =
        axis_jet_at(model.radii()[idx], t, alpha.count(j), beta.count(j), point[idx], policy);
    out.value *= s.value;
    out.cutoff = std::max(out.cutoff, s.cutoff);
  }
  return out;
}

double torus_kernel(const SpectralModel& model, double t, std::span<const double> x,
                    std::span<const double> y, const TruncationPolicy& policy) {
  double value = 1.0;
  for (int j = 0; j < model.dim(); ++j) {
    const auto idx = static_cast<std::size_t>(j);
    const double radius = model.radii()[idx];
    const double d = x[idx] - y[idx];
    const double norm = 1.0 / (2.0 * kPi * radius);
    value *= axis_series(radius, t, 0, policy, norm, [&](double kappa, double weight) {
               return 2.0 * norm * weight * std::cos(kappa * d);
             }).value;
  }
  return value;
}

}  // namespace spectraljet::detail

namespace spectraljet {

std::vector<double> explicit_embedding(const SpectralModel& model, double t,
                                       std::span<const double> point, int modes) {
  if (!model.flat()) throw ValidationError("explicit_embedding: circle and torus only");
  if (static_cast<int>(point.size()) != model.dim()) {
    throw ValidationError("explicit_embedding: point dimension mismatch");
  }
  if (modes < 1) throw ValidationError("explicit_embedding: modes must be >= 1");
  const int n = model.dim();
  // per axis: index 0 constant, 2k-1 cos, 2k sin
  std::vector<std::vector<double>> axis(static_cast<std::size_t>(n));
  std::vector<std::vector<double>> lambda(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    const double r = model.radii()[idx];
    axis[idx].push_back(1.0 / std::sqrt(2.0 * std::numbers::pi * r));
    lambda[idx].push_back(0.0);
    for (int k = 1; k <= modes; ++k) {
      const double kappa = k / r;
      const double c = 1.0 / std::sqrt(std::numbers::pi * r);
      axis[idx].push_back(c * std::cos(kappa * point[idx]));
      axis[idx].push_back(c * std::sin(kappa * point[idx]));
      lambda[idx].push_back(kappa * kappa);
      lambda[idx].push_back(kappa * kappa);
    }
  }
  const double scale = std::sqrt(gram_scale(n, t));
  std::vector<double> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
  const std::size_t per_axis = static_cast<std::size_t>(2 * modes + 1);
  while (true) {
    bool constant = true;
    double value = 1.0;
    double lam = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto idx = static_cast<std::size_t>(j);
      constant = constant && digit[idx] == 0;
      value *= axis[idx][digit[idx]];
      lam += lambda[idx][digit[idx]];
    }
    if (!constant) out.push_back(scale * std::exp(-lam * t / 2.0) * value);
    int j = 0;
    while (j < n && ++digit[static_cast<std::size_t>(j)] == per_axis) {
      digit[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return out;
}

}  // namespace spectraljet
