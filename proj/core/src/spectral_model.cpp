#include <cmath>
#include <numbers>
#include <sstream>

#include "detail.hpp"
#include "spectraljet/errors.hpp"
#include "spectraljet/format.hpp"

namespace spectraljet {

double TruncationPolicy::nominal_count(int n, double t) const {
  return std::pow(t, -(n / 2.0 + rho));
}

SpectralModel SpectralModel::circle(double radius) {
  if (!(radius > 0.0)) throw ValidationError("circle: radius must be positive");
  return SpectralModel(Kind::circle, 1, {radius});
}

SpectralModel SpectralModel::torus(std::vector<double> radii) {
  if (radii.empty()) throw ValidationError("torus: need at least one radius");
  for (double r : radii) {
    if (!(r > 0.0)) throw ValidationError("torus: radii must be positive");
  }
  const int n = static_cast<int>(radii.size());
  return SpectralModel(Kind::torus, n, std::move(radii));
}

SpectralModel SpectralModel::sphere(int dim, double radius) {
  if (dim != 2 && dim != 3) throw ValidationError("sphere: dimension must be 2 or 3");
  if (!(radius > 0.0)) throw ValidationError("sphere: radius must be positive");
  return SpectralModel(Kind::sphere, dim, {radius});
}

SpectralModel SpectralModel::from_spec(const std::string& name, double radius,
                                       const std::vector<double>& radii) {
  if (name == "circle") return circle(radius);
  if (name == "torus") return torus(radii.empty() ? std::vector<double>{1.0, 1.0} : radii);
  if (name == "sphere2") return sphere(2, radius);
  if (name == "sphere3") return sphere(3, radius);
  throw ValidationError("unknown model '" + name + "' (expected circle, torus, sphere2, sphere3)");
}

double SpectralModel::radius() const { return radii_.front(); }

double SpectralModel::volume() const {
  const double pi = std::numbers::pi;
  switch (kind_) {
    case Kind::circle:
    case Kind::torus: {
      double v = 1.0;
      for (double r : radii_) v *= 2.0 * pi * r;
      return v;
    }
    case Kind::sphere: {
      const double a = radius();
      return dim_ == 2 ? 4.0 * pi * a * a : 2.0 * pi * pi * a * a * a;
    }
  }
  return 0.0;
}

std::string SpectralModel::id() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::circle: os << "circle(R=" << fmt17(radius()) << ")"; break;
    case Kind::torus: {
      os << "torus(";
      for (std::size_t i = 0; i < radii_.size(); ++i) os << (i ? "," : "") << fmt17(radii_[i]);
      os << ")";
      break;
    }
    case Kind::sphere: os << "sphere" << dim_ << "(a=" << fmt17(radius()) << ")"; break;
  }
  return os.str();
}

double SpectralModel::sphere_eigenvalue(long l) const {
  const double a = radius();
  return static_cast<double>(l) * static_cast<double>(l + dim_ - 1) / (a * a);
}

double SpectralModel::sphere_multiplicity(long l) const {
  const double x = static_cast<double>(l);
  return dim_ == 2 ? 2.0 * x + 1.0 : (x + 1.0) * (x + 1.0);
}

namespace {

void require_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat kernel: t must be positive");
}

void require_model_dim(const SpectralModel& model, const MultiIndex& m) {
  if (m.dim() != model.dim()) {
    throw ValidationError("multi-index dimension " + std::to_string(m.dim()) +
                          " does not match model dimension " + std::to_string(model.dim()));
  }
}

}  // namespace

namespace detail {

bool TailTracker::done(long index, double bound, double lambda_t) {
  total += bound;
  bool stop = false;
  if (policy.mode == TruncationPolicy::Mode::fixed_cutoff) {
    stop = index >= policy.cutoff;
  } else {
    stop = lambda_t >= peak_threshold && bound <= previous && bound <= policy.eps * total;
  }
  previous = bound;
  return stop;
}

}  // namespace detail

JetValue heat_kernel_jet(const SpectralModel& model, double t, const MultiIndex& alpha,
                         const MultiIndex& beta, const TruncationPolicy& policy) {
  require_time(t);
  require_same_dim(alpha, beta);
  require_model_dim(model, alpha);
  if (model.flat()) return detail::torus_jet(model, t, alpha, beta, policy);
  return detail::sphere_jet_difference(model, t, alpha, beta, nullptr, nullptr, policy);
}

JetValue heat_kernel_jet_at(const SpectralModel& model, double t, const MultiIndex& alpha,
                            const MultiIndex& beta, std::span<const double> point,
                            const TruncationPolicy& policy) {
  require_time(t);
  require_same_dim(alpha, beta);
  require_model_dim(model, alpha);
  if (!model.flat()) throw ValidationError("heat_kernel_jet_at: circle and torus only");
  if (static_cast<int>(point.size()) != model.dim()) {
    throw ValidationError("heat_kernel_jet_at: point dimension mismatch");
  }
  return detail::torus_jet_at(model, t, alpha, beta, point, policy);
}

JetValue heat_kernel_jet_difference(const SpectralModel& model, double t, const MultiIndex& alpha1,
                                    const MultiIndex& beta1, const MultiIndex& alpha2,
                                    const MultiIndex& beta2, const TruncationPolicy& policy) {
  require_time(t);
  for (const MultiIndex* m : {&alpha1, &beta1, &alpha2, &beta2}) require_model_dim(model, *m);
  if (model.flat()) {
    const JetValue a = detail::torus_jet(model, t, alpha1, beta1, policy);
    const JetValue b = detail::torus_jet(model, t, alpha2, beta2, policy);
    return {a.value - b.value, std::max(a.cutoff, b.cutoff)};
  }
  return detail::sphere_jet_difference(model, t, alpha1, beta1, &alpha2, &beta2, policy);
}

double heat_kernel(const SpectralModel& model, double t, std::span<const double> x,
                   std::span<const double> y, const TruncationPolicy& policy) {
  require_time(t);
  if (static_cast<int>(x.size()) != model.dim() || static_cast<int>(y.size()) != model.dim()) {
    throw ValidationError("heat_kernel: point dimension mismatch");
  }
  if (model.flat()) return detail::torus_kernel(model, t, x, y, policy);
  return detail::sphere_kernel(model, t, x, y, policy);
}

double normalized_diagonal(const SpectralModel& model, double t, const TruncationPolicy& policy) {
  const std::vector<double> p(static_cast<std::size_t>(model.dim()), 0.0);
  return std::pow(4.0 * std::numbers::pi * t, model.dim() / 2.0) * heat_kernel(model, t, p, p, policy);
}

double gram_scale(int n, double t) {
  return 2.0 * std::pow(4.0 * std::numbers::pi, n / 2.0) * std::pow(t, (n + 2) / 2.0);
}

double normalization_factor(int n, double t, int degree) {
  return std::pow(4.0 * std::numbers::pi * t, n / 2.0) * std::pow(2.0 * t, degree / 2);
}

double gram_entry(const SpectralModel& model, double t, const MultiIndex& alpha,
                  const MultiIndex& beta, const TruncationPolicy& policy) {
  return gram_scale(model.dim(), t) * heat_kernel_jet(model, t, alpha, beta, policy).value;
}

double normalized_jet(const SpectralModel& model, double t, const MultiIndex& alpha,
                      const MultiIndex& beta, const TruncationPolicy& policy) {
  return normalization_factor(model.dim(), t, alpha.degree() + beta.degree()) *
         heat_kernel_jet(model, t, alpha, beta, policy).value;
}

}  // namespace spectraljet
