#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "detail.hpp"
#include "spectraljet/errors.hpp"
#include "spectraljet/kernels.hpp"
#include "spectraljet/numerics.hpp"
#include "spectraljet/series.hpp"

namespace spectraljet::detail {

namespace {

// Powers (z - 1)^m of the cosine of the geodesic distance between exp(u) and
// exp(v), as series in (u, v).
struct SphereTable {
  std::vector<TruncatedSeries> wpow;
};

std::shared_ptr<const SphereTable> build_table(int n, double a, int degree) {
  const int vars = 2 * n;
  TruncatedSeries usq(vars, degree), vsq(vars, degree), uv(vars, degree);
  for (int i = 0; i < n; ++i) {
    const auto u = TruncatedSeries::variable(vars, degree, i) * (1.0 / a);
    const auto v = TruncatedSeries::variable(vars, degree, n + i) * (1.0 / a);
    usq += u * u;
    vsq += v * v;
    uv += u * v;
  }
  const auto c = AnalyticKernel::c();
  const auto s = AnalyticKernel::s();
  TruncatedSeries w = compose_univariate(c, usq) * compose_univariate(c, vsq) +
                      compose_univariate(s, usq) * compose_univariate(s, vsq) * uv;
  w.coefficients()[0] -= 1.0;
  auto table = std::make_shared<SphereTable>();
  table->wpow.push_back(TruncatedSeries::constant(vars, degree, 1.0));
  for (int m = 1; 2 * m <= degree; ++m) table->wpow.push_back(table->wpow.back() * w);
  return table;
}

std::shared_ptr<const SphereTable> sphere_table(int n, double a, int degree) {
  static std::mutex mutex;
  static std::map<std::tuple<int, double, int>, std::shared_ptr<const SphereTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, a, degree}];
  if (!slot) slot = build_table(n, a, degree);
  return slot;
}

}  // namespace

JetValue sphere_jet_difference(const SpectralModel& model, double t, const MultiIndex& alpha1,
                               const MultiIndex& beta1, const MultiIndex* alpha2,
                               const MultiIndex* beta2, const TruncationPolicy& policy) {
  const int n = model.dim();
  const double a = model.radius();
  int degree = alpha1.degree() + beta1.degree();
  if (alpha2) degree = std::max(degree, alpha2->degree() + beta2->degree());
  if (degree > 8) throw DomainError("sphere jets support |alpha|+|beta| <= 8");
  const int table_degree = degree + (degree % 2);
  const auto table = sphere_table(n, a, table_degree);

  const int mmax = table_degree / 2;
  std::vector<double> delta(static_cast<std::size_t>(mmax + 1), 0.0);
  bool any = false;
  for (int m = 0; m <= mmax; ++m) {
    const auto& wm = table->wpow[static_cast<std::size_t>(m)];
    double d = extract_mixed_partial(wm, alpha1, beta1);
    if (alpha2) d -= extract_mixed_partial(wm, *alpha2, *beta2);
    double inv_fact = 1.0;
    for (int i = 2; i <= m; ++i) inv_fact /= i;
    delta[static_cast<std::size_t>(m)] = d * inv_fact;
    any = any || d != 0.0;
  }
  if (!any) return {0.0, 0};

  const double volume = model.volume();
  NeumaierSum sum;
  TailTracker tail{policy, (degree + n) / 2.0 + 1.0};
  for (long l = 0;; ++l) {
    if (l > policy.sphere_cap) {
      throw CutoffError("sphere jet: cutoff exceeded hard cap " + std::to_string(policy.sphere_cap),
                        l);
    }
    const double lam_unit = static_cast<double>(l) * static_cast<double>(l + n - 1);
    const double lambda_t = lam_unit * t / (a * a);
    const double weight = model.sphere_multiplicity(l) * std::exp(-lambda_t) / volume;
    // Z_l^(m)(1) = prod_{i<m} (lambda_l - lambda_i)/(n + 2i)
    double zm = 1.0;
    NeumaierSum inner;
    double bound = 0.0;
    for (int m = 0; m <= mmax; ++m) {
      if (m > 0) {
        const double lam_i = static_cast<double>(m - 1) * static_cast<double>(m - 1 + n - 1);
        zm *= (lam_unit - lam_i) / (n + 2.0 * (m - 1));
      }
      const double term = zm * delta[static_cast<std::size_t>(m)];
      inner.add(term);
      bound += std::abs(term);
    }
    sum.add(weight * inner.value());
    if (tail.done(l, weight * bound, lambda_t)) return {sum.value(), l};
  }
}

double sphere_kernel(const SpectralModel& model, double t, std::span<const double> x,
                     std::span<const double> y, const TruncationPolicy& policy) {
  const int n = model.dim();
  const double a = model.radius();
  auto embed = [&](std::span<const double> p) {
    double norm = 0.0;
    for (double v : p) norm += v * v;
    norm = std::sqrt(norm);
    std::vector<double> e(static_cast<std::size_t>(n + 1), 0.0);
    e[0] = std::cos(norm / a);
    for (int i = 0; i < n; ++i) {
      const double dir = norm > 0.0 ? p[static_cast<std::size_t>(i)] / norm : 0.0;
      e[static_cast<std::size_t>(i + 1)] = std::sin(norm / a) * dir;
    }
    return e;
  };
  const auto ex = embed(x);
  const auto ey = embed(y);
  double c = 0.0;
  for (std::size_t i = 0; i < ex.size(); ++i) c += ex[i] * ey[i];
  c = std::clamp(c, -1.0, 1.0);

  const double lambda = (n - 1) / 2.0;
  const double volume = model.volume();
  NeumaierSum sum;
  TailTracker tail{policy, n / 2.0 + 1.0};
  // Gegenbauer recurrence in l for C_l(c) and C_l(1)
  double prev = 0.0, cur = 1.0, prev1 = 0.0, cur1 = 1.0;
  for (long l = 0;; ++l) {
    if (l > policy.sphere_cap) {
      throw CutoffError("sphere kernel: cutoff exceeded hard cap", l);
    }
    if (l == 1) {
      prev = 1.0;
      cur = 2.0 * lambda * c;
      prev1 = 1.0;
      cur1 = 2.0 * lambda;
    } else if (l > 1) {
      const double m = static_cast<double>(l);
      const double next = (2.0 * c * (m + lambda - 1.0) * cur - (m + 2.0 * lambda - 2.0) * prev) / m;
      const double next1 = (2.0 * (m + lambda - 1.0) * cur1 - (m + 2.0 * lambda - 2.0) * prev1) / m;
      prev = cur;
      cur = next;
      prev1 = cur1;
      cur1 = next1;
    }
    const double lambda_t = model.sphere_eigenvalue(l) * t;
    const double weight = model.sphere_multiplicity(l) * std::exp(-lambda_t) / volume;
    sum.add(weight * cur / cur1);
    if (tail.done(l, weight, lambda_t)) return sum.value();
  }
}

}  // namespace spectraljet::detail
