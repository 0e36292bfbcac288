#include <Eigen/Eigenvalues>

#include <cmath>

#include "spectraljet/errors.hpp"
#include "spectraljet/kernels.hpp"
#include "spectraljet/manifolds.hpp"
#include "spectraljet/parallel.hpp"
#include "spectraljet/series.hpp"

namespace spectraljet {

namespace {

void require_index(const SpectralModel& model, int i) {
  if (i < 1 || i > model.dim()) {
    throw ValidationError("index " + std::to_string(i) + " outside 1.." +
                          std::to_string(model.dim()));
  }
}

MultiIndex idx(const SpectralModel& model, std::initializer_list<int> list) {
  for (int i : list) require_index(model, i);
  return MultiIndex::from_indices(list, model.dim());
}

}  // namespace

JetGram jet_gram(const SpectralModel& model, double t, int max_order,
                 const TruncationPolicy& policy) {
  if (max_order < 1 || max_order > 4) throw ValidationError("jet_gram: order must be in 1..4");
  JetGram gram;
  gram.t = t;
  for (const auto& m : all_multi_indices(model.dim(), max_order)) {
    if (!m.empty()) gram.jets.push_back(m);
  }
  const std::size_t size = gram.jets.size();
  gram.entries.assign(size, std::vector<double>(size, 0.0));
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = r; c < size; ++c) tasks.emplace_back(r, c);
  }
  parallel_for(tasks.size(), [&](std::size_t k) {
    const auto [r, c] = tasks[k];
    const double g = gram_entry(model, t, gram.jets[r], gram.jets[c], policy);
    gram.entries[r][c] = g;
    gram.entries[c][r] = g;
  });
  Eigen::MatrixXd m(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = gram.entries[r][c];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  gram.min_eigenvalue = solver.eigenvalues().minCoeff();
  gram.max_eigenvalue = solver.eigenvalues().maxCoeff();
  return gram;
}

std::vector<std::vector<double>> pullback_metric(const SpectralModel& model, double t,
                                                 const TruncationPolicy& policy) {
  const int n = model.dim();
  std::vector<std::vector<double>> g(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const double v = gram_entry(model, t, idx(model, {i}), idx(model, {j}), policy);
      g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
      g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
    }
  }
  return g;
}

double mean_curvature_proxy(const SpectralModel& model, double t, const TruncationPolicy& policy) {
  const int n = model.dim();
  double total = 0.0;
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      total += gram_entry(model, t, idx(model, {k, k}), idx(model, {l, l}), policy);
    }
  }
  return std::sqrt(t * total / (n * n));
}

double third_jet_umbilical(const SpectralModel& model, double t, int i, int j, int k,
                           const TruncationPolicy& policy) {
  return 2.0 * t * gram_entry(model, t, idx(model, {i, k, k}), idx(model, {j}), policy);
}

double gauss_curvature_estimate(const SpectralModel& model, double t, int i, int j, int k, int l,
                                const TruncationPolicy& policy) {
  const JetValue d = heat_kernel_jet_difference(model, t, idx(model, {i, l}), idx(model, {j, k}),
                                                idx(model, {i, k}), idx(model, {j, l}), policy);
  return gram_scale(model.dim(), t) * d.value;
}

double constant_curvature_tensor(double sectional, int i, int j, int k, int l) {
  return sectional * ((i == l && j == k ? 1.0 : 0.0) - (i == k && j == l ? 1.0 : 0.0));
}

std::vector<double> levi_civita_components(const SpectralModel& model, double t, int i,
                                           const PolynomialField& field,
                                           const TruncationPolicy& policy) {
  const int n = model.dim();
  require_index(model, i);
  require_index(model, field.k);
  if (!field.linear.empty() && static_cast<int>(field.linear.size()) != n) {
    throw ValidationError("levi_civita: linear coefficients must have length n");
  }
  if (!field.quadratic.empty() && static_cast<int>(field.quadratic.size()) != n) {
    throw ValidationError("levi_civita: quadratic coefficients must be n x n");
  }
  const double fi = field.linear.empty() ? 0.0 : field.linear[static_cast<std::size_t>(i - 1)];
  std::vector<double> out;
  for (int j = 1; j <= n; ++j) {
    double v = 0.0;
    if (fi != 0.0) v += fi * gram_entry(model, t, idx(model, {field.k}), idx(model, {j}), policy);
    if (field.c0 != 0.0) {
      v += field.c0 * gram_entry(model, t, idx(model, {i, field.k}), idx(model, {j}), policy);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> levi_civita_expected(int n, int i, const PolynomialField& field) {
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  const double fi = field.linear.empty() ? 0.0 : field.linear[static_cast<std::size_t>(i - 1)];
  out[static_cast<std::size_t>(field.k - 1)] = fi;
  return out;
}

namespace {

void require_sphere(const SpectralModel& model) {
  if (model.kind() != SpectralModel::Kind::sphere) {
    throw ValidationError("squared-distance jets are implemented for sphere models only");
  }
}

}  // namespace

double squared_distance_jet(const SpectralModel& model, const MultiIndex& alpha,
                            const MultiIndex& beta) {
  require_sphere(model);
  require_same_dim(alpha, beta);
  const int degree = alpha.degree() + beta.degree();
  if (degree > 4) throw DomainError("squared_distance_jet: |alpha|+|beta| must be <= 4");
  const int n = model.dim();
  const double a = model.radius();
  const int vars = 2 * n;
  constexpr int D = 4;
  TruncatedSeries usq(vars, D), vsq(vars, D), uv(vars, D);
  for (int i = 0; i < n; ++i) {
    const auto u = TruncatedSeries::variable(vars, D, i) * (1.0 / a);
    const auto v = TruncatedSeries::variable(vars, D, n + i) * (1.0 / a);
    usq += u * u;
    vsq += v * v;
    uv += u * v;
  }
  const auto c = AnalyticKernel::c();
  const auto s = AnalyticKernel::s();
  const TruncatedSeries z = compose_univariate(c, usq) * compose_univariate(c, vsq) +
                            compose_univariate(s, usq) * compose_univariate(s, vsq) * uv;
  const TruncatedSeries r2 = compose_univariate(AnalyticKernel::arccos_squared(), z) * (a * a);
  return extract_mixed_partial(r2, alpha, beta);
}

double squared_distance_covariant_jet(const SpectralModel& model, int i, int j, int k, int l) {
  require_sphere(model);
  for (int v : {i, j, k, l}) require_index(model, v);
  const int n = model.dim();
  const double a = model.radius();
  constexpr int D = 6;
  using Series = TruncatedSeries;

  std::vector<Series> x;
  Series xsq(n, D);
  for (int p = 0; p < n; ++p) {
    x.push_back(Series::variable(n, D, p));
    xsq += x.back() * x.back();
  }
  // g = delta + q(|x|^2/a^2) (|x|^2 delta - x x^T)/a^2, q(z) = (s(z)^2 - 1)/z
  const std::vector<double> sc = AnalyticKernel::s().taylor(0.0, D + 1);
  std::vector<double> q(static_cast<std::size_t>(D), 0.0);
  for (int m = 1; m <= D; ++m) {
    double acc = 0.0;
    for (int r = 0; r <= m; ++r) acc += sc[static_cast<std::size_t>(r)] * sc[static_cast<std::size_t>(m - r)];
    q[static_cast<std::size_t>(m - 1)] = acc;
  }
  const Series qx = compose_polynomial(q, xsq * (1.0 / (a * a)));

  auto at = [n](int r, int c) { return static_cast<std::size_t>(r * n + c); };
  std::vector<Series> E(static_cast<std::size_t>(n * n), Series(n, D));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Series m = x[static_cast<std::size_t>(r)] * x[static_cast<std::size_t>(c)] * -1.0;
      if (r == c) m += xsq;
      E[at(r, c)] = qx * m * (1.0 / (a * a));
    }
  }
  std::vector<Series> g = E;
  for (int r = 0; r < n; ++r) g[at(r, r)] += 1.0;

  // g^{-1} = sum_k (-E)^k, E = O(|x|^2)
  std::vector<Series> inv(static_cast<std::size_t>(n * n), Series(n, D));
  std::vector<Series> power(static_cast<std::size_t>(n * n), Series(n, D));
  for (int r = 0; r < n; ++r) power[at(r, r)] += 1.0;
  for (int step = 0; 2 * step <= D; ++step) {
    for (std::size_t e = 0; e < inv.size(); ++e) inv[e] += power[e];
    std::vector<Series> next(static_cast<std::size_t>(n * n), Series(n, D));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        for (int m = 0; m < n; ++m) next[at(r, c)] -= power[at(r, m)] * E[at(m, c)];
      }
    }
    power = std::move(next);
  }

  // Gamma^c_{ab} = 1/2 g^{cd}(d_a g_db + d_b g_da - d_d g_ab)
  std::vector<std::vector<Series>> dg(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    for (int e = 0; e < n * n; ++e) dg[static_cast<std::size_t>(d)].push_back(g[static_cast<std::size_t>(e)].derivative(d));
  }
  auto gidx = [n](int c, int a2, int b) { return static_cast<std::size_t>((c * n + a2) * n + b); };
  std::vector<Series> gamma(static_cast<std::size_t>(n * n * n), Series(n, D));
  for (int c = 0; c < n; ++c) {
    for (int a2 = 0; a2 < n; ++a2) {
      for (int b = 0; b < n; ++b) {
        Series acc(n, D);
        for (int d = 0; d < n; ++d) {
          Series bracket = dg[static_cast<std::size_t>(a2)][at(d, b)] + dg[static_cast<std::size_t>(b)][at(d, a2)] -
                           dg[static_cast<std::size_t>(d)][at(a2, b)];
          acc += inv[at(c, d)] * bracket;
        }
        gamma[gidx(c, a2, b)] = acc * 0.5;
      }
    }
  }

  // covariant tensors stored flat; each step prepends an index:
  // (grad T)_{a, rest} = d_a T_rest - sum_p Gamma^c_{a rest_p} T_{rest with c at p}
  std::vector<Series> tensor{xsq};
  int rank = 0;
  for (int step = 0; step < 4; ++step) {
    const std::size_t old_size = tensor.size();
    std::vector<Series> next;
    next.reserve(old_size * static_cast<std::size_t>(n));
    for (int a2 = 0; a2 < n; ++a2) {
      for (std::size_t rest = 0; rest < old_size; ++rest) {
        Series val = tensor[rest].derivative(a2);
        std::size_t stride = 1;
        for (int p = rank - 1; p >= 0; --p) {
          const int digit = static_cast<int>((rest / stride) % static_cast<std::size_t>(n));
          for (int c = 0; c < n; ++c) {
            const std::size_t swapped = rest - static_cast<std::size_t>(digit) * stride +
                                        static_cast<std::size_t>(c) * stride;
            val -= gamma[gidx(c, a2, digit)] * tensor[swapped];
          }
          stride *= static_cast<std::size_t>(n);
        }
        next.push_back(std::move(val));
      }
    }
    tensor = std::move(next);
    ++rank;
  }
  const std::size_t flat = static_cast<std::size_t>((((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1));
  return tensor[flat].constant_term();
}

double squared_distance_fourth_target(const SpectralModel& model, int i, int j, int k, int l) {
  require_sphere(model);
  const double a = model.radius();
  // R_abcd = (d_ac d_bd - d_ad d_bc)/a^2, so R_1212 = 1/a^2
  auto R = [a](int p, int q, int r, int s) {
    return ((p == r && q == s ? 1.0 : 0.0) - (p == s && q == r ? 1.0 : 0.0)) / (a * a);
  };
  return -(2.0 / 3.0) * (R(i, k, j, l) + R(i, l, j, k));
}

StabilityCheck truncation_stability(const SpectralModel& model, double t, const MultiIndex& alpha,
                                    const MultiIndex& beta, const TruncationPolicy& policy) {
  const JetValue base = heat_kernel_jet(model, t, alpha, beta, policy);
  TruncationPolicy doubled = TruncationPolicy::fixed(std::max(2 * base.cutoff, 1L));
  doubled.sphere_cap = std::max(policy.sphere_cap, doubled.cutoff);
  doubled.torus_cap = std::max(policy.torus_cap, doubled.cutoff);
  const JetValue wide = heat_kernel_jet(model, t, alpha, beta, doubled);
  return {base.value, wide.value, std::abs(wide.value - base.value), base.cutoff};
}

}  // namespace spectraljet
