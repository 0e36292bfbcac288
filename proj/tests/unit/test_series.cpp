#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "spectraljet/errors.hpp"
#include "spectraljet/kernels.hpp"
#include "spectraljet/series.hpp"

using namespace spectraljet;

namespace {

TruncatedSeries random_series(int nv, int d, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TruncatedSeries s(nv, d);
  for (auto& c : s.coefficients()) c = u(rng);
  return s;
}

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

TEST(Series, MultiplicationMatchesConvolution) {
  std::mt19937 rng(3);
  const int nv = 3, d = 5;
  const auto a = random_series(nv, d, rng);
  const auto b = random_series(nv, d, rng);
  const auto& basis = a.basis();
  std::map<std::vector<int>, double> ref;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis.degree[i] + basis.degree[j] > d) continue;
      std::vector<int> e(nv);
      for (int v = 0; v < nv; ++v) e[v] = basis.exponents[i][v] + basis.exponents[j][v];
      ref[e] += a.coefficients()[i] * b.coefficients()[j];
    }
  }
  const auto p = a * b;
  for (const auto& [e, v] : ref) EXPECT_NEAR(p.coeff(e), v, 1e-13);
  EXPECT_EQ(ref.size(), basis.size());
}

TEST(Series, RingAxioms) {
  std::mt19937 rng(5);
  const auto a = random_series(4, 4, rng);
  const auto b = random_series(4, 4, rng);
  const auto c = random_series(4, 4, rng);
  EXPECT_LT(((a * b) - (b * a)).max_abs(), 1e-14);
  EXPECT_LT(((a * b) * c - a * (b * c)).max_abs(), 1e-12);
  EXPECT_LT((a * (b + c) - (a * b + a * c)).max_abs(), 1e-13);
  const auto one = TruncatedSeries::constant(4, 4, 1.0);
  EXPECT_LT((a * one - a).max_abs(), 1e-15);
}

TEST(Series, Incompatible) {
  EXPECT_THROW(TruncatedSeries(2, 3) + TruncatedSeries(2, 4), ValidationError);
  EXPECT_THROW(TruncatedSeries(2, 3) * TruncatedSeries(3, 3), ValidationError);
}

TEST(Series, TrigIdentity) {
  const int nv = 2, d = 8;
  auto h = TruncatedSeries::variable(nv, d, 0) * 0.7 + TruncatedSeries::variable(nv, d, 1) * (-0.3);
  h = h + h * TruncatedSeries::variable(nv, d, 1);
  const auto s = compose_univariate(AnalyticKernel::sin(), h);
  const auto c = compose_univariate(AnalyticKernel::cos(), h);
  const auto one = s * s + c * c;
  EXPECT_NEAR(one.constant_term(), 1.0, 1e-15);
  auto rest = one;
  rest += -1.0;
  EXPECT_LT(rest.max_abs(), 1e-13);
}

TEST(Series, SqrtKernelIdentity) {
  const int nv = 4, d = 8;
  TruncatedSeries z(nv, d);
  for (int v = 0; v < nv; ++v) {
    const auto x = TruncatedSeries::variable(nv, d, v);
    z += x * x * (1.0 + 0.1 * v);
  }
  const auto s = compose_univariate(AnalyticKernel::s(), z);
  const auto c = compose_univariate(AnalyticKernel::c(), z);
  auto id = s * s * z + c * c;
  id += -1.0;
  EXPECT_LT(id.max_abs(), 1e-13);
}

TEST(Series, ExtractExamples) {
  const int nv = 4, d = 4;
  const auto u1 = TruncatedSeries::variable(nv, d, 0);
  const auto v1 = TruncatedSeries::variable(nv, d, 2);
  const auto p = u1 * u1 * v1 * 3.0;
  EXPECT_DOUBLE_EQ(extract_mixed_partial(p, MultiIndex::from_indices({1, 1}, 2),
                                         MultiIndex::from_indices({1}, 2)),
                   6.0);
  const std::vector<int> e{2, 0, 1, 0};
  EXPECT_DOUBLE_EQ(extract_partial(p, e), 6.0);
  EXPECT_EQ(extract_mixed_partial(p, MultiIndex::from_indices({1}, 2), MultiIndex(2)), 0.0);
}

TEST(Series, MatchesSymbolicPolynomials) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-5, 5);
  const int nv = 3, d = 6;
  for (int trial = 0; trial < 20; ++trial) {
    oracle::Poly pa, pb;
    TruncatedSeries sa(nv, d), sb(nv, d);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> ea(nv), eb(nv);
      for (int v = 0; v < nv; ++v) {
        ea[v] = static_cast<int>(rng() % 2);
        eb[v] = static_cast<int>(rng() % 3);
      }
      const double ca = coef(rng), cb = coef(rng);
      pa.terms[ea] += ca;
      pb.terms[eb] += cb;
      sa.set_coeff(ea, sa.coeff(ea) + ca);
      sb.set_coeff(eb, sb.coeff(eb) + cb);
    }
    oracle::Poly prod;
    for (const auto& [ea, ca] : pa.terms) {
      for (const auto& [eb, cb] : pb.terms) {
        std::vector<int> e(nv);
        for (int v = 0; v < nv; ++v) e[v] = ea[v] + eb[v];
        prod.terms[e] += ca * cb;
      }
    }
    const auto sp = sa * sb;
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 2; ++j) {
        for (int k = 0; k <= 3; ++k) {
          if (i + j + k > d) continue;
          oracle::Poly q = prod;
          for (int r = 0; r < i; ++r) q = q.derivative(0);
          for (int r = 0; r < j; ++r) q = q.derivative(1);
          for (int r = 0; r < k; ++r) q = q.derivative(2);
          const std::vector<int> e{i, j, k};
          EXPECT_NEAR(extract_partial(sp, e), q.at_zero(), 1e-9);
        }
      }
    }
    for (auto it = prod.terms.begin(); it != prod.terms.end();) {
      it = it->first[0] + it->first[1] + it->first[2] > d ? prod.terms.erase(it) : std::next(it);
    }
    const std::vector<double> x{0.3, -0.2, 0.5};
    EXPECT_NEAR(sp.evaluate(x), prod.evaluate(x), 1e-12);
    EXPECT_NEAR(sa.derivative(1).evaluate(x), pa.derivative(1).evaluate(x), 1e-12);
  }
}

TEST(Series, CompositionAgainstFiniteDifferences) {
  const int nv = 2, d = 4;
  const auto x = TruncatedSeries::variable(nv, d, 0);
  const auto y = TruncatedSeries::variable(nv, d, 1);
  auto q = x * x * 0.5 + x * y - y * 0.4 + x * 0.3;
  q += 0.2;
  const auto s = compose_univariate(AnalyticKernel::cos(), q);
  auto f = [](const std::vector<double>& p) {
    return std::cos(0.5 * p[0] * p[0] + p[0] * p[1] - 0.4 * p[1] + 0.3 * p[0] + 0.2);
  };
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; i + j <= 3; ++j) {
      const std::vector<int> e{i, j};
      EXPECT_NEAR(extract_partial(s, e), oracle::mixed_fd(f, {0.0, 0.0}, e, 0.02), 2e-5)
          << i << "," << j;
    }
  }
}

TEST(Series, PolynomialComposition) {
  const int nv = 1, d = 6;
  const auto x = TruncatedSeries::variable(nv, d, 0);
  std::vector<double> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = 1.0 / factorial(k);
  const auto e = compose_polynomial(c, x);
  for (int k = 0; k <= d; ++k) {
    const std::vector<int> ex{k};
    EXPECT_NEAR(e.coeff(ex), 1.0 / factorial(k), 1e-15);
  }
  EXPECT_THROW(compose_polynomial(c, x + 1.0), DomainError);
}

TEST(Series, EvaluateAndDerivative) {
  const int nv = 2, d = 3;
  const auto x = TruncatedSeries::variable(nv, d, 0, 1.5);
  const auto y = TruncatedSeries::variable(nv, d, 1);
  const auto p = x * y * y;
  const std::vector<double> pt{0.5, 2.0};
  EXPECT_NEAR(p.evaluate(pt), 2.0 * 4.0, 1e-14);
  EXPECT_NEAR(p.derivative(1).evaluate(pt), 2.0 * 2.0 * 2.0, 1e-14);
}
