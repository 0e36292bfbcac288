#include "spectraljet/kernels.hpp"

#include <cmath>
#include <numbers>

#include "spectraljet/errors.hpp"

namespace spectraljet {

namespace {

void require_center(double center, double expected, const char* name) {
  if (center != expected) {
    throw DomainError(std::string(name) + " is only expanded about " +
                      std::to_string(expected) + ", got " + std::to_string(center));
  }
}

}  // namespace

AnalyticKernel AnalyticKernel::gegenbauer(double lambda, int degree) {
  if (lambda <= 0.0 || degree < 0) throw ValidationError("gegenbauer: need lambda > 0, degree >= 0");
  return AnalyticKernel(Kind::gegenbauer, lambda, degree);
}

std::string AnalyticKernel::name() const {
  switch (kind_) {
    case Kind::exp: return "exp";
    case Kind::cos: return "cos";
    case Kind::sin: return "sin";
    case Kind::sinc_sqrt: return "s";
    case Kind::cos_sqrt: return "c";
    case Kind::gegenbauer:
      return "gegenbauer(" + std::to_string(lambda_) + "," + std::to_string(degree_) + ")";
    case Kind::reciprocal: return "reciprocal";
    case Kind::arccos_squared: return "arccos^2";
  }
  return "?";
}

double gegenbauer_value(double lambda, int degree, double x) {
  if (degree < 0) return 0.0;
  double prev = 1.0;
  if (degree == 0) return prev;
  double cur = 2.0 * lambda * x;
  for (int m = 2; m <= degree; ++m) {
    const double next = (2.0 * x * (m + lambda - 1.0) * cur - (m + 2.0 * lambda - 2.0) * prev) / m;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> AnalyticKernel::taylor(double center, int order) const {
  std::vector<double> c(static_cast<std::size_t>(order + 1), 0.0);
  double inv_fact = 1.0;  // 1/k!
  for (int k = 0; k <= order; ++k) {
    if (k > 0) inv_fact /= k;
    double d = 0.0;  // k-th derivative at center, or the coefficient itself
    switch (kind_) {
      case Kind::exp:
        d = std::exp(center) * inv_fact;
        break;
      case Kind::cos:
        d = std::cos(center + k * std::numbers::pi / 2) * inv_fact;
        break;
      case Kind::sin:
        d = std::sin(center + k * std::numbers::pi / 2) * inv_fact;
        break;
      case Kind::sinc_sqrt: {
        require_center(center, 0.0, "s(z)");
        double f = 1.0;
        for (int i = 2; i <= 2 * k + 1; ++i) f *= i;
        d = (k % 2 == 0 ? 1.0 : -1.0) / f;
        break;
      }
      case Kind::cos_sqrt: {
        require_center(center, 0.0, "c(z)");
        double f = 1.0;
        for (int i = 2; i <= 2 * k; ++i) f *= i;
        d = (k % 2 == 0 ? 1.0 : -1.0) / f;
        break;
      }
      case Kind::gegenbauer: {
        // d^k C^l_n = 2^k (l)_k C^{l+k}_{n-k}
        double rising = 1.0;
        for (int i = 0; i < k; ++i) rising *= lambda_ + i;
        d = std::ldexp(rising, k) * gegenbauer_value(lambda_ + k, degree_ - k, center) * inv_fact;
        break;
      }
      case Kind::reciprocal:
        if (center == 0.0) throw DomainError("reciprocal: cannot expand about 0");
        d = (k % 2 == 0 ? 1.0 : -1.0) / std::pow(center, k + 1);
        break;
      case Kind::arccos_squared: {
        require_center(center, 1.0, "arccos^2");
        if (k == 0) break;
        // arccos(1-w)^2 = 2 sum (2w)^k / (k^2 binom(2k,k)), w = -(z-1)
        double binom = 1.0;
        for (int i = 1; i <= k; ++i) binom = binom * (k + i) / i;
        d = 2.0 * std::pow(-2.0, k) / (static_cast<double>(k) * k * binom);
        break;
      }
    }
    c[static_cast<std::size_t>(k)] = d;
  }
  return c;
}

double AnalyticKernel::value(double x) const {
  switch (kind_) {
    case Kind::exp: return std::exp(x);
    case Kind::cos: return std::cos(x);
    case Kind::sin: return std::sin(x);
    case Kind::sinc_sqrt:
      if (x > 0) return std::sin(std::sqrt(x)) / std::sqrt(x);
      if (x < 0) return std::sinh(std::sqrt(-x)) / std::sqrt(-x);
      return 1.0;
    case Kind::cos_sqrt:
      return x >= 0 ? std::cos(std::sqrt(x)) : std::cosh(std::sqrt(-x));
    case Kind::gegenbauer: return gegenbauer_value(lambda_, degree_, x);
    case Kind::reciprocal: return 1.0 / x;
    case Kind::arccos_squared: {
      if (x <= 1.0) {
        const double a = std::acos(std::max(x, -1.0));
        return a * a;
      }
      const double a = std::acosh(x);
      return -a * a;
    }
  }
  return 0.0;
}

TruncatedSeries compose_univariate(const AnalyticKernel& kernel, const TruncatedSeries& inner) {
  const double center = inner.constant_term();
  const std::vector<double> c = kernel.taylor(center, inner.max_degree());
  TruncatedSeries h = inner;
  h.coefficients()[0] = 0.0;
  return compose_polynomial(c, h);
}

}  // namespace spectraljet
