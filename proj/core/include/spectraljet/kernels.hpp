#pragma once

#include <string>
#include <vector>

#include "spectraljet/series.hpp"

namespace spectraljet {

class AnalyticKernel {
public:
  enum class Kind { exp, cos, sin, sinc_sqrt, cos_sqrt, gegenbauer, reciprocal, arccos_squared };

  static AnalyticKernel exp() { return AnalyticKernel(Kind::exp); }
  static AnalyticKernel cos() { return AnalyticKernel(Kind::cos); }
  static AnalyticKernel sin() { return AnalyticKernel(Kind::sin); }
  // s(z) = sin(sqrt z)/sqrt z, expanded about 0
  static AnalyticKernel s() { return AnalyticKernel(Kind::sinc_sqrt); }
  // c(z) = cos(sqrt z), expanded about 0
  static AnalyticKernel c() { return AnalyticKernel(Kind::cos_sqrt); }
  static AnalyticKernel gegenbauer(double lambda, int degree);
  static AnalyticKernel legendre(int degree) { return gegenbauer(0.5, degree); }
  static AnalyticKernel chebyshev_u(int degree) { return gegenbauer(1.0, degree); }
  static AnalyticKernel reciprocal() { return AnalyticKernel(Kind::reciprocal); }
  // arccos(z)^2, expanded about 1
  static AnalyticKernel arccos_squared() { return AnalyticKernel(Kind::arccos_squared); }

  Kind kind() const noexcept { return kind_; }
  std::string name() const;

  // f^(k)(center)/k! for k = 0..order
  std::vector<double> taylor(double center, int order) const;
  double value(double x) const;

private:
  explicit AnalyticKernel(Kind kind, double lambda = 0.0, int degree = 0)
      : kind_(kind), lambda_(lambda), degree_(degree) {}

  Kind kind_;
  double lambda_;
  int degree_;
};

double gegenbauer_value(double lambda, int degree, double x);

// Expands the kernel about the constant term of inner.
TruncatedSeries compose_univariate(const AnalyticKernel& kernel, const TruncatedSeries& inner);

}  // namespace spectraljet
