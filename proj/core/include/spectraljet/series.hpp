#pragma once

#include <memory>
#include <span>
#include <vector>

#include "spectraljet/multiindex.hpp"

namespace spectraljet {

// Monomials of total degree <= D in N variables, graded, shared between series.
struct SeriesBasis {
  int num_vars = 0;
  int max_degree = 0;
  std::vector<std::vector<int>> exponents;
  std::vector<int> degree;
  // index of a monomial, or -1; key is sum e_i (D+1)^i
  std::vector<int> lookup;
  // product table: for monomial i, pairs (j, k) with x^i x^j = x^k
  std::vector<std::size_t> pair_offset;
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const { return exponents.size(); }
  int index_of(std::span<const int> exps) const;

  static std::shared_ptr<const SeriesBasis> get(int num_vars, int max_degree);
};

// Multivariate Taylor polynomial truncated at total degree D. Variables
// 0..n-1 are the x-offsets u, n..2n-1 the y-offsets v.
class TruncatedSeries {
public:
  TruncatedSeries(int num_vars, int max_degree);

  static TruncatedSeries constant(int num_vars, int max_degree, double c);
  static TruncatedSeries variable(int num_vars, int max_degree, int var, double center = 0.0);

  int num_vars() const noexcept { return basis_->num_vars; }
  int max_degree() const noexcept { return basis_->max_degree; }
  const SeriesBasis& basis() const noexcept { return *basis_; }

  double coeff(std::span<const int> exps) const;
  void set_coeff(std::span<const int> exps, double value);
  double constant_term() const noexcept { return coeffs_[0]; }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  std::vector<double>& coefficients() noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(double s);
  TruncatedSeries& operator+=(double c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, double s) { return a *= s; }
  friend TruncatedSeries operator*(double s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator+(TruncatedSeries a, double c) { return a += c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries derivative(int var) const;
  double evaluate(std::span<const double> point) const;
  double max_abs() const;

private:
  void require_compatible(const TruncatedSeries& other) const;

  std::shared_ptr<const SeriesBasis> basis_;
  std::vector<double> coeffs_;
};

// sum_k c[k] h^k for h with zero constant term.
TruncatedSeries compose_polynomial(std::span<const double> c, const TruncatedSeries& h);

// D_v^beta D_u^alpha at the origin: coefficient at (alpha, beta) times alpha! beta!.
double extract_mixed_partial(const TruncatedSeries& s, const MultiIndex& alpha,
                             const MultiIndex& beta);

// Plain partial derivative at the origin for an exponent vector of length N.
double extract_partial(const TruncatedSeries& s, std::span<const int> exps);

}  // namespace spectraljet
