#include "spectraljet/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "spectraljet/errors.hpp"
#include "spectraljet/numerics.hpp"

namespace spectraljet {

namespace {

void graded(int num_vars, int slot, int remaining, std::vector<int>& e,
            std::vector<std::vector<int>>& out) {
  if (slot == num_vars - 1) {
    e[static_cast<std::size_t>(slot)] = remaining;
    out.push_back(e);
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    e[static_cast<std::size_t>(slot)] = c;
    graded(num_vars, slot + 1, remaining - c, e, out);
  }
}

std::size_t lookup_key(std::span<const int> e, int max_degree) {
  std::size_t key = 0;
  std::size_t base = 1;
  for (int v : e) {
    key += static_cast<std::size_t>(v) * base;
    base *= static_cast<std::size_t>(max_degree + 1);
  }
  return key;
}

std::shared_ptr<const SeriesBasis> build_basis(int num_vars, int max_degree) {
  auto b = std::make_shared<SeriesBasis>();
  b->num_vars = num_vars;
  b->max_degree = max_degree;
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t before = b->exponents.size();
    graded(num_vars, 0, d, e, b->exponents);
    b->degree.insert(b->degree.end(), b->exponents.size() - before, d);
  }
  const double table = std::pow(max_degree + 1.0, num_vars);
  if (table > 2e7) throw ValidationError("TruncatedSeries: too many variables for this degree");
  b->lookup.assign(static_cast<std::size_t>(table), -1);
  for (std::size_t i = 0; i < b->exponents.size(); ++i) {
    b->lookup[lookup_key(b->exponents[i], max_degree)] = static_cast<int>(i);
  }
  std::vector<int> sum(static_cast<std::size_t>(num_vars));
  for (std::size_t i = 0; i < b->exponents.size(); ++i) {
    b->pair_offset.push_back(b->pairs.size());
    for (std::size_t j = 0; j < b->exponents.size(); ++j) {
      if (b->degree[i] + b->degree[j] > max_degree) break;
      for (int v = 0; v < num_vars; ++v) {
        sum[static_cast<std::size_t>(v)] = b->exponents[i][static_cast<std::size_t>(v)] +
                                           b->exponents[j][static_cast<std::size_t>(v)];
      }
      b->pairs.emplace_back(static_cast<int>(j), b->index_of(sum));
    }
  }
  b->pair_offset.push_back(b->pairs.size());
  return b;
}

}  // namespace

int SeriesBasis::index_of(std::span<const int> exps) const {
  if (static_cast<int>(exps.size()) != num_vars) {
    throw ValidationError("TruncatedSeries: exponent length mismatch");
  }
  int total = 0;
  for (int v : exps) {
    if (v < 0) throw ValidationError("TruncatedSeries: negative exponent");
    total += v;
  }
  if (total > max_degree) return -1;
  return lookup[lookup_key(exps, max_degree)];
}

std::shared_ptr<const SeriesBasis> SeriesBasis::get(int num_vars, int max_degree) {
  if (num_vars < 1 || max_degree < 0) throw ValidationError("TruncatedSeries: bad shape");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const SeriesBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{num_vars, max_degree}];
  if (!slot) slot = build_basis(num_vars, max_degree);
  return slot;
}

TruncatedSeries::TruncatedSeries(int num_vars, int max_degree)
    : basis_(SeriesBasis::get(num_vars, max_degree)), coeffs_(basis_->size(), 0.0) {}

TruncatedSeries TruncatedSeries::constant(int num_vars, int max_degree, double c) {
  TruncatedSeries s(num_vars, max_degree);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int num_vars, int max_degree, int var, double center) {
  if (var < 0 || var >= num_vars) throw ValidationError("TruncatedSeries: variable out of range");
  TruncatedSeries s = constant(num_vars, max_degree, center);
  if (max_degree >= 1) {
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    s.set_coeff(e, 1.0);
  }
  return s;
}

double TruncatedSeries::coeff(std::span<const int> exps) const {
  const int i = basis_->index_of(exps);
  return i < 0 ? 0.0 : coeffs_[static_cast<std::size_t>(i)];
}

void TruncatedSeries::set_coeff(std::span<const int> exps, double value) {
  const int i = basis_->index_of(exps);
  if (i < 0) throw DomainError("TruncatedSeries: monomial above truncation degree");
  coeffs_[static_cast<std::size_t>(i)] = value;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other) const {
  if (basis_ != other.basis_) {
    throw ValidationError("TruncatedSeries: incompatible variable count or degree");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator+=(double c) {
  coeffs_[0] += c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b);
  const SeriesBasis& basis = *a.basis_;
  std::vector<NeumaierSum> acc(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double ai = a.coeffs_[i];
    if (ai == 0.0) continue;
    for (std::size_t p = basis.pair_offset[i]; p < basis.pair_offset[i + 1]; ++p) {
      const auto [j, k] = basis.pairs[p];
      const double bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj != 0.0) acc[static_cast<std::size_t>(k)].add(ai * bj);
    }
  }
  TruncatedSeries out(basis.num_vars, basis.max_degree);
  for (std::size_t k = 0; k < acc.size(); ++k) out.coeffs_[k] = acc[k].value();
  return out;
}

TruncatedSeries TruncatedSeries::derivative(int var) const {
  if (var < 0 || var >= num_vars()) throw ValidationError("TruncatedSeries: variable out of range");
  TruncatedSeries out(num_vars(), max_degree());
  std::vector<int> e;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int power = basis_->exponents[i][static_cast<std::size_t>(var)];
    if (power == 0) continue;
    e = basis_->exponents[i];
    --e[static_cast<std::size_t>(var)];
    out.coeffs_[static_cast<std::size_t>(basis_->index_of(e))] = power * coeffs_[i];
  }
  return out;
}

double TruncatedSeries::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != num_vars()) {
    throw ValidationError("TruncatedSeries: point dimension mismatch");
  }
  NeumaierSum sum;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    double term = coeffs_[i];
    const auto& e = basis_->exponents[i];
    for (std::size_t v = 0; v < e.size(); ++v) {
      for (int p = 0; p < e[v]; ++p) term *= point[v];
    }
    sum.add(term);
  }
  return sum.value();
}

double TruncatedSeries::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

TruncatedSeries compose_polynomial(std::span<const double> c, const TruncatedSeries& h) {
  if (h.constant_term() != 0.0) {
    throw DomainError("compose_polynomial: inner series must have zero constant term");
  }
  const int n = h.num_vars();
  const int d = h.max_degree();
  // h^k vanishes below degree k, so terms beyond D drop out
  const int top = std::min<int>(static_cast<int>(c.size()) - 1, d);
  if (top < 0) return TruncatedSeries(n, d);
  TruncatedSeries out = TruncatedSeries::constant(n, d, c[static_cast<std::size_t>(top)]);
  for (int k = top - 1; k >= 0; --k) {
    out = out * h;
    out += c[static_cast<std::size_t>(k)];
  }
  return out;
}

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

double extract_partial(const TruncatedSeries& s, std::span<const int> exps) {
  int total = 0;
  double scale = 1.0;
  for (int e : exps) {
    total += e;
    scale *= factorial(e);
  }
  if (total > s.max_degree()) {
    throw DomainError("extract_partial: derivative order " + std::to_string(total) +
                      " exceeds series degree " + std::to_string(s.max_degree()));
  }
  return s.coeff(exps) * scale;
}

double extract_mixed_partial(const TruncatedSeries& s, const MultiIndex& alpha,
                             const MultiIndex& beta) {
  require_same_dim(alpha, beta);
  const int n = alpha.dim();
  if (s.num_vars() != 2 * n) {
    throw ValidationError("extract_mixed_partial: series has " + std::to_string(s.num_vars()) +
                          " variables, expected " + std::to_string(2 * n));
  }
  std::vector<int> e(alpha.counts());
  e.insert(e.end(), beta.counts().begin(), beta.counts().end());
  return extract_partial(s, e);
}

}  // namespace spectraljet
