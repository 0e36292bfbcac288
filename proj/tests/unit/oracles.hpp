#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "spectraljet/multiindex.hpp"

namespace oracle {

// Fornberg's algorithm: weights[m][j] for the m-th derivative at x0 from nodes x[j].
std::vector<std::vector<double>> fornberg_weights(double x0, const std::vector<double>& x, int max_order);

// Central stencil of 4th-order accuracy for the p-th derivative with step h.
struct Stencil {
  std::vector<double> offsets;
  std::vector<double> weights;
};
Stencil central_stencil(int order, double h);

// Mixed partial of f at `point`, one central stencil per variable.
double mixed_fd(const std::function<double(const std::vector<double>&)>& f,
                const std::vector<double>& point, const std::vector<int>& exps, double h);

// Every perfect matching of the signed coloured vertex multiset, with no per-colour shortcut.
struct MatchingCount {
  std::uint64_t count = 0;
  std::set<int> signs;
};
MatchingCount brute_force_matchings(const spectraljet::MultiIndex& alpha,
                                    const spectraljet::MultiIndex& beta);

// Sparse polynomial with exact term-wise differentiation.
struct Poly {
  std::map<std::vector<int>, double> terms;

  Poly derivative(int var) const;
  double at_zero() const;
  double evaluate(const std::vector<double>& x) const;
};

}  // namespace oracle
