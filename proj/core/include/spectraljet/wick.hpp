#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "spectraljet/multiindex.hpp"

namespace spectraljet {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct WickA {
  int sign = 0;
  BigInt magnitude;

  BigInt signed_value() const { return sign < 0 ? BigInt(-magnitude) : BigInt(magnitude); }
  double to_double() const;
  // "+3", "-1", "0"
  std::string to_string() const;

  friend bool operator==(const WickA&, const WickA&) = default;
};

struct WickB {
  int sign = 0;
  BigRational square;
  double value = 0.0;

  // "1/3" when square is a perfect rational square, otherwise "-sqrt(3/5)"
  std::string exact_string() const;
  std::string square_string() const;
};

struct GraphCount {
  BigInt count;
  int common_sign = 1;
  bool sign_consistent = true;
};

WickA wick_a(const MultiIndex& alpha, const MultiIndex& beta);
WickB wick_b(const MultiIndex& alpha, const MultiIndex& beta);
WickB make_wick_b(const WickA& ab, const WickA& aa, const WickA& bb);

inline constexpr int kDefaultGraphCap = 16;

// Exhaustive enumeration of admissible graphs. Throws DomainError above the cap.
GraphCount enumerate_admissible_graphs(const MultiIndex& alpha, const MultiIndex& beta,
                                       int cap = kDefaultGraphCap);

// Gamma-function route to the Gaussian moment.
double gaussian_moment_oracle(const MultiIndex& alpha, const MultiIndex& beta);
// Same moment by Gauss-Hermite quadrature (Golub-Welsch nodes).
double gauss_hermite_moment(const MultiIndex& alpha, const MultiIndex& beta);

struct RelationCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_hold() const;
};

// With leibniz=true, j must occur in beta.
RelationReport check_inductive_relations(const MultiIndex& alpha, const MultiIndex& beta, int j,
                                         bool leibniz = true);

struct BStabilization {
  std::vector<WickB> diagonal;   // B(alpha + k e_j, beta + k e_j)
  std::vector<WickB> one_sided;  // B(alpha, beta + k e_j)
  WickB stripped_limit;             // B(alpha*, beta*)
  WickB diagonal_limit;          // sign(B(alpha,beta)) |B(alpha*, beta*)|
  bool monotone = true;          // squares non-decreasing along the diagonal
  bool equality_rule = true;     // equal steps iff a_j == b_j
};

BStabilization b_stabilization_scan(const MultiIndex& alpha, const MultiIndex& beta, int j,
                                    int k_max);

}  // namespace spectraljet
