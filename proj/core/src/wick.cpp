#include "spectraljet/wick.hpp"

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "spectraljet/errors.hpp"

namespace spectraljet {

namespace {

BigInt odd_double_factorial(int sigma) {
  BigInt out = 1;
  for (int k = 3; k <= 2 * sigma - 1; k += 2) out *= k;
  return out;
}

std::string rational_text(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool exact_sqrt(const BigInt& v, BigInt& root) {
  root = boost::multiprecision::sqrt(v);
  return root * root == v;
}

}  // namespace

double WickA::to_double() const {
  return static_cast<double>(sign) * magnitude.convert_to<double>();
}

std::string WickA::to_string() const {
  if (sign == 0) return "0";
  return (sign > 0 ? "+" : "-") + magnitude.str();
}

std::string WickB::square_string() const { return rational_text(square); }

std::string WickB::exact_string() const {
  if (sign == 0) return "0";
  BigInt rn, rd;
  const std::string prefix = sign < 0 ? "-" : "";
  if (exact_sqrt(boost::multiprecision::numerator(square), rn) &&
      exact_sqrt(boost::multiprecision::denominator(square), rd)) {
    return prefix + rational_text(BigRational(rn, rd));
  }
  return prefix + "sqrt(" + rational_text(square) + ")";
}

WickA wick_a(const MultiIndex& alpha, const MultiIndex& beta) {
  const PairProfile profile = pair_profile(alpha, beta);
  if (!profile.even_total()) return {};
  WickA out;
  out.magnitude = 1;
  for (const auto& e : profile.entries) out.magnitude *= odd_double_factorial(e.sigma2 / 2);
  const int half = (alpha.degree() - beta.degree()) / 2;
  out.sign = (half % 2 == 0) ? 1 : -1;
  return out;
}

WickB make_wick_b(const WickA& ab, const WickA& aa, const WickA& bb) {
  WickB out;
  if (ab.sign == 0) return out;
  out.sign = ab.sign;
  out.square = BigRational(ab.magnitude * ab.magnitude, aa.magnitude * bb.magnitude);
  using boost::multiprecision::cpp_bin_float_50;
  const cpp_bin_float_50 num(boost::multiprecision::numerator(out.square));
  const cpp_bin_float_50 den(boost::multiprecision::denominator(out.square));
  out.value = static_cast<double>(out.sign) * boost::multiprecision::sqrt(num / den).convert_to<double>();
  return out;
}

WickB wick_b(const MultiIndex& alpha, const MultiIndex& beta) {
  return make_wick_b(wick_a(alpha, beta), wick_a(alpha, alpha), wick_a(beta, beta));
}

namespace {

struct ColorTally {
  BigInt count;
  bool seen_plus = false;
  bool seen_minus = false;
};

// Pair off `plus` alpha-vertices and `minus` beta-vertices of one color.
void match_color(int plus, int minus, int sign, ColorTally& tally) {
  if (plus == 0 && minus == 0) {
    tally.count += 1;
    (sign > 0 ? tally.seen_plus : tally.seen_minus) = true;
    return;
  }
  if (plus > 0) {
    // first remaining alpha vertex; partner is another alpha vertex or a beta vertex
    for (int p = 1; p < plus; ++p) match_color(plus - 2, minus, -sign, tally);
    for (int m = 0; m < minus; ++m) match_color(plus - 1, minus - 1, sign, tally);
  } else {
    for (int m = 1; m < minus; ++m) match_color(0, minus - 2, -sign, tally);
  }
}

const ColorTally& color_tally(int a, int b) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, ColorTally> memo;
  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.try_emplace({a, b});
  if (inserted) match_color(a, b, 1, it->second);
  return it->second;
}

}  // namespace

GraphCount enumerate_admissible_graphs(const MultiIndex& alpha, const MultiIndex& beta, int cap) {
  require_same_dim(alpha, beta);
  const int total = alpha.degree() + beta.degree();
  if (total > cap) {
    throw DomainError("graph enumeration refused: |alpha|+|beta| = " + std::to_string(total) +
                      " exceeds cap " + std::to_string(cap) + "; use wick_a for the closed form");
  }
  GraphCount out;
  out.count = 1;
  bool any_minus = false;
  for (const auto& e : pair_profile(alpha, beta).entries) {
    const ColorTally& tally = color_tally(e.a, e.b);
    if (tally.count == 0) return {BigInt(0), 1, true};
    out.count *= tally.count;
    if (tally.seen_plus && tally.seen_minus) out.sign_consistent = false;
    if (tally.seen_minus) any_minus = !any_minus;
  }
  out.common_sign = any_minus ? -1 : 1;
  return out;
}

double gaussian_moment_oracle(const MultiIndex& alpha, const MultiIndex& beta) {
  const PairProfile profile = pair_profile(alpha, beta);
  if (!profile.even_total()) return 0.0;
  const double inv_sqrt_pi = std::numbers::inv_sqrtpi;
  double value = 1.0;
  for (const auto& e : profile.entries) {
    const double m = e.sigma2 / 2.0;
    value *= std::pow(2.0, m) * std::tgamma(m + 0.5) * inv_sqrt_pi;
  }
  const int half = (alpha.degree() - beta.degree()) / 2;
  return (half % 2 == 0) ? value : -value;
}

namespace {

struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

HermiteRule hermite_rule(int m) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(m, m);
  for (int k = 1; k < m; ++k) {
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(k / 2.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  HermiteRule rule;
  for (int i = 0; i < m; ++i) {
    rule.nodes.push_back(solver.eigenvalues()(i));
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights.push_back(std::sqrt(std::numbers::pi) * v0 * v0);
  }
  return rule;
}

}  // namespace

double gauss_hermite_moment(const MultiIndex& alpha, const MultiIndex& beta) {
  const PairProfile profile = pair_profile(alpha, beta);
  if (!profile.even_total()) return 0.0;
  double value = 1.0;
  for (const auto& e : profile.entries) {
    const HermiteRule rule = hermite_rule(e.sigma2 / 2 + 2);
    double integral = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      integral += rule.weights[i] * std::pow(rule.nodes[i], e.sigma2);
    }
    value *= std::pow(2.0, e.sigma2 / 2.0) * integral * std::numbers::inv_sqrtpi;
  }
  const int half = (alpha.degree() - beta.degree()) / 2;
  return (half % 2 == 0) ? value : -value;
}

bool RelationReport::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

RelationReport check_inductive_relations(const MultiIndex& alpha, const MultiIndex& beta, int j,
                                         bool leibniz) {
  require_same_dim(alpha, beta);
  const int a = alpha.count(j);
  const int b = beta.count(j);
  if (leibniz && b == 0) {
    throw ValidationError("Leibniz relation needs index " + std::to_string(j) + " in beta");
  }
  RelationReport report;
  auto add = [&](std::string name, const BigInt& lhs, const BigInt& rhs) {
    report.checks.push_back({std::move(name), lhs.str(), rhs.str(), lhs == rhs});
  };
  auto add_q = [&](std::string name, const BigRational& lhs, const BigRational& rhs) {
    report.checks.push_back({std::move(name), rational_text(lhs), rational_text(rhs), lhs == rhs});
  };

  const MultiIndex empty(alpha.dim());
  add("normalization", wick_a(empty, empty).signed_value(), BigInt(1));

  const BigInt base = wick_a(alpha, beta).signed_value();
  add("symmetry", base, wick_a(beta, alpha).signed_value());

  const MultiIndex ap = alpha.added(j);
  const MultiIndex bp = beta.added(j);
  add("adding_index", wick_a(ap, bp).signed_value(), base * (a + b + 1));

  const BigRational b2 = wick_b(alpha, beta).square;
  add_q("b_adding_index", wick_b(ap, bp).square,
        b2 * BigRational((a + b + 1) * (a + b + 1), (2 * a + 1) * (2 * b + 1)));

  if (leibniz) {
    const MultiIndex bm = beta.added(j, -1);
    add("leibniz", wick_a(ap, bm).signed_value(), BigInt(-base));
    add_q("b_leibniz", wick_b(ap, bm).square, b2 * BigRational(2 * b - 1, 2 * a + 1));
  }
  return report;
}

BStabilization b_stabilization_scan(const MultiIndex& alpha, const MultiIndex& beta, int j,
                                    int k_max) {
  require_same_dim(alpha, beta);
  if (k_max < 1) throw ValidationError("b_stabilization_scan: k_max must be >= 1");
  BStabilization out;
  for (int k = 0; k <= k_max; ++k) {
    out.diagonal.push_back(wick_b(alpha.added(j, k), beta.added(j, k)));
    out.one_sided.push_back(wick_b(alpha, beta.added(j, k)));
  }
  out.stripped_limit = wick_b(alpha.without(j), beta.without(j));
  const int s0 = out.diagonal.front().sign;
  out.diagonal_limit = out.stripped_limit;
  if (s0 == 0) {
    out.diagonal_limit = WickB{};
  } else if (out.stripped_limit.sign != s0) {
    out.diagonal_limit.sign = s0;
    out.diagonal_limit.value = -out.diagonal_limit.value;
  }
  const bool equal_counts = alpha.count(j) == beta.count(j);
  for (int k = 0; k < k_max; ++k) {
    const BigRational& prev = out.diagonal[k].square;
    const BigRational& next = out.diagonal[k + 1].square;
    if (next < prev) out.monotone = false;
    if (prev != 0 && ((next == prev) != equal_counts)) out.equality_rule = false;
  }
  return out;
}

}  // namespace spectraljet
