#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "spectraljet/errors.hpp"
#include "spectraljet/wick.hpp"

using namespace spectraljet;

namespace {

MultiIndex M(std::initializer_list<int> l, int n) { return MultiIndex::from_indices(l, n); }

}  // namespace

TEST(WickA, Examples) {
  EXPECT_EQ(wick_a(M({1, 1}, 2), M({2, 2}, 2)).signed_value(), 1);
  EXPECT_EQ(wick_a(M({1, 1}, 2), M({1, 1}, 2)).signed_value(), 3);
  EXPECT_EQ(wick_a(MultiIndex(2), MultiIndex(2)).signed_value(), 1);
  EXPECT_EQ(wick_a(M({1}, 2), M({2}, 2)).sign, 0);
  EXPECT_EQ(wick_a(M({1, 1, 1}, 1), M({1}, 1)).signed_value(), -3);
  EXPECT_THROW(wick_a(MultiIndex(2), MultiIndex(3)), ValidationError);
}

TEST(WickA, BigMagnitudes) {
  // 23!! does not fit in 64 bits... and 41!! certainly does not
  const auto a = wick_a(MultiIndex::from_counts({21}), MultiIndex::from_counts({21}));
  BigInt expected = 1;
  for (int k = 3; k <= 41; k += 2) expected *= k;
  EXPECT_EQ(a.magnitude, expected);
  EXPECT_GT(a.magnitude, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(WickB, Examples) {
  const auto b1 = wick_b(M({1, 1}, 2), M({2, 2}, 2));
  EXPECT_EQ(b1.square, BigRational(1, 9));
  EXPECT_EQ(b1.sign, 1);
  EXPECT_EQ(b1.exact_string(), "1/3");
  EXPECT_NEAR(b1.value, 1.0 / 3.0, 1e-16);

  const auto b2 = wick_b(M({1, 1, 1}, 1), M({1}, 1));
  EXPECT_EQ(b2.square, BigRational(3, 5));
  EXPECT_EQ(b2.sign, -1);
  EXPECT_NEAR(b2.value, -std::sqrt(0.6), 1e-15);

  const auto b3 = wick_b(M({1, 2, 2}, 2), M({1}, 2));
  EXPECT_EQ(b3.square, BigRational(1, 3));
  EXPECT_EQ(b3.sign, -1);

  const auto same = wick_b(M({1, 2, 2, 3}, 3), M({1, 2, 2, 3}, 3));
  EXPECT_EQ(same.square, 1);
  EXPECT_EQ(same.value, 1.0);
}

TEST(WickB, BoundsOnExactSquares) {
  const auto pool = all_multi_indices(3, 5);
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const auto w = wick_b(a, b);
      EXPECT_LE(w.square, 1);
      EXPECT_EQ(w.square == 1, a == b) << a.label() << b.label();
      EXPECT_GT(w.value, -1.0);
      if (w.sign != 0) {
        const double v2 = w.value * w.value;
        EXPECT_NEAR(v2, w.square.convert_to<double>(), 1e-15 * v2);
      }
    }
  }
}

TEST(Graphs, Examples) {
  const auto g1 = enumerate_admissible_graphs(M({1, 1}, 1), M({1, 1}, 1));
  EXPECT_EQ(g1.count, 3);
  EXPECT_EQ(g1.common_sign, 1);
  const auto g2 = enumerate_admissible_graphs(M({1, 1}, 2), M({2, 2}, 2));
  EXPECT_EQ(g2.count, 1);
  EXPECT_EQ(g2.common_sign, 1);
  EXPECT_EQ(enumerate_admissible_graphs(M({1}, 2), M({2}, 2)).count, 0);
}

TEST(Graphs, CapRefuses) {
  const auto big = MultiIndex::from_counts({9});
  EXPECT_THROW(enumerate_admissible_graphs(big, big), DomainError);
  EXPECT_NO_THROW(enumerate_admissible_graphs(big, big, 18));
}

TEST(Graphs, AgreeWithBruteForceMatchings) {
  const auto pool = all_multi_indices(2, 8);
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      if (a.degree() + b.degree() > 8) continue;
      const auto brute = oracle::brute_force_matchings(a, b);
      const auto g = enumerate_admissible_graphs(a, b);
      const auto w = wick_a(a, b);
      EXPECT_EQ(g.count, brute.count) << a.label() << b.label();
      EXPECT_EQ(w.magnitude, brute.count);
      EXPECT_LE(brute.signs.size(), 1u) << "mixed signs for " << a.label() << b.label();
      if (brute.count > 0) {
        EXPECT_EQ(*brute.signs.begin(), w.sign);
        EXPECT_EQ(g.common_sign, w.sign);
        EXPECT_TRUE(g.sign_consistent);
      }
    }
  }
}

TEST(GaussianOracle, Examples) {
  EXPECT_NEAR(gaussian_moment_oracle(M({1, 1}, 1), M({1, 1}, 1)), 3.0, 1e-12);
  EXPECT_EQ(gaussian_moment_oracle(M({1}, 2), M({1, 2}, 2)), 0.0);
  EXPECT_NEAR(gaussian_moment_oracle(M({1, 1}, 2), M({2, 2}, 2)), 1.0, 1e-9);
}

TEST(GaussianOracle, AgreesWithClosedFormAndQuadrature) {
  for (const auto& a : all_multi_indices(2, 6)) {
    for (const auto& b : all_multi_indices(2, 6)) {
      const double exact = wick_a(a, b).to_double();
      const double gamma = gaussian_moment_oracle(a, b);
      const double quad = gauss_hermite_moment(a, b);
      EXPECT_NEAR(gamma, exact, 1e-9 * std::max(1.0, std::abs(exact)));
      EXPECT_NEAR(quad, exact, 1e-9 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST(Relations, Examples) {
  const auto r = check_inductive_relations(M({1}, 1), M({1}, 1), 1);
  EXPECT_TRUE(r.all_hold());
  // A((1,1), ()) = -A((1),(1)) = -1 and A((1,1),(1,1)) = 3 A((1),(1))
  EXPECT_EQ(wick_a(M({1, 1}, 1), MultiIndex(1)).signed_value(), -1);
  EXPECT_EQ(wick_a(M({1, 1}, 1), M({1, 1}, 1)).signed_value(), 3);
  EXPECT_THROW(check_inductive_relations(M({1}, 2), M({1}, 2), 2), ValidationError);
  EXPECT_TRUE(check_inductive_relations(MultiIndex(2), MultiIndex(2), 1, false).all_hold());
}

TEST(Relations, HoldExhaustively) {
  for (const auto& a : all_multi_indices(3, 4)) {
    for (const auto& b : all_multi_indices(3, 4)) {
      for (int j = 1; j <= 3; ++j) {
        const auto r = check_inductive_relations(a, b, j, b.count(j) > 0);
        for (const auto& c : r.checks) {
          EXPECT_TRUE(c.holds) << c.name << " " << a.label() << b.label() << " j=" << j << ": "
                               << c.lhs << " vs " << c.rhs;
        }
      }
    }
  }
}

TEST(Stabilization, DiagonalExample) {
  const auto s = b_stabilization_scan(M({1, 1}, 2), M({1, 2, 2}, 2), 2, 6);
  EXPECT_TRUE(s.monotone);
  EXPECT_TRUE(s.equality_rule);
  EXPECT_EQ(s.stripped_limit.sign, 0);
  EXPECT_EQ(s.diagonal.front().sign, 0);
  EXPECT_EQ(s.diagonal_limit.sign, 0);

  const auto s2 = b_stabilization_scan(M({1}, 2), M({1, 2, 2}, 2), 2, 8);
  EXPECT_EQ(s2.stripped_limit.value, 1.0);
  EXPECT_EQ(s2.diagonal_limit.value, -1.0);
  for (const auto& b : s2.diagonal) EXPECT_EQ(b.sign, -1);
  EXPECT_GT(std::abs(s2.diagonal.back().value), std::abs(s2.diagonal.front().value));
  EXPECT_LT(std::abs(s2.diagonal.back().value - s2.diagonal_limit.value), 0.1);

  const auto s3 = b_stabilization_scan(M({1, 1}, 2), M({2, 2}, 2), 1, 10);
  EXPECT_TRUE(s3.monotone);
  EXPECT_EQ(s3.stripped_limit.square, BigRational(1, 3));
  EXPECT_EQ(s3.stripped_limit.sign, -1);
  EXPECT_EQ(s3.diagonal_limit.sign, 1);
  for (std::size_t k = 1; k < s3.diagonal.size(); ++k) {
    EXPECT_GE(s3.diagonal[k].square, s3.diagonal[k - 1].square);
  }
  EXPECT_LT(std::abs(s3.diagonal.back().value - 1.0 / std::sqrt(3.0)), 0.03);
}

TEST(Stabilization, ConstantWhenEqualAndOneSidedVanishes) {
  const auto s = b_stabilization_scan(M({1, 2}, 2), M({1, 2}, 2), 1, 5);
  for (const auto& b : s.diagonal) EXPECT_EQ(b.square, 1);
  const auto t = b_stabilization_scan(M({1, 1}, 2), M({2, 2}, 2), 1, 40);
  EXPECT_LT(std::abs(t.one_sided.back().value), 0.5);
  EXPECT_LT(std::abs(t.one_sided[40].value), std::abs(t.one_sided[2].value));
}

TEST(Stabilization, MonotoneRuleExhaustive) {
  for (const auto& a : all_multi_indices(2, 4)) {
    for (const auto& b : all_multi_indices(2, 4)) {
      for (int j = 1; j <= 2; ++j) {
        const auto s = b_stabilization_scan(a, b, j, 3);
        EXPECT_TRUE(s.monotone) << a.label() << b.label();
        EXPECT_TRUE(s.equality_rule) << a.label() << b.label();
      }
    }
  }
}

TEST(WickText, Formatting) {
  EXPECT_EQ(wick_a(M({1}, 2), M({2}, 2)).to_string(), "0");
  EXPECT_EQ(wick_a(M({1, 1}, 2), M({1, 1}, 2)).to_string(), "+3");
  EXPECT_EQ(wick_b(M({1, 1, 1}, 1), M({1}, 1)).exact_string(), "-sqrt(3/5)");
  EXPECT_EQ(wick_b(M({1}, 2), M({2}, 2)).exact_string(), "0");
}
