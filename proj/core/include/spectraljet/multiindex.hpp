#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spectraljet {

/// A derivative multi-index stored as multiplicities over n coordinate slots,
/// i.e. a point of Z_+^n. Derivative order inside a multi-index is irrelevant
/// for every quantity in this library, so only counts are kept.
class MultiIndex {
public:
  /// The empty multi-index in dimension n.
  explicit MultiIndex(int n);

  /// Build from explicit multiplicities; counts.size() is the dimension.
  static MultiIndex from_counts(std::vector<int> counts);

  /// Build from a 1-based index list such as {1,1,2,3}. Order-insensitive.
  static MultiIndex from_indices(std::span<const int> indices, int n);
  static MultiIndex from_indices(std::initializer_list<int> indices, int n);

  /// Parse "1,1,2" (the empty string is the empty multi-index).
  static MultiIndex parse(std::string_view text, int n);

  int dim() const noexcept { return static_cast<int>(counts_.size()); }
  int degree() const noexcept { return degree_; }
  bool empty() const noexcept { return degree_ == 0; }

  /// Multiplicity of the 1-based coordinate index j.
  int count(int j) const;
  const std::vector<int>& counts() const noexcept { return counts_; }

  /// Sorted 1-based index list, e.g. counts (2,1,1) -> {1,1,2,3}.
  std::vector<int> indices() const;

  /// Returns a copy with `times` more copies of index j (times may be
  /// negative as long as the count stays non-negative).
  MultiIndex added(int j, int times = 1) const;
  /// Returns a copy with every copy of index j removed.
  MultiIndex without(int j) const;

  /// Component-wise parity in {0,1}^n.
  std::vector<int> parity() const;

  /// "1,1,2" style text; empty multi-index prints as "".
  std::string to_string() const;
  /// Parenthesised form for reports, e.g. "(1,1,2)" and "()".
  std::string label() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
  explicit MultiIndex(std::vector<int> counts, int degree)
      : counts_(std::move(counts)), degree_(degree) {}

  std::vector<int> counts_;
  int degree_ = 0;
};

/// One coordinate index that occurs in alpha or beta.
struct ProfileEntry {
  int index = 0;   // 1-based coordinate
  int a = 0;       // multiplicity in alpha
  int b = 0;       // multiplicity in beta
  int sigma2 = 0;  // a + b (twice the average multiplicity)
};

/// Per-index multiplicities of a pair (alpha, beta), restricted to indices
/// that occur at least once.
struct PairProfile {
  std::vector<ProfileEntry> entries;

  int s() const noexcept { return static_cast<int>(entries.size()); }
  /// True iff every index has even total multiplicity.
  bool even_total() const noexcept;
};

PairProfile pair_profile(const MultiIndex& alpha, const MultiIndex& beta);

/// sum_j |a_j - b_j|, the size of the multiset symmetric difference.
int symmetric_difference_size(const MultiIndex& alpha, const MultiIndex& beta);

/// Throws ValidationError when the dimensions differ.
void require_same_dim(const MultiIndex& alpha, const MultiIndex& beta);

/// Every multi-index of dimension n with degree <= max_degree, ordered by
/// degree and then lexicographically by descending counts.
std::vector<MultiIndex> all_multi_indices(int n, int max_degree);

/// Every multi-index of dimension n with degree exactly `degree`.
std::vector<MultiIndex> multi_indices_of_degree(int n, int degree);

}  // namespace spectraljet
