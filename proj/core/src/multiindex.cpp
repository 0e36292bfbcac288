#include "spectraljet/multiindex.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "spectraljet/errors.hpp"

namespace spectraljet {

MultiIndex::MultiIndex(int n) {
  if (n < 1) throw ValidationError("MultiIndex: dimension must be positive");
  counts_.assign(static_cast<std::size_t>(n), 0);
}

MultiIndex MultiIndex::from_counts(std::vector<int> counts) {
  if (counts.empty()) throw ValidationError("MultiIndex: dimension must be positive");
  int degree = 0;
  for (int c : counts) {
    if (c < 0) throw ValidationError("MultiIndex: negative multiplicity");
    degree += c;
  }
  return MultiIndex(std::move(counts), degree);
}

MultiIndex MultiIndex::from_indices(std::span<const int> indices, int n) {
  MultiIndex m(n);
  for (int j : indices) {
    if (j < 1 || j > n) {
      throw ValidationError("MultiIndex: index " + std::to_string(j) + " outside 1.." +
                            std::to_string(n));
    }
    ++m.counts_[static_cast<std::size_t>(j - 1)];
    ++m.degree_;
  }
  return m;
}

MultiIndex MultiIndex::from_indices(std::initializer_list<int> indices, int n) {
  return from_indices(std::span<const int>(indices.begin(), indices.size()), n);
}

MultiIndex MultiIndex::parse(std::string_view text, int n) {
  std::vector<int> indices;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "()" || text == "{}") text = "";
  while (pos <= text.size() && !text.empty()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        trim(text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ValidationError("MultiIndex: cannot parse index list '" + std::string(text) + "'");
    }
    indices.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_indices(indices, n);
}

int MultiIndex::count(int j) const {
  if (j < 1 || j > dim()) throw ValidationError("MultiIndex: index out of range");
  return counts_[static_cast<std::size_t>(j - 1)];
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (int j = 0; j < dim(); ++j) {
    for (int c = 0; c < counts_[static_cast<std::size_t>(j)]; ++c) out.push_back(j + 1);
  }
  return out;
}

MultiIndex MultiIndex::added(int j, int times) const {
  if (j < 1 || j > dim()) throw ValidationError("MultiIndex: index out of range");
  std::vector<int> counts = counts_;
  int& c = counts[static_cast<std::size_t>(j - 1)];
  if (c + times < 0) throw ValidationError("MultiIndex: removing an index that is not present");
  c += times;
  return MultiIndex(std::move(counts), degree_ + times);
}

MultiIndex MultiIndex::without(int j) const {
  return added(j, -count(j));
}

std::vector<int> MultiIndex::parity() const {
  std::vector<int> p(counts_.size());
  std::transform(counts_.begin(), counts_.end(), p.begin(), [](int c) { return c % 2; });
  return p;
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (int j : indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(j);
  }
  return out;
}

std::string MultiIndex::label() const { return "(" + to_string() + ")"; }

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
}

bool PairProfile::even_total() const noexcept {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ProfileEntry& e) { return e.sigma2 % 2 == 0; });
}

void require_same_dim(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.dim() != beta.dim()) {
    throw ValidationError("dimension mismatch: " + std::to_string(alpha.dim()) + " vs " +
                          std::to_string(beta.dim()));
  }
}

PairProfile pair_profile(const MultiIndex& alpha, const MultiIndex& beta) {
  require_same_dim(alpha, beta);
  PairProfile profile;
  for (int j = 1; j <= alpha.dim(); ++j) {
    const int a = alpha.count(j);
    const int b = beta.count(j);
    if (a + b > 0) profile.entries.push_back({j, a, b, a + b});
  }
  return profile;
}

int symmetric_difference_size(const MultiIndex& alpha, const MultiIndex& beta) {
  require_same_dim(alpha, beta);
  int total = 0;
  for (int j = 1; j <= alpha.dim(); ++j) total += std::abs(alpha.count(j) - beta.count(j));
  return total;
}

namespace {

void fill_degree(int n, int slot, int remaining, std::vector<int>& counts,
                 std::vector<MultiIndex>& out) {
  if (slot == n - 1) {
    counts[static_cast<std::size_t>(slot)] = remaining;
    out.push_back(MultiIndex::from_counts(counts));
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    counts[static_cast<std::size_t>(slot)] = c;
    fill_degree(n, slot + 1, remaining - c, counts, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(int n, int degree) {
  if (n < 1 || degree < 0) throw ValidationError("multi_indices_of_degree: bad arguments");
  std::vector<MultiIndex> out;
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  fill_degree(n, 0, degree, counts, out);
  return out;
}

std::vector<MultiIndex> all_multi_indices(int n, int max_degree) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto level = multi_indices_of_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace spectraljet
