#pragma once

// k-subset enumeration in lexicographic order and colex ranking.

#include "point_set.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace tightrel {

/// Pascal triangle of uint64 binomials for rank arithmetic, 0 <= n <= 128.
class BinomialTable {
 public:
  static const BinomialTable& instance() {
    static const BinomialTable table;
    return table;
  }

  /// C(n, k), saturating at UINT64_MAX; zero when k < 0 or k > n.
  std::uint64_t operator()(int n, int k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    return table_[n][k];
  }

 private:
  BinomialTable() {
    for (int n = 0; n <= kMaxPoints; ++n) {
      table_[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        std::uint64_t a = table_[n - 1][k - 1];
        std::uint64_t b = k <= n - 1 ? table_[n - 1][k] : 0;
        table_[n][k] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
      }
    }
  }
  std::uint64_t table_[kMaxPoints + 1][kMaxPoints + 1]{};
};

/// Iterates the k-subsets of {0, ..., n-1} in lexicographic order.
class Combinations {
 public:
  Combinations(int n, int k) : n_(n), k_(k), current_(k < 0 ? 0 : k) {
    if (k < 0 || n < 0) throw std::invalid_argument("Combinations: negative argument");
    valid_ = k <= n;
    for (int i = 0; i < k; ++i) current_[i] = i;
  }

  bool valid() const { return valid_; }
  std::span<const int> current() const { return current_; }

  PointSet mask() const { return PointSet::from_points(current_); }

  void next() {
    int i = k_ - 1;
    while (i >= 0 && current_[i] == n_ - k_ + i) --i;
    if (i < 0) {
      valid_ = false;
      return;
    }
    ++current_[i];
    for (int j = i + 1; j < k_; ++j) current_[j] = current_[j - 1] + 1;
  }

 private:
  int n_;
  int k_;
  std::vector<int> current_;
  bool valid_ = true;
};

/// Colex rank of an ascending index sequence: sum_i C(c_i, i+1).
inline std::uint64_t colex_rank(std::span<const int> ascending) {
  const auto& C = BinomialTable::instance();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < ascending.size(); ++i) r += C(ascending[i], static_cast<int>(i) + 1);
  return r;
}

/// Calls fn(span of k ascending elements) for every k-subset of `elements`
/// (which must be ascending), in lexicographic order.
template <typename Fn>
void for_each_subset_of(std::span<const int> elements, int k, Fn&& fn) {
  const int m = static_cast<int>(elements.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  std::vector<int> chosen(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) chosen[i] = elements[idx[i]];
    fn(std::span<const int>(chosen));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace tightrel
