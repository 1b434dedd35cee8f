#pragma once

// Incidence structures: block multisets over n <= 128 points, lambda counting,
// t-design verification and the classical design transforms.

#include "errors.hpp"
#include "exact.hpp"
#include "point_set.hpp"
#include "subsets.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tightrel {

/// A block multiset (V, B) on V = {0, ..., n-1}. Blocks are kept sorted
/// (lexicographic on ascending index sequences), so equality is list equality.
class Design {
 public:
  Design() = default;

  Design(int n, std::vector<PointSet> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 1 || n > kMaxPoints)
      throw std::invalid_argument("Design: point count " + std::to_string(n) + " outside [1, 128]");
    for (const auto& b : blocks_)
      if (b.span_end() > n)
        throw std::invalid_argument("Design: block {" + to_string(b) + "} has a point >= n=" + std::to_string(n));
    std::sort(blocks_.begin(), blocks_.end());
  }

  int n() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<PointSet>& blocks() const { return blocks_; }

  /// Common block size, or nullopt for mixed sizes. An empty design reports nullopt.
  std::optional<int> uniform_block_size() const {
    if (blocks_.empty()) return std::nullopt;
    int r = blocks_.front().size();
    for (const auto& b : blocks_)
      if (b.size() != r) return std::nullopt;
    return r;
  }

  bool operator==(const Design&) const = default;

 private:
  int n_ = 1;
  std::vector<PointSet> blocks_;
};

/// (v, k, lambda, t) parameter tuple for the nonexistence tests.
struct DesignParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  int t = 2;

  void validate() const {
    if (!(0 < t && t <= k && k <= v) || lambda < 1)
      throw std::invalid_argument("DesignParams: need 0 < t <= k <= v and lambda >= 1, got " + to_string());
  }

  std::string to_string() const {
    return std::to_string(t) + "-(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + ")";
  }

  bool operator==(const DesignParams&) const = default;
};

// ---------------------------------------------------------------------------
// lambda counting

inline std::uint64_t lambda_count(const Design& d, const PointSet& subset) {
  if (subset.span_end() > d.n())
    throw std::out_of_range("lambda_count: subset {" + to_string(subset) + "} not inside {0.." + std::to_string(d.n() - 1) + "}");
  std::uint64_t c = 0;
  for (const auto& b : d.blocks())
    if (subset.is_subset_of(b)) ++c;
  return c;
}

/// Occurrence counts of every j-subset of {0..n-1}, indexed by colex rank.
/// Built by walking the C(|B|, j) sub-j-subsets of each block; switches to a
/// hash map when C(n, j) is too large for a dense table.
class SubsetCounts {
 public:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

  SubsetCounts(int n, int j) : n_(n), j_(j), total_(BinomialTable::instance()(n, j)) {
    if (total_ <= kDenseLimit) dense_.assign(total_, 0);
  }

  static SubsetCounts of_blocks(int n, int j, std::span<const PointSet> blocks) {
    SubsetCounts c(n, j);
    for (const auto& b : blocks) c.add_block(b);
    return c;
  }

  void add_block(const PointSet& block) {
    auto pts = block.points();
    for_each_subset_of(pts, j_, [&](std::span<const int> sub) { bump(colex_rank(sub)); });
  }

  int n() const { return n_; }
  int j() const { return j_; }
  std::uint64_t total_subsets() const { return total_; }

  std::uint32_t at_rank(std::uint64_t rank) const {
    if (total_ <= kDenseLimit) return dense_[rank];
    auto it = sparse_.find(rank);
    return it == sparse_.end() ? 0 : it->second;
  }

  std::uint32_t at(std::span<const int> ascending) const { return at_rank(colex_rank(ascending)); }

  /// The common value if every j-subset has the same count.
  std::optional<std::uint32_t> constant_value() const {
    if (total_ == 0) return 0;
    if (total_ <= kDenseLimit) {
      std::uint32_t v = dense_.front();
      for (auto x : dense_)
        if (x != v) return std::nullopt;
      return v;
    }
    if (sparse_.empty()) return 0;
    if (sparse_.size() != total_) return std::nullopt;
    std::uint32_t v = sparse_.begin()->second;
    for (const auto& [rank, x] : sparse_)
      if (x != v) return std::nullopt;
    return v;
  }

  /// Histogram value -> number of j-subsets carrying it (zeros included).
  std::map<std::uint32_t, std::uint64_t> histogram() const {
    std::map<std::uint32_t, std::uint64_t> h;
    if (total_ <= kDenseLimit) {
      for (auto x : dense_) ++h[x];
      return h;
    }
    for (const auto& [rank, x] : sparse_) ++h[x];
    std::uint64_t zeros = total_ - sparse_.size();
    if (zeros) h[0] += zeros;
    return h;
  }

 private:
  void bump(std::uint64_t rank) {
    if (total_ <= kDenseLimit) ++dense_[rank];
    else ++sparse_[rank];
  }

  int n_;
  int j_;
  std::uint64_t total_;
  std::vector<std::uint32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

struct TDesignCheck {
  bool holds = false;
  /// (lambda_0, ..., lambda_t) with lambda_0 = N; only filled when holds.
  std::vector<std::uint64_t> lambdas;
};

/// Is `d` a combinatorial t-design? Requires uniform block size r >= t.
inline TDesignCheck is_t_design(const Design& d, int t) {
  if (t < 0) throw std::invalid_argument("is_t_design: negative strength");
  std::optional<int> r = d.uniform_block_size();
  if (!r && d.block_count() > 0) throw std::invalid_argument("is_t_design: non-uniform block sizes");
  if (r && t > *r)
    throw std::invalid_argument("is_t_design: t=" + std::to_string(t) + " exceeds block size " + std::to_string(*r));
  TDesignCheck out;
  out.lambdas.push_back(d.block_count());
  for (int j = 1; j <= t; ++j) {
    auto value = SubsetCounts::of_blocks(d.n(), j, d.blocks()).constant_value();
    if (!value) {
      out.lambdas.clear();
      return out;
    }
    out.lambdas.push_back(*value);
  }
  out.holds = true;
  return out;
}

struct WeightedBalanceCheck {
  bool holds = false;
  /// (lambda_1, ..., lambda_t) as weighted sums; only filled when holds.
  std::vector<Rational> lambdas;
};

/// Is (V, B, w) a regular t-wise balanced design, where w assigns one
/// positive weight per block size?
inline WeightedBalanceCheck is_regular_twise_balanced(const Design& d, const std::map<int, Rational>& weight_by_size,
                                                      int t) {
  std::map<int, std::vector<PointSet>> by_size;
  for (const auto& b : d.blocks()) {
    auto it = weight_by_size.find(b.size());
    if (it == weight_by_size.end())
      throw std::invalid_argument("is_regular_twise_balanced: no weight for block size " + std::to_string(b.size()));
    if (it->second <= 0) throw std::invalid_argument("is_regular_twise_balanced: weights must be positive");
    by_size[b.size()].push_back(b);
  }
  WeightedBalanceCheck out;
  const std::uint64_t dense_cap = SubsetCounts::kDenseLimit;
  for (int j = 1; j <= t; ++j) {
    if (BinomialTable::instance()(d.n(), j) > dense_cap)
      throw std::invalid_argument("is_regular_twise_balanced: C(n, j) too large to enumerate");
    std::vector<std::pair<Rational, SubsetCounts>> classes;
    for (const auto& [size, blocks] : by_size)
      classes.emplace_back(weight_by_size.at(size), SubsetCounts::of_blocks(d.n(), j, blocks));
    const std::uint64_t total = BinomialTable::instance()(d.n(), j);
    std::optional<Rational> common;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      Rational acc = 0;
      for (const auto& [w, counts] : classes) acc += w * counts.at_rank(rank);
      if (!common) common = acc;
      else if (*common != acc) {
        out.lambdas.clear();
        return out;
      }
    }
    out.lambdas.push_back(common.value_or(Rational(0)));
  }
  out.holds = true;
  return out;
}

// ---------------------------------------------------------------------------
// transforms

inline Design complement(const Design& d) {
  std::vector<PointSet> blocks;
  blocks.reserve(d.block_count());
  for (const auto& b : d.blocks()) blocks.push_back(b.complement_in(d.n()));
  return Design(d.n(), std::move(blocks));
}

namespace detail {
inline void check_point(const Design& d, int point, const char* op) {
  if (point < 0 || point >= d.n())
    throw std::out_of_range(std::string(op) + ": point " + std::to_string(point) + " outside [0, " +
                            std::to_string(d.n()) + ")");
  if (d.n() < 2) throw std::invalid_argument(std::string(op) + ": needs at least two points");
}
}  // namespace detail

/// Blocks through `point`, with the point removed and the rest renumbered.
inline Design derived(const Design& d, int point) {
  detail::check_point(d, point, "derived");
  std::vector<PointSet> blocks;
  for (const auto& b : d.blocks())
    if (b.contains(point)) blocks.push_back(b.remove_and_shift(point));
  return Design(d.n() - 1, std::move(blocks));
}

/// Blocks avoiding `point`, renumbered onto n-1 points.
inline Design residual(const Design& d, int point) {
  detail::check_point(d, point, "residual");
  std::vector<PointSet> blocks;
  for (const auto& b : d.blocks())
    if (!b.contains(point)) blocks.push_back(b.remove_and_shift(point));
  return Design(d.n() - 1, std::move(blocks));
}

/// Adjoin a new point n to every block of the size-r design and keep the
/// size-(r+1) blocks as they are. No verification is done here.
inline Design extend_pair(const Design& d_r, const Design& d_r1) {
  if (d_r.n() != d_r1.n()) throw std::invalid_argument("extend_pair: designs live on different point sets");
  if (d_r.n() + 1 > kMaxPoints) throw std::invalid_argument("extend_pair: result would exceed 128 points");
  auto r = d_r.uniform_block_size();
  auto r1 = d_r1.uniform_block_size();
  if (!r || !r1 || *r1 != *r + 1)
    throw std::invalid_argument("extend_pair: block sizes must be uniform r and r+1");
  const int infinity = d_r.n();
  std::vector<PointSet> blocks;
  blocks.reserve(d_r.block_count() + d_r1.block_count());
  for (auto b : d_r.blocks()) {
    b.insert(infinity);
    blocks.push_back(b);
  }
  for (const auto& b : d_r1.blocks()) blocks.push_back(b);
  return Design(d_r.n() + 1, std::move(blocks));
}

/// Relabel points: point p becomes perm[p]. perm must be a permutation of 0..n-1.
inline Design permuted(const Design& d, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != d.n()) throw std::invalid_argument("permuted: permutation has wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= d.n() || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("permuted: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<PointSet> blocks;
  blocks.reserve(d.block_count());
  for (const auto& b : d.blocks()) {
    PointSet img;
    for (int p : b.points()) img.insert(perm[static_cast<std::size_t>(p)]);
    blocks.push_back(img);
  }
  return Design(d.n(), std::move(blocks));
}

/// Union of two block multisets on the same points.
inline Design block_union(const Design& a, const Design& b) {
  if (a.n() != b.n()) throw std::invalid_argument("block_union: designs live on different point sets");
  std::vector<PointSet> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return Design(a.n(), std::move(blocks));
}

}  // namespace tightrel
