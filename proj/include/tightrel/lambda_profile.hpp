#pragma once

// lambda_t-sequences, the weighted Johnson graph J(n,3), and pairwise
// sequence comparison over a corpus of designs.

#include "design.hpp"
#include "exact.hpp"
#include "parallel.hpp"
#include "subsets.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tightrel {

/// Histogram (count * value) of lambda_t over all t-subsets, values ascending.
struct LambdaSequence {
  struct Entry {
    std::uint64_t value = 0;
    std::uint64_t count = 0;
    bool operator==(const Entry&) const = default;
  };

  int t = 0;
  std::vector<Entry> entries;

  bool operator==(const LambdaSequence&) const = default;

  std::uint64_t total_subsets() const {
    std::uint64_t s = 0;
    for (const auto& e : entries) s += e.count;
    return s;
  }

  std::uint64_t weighted_sum() const {
    std::uint64_t s = 0;
    for (const auto& e : entries) s += e.value * e.count;
    return s;
  }

  /// "(28*0, 7*1)"
  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ", ";
      os << entries[i].count << '*' << entries[i].value;
    }
    os << ')';
    return os.str();
  }
};

inline LambdaSequence lambda_sequence(const Design& d, int t) {
  auto r = d.uniform_block_size();
  if (d.block_count() > 0 && !r) throw std::invalid_argument("lambda_sequence: blocks of mixed size");
  if (t < 0) throw std::invalid_argument("lambda_sequence: negative t");
  if (r && t > *r) throw std::invalid_argument("lambda_sequence: t exceeds the block size");
  const auto counts = SubsetCounts::of_blocks(d.n(), t, d.blocks());
  LambdaSequence seq{t, {}};
  for (const auto& [value, count] : counts.histogram()) seq.entries.push_back({value, count});
  return seq;
}

inline bool sequences_equal(const LambdaSequence& a, const LambdaSequence& b) { return a == b; }

/// The map l -> K - l applied to a sequence, re-sorted.
inline LambdaSequence reflected(const LambdaSequence& seq, std::uint64_t K) {
  LambdaSequence out{seq.t, {}};
  for (auto it = seq.entries.rbegin(); it != seq.entries.rend(); ++it) {
    if (it->value > K) throw std::invalid_argument("reflected: value exceeds the reflection constant");
    out.entries.push_back({K - it->value, it->count});
  }
  return out;
}

/// J(n,3) with vertex weights lambda_3. Vertices are the 3-subsets in
/// lexicographic order; adjacency (|T n T'| = 2) is computed on demand.
class MultiplicityGraph {
 public:
  using Triple = std::array<int, 3>;

  explicit MultiplicityGraph(const Design& d) : n_(d.n()) {
    auto r = d.uniform_block_size();
    if (!r || *r < 3) throw std::invalid_argument("MultiplicityGraph: need a uniform block size >= 3");
    const auto counts = SubsetCounts::of_blocks(n_, 3, d.blocks());
    for (Combinations c(n_, 3); c.valid(); c.next()) {
      auto cur = c.current();
      vertices_.push_back({cur[0], cur[1], cur[2]});
      weights_.push_back(counts.at(cur));
    }
  }

  int n() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Triple>& vertices() const { return vertices_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  int degree() const { return 3 * (n_ - 3); }

  /// Position of an ascending triple in the vertex order.
  std::size_t index_of(const Triple& tri) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), tri);
    if (it == vertices_.end() || *it != tri) throw std::out_of_range("MultiplicityGraph: not a vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// Neighbours of vertex v (triples sharing exactly two points), ascending.
  std::vector<std::size_t> neighbors(std::size_t v) const {
    const Triple& tri = vertices_.at(v);
    std::vector<std::size_t> out;
    for (int drop = 0; drop < 3; ++drop) {
      for (int p = 0; p < n_; ++p) {
        if (p == tri[0] || p == tri[1] || p == tri[2]) continue;
        Triple next = tri;
        next[drop] = p;
        std::sort(next.begin(), next.end());
        out.push_back(index_of(next));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  LambdaSequence weight_multiset() const {
    std::map<std::uint32_t, std::uint64_t> h;
    for (auto w : weights_) ++h[w];
    LambdaSequence seq{3, {}};
    for (const auto& [value, count] : h) seq.entries.push_back({value, count});
    return seq;
  }

 private:
  int n_;
  std::vector<Triple> vertices_;
  std::vector<std::uint32_t> weights_;
};

inline MultiplicityGraph multiplicity_graph(const Design& d) { return MultiplicityGraph(d); }

/// Index pairs (i < j) of designs with different block multisets and equal
/// lambda_t-sequences, sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> conjecture2_scan(const std::vector<Design>& designs, int t,
                                                                          unsigned threads = 1) {
  if (designs.empty()) return {};
  const int n = designs.front().n();
  const auto r = designs.front().uniform_block_size();
  for (const auto& d : designs)
    if (d.n() != n || d.uniform_block_size() != r)
      throw std::invalid_argument("conjecture2_scan: designs must share n and block size");

  std::vector<LambdaSequence> seqs(designs.size());
  parallel_for(designs.size(), threads, [&](std::size_t i) { seqs[i] = lambda_sequence(designs[i], t); });

  std::vector<std::size_t> order(designs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto key_less = [&](std::size_t a, std::size_t b) {
    const auto& x = seqs[a].entries;
    const auto& y = seqs[b].entries;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const auto& p, const auto& q) {
      return std::pair(p.value, p.count) < std::pair(q.value, q.count);
    });
  };
  std::stable_sort(order.begin(), order.end(), key_less);

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo + 1;
    while (hi < order.size() && seqs[order[hi]] == seqs[order[lo]]) ++hi;
    for (std::size_t a = lo; a < hi; ++a)
      for (std::size_t b = a + 1; b < hi; ++b) {
        auto i = std::min(order[a], order[b]), j = std::max(order[a], order[b]);
        if (!(designs[i] == designs[j])) out.emplace_back(i, j);
      }
    lo = hi;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tightrel
