#pragma once

// Krawtchouk arithmetic on H(n,2) and the defining-equation oracle for
// relative t-designs supported on two shells X_r1 u X_r2.

#include "design.hpp"
#include "exact.hpp"
#include "subsets.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightrel {

/// Second-eigenmatrix entry Q_k(x) of H(n,2):
/// sum_j (-1)^j C(x, j) C(n-x, k-j).
inline BigInt krawtchouk(int n, int k, int x) {
  if (n < 0 || k < 0 || k > n || x < 0 || x > n)
    throw std::out_of_range("krawtchouk: need 0 <= k <= n and 0 <= x <= n");
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(x, j) * binomial(n - x, k - j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

/// Q_1(d) = n - 2d, the value of a degree-1 idempotent column at distance d.
inline std::int64_t q1(int n, int d) { return static_cast<std::int64_t>(n) - 2 * d; }

inline BigInt int_pow(std::int64_t base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// Full-shell moment sum_{x in X_r} prod_{j=1}^{s} phi_{u_j}(x) for any s
/// distinct u_j in X_1:
///   sum_l C(s,l) C(n-s, r-l) Q_1(r-1)^l Q_1(r+1)^(s-l).
inline BigInt shell_moment(int n, int s, int r) {
  if (s < 1 || s > n || r < 1 || r > n - 1)
    throw std::out_of_range("shell_moment: need 1 <= s <= n and 1 <= r <= n-1");
  BigInt sum = 0;
  for (int l = 0; l <= s; ++l)
    sum += binomial(s, l) * binomial(n - s, r - l) * int_pow(q1(n, r - 1), l) * int_pow(q1(n, r + 1), s - l);
  return sum;
}

/// One shell of a candidate: the words of weight r in Y, as blocks, with
/// a constant positive weight.
struct Shell {
  int r = 0;
  Design design;
  Rational weight = 1;

  std::size_t size() const { return design.block_count(); }
};

struct CandidateOptions {
  /// Accept shells outside 2 <= r1 < r2 <= n-2.
  bool allow_trivial = false;
};

/// A positive weighted subset Y of X_r1 u X_r2 in H(n,2), u_0 = 0, stored
/// with r1 < r2.
class RelativeCandidate {
 public:
  RelativeCandidate(Shell a, Shell b, CandidateOptions options = {}) {
    if (a.r > b.r) std::swap(a, b);
    if (a.design.n() != b.design.n()) throw std::invalid_argument("RelativeCandidate: shells on different n");
    n_ = a.design.n();
    if (a.r == b.r) throw std::invalid_argument("RelativeCandidate: the two shells must have different ranks");
    const int lo = options.allow_trivial ? 0 : 2;
    const int hi = options.allow_trivial ? n_ : n_ - 2;
    if (a.r < lo || b.r > hi)
      throw std::invalid_argument("RelativeCandidate: shells r=(" + std::to_string(a.r) + "," + std::to_string(b.r) +
                                  ") outside " + std::to_string(lo) + " <= r1 < r2 <= " + std::to_string(hi));
    for (const Shell* s : {&a, &b}) {
      if (s->weight <= 0) throw std::invalid_argument("RelativeCandidate: weights must be positive");
      for (const auto& blk : s->design.blocks())
        if (blk.size() != s->r)
          throw std::invalid_argument("RelativeCandidate: block {" + to_string(blk) + "} not of size r=" +
                                      std::to_string(s->r));
    }
    shells_ = {std::move(a), std::move(b)};
  }

  int n() const { return n_; }
  const Shell& shell(int index) const { return shells_.at(static_cast<std::size_t>(index)); }
  const std::array<Shell, 2>& shells() const { return shells_; }
  std::size_t total_size() const { return shells_[0].size() + shells_[1].size(); }
  bool constant_weight() const { return shells_[0].weight == shells_[1].weight; }

  /// All blocks of both shells as one mixed-size design.
  Design union_design() const { return block_union(shells_[0].design, shells_[1].design); }

 private:
  int n_ = 0;
  std::array<Shell, 2> shells_;
};

struct OracleWitness {
  int s = 0;
  std::vector<int> coordinates;
  Rational shell_average;  // left-hand side
  Rational weighted_sum;   // right-hand side
};

struct OracleResult {
  bool holds = false;
  std::optional<OracleWitness> witness;
};

/// Checks, for every s = 1..t and every s-set of coordinates {i_1..i_s}
/// (u_j = e_{i_j} in X_1), that
///   sum_nu w_nu N_nu / C(n, r_nu) * shell_moment(n, s, r_nu)
///     = sum_nu w_nu sum_{B in B_nu} prod_j Q_1(d(x_B, u_j)).
/// The first failing (s, subset) in lexicographic order is reported.
inline OracleResult relative_design_oracle(const RelativeCandidate& cand, int t) {
  const int n = cand.n();
  if (t < 1 || t > n) throw std::invalid_argument("relative_design_oracle: need 1 <= t <= n");

  struct ShellData {
    Rational weight;
    int r;
    std::vector<PointSet> blocks;
    std::vector<BigInt> powers;  // Q1(r-1)^l Q1(r+1)^(s-l), l = 0..s
  };
  std::vector<ShellData> shells;
  for (const auto& sh : cand.shells()) shells.push_back({sh.weight, sh.r, sh.design.blocks(), {}});

  std::vector<std::uint64_t> counts;
  for (int s = 1; s <= t; ++s) {
    Rational lhs = 0;
    for (auto& sh : shells) {
      lhs += sh.weight * Rational(BigInt(sh.blocks.size()) * shell_moment(n, s, sh.r), binomial(n, sh.r));
      sh.powers.assign(static_cast<std::size_t>(s) + 1, 0);
      for (int l = 0; l <= s; ++l) sh.powers[static_cast<std::size_t>(l)] = int_pow(q1(n, sh.r - 1), l) * int_pow(q1(n, sh.r + 1), s - l);
    }
    for (Combinations c(n, s); c.valid(); c.next()) {
      const PointSet mask = c.mask();
      Rational rhs = 0;
      for (const auto& sh : shells) {
        counts.assign(static_cast<std::size_t>(s) + 1, 0);
        for (const auto& b : sh.blocks) ++counts[static_cast<std::size_t>(b.intersection_size(mask))];
        BigInt acc = 0;
        for (int l = 0; l <= s; ++l)
          if (counts[static_cast<std::size_t>(l)]) acc += sh.powers[static_cast<std::size_t>(l)] * counts[static_cast<std::size_t>(l)];
        rhs += sh.weight * acc;
      }
      if (rhs != lhs) {
        auto cur = c.current();
        return {false, OracleWitness{s, {cur.begin(), cur.end()}, lhs, rhs}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace tightrel
