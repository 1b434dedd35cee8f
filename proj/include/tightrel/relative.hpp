#pragma once

// Structural checks for relative t-designs on two shells: constituent
// indices, the t-subset criterion, closed-form intersection counts,
// tightness and the complementary-pair construction.

#include "design.hpp"
#include "exact.hpp"
#include "hamming.hpp"
#include "subsets.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightrel {

namespace detail {

/// Weighted count sum_nu w_nu * lambda^(nu)(T) if it is the same for every
/// j-subset T of {0..n-1}.
inline std::optional<Rational> weighted_constant(const RelativeCandidate& cand, int j) {
  const int n = cand.n();
  std::array<SubsetCounts, 2> counts{SubsetCounts::of_blocks(n, j, cand.shell(0).design.blocks()),
                                     SubsetCounts::of_blocks(n, j, cand.shell(1).design.blocks())};
  const std::uint64_t total = counts[0].total_subsets();
  if (total > SubsetCounts::kDenseLimit) throw std::invalid_argument("weighted_constant: C(n, j) too large");
  const Rational w1 = cand.shell(0).weight, w2 = cand.shell(1).weight;
  std::optional<Rational> common;
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    Rational v = w1 * counts[0].at_rank(rank) + w2 * counts[1].at_rank(rank);
    if (!common) common = v;
    else if (v != *common) return std::nullopt;
  }
  return common.value_or(Rational(0));
}

inline int sign_power(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace detail

// ---------------------------------------------------------------------------
// constituent indices of a balanced two-shell family

struct ShellKageyama {
  bool is_t_minus_1_design = false;
  std::vector<Rational> lambda_observed;  // (lambda_0..lambda_{t-1}) when a design
  Rational lambda_formula;                // closed-form lambda_{t-1}^(r_nu)
};

struct KageyamaReport {
  bool applicable = false;  // union is (t-1)- and t-wise balanced
  std::optional<Rational> weighted_lambda_t_minus_1;
  std::optional<Rational> weighted_lambda_t;
  std::array<ShellKageyama, 2> shells;

  /// Both shells are (t-1)-designs with the predicted index.
  bool confirmed() const {
    if (!applicable) return false;
    for (const auto& s : shells)
      if (!s.is_t_minus_1_design || s.lambda_observed.back() != s.lambda_formula) return false;
    return true;
  }
};

/// If the union is (t-1)- and t-wise balanced with constant weight per
/// shell, each shell must be a (t-1)-design with
///   lambda^(r1) = ((r2-t+1) L_{t-1} - (n-t+1) L_t) / ((r2-r1) w1)
/// and symmetrically for r2.
inline KageyamaReport kageyama_constituents(const RelativeCandidate& cand, int t) {
  if (t < 1) throw std::invalid_argument("kageyama_constituents: need t >= 1");
  KageyamaReport report;
  report.weighted_lambda_t_minus_1 = detail::weighted_constant(cand, t - 1);
  report.weighted_lambda_t = detail::weighted_constant(cand, t);
  if (!report.weighted_lambda_t_minus_1 || !report.weighted_lambda_t) return report;
  report.applicable = true;

  const int n = cand.n();
  const Rational lam_prev = *report.weighted_lambda_t_minus_1;
  const Rational lam_t = *report.weighted_lambda_t;
  for (int nu = 0; nu < 2; ++nu) {
    const Shell& self = cand.shell(nu);
    const Shell& other = cand.shell(1 - nu);
    auto& out = report.shells[static_cast<std::size_t>(nu)];
    out.lambda_formula = (Rational(other.r - t + 1) * lam_prev - Rational(n - t + 1) * lam_t) /
                         (Rational(other.r - self.r) * self.weight);
    if (self.r >= t - 1) {
      auto check = is_t_design(self.design, t - 1);
      out.is_t_minus_1_design = check.holds;
      for (auto v : check.lambdas) out.lambda_observed.emplace_back(v);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// the t-subset criterion

struct SubsetCriterion {
  bool holds = false;
  Rational rhs;                              // sum_nu N_nu w_nu prod_{j<t} (r_nu-j)/(n-j)
  std::optional<int> shell_not_design;       // index of a shell failing the (t-1)-design test
  std::optional<std::vector<int>> failing_subset;
  Rational failing_value;                    // weighted left-hand side at the failing subset
};

inline Rational criterion_rhs(const RelativeCandidate& cand, int t) {
  const int n = cand.n();
  Rational rhs = 0;
  for (const auto& sh : cand.shells()) {
    Rational prod = 1;
    for (int j = 0; j < t; ++j) prod *= Rational(sh.r - j, n - j);
    rhs += Rational(static_cast<long long>(sh.size())) * sh.weight * prod;
  }
  return rhs;
}

/// (Y, w) is a relative t-design iff both shells are (t-1)-designs and
/// w1 lambda_t^(r1)(T) + w2 lambda_t^(r2)(T) equals criterion_rhs for every
/// t-subset T.
inline SubsetCriterion check_via_thm34(const RelativeCandidate& cand, int t) {
  const int n = cand.n();
  if (t < 1 || t > n) throw std::invalid_argument("check_via_thm34: need 1 <= t <= n");
  SubsetCriterion out;
  out.rhs = criterion_rhs(cand, t);
  for (int nu = 0; nu < 2; ++nu) {
    const Shell& sh = cand.shell(nu);
    if (sh.r < t - 1 || !is_t_design(sh.design, t - 1).holds) {
      out.shell_not_design = nu;
      return out;
    }
  }
  const SubsetCounts c1 = SubsetCounts::of_blocks(n, t, cand.shell(0).design.blocks());
  const SubsetCounts c2 = SubsetCounts::of_blocks(n, t, cand.shell(1).design.blocks());
  const Rational w1 = cand.shell(0).weight, w2 = cand.shell(1).weight;
  for (Combinations c(n, t); c.valid(); c.next()) {
    const std::uint64_t rank = colex_rank(c.current());
    Rational value = w1 * c1.at_rank(rank) + w2 * c2.at_rank(rank);
    if (value != out.rhs) {
      auto cur = c.current();
      out.failing_subset = std::vector<int>(cur.begin(), cur.end());
      out.failing_value = value;
      return out;
    }
  }
  out.holds = true;
  return out;
}

// ---------------------------------------------------------------------------
// closed-form intersection counts of a (t-1)-(n, r, .) design with N blocks:
// p(l; i_1..i_s) counts blocks containing i_1..i_l and missing i_{l+1}..i_s

/// p(l; i_1..i_s) = C(n-s, r-l) / C(n, r) * N, for s below the strength.
inline Rational p_ell_formula(int n, int r, std::int64_t N, int s, int ell) {
  if (n < 1 || r < 0 || r > n || s < 0 || s > n || ell < 0 || ell > s || N < 0)
    throw std::out_of_range("p_ell_formula: need 0 <= ell <= s <= n, 0 <= r <= n, N >= 0");
  return Rational(binomial(n - s, r - ell) * N, binomial(n, r));
}

/// p(l; i_1..i_t) = N/C(n,r) {C(n-t, r-l) - (-1)^(t-l) C(n-t, r-t)} + (-1)^(t-l) lambda_t,
/// for 0 <= l <= t-1, given lambda_t at that t-subset.
inline Rational p_ell_t_formula(int n, int r, std::int64_t N, int t, int ell, const Rational& lambda_t) {
  if (n < 1 || r < 0 || r > n || t < 1 || t > n || ell < 0 || ell > t - 1 || N < 0)
    throw std::out_of_range("p_ell_t_formula: need 0 <= ell <= t-1, 1 <= t <= n, 0 <= r <= n");
  const int sign = detail::sign_power(t - ell);
  Rational bracket = Rational(binomial(n - t, r - ell)) - Rational(sign) * Rational(binomial(n - t, r - t));
  return Rational(BigInt(N), binomial(n, r)) * bracket + Rational(sign) * lambda_t;
}

/// lambda_t of the complementary design at the same t-subset:
/// (-1)^t lambda_t + N/C(n,r) {C(n-t, r) - (-1)^t C(n-t, n-r)}.
inline Rational complement_lambda_t(int n, int r, std::int64_t N, int t, const Rational& lambda_t) {
  if (n < 1 || r < 0 || r > n || t < 1 || t > n || N < 0)
    throw std::out_of_range("complement_lambda_t: need 1 <= t <= n, 0 <= r <= n");
  const int sign = detail::sign_power(t);
  Rational bracket = Rational(binomial(n - t, r)) - Rational(sign) * Rational(binomial(n - t, n - r));
  return Rational(sign) * lambda_t + Rational(BigInt(N), binomial(n, r)) * bracket;
}

// ---------------------------------------------------------------------------
// tightness

/// Size of a tight relative t-design on two shells: 2n (t=3),
/// n(n+1)/2 (t=4), 2 C(n,2) (t=5).
inline std::int64_t tight_size(int t, int n) {
  switch (t) {
    case 3: return 2LL * n;
    case 4: return static_cast<std::int64_t>(n) * (n + 1) / 2;
    case 5: return static_cast<std::int64_t>(n) * (n - 1);
    default: throw std::invalid_argument("tight_size: only t in {3, 4, 5} is supported, got " + std::to_string(t));
  }
}

inline bool is_tight(const RelativeCandidate& cand, int t) {
  const auto size = tight_size(t, cand.n());
  if (static_cast<std::int64_t>(cand.total_size()) != size) return false;
  return check_via_thm34(cand, t).holds;
}

/// Design of block size r together with its complement, unit weights,
/// on shells (min(r, n-r), max(r, n-r)).
inline RelativeCandidate complementary_pair(const Design& d, CandidateOptions options = {}) {
  auto r = d.uniform_block_size();
  if (!r) throw std::invalid_argument("complementary_pair: design needs a uniform block size");
  if (2 * *r == d.n()) throw std::invalid_argument("complementary_pair: r = n/2 puts both halves on one shell");
  if (*r < 2 && !options.allow_trivial) throw std::invalid_argument("complementary_pair: block size below 2");
  Design comp = complement(d);
  return RelativeCandidate(Shell{*r, d, 1}, Shell{d.n() - *r, std::move(comp), 1}, options);
}

// ---------------------------------------------------------------------------
// covering condition for tight relative 3-designs with r1 + r2 = n

enum class Verdict3 { Holds, Fails, NotApplicable };

struct CoverCheck {
  Verdict3 verdict = Verdict3::NotApplicable;
  std::string reason;                      // why not applicable
  std::optional<PointSet> block;           // r2-block whose outside triple is uncovered
  std::optional<std::vector<int>> triple;
};

/// Every 3-subset of V \ B, for every block B of the r2 shell, lies in at
/// least one r1-block. Requires r1 + r2 = n, equal weights and a tight
/// relative 3-design.
inline CoverCheck prop44_check(const RelativeCandidate& cand) {
  CoverCheck out;
  const int n = cand.n();
  const Shell& low = cand.shell(0);
  const Shell& high = cand.shell(1);
  if (low.r + high.r != n) {
    out.reason = "r1 + r2 != n";
    return out;
  }
  if (!cand.constant_weight()) {
    out.reason = "weights differ between shells";
    return out;
  }
  if (low.r < 3) {
    out.reason = "fewer than three points outside an r2-block";
    return out;
  }
  if (!is_tight(cand, 3)) {
    out.reason = "not a tight relative 3-design";
    return out;
  }
  const SubsetCounts covered = SubsetCounts::of_blocks(n, 3, low.design.blocks());
  for (const auto& b : high.design.blocks()) {
    auto outside = b.complement_in(n).points();
    bool fail = false;
    std::vector<int> witness;
    for_each_subset_of(outside, 3, [&](std::span<const int> tri) {
      if (fail) return;
      if (covered.at(tri) == 0) {
        fail = true;
        witness.assign(tri.begin(), tri.end());
      }
    });
    if (fail) {
      out.verdict = Verdict3::Fails;
      out.block = b;
      out.triple = witness;
      return out;
    }
  }
  out.verdict = Verdict3::Holds;
  return out;
}

}  // namespace tightrel
