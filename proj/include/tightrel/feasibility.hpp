#pragma once

// Integrality scans for tight relative 3- and 4-designs on two shells, and
// existence annotations for the constituent designs.

#include "exact.hpp"
#include "nonexistence.hpp"
#include "parallel.hpp"
#include "subsets.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tightrel {

struct FeasibleRow {
  int t = 3;
  int n = 0;
  int r1 = 0;
  int r2 = 0;
  std::int64_t N1 = 0;
  std::int64_t N2 = 0;
  std::int64_t lam1 = 0;  // lambda_{t-1} of the r1 shell
  std::int64_t lam2 = 0;  // lambda_{t-1} of the r2 shell
  Rational ratio = 1;     // w_{r2} / w_{r1}
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // (lambda_t^(r1), lambda_t^(r2))
  int case_tag = 0;       // 1..4 for t = 3, 0 otherwise
  bool hadamard_star = false;
  std::vector<NonexistenceVerdict> verdicts;

  DesignParams shell_params(int index) const {
    return index == 0 ? DesignParams{n, r1, lam1, t - 1} : DesignParams{n, r2, lam2, t - 1};
  }

  bool ruled_out() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.outcome == Outcome::RuledOut; });
  }
};

namespace scan_detail {

/// Lattice points (x, y) in [0,X] x [0,Y] on q x + p y = C, where
/// C = (q A1 + p A2) / D must be an integer.
inline std::vector<std::pair<std::int64_t, std::int64_t>> line_points(std::int64_t X, std::int64_t Y, std::int64_t p,
                                                                       std::int64_t q, std::int64_t A1, std::int64_t A2,
                                                                       std::int64_t D) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const __int128 num = static_cast<__int128>(q) * A1 + static_cast<__int128>(p) * A2;
  if (num % D != 0) return out;
  const auto C = static_cast<std::int64_t>(num / D);
  // q x = C mod p; gcd(p, q) = 1.
  std::int64_t x0 = 0;
  if (p > 1) {
    const std::int64_t inv = nt::inverse_mod(q, p);
    x0 = static_cast<std::int64_t>(static_cast<__int128>((C % p + p) % p) * inv % p);
  }
  for (std::int64_t x = x0; x <= X; x += p) {
    const std::int64_t rest = C - q * x;
    if (rest < 0) break;
    const std::int64_t y = rest / p;
    if (y <= Y) out.emplace_back(x, y);
  }
  return out;
}

/// C(n, k) capped at INT64_MAX.
inline std::int64_t binom64(int n, int k) {
  return static_cast<std::int64_t>(std::min<std::uint64_t>(BinomialTable::instance()(n, k), INT64_MAX));
}

/// lambda_2 of a symmetric 2-(n, r, .) design, when integral.
inline std::optional<std::int64_t> symmetric_lambda2(int n, int r) {
  const std::int64_t num = static_cast<std::int64_t>(r) * (r - 1);
  if (num % (n - 1)) return std::nullopt;
  return num / (n - 1);
}

/// lambda_3 of a 3-(n, r, .) design with N blocks, when every lambda_i is
/// integral and lambda_3 >= 1.
inline std::optional<std::int64_t> three_design_lambda3(int n, int r, std::int64_t N) {
  const std::int64_t num = N * binom64(r, 3), den = binom64(n, 3);
  if (num % den) return std::nullopt;
  const std::int64_t l3 = num / den;
  if (l3 < 1) return std::nullopt;
  if ((l3 * (n - 2)) % (r - 2)) return std::nullopt;
  const std::int64_t l2 = l3 * (n - 2) / (r - 2);
  if ((l2 * (n - 1)) % (r - 1)) return std::nullopt;
  const std::int64_t l1 = l2 * (n - 1) / (r - 1);
  if ((l1 * n) % r) return std::nullopt;
  return l3;
}

/// Rows for every reduced ratio p/q != 1 with p <= X, q <= Y whose line
/// carries at least two lattice points.
inline void append_ratio_rows(const FeasibleRow& base, std::int64_t A1, std::int64_t A2, std::int64_t D, int case_tag,
                              std::vector<FeasibleRow>& out) {
  for (std::int64_t p = 1; p <= base.lam1; ++p) {
    for (std::int64_t q = 1; q <= base.lam2; ++q) {
      if (p == q || std::gcd(p, q) != 1) continue;
      auto pts = line_points(base.lam1, base.lam2, p, q, A1, A2, D);
      if (pts.size() < 2) continue;
      FeasibleRow row = base;
      row.ratio = Rational(p, q);
      row.pairs = std::move(pts);
      row.case_tag = case_tag;
      out.push_back(std::move(row));
    }
  }
}

inline void sort_rows(std::vector<FeasibleRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const FeasibleRow& a, const FeasibleRow& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.r1 != b.r1) return a.r1 < b.r1;
    if (a.r2 != b.r2) return a.r2 < b.r2;
    if (a.N1 != b.N1) return a.N1 < b.N1;
    return a.ratio < b.ratio;
  });
}

template <typename PerN>
std::vector<FeasibleRow> scan_by_n(int lo, int hi, unsigned threads, PerN&& per_n) {
  if (hi < lo) return {};
  std::vector<std::vector<FeasibleRow>> buckets(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(buckets.size(), threads, [&](std::size_t i) { buckets[i] = per_n(lo + static_cast<int>(i)); });
  std::vector<FeasibleRow> rows;
  for (auto& b : buckets) {
    sort_rows(b);
    for (auto& r : b) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace scan_detail

/// Feasible parameters of tight relative 3-designs on shells r1 < r2 of
/// H(n,2), 4 <= n <= max_n, with N_r1 = N_r2 = n. Case 1: r1 + r2 = n and
/// equal weights; 2: r1 + r2 = n, weights differ; 3: r1 + r2 != n, equal
/// weights; 4: r1 + r2 != n, weights differ.
inline std::vector<FeasibleRow> scan_relative3(int max_n, const std::set<int>& cases = {1, 2, 3, 4},
                                               unsigned threads = 1) {
  if (max_n < 4) throw std::invalid_argument("scan_relative3: need max_n >= 4");
  for (int c : cases)
    if (c < 1 || c > 4) throw std::invalid_argument("scan_relative3: cases are 1..4");
  return scan_detail::scan_by_n(4, max_n, threads, [&](int n) {
    std::vector<FeasibleRow> rows;
    const std::int64_t D = scan_detail::binom64(n, 3);
    for (int r1 = 2; r1 <= n - 2; ++r1) {
      auto l1 = scan_detail::symmetric_lambda2(n, r1);
      if (!l1) continue;
      for (int r2 = r1 + 1; r2 <= n - 2; ++r2) {
        auto l2 = scan_detail::symmetric_lambda2(n, r2);
        if (!l2) continue;
        const bool complementary = r1 + r2 == n;
        FeasibleRow base;
        base.t = 3;
        base.n = n;
        base.r1 = r1;
        base.r2 = r2;
        base.N1 = base.N2 = n;
        base.lam1 = *l1;
        base.lam2 = *l2;
        base.hadamard_star = (n + 1) % 4 == 0 && r1 == (n - 1) / 2 && r2 == r1 + 1;
        const std::int64_t A1 = n * scan_detail::binom64(r1, 3), A2 = n * scan_detail::binom64(r2, 3);
        const int equal_case = complementary ? 1 : 3;
        const int ratio_case = complementary ? 2 : 4;
        if (cases.count(equal_case)) {
          auto pts = scan_detail::line_points(base.lam1, base.lam2, 1, 1, A1, A2, D);
          if (pts.size() >= 2) {
            FeasibleRow row = base;
            row.pairs = std::move(pts);
            row.case_tag = equal_case;
            rows.push_back(std::move(row));
          }
        }
        if (cases.count(ratio_case)) scan_detail::append_ratio_rows(base, A1, A2, D, ratio_case, rows);
      }
    }
    return rows;
  });
}

/// Feasible parameters of tight relative 4-designs, 5 <= n <= max_n:
/// N_r1 + N_r2 = n(n+1)/2 and each shell passes 3-design divisibility.
/// Each split gives one equal-weight row (pairs possibly empty) followed by
/// rows for weight ratios whose line has at least two lattice points.
inline std::vector<FeasibleRow> scan_relative4(int max_n, unsigned threads = 1) {
  if (max_n < 5) throw std::invalid_argument("scan_relative4: need max_n >= 5");
  return scan_detail::scan_by_n(5, max_n, threads, [](int n) {
    std::vector<FeasibleRow> rows;
    const std::int64_t total = static_cast<std::int64_t>(n) * (n + 1) / 2;
    const std::int64_t D = scan_detail::binom64(n, 4);
    // admissible[r] = (N, lambda_3) for each N that passes divisibility
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> admissible(static_cast<std::size_t>(n));
    for (int r = 3; r <= n - 2; ++r) {
      const std::int64_t cap = std::min(total - 1, scan_detail::binom64(n, r));
      for (std::int64_t N = 1; N <= cap; ++N)
        if (auto l3 = scan_detail::three_design_lambda3(n, r, N)) admissible[static_cast<std::size_t>(r)].emplace_back(N, *l3);
    }
    for (int r1 = 3; r1 <= n - 2; ++r1) {
      for (int r2 = r1 + 1; r2 <= n - 2; ++r2) {
        const auto& second = admissible[static_cast<std::size_t>(r2)];
        for (auto [N1, l3a] : admissible[static_cast<std::size_t>(r1)]) {
          const std::int64_t N2 = total - N1;
          auto it = std::lower_bound(second.begin(), second.end(), std::pair<std::int64_t, std::int64_t>(N2, 0));
          if (it == second.end() || it->first != N2) continue;
          FeasibleRow base;
          base.t = 4;
          base.n = n;
          base.r1 = r1;
          base.r2 = r2;
          base.N1 = N1;
          base.N2 = N2;
          base.lam1 = l3a;
          base.lam2 = it->second;
          const std::int64_t A1 = N1 * scan_detail::binom64(r1, 4), A2 = N2 * scan_detail::binom64(r2, 4);
          FeasibleRow equal = base;
          equal.pairs = scan_detail::line_points(base.lam1, base.lam2, 1, 1, A1, A2, D);
          rows.push_back(std::move(equal));
          scan_detail::append_ratio_rows(base, A1, A2, D, 0, rows);
        }
      }
    }
    return rows;
  });
}

/// Attaches square / BRC verdicts (t = 3 rows) or Driessen verdicts (t = 4
/// rows) for each shell's constituent design; NotApplicable results are
/// dropped.
inline void annotate_existence(std::vector<FeasibleRow>& rows) {
  for (auto& row : rows) {
    row.verdicts.clear();
    for (int s = 0; s < 2; ++s) {
      const DesignParams p = row.shell_params(s);
      std::vector<NonexistenceVerdict> candidates;
      if (row.t == 3) candidates = {symmetric_square_test(p), brc_test(p)};
      else if (row.t == 4) candidates = {driessen_test(p)};
      for (auto& v : candidates) {
        if (v.outcome == Outcome::NotApplicable) continue;
        v.detail = p.to_string() + " " + v.detail;
        row.verdicts.push_back(std::move(v));
      }
    }
  }
}

inline std::string format_pairs(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  if (pairs.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i) os << (i ? ";" : "") << '(' << pairs[i].first << ',' << pairs[i].second << ')';
  return os.str();
}

inline std::string format_verdicts(const std::vector<NonexistenceVerdict>& verdicts) {
  if (verdicts.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < verdicts.size(); ++i)
    os << (i ? "; " : "") << to_string(verdicts[i].test) << '=' << to_string(verdicts[i].outcome) << " [" << verdicts[i].detail
       << ']';
  return os.str();
}

inline void write_rows_tsv(std::ostream& os, const std::vector<FeasibleRow>& rows) {
  os << "n\tr1\tr2\tN1\tN2\tlam1\tlam2\tratio\tpairs\tcase\tstar\tverdicts\n";
  for (const auto& r : rows) {
    os << r.n << '\t' << r.r1 << '\t' << r.r2 << '\t' << r.N1 << '\t' << r.N2 << '\t' << r.lam1 << '\t' << r.lam2 << '\t'
       << to_string(r.ratio) << '\t' << format_pairs(r.pairs) << '\t';
    if (r.case_tag) os << r.case_tag;
    else os << '-';
    os << '\t' << (r.hadamard_star ? "*" : "-") << '\t' << format_verdicts(r.verdicts) << '\n';
  }
}

}  // namespace tightrel
