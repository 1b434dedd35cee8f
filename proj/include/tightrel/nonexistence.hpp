#pragma once

// Nonexistence criteria: the square condition for symmetric designs with v
// even, Bruck-Ryser-Chowla for v odd, and Driessen's condition on
// 3-(C(u,2)+u+1, u+1, 2) designs and their complements.

#include "design.hpp"
#include "number_theory.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>

namespace tightrel {

enum class NonexistenceTest { SquareEven, BRCOdd, Driessen };
enum class Outcome { RuledOut, Passes, NotApplicable };

inline const char* to_string(NonexistenceTest t) {
  switch (t) {
    case NonexistenceTest::SquareEven: return "square";
    case NonexistenceTest::BRCOdd: return "brc";
    case NonexistenceTest::Driessen: return "driessen";
  }
  return "?";
}

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::RuledOut: return "ruled-out";
    case Outcome::Passes: return "passes";
    case Outcome::NotApplicable: return "n/a";
  }
  return "?";
}

struct NonexistenceVerdict {
  NonexistenceTest test = NonexistenceTest::SquareEven;
  Outcome outcome = Outcome::NotApplicable;
  std::string detail;
};

/// lambda (v-1) = k (k-1): the parameters of a symmetric 2-design.
inline bool symmetric_parameters(const DesignParams& p) {
  return p.t == 2 && p.lambda >= 1 && 2 <= p.k && p.k < p.v && p.lambda * (p.v - 1) == p.k * (p.k - 1);
}

inline NonexistenceVerdict symmetric_square_test(const DesignParams& p) {
  NonexistenceVerdict out{NonexistenceTest::SquareEven, Outcome::NotApplicable, {}};
  if (!symmetric_parameters(p)) {
    out.detail = p.to_string() + " is not a symmetric 2-design parameter set";
    return out;
  }
  if (p.v % 2) {
    out.detail = "v odd";
    return out;
  }
  const std::int64_t n = p.k - p.lambda;
  const bool square = nt::is_perfect_square(n);
  out.outcome = square ? Outcome::Passes : Outcome::RuledOut;
  out.detail = "k-lambda = " + std::to_string(n) + (square ? " is a square" : " is not a square");
  return out;
}

namespace detail {

inline void append_term(std::ostringstream& os, std::int64_t coef, const char* var, bool first) {
  if (first) {
    if (coef < 0) os << '-';
  } else {
    os << (coef < 0 ? " - " : " + ");
  }
  const std::int64_t mag = coef < 0 ? -coef : coef;
  if (mag != 1) os << mag;
  os << var;
}

}  // namespace detail

/// Rendering of x^2 = A y^2 + B z^2, e.g. "x^2 = 6y^2 + 2z^2".
inline std::string brc_form(std::int64_t A, std::int64_t B) {
  std::ostringstream os;
  os << "x^2 = ";
  detail::append_term(os, A, "y^2", true);
  detail::append_term(os, B, "z^2", false);
  return os.str();
}

/// x^2 = (k-lambda) y^2 + (-1)^((v-1)/2) lambda z^2 must have a nontrivial
/// integer solution.
inline NonexistenceVerdict brc_test(const DesignParams& p) {
  NonexistenceVerdict out{NonexistenceTest::BRCOdd, Outcome::NotApplicable, {}};
  if (!symmetric_parameters(p)) {
    out.detail = p.to_string() + " is not a symmetric 2-design parameter set";
    return out;
  }
  if (p.v % 2 == 0) {
    out.detail = "v even";
    return out;
  }
  const std::int64_t A = p.k - p.lambda;
  const std::int64_t B = ((p.v - 1) / 2) % 2 ? -p.lambda : p.lambda;
  const bool solvable = nt::ternary_solvable(1, -A, -B);
  out.outcome = solvable ? Outcome::Passes : Outcome::RuledOut;
  out.detail = brc_form(A, B) + (solvable ? " : solvable" : " : insolvable");
  return out;
}

namespace detail {

inline std::optional<std::int64_t> driessen_u_from_v(std::int64_t v) {
  // u^2 + u + 2 = 2v
  const std::int64_t disc = 8 * v - 7;
  if (disc < 0 || !nt::is_perfect_square(disc)) return std::nullopt;
  const std::int64_t root = nt::isqrt(disc);
  if ((root - 1) % 2) return std::nullopt;
  const std::int64_t u = (root - 1) / 2;
  if (u < 2) return std::nullopt;
  return u;
}

inline bool driessen_case(std::int64_t u, std::int64_t residue48, std::initializer_list<int> allowed16) {
  if (u % 48 != residue48) return false;
  for (auto [p, e] : nt::factorize(u)) {
    if (p == 2 || e % 2 == 0) continue;
    bool ok = false;
    for (int a : allowed16) ok = ok || p % 16 == a;
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Recognizes 3-(C(u,2)+u+1, u+1, 2) (shape A) and its complement
/// 3-(C(u+1,2)+1, C(u,2), (u^2-u-4)(u-2)/4) (shape B); such a design can
/// exist only if u = 2 mod 48 with odd p^a || u, a odd, p = 1,3,9,11 mod 16,
/// or u = 14 mod 48 with p = 1,7,9,15 mod 16.
inline NonexistenceVerdict driessen_test(const DesignParams& p) {
  NonexistenceVerdict out{NonexistenceTest::Driessen, Outcome::NotApplicable, {}};
  if (p.t != 3) {
    out.detail = "t != 3";
    return out;
  }
  const auto u = detail::driessen_u_from_v(p.v);
  if (!u) {
    out.detail = "v is not C(u,2)+u+1";
    return out;
  }
  const std::int64_t uu = *u;
  const char* shape = nullptr;
  if (p.k == uu + 1 && p.lambda == 2) shape = "A";
  else if (p.k == uu * (uu - 1) / 2 && 4 * p.lambda == (uu * uu - uu - 4) * (uu - 2)) shape = "B";
  if (!shape) {
    out.detail = "k, lambda do not match u=" + std::to_string(uu);
    return out;
  }
  const bool possible = detail::driessen_case(uu, 2, {1, 3, 9, 11}) || detail::driessen_case(uu, 14, {1, 7, 9, 15});
  out.outcome = possible ? Outcome::Passes : Outcome::RuledOut;
  std::ostringstream os;
  os << "u=" << uu << " shape " << shape << " u mod 48 = " << uu % 48 << (possible ? " : allowed" : " : excluded");
  out.detail = os.str();
  return out;
}

}  // namespace tightrel
