#pragma once

// Exact integer / rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tightrel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Binomial coefficient as int64 for table sizes and ranks; throws on overflow.
inline std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt b = binomial(n, k);
  if (b > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("binomial_u64: C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
  return static_cast<std::uint64_t>(b);
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Formats as `p/q`, always with an explicit denominator.
inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Formats integers without a denominator, everything else as `p/q`.
inline std::string to_compact_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return to_string(q);
}

/// Parses `p/q` or a bare integer `p`.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer in rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer in rational '" + std::string(text) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt p = parse_int(text.substr(0, slash));
  BigInt q = parse_int(text.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator in rational '" + std::string(text) + "'");
  return Rational(p, q);
}

}  // namespace tightrel
