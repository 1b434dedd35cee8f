#pragma once

// Small-integer number theory for the nonexistence tests: factorization,
// squarefree parts, quadratic residues and Legendre's theorem on ternary
// diagonal forms.

#include <array>
#include <cstdint>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace tightrel::nt {

/// Prime factorization of |m| by trial division, primes ascending.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
  if (m == 0) throw std::invalid_argument("factorize: zero");
  std::vector<std::pair<std::int64_t, int>> out;
  std::uint64_t x = static_cast<std::uint64_t>(m < 0 ? -m : m);
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e) out.emplace_back(static_cast<std::int64_t>(p), e);
  }
  if (x > 1) out.emplace_back(static_cast<std::int64_t>(x), 1);
  return out;
}

/// floor(sqrt(m)) for m >= 0.
inline std::int64_t isqrt(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("isqrt: negative");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

inline bool is_perfect_square(std::int64_t m) {
  if (m < 0) return false;
  const auto r = isqrt(m);
  return r * r == m;
}

/// Sign-preserving squarefree part: m = s * k^2 with s squarefree.
inline std::int64_t squarefree_part(std::int64_t m) {
  if (m == 0) throw std::invalid_argument("squarefree_part: zero");
  std::int64_t s = m < 0 ? -1 : 1;
  for (auto [p, e] : factorize(m))
    if (e % 2) s *= p;
  return s;
}

inline bool is_squarefree(std::int64_t m) {
  if (m == 0) return false;
  for (auto [p, e] : factorize(m))
    if (e > 1) return false;
  return true;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  __int128 result = 1, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

/// Inverse of a modulo m (gcd(a, m) = 1, m >= 1).
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair(r, old_r - q * r);
    std::tie(old_s, s) = std::pair(s, old_s - q * s);
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return ((old_s % m) + m) % m;
}

/// Whether x is a square modulo the squarefree modulus m >= 1 (0 counts).
inline bool is_qr_mod_squarefree(std::int64_t x, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("is_qr_mod_squarefree: modulus must be positive");
  for (auto [p, e] : factorize(m)) {
    if (e > 1) throw std::invalid_argument("is_qr_mod_squarefree: modulus not squarefree");
    if (p == 2) continue;
    std::int64_t r = ((x % p) + p) % p;
    if (r != 0 && pow_mod(r, (p - 1) / 2, p) != 1) return false;
  }
  return true;
}

/// Legendre: a x^2 + b y^2 + c z^2 = 0 has a nontrivial integer zero iff
/// a, b, c are not all of one sign and -bc, -ca, -ab are squares modulo
/// |a|, |b|, |c| respectively. Requires squarefree, pairwise coprime,
/// nonzero coefficients.
inline bool legendre_solvable(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (!is_squarefree(a) || !is_squarefree(b) || !is_squarefree(c))
    throw std::invalid_argument("legendre_solvable: coefficients must be nonzero and squarefree");
  if (std::gcd(a, b) != 1 || std::gcd(b, c) != 1 || std::gcd(a, c) != 1)
    throw std::invalid_argument("legendre_solvable: coefficients must be pairwise coprime");
  if ((a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0)) return false;
  return is_qr_mod_squarefree(-b * c, std::llabs(a)) && is_qr_mod_squarefree(-a * c, std::llabs(b)) &&
         is_qr_mod_squarefree(-a * b, std::llabs(c));
}

/// Brings a x^2 + b y^2 + c z^2 to an equivalent squarefree, pairwise
/// coprime diagonal form (same solvability over Q).
inline std::array<std::int64_t, 3> normalize_ternary(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("normalize_ternary: zero coefficient");
  std::array<std::int64_t, 3> f{squarefree_part(a), squarefree_part(b), squarefree_part(c)};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < 3 && !changed; ++i) {
      for (int j = i + 1; j < 3 && !changed; ++j) {
        std::int64_t g = std::gcd(f[i], f[j]);
        if (g == 1) continue;
        // g | f_i, f_j: divide both by g and multiply the third by g.
        const int k = 3 - i - j;
        f[i] /= g;
        f[j] /= g;
        f[k] = squarefree_part(f[k] * g);
        changed = true;
      }
    }
  }
  return f;
}

/// Whether a x^2 + b y^2 + c z^2 = 0 has a nontrivial integer zero, for
/// arbitrary nonzero coefficients.
inline bool ternary_solvable(std::int64_t a, std::int64_t b, std::int64_t c) {
  auto f = normalize_ternary(a, b, c);
  return legendre_solvable(f[0], f[1], f[2]);
}

}  // namespace tightrel::nt
