#pragma once

// Explicit designs: Paley-Hadamard difference sets and the Witt 4-(23,7,1)
// system from the binary Golay code.

#include "design.hpp"

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace tightrel {

inline bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Nonzero quadratic residues modulo prime p, ascending.
inline std::vector<int> quadratic_residues(int p) {
  std::set<int> qr;
  for (int x = 1; x < p; ++x) qr.insert(static_cast<int>((static_cast<std::int64_t>(x) * x) % p));
  return {qr.begin(), qr.end()};
}

/// Symmetric 2-(q, (q-1)/2, (q-3)/4) design whose blocks are the translates
/// of the quadratic-residue set. Prime q = 3 mod 4 only.
inline Design construct_paley_hadamard(int q) {
  if (!is_prime(q) || q % 4 != 3)
    throw std::invalid_argument("construct_paley_hadamard: q=" + std::to_string(q) + " is not a prime = 3 mod 4");
  if (q > kMaxPoints) throw std::invalid_argument("construct_paley_hadamard: q exceeds 128 points");
  const auto residues = quadratic_residues(q);
  std::vector<PointSet> blocks;
  blocks.reserve(static_cast<std::size_t>(q));
  for (int shift = 0; shift < q; ++shift) {
    PointSet b;
    for (int r : residues) b.insert((r + shift) % q);
    blocks.push_back(b);
  }
  return Design(q, std::move(blocks));
}

namespace gf2 {

// Polynomials over GF(2) packed into a word, bit i = coefficient of x^i.

inline int degree(std::uint64_t a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }

inline std::uint64_t mod(std::uint64_t a, std::uint64_t b) {
  const int db = degree(b);
  while (a != 0 && degree(a) >= db) a ^= b << (degree(a) - db);
  return a;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t r = mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

inline std::uint64_t multiply(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

}  // namespace gf2

/// Generator of the binary quadratic-residue code of length 23: the gcd of
/// sum_{i in QR(23)} x^i with x^23 - 1. Degree 11, so the code is [23,12,7].
inline std::uint64_t golay_generator_polynomial() {
  std::uint64_t residue_poly = 0;
  for (int r : quadratic_residues(23)) residue_poly |= std::uint64_t{1} << r;
  const std::uint64_t x23_minus_1 = (std::uint64_t{1} << 23) | 1u;
  return gf2::gcd(x23_minus_1, residue_poly);
}

/// All 4096 codewords of the cyclic [23,12] Golay code, as 23-bit masks.
inline std::vector<std::uint32_t> golay_codewords() {
  const std::uint64_t g = golay_generator_polynomial();
  const int k = 23 - gf2::degree(g);
  std::vector<std::uint32_t> words;
  words.reserve(std::size_t{1} << k);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m)
    words.push_back(static_cast<std::uint32_t>(gf2::multiply(m, g)));
  return words;
}

/// The 253 weight-7 codeword supports of the Golay code: a 4-(23,7,1) design.
inline Design construct_witt_23() {
  std::vector<PointSet> blocks;
  for (std::uint32_t w : golay_codewords()) {
    if (std::popcount(w) != 7) continue;
    PointSet b;
    for (int i = 0; i < 23; ++i)
      if ((w >> i) & 1u) b.insert(i);
    blocks.push_back(b);
  }
  return Design(23, std::move(blocks));
}

}  // namespace tightrel
