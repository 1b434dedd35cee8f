#pragma once

// Fixed-width bitset over at most 128 points, the block representation.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightrel {

inline constexpr int kMaxPoints = 128;

class PointSet {
 public:
  constexpr PointSet() = default;

  PointSet(std::initializer_list<int> points) {
    for (int p : points) insert(p);
  }

  static PointSet from_points(std::span<const int> points) {
    PointSet s;
    for (int p : points) s.insert(p);
    return s;
  }

  /// The set {0, ..., n-1}.
  static constexpr PointSet all(int n) {
    PointSet s;
    if (n >= 64) {
      s.words_[0] = ~std::uint64_t{0};
      s.words_[1] = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else {
      s.words_[0] = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    }
    return s;
  }

  void insert(int p) {
    check(p);
    words_[p >> 6] |= std::uint64_t{1} << (p & 63);
  }

  void erase(int p) {
    check(p);
    words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
  }

  constexpr bool contains(int p) const {
    if (p < 0 || p >= kMaxPoints) return false;
    return (words_[p >> 6] >> (p & 63)) & 1u;
  }

  constexpr int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  /// Largest element + 1, or 0 when empty.
  constexpr int span_end() const {
    if (words_[1]) return 128 - std::countl_zero(words_[1]);
    if (words_[0]) return 64 - std::countl_zero(words_[0]);
    return 0;
  }

  constexpr bool is_subset_of(const PointSet& other) const {
    return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
  }

  constexpr int intersection_size(const PointSet& other) const {
    return std::popcount(words_[0] & other.words_[0]) + std::popcount(words_[1] & other.words_[1]);
  }

  friend constexpr PointSet operator&(PointSet a, const PointSet& b) {
    a.words_[0] &= b.words_[0];
    a.words_[1] &= b.words_[1];
    return a;
  }
  friend constexpr PointSet operator|(PointSet a, const PointSet& b) {
    a.words_[0] |= b.words_[0];
    a.words_[1] |= b.words_[1];
    return a;
  }
  friend constexpr PointSet operator^(PointSet a, const PointSet& b) {
    a.words_[0] ^= b.words_[0];
    a.words_[1] ^= b.words_[1];
    return a;
  }

  /// Complement within {0, ..., n-1}.
  constexpr PointSet complement_in(int n) const { return *this ^ all(n); }

  std::vector<int> points() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Smallest element; precondition: non-empty.
  constexpr int front() const {
    return words_[0] ? std::countr_zero(words_[0]) : 64 + std::countr_zero(words_[1]);
  }

  /// Remove point p and shift every larger point down by one.
  PointSet remove_and_shift(int p) const {
    PointSet out;
    for (int q : points()) {
      if (q < p) out.insert(q);
      else if (q > p) out.insert(q - 1);
    }
    return out;
  }

  constexpr bool operator==(const PointSet&) const = default;

  /// Lexicographic order on the ascending element sequence.
  friend constexpr std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
    if (a == b) return std::strong_ordering::equal;
    PointSet diff = a ^ b;
    int m = diff.front();
    // Both sequences agree below m; the one containing m continues with m.
    const PointSet& with = a.contains(m) ? a : b;
    const PointSet& without = a.contains(m) ? b : a;
    // `without` is smaller iff it has no element above m (it is a prefix).
    PointSet above = without & PointSet::all(kMaxPoints).mask_above(m);
    bool without_is_prefix = above.empty();
    bool a_is_with = &with == &a;
    bool a_smaller = without_is_prefix ? !a_is_with : a_is_with;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  constexpr std::uint64_t word(int i) const { return words_[i]; }

 private:
  static void check(int p) {
    if (p < 0 || p >= kMaxPoints)
      throw std::out_of_range("point index " + std::to_string(p) + " outside [0, 128)");
  }

  /// Elements strictly greater than m.
  constexpr PointSet mask_above(int m) const {
    PointSet s = *this;
    PointSet low = all(m + 1);
    s.words_[0] &= ~low.words_[0];
    s.words_[1] &= ~low.words_[1];
    return s;
  }

  std::array<std::uint64_t, 2> words_{};
};

inline std::string to_string(const PointSet& s) {
  std::string out;
  for (int p : s.points()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p);
  }
  return out;
}

}  // namespace tightrel
