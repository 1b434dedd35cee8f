#pragma once

// Frozen reference rows for the feasibility scans.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace reference {

/// Constant-weight rows with r1 + r2 = n: (n, r1, lambda_2 of the r1 shell),
/// Hadamard flag, and existence mark ('E' known to exist or counted,
/// 'X' known not to exist, '?' open).
struct Table1Row {
  int n, r1, lambda2;
  bool star;
  char mark;
};

inline const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows{
    {7, 3, 1, true, 'E'}, {11, 5, 2, true, 'E'}, {13, 4, 1, false, 'E'},
    {15, 7, 3, true, 'E'}, {16, 6, 2, false, 'E'}, {19, 9, 4, true, 'E'},
    {21, 5, 1, false, 'E'}, {22, 7, 2, false, 'X'}, {23, 11, 5, true, 'E'},
    {25, 9, 3, false, 'E'}, {27, 13, 6, true, 'E'}, {29, 8, 2, false, 'X'},
    {31, 6, 1, false, 'E'}, {31, 10, 3, false, 'E'}, {31, 15, 7, true, 'E'},
    {34, 12, 4, false, 'X'}, {35, 17, 8, true, 'E'}, {36, 15, 6, false, 'E'},
    {37, 9, 2, false, 'E'}, {39, 19, 9, true, 'E'}, {40, 13, 4, false, 'E'},
    {41, 16, 6, false, 'E'}, {43, 7, 1, false, 'X'}, {43, 15, 5, false, 'X'},
    {43, 21, 10, true, 'E'}, {45, 12, 3, false, 'E'}, {46, 10, 2, false, 'X'},
    {47, 23, 11, true, 'E'}, {49, 16, 5, false, 'E'}, {51, 25, 12, true, 'E'},
    {52, 18, 6, false, 'X'}, {53, 13, 3, false, 'X'}, {55, 27, 13, true, 'E'},
    {56, 11, 2, false, 'E'}, {57, 8, 1, false, 'E'}, {58, 19, 6, false, 'X'},
    {59, 29, 14, true, 'E'}, {61, 16, 4, false, 'E'}, {61, 21, 7, false, 'X'},
    {61, 25, 10, false, 'E'}, {63, 31, 15, true, 'E'}, {64, 28, 12, false, 'E'},
    {66, 26, 10, false, 'E'}, {67, 12, 2, false, 'X'}, {67, 22, 7, false, 'X'},
    {67, 33, 16, true, 'E'}, {69, 17, 4, false, 'E'}, {70, 24, 8, false, 'E'},
    {71, 15, 3, false, 'E'}, {71, 21, 6, false, 'E'}, {71, 35, 17, true, 'E'},
    {73, 9, 1, false, 'E'}, {75, 37, 18, true, 'E'}, {76, 25, 8, false, 'X'},
    {77, 20, 5, false, 'X'}, {78, 22, 6, false, 'E'}, {79, 13, 2, false, 'E'},
    {79, 27, 9, false, 'E'}, {79, 39, 19, true, 'E'}, {81, 16, 3, false, '?'},
    {83, 41, 20, true, 'E'}, {85, 21, 5, false, 'E'}, {85, 28, 9, false, '?'},
    {85, 36, 15, false, '?'}, {86, 35, 14, false, 'X'}, {87, 43, 21, true, 'E'},
    {88, 30, 10, false, 'X'}, {89, 33, 12, false, 'X'}, {91, 10, 1, false, 'E'},
    {91, 36, 14, false, 'X'}, {91, 45, 22, true, 'E'}, {92, 14, 2, false, 'X'},
    {93, 24, 6, false, 'X'}, {94, 31, 10, false, 'X'}, {95, 47, 23, true, 'E'},
    {96, 20, 4, false, 'E'}, {97, 33, 11, false, '?'}, {99, 49, 24, true, 'E'},
    {100, 45, 20, false, 'E'},  };
  return rows;
}

struct RatioRow {
  int n, r1;
  std::int64_t p, q;  // w_r2 / w_r1 = p / q
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

/// Unequal-weight rows with r1 + r2 = n at n = 37.
inline const std::vector<RatioRow>& table2_n37() {
  static const std::vector<RatioRow> rows{
      {37, 9, 2, 7, {{0, 17}, {2, 10}}},
      {37, 9, 1, 6, {{0, 18}, {1, 12}, {2, 6}}},
      {37, 9, 2, 17, {{0, 19}, {2, 2}}},
      {37, 9, 1, 11, {{0, 20}, {1, 9}}},
  };
  return rows;
}

struct Case3Row {
  int n, r1, r2;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

inline std::vector<std::pair<std::int64_t, std::int64_t>> run(std::int64_t from, std::int64_t to, std::int64_t sum) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t i = from; i <= to; ++i) out.emplace_back(i, sum - i);
  return out;
}

/// Equal-weight rows with r1 + r2 != n, n <= 100.
inline const std::vector<Case3Row>& table3() {
  static const std::vector<Case3Row> rows{
      {31, 6, 16, run(0, 1, 4)},
      {31, 15, 25, run(0, 7, 19)},
      {85, 21, 49, run(0, 5, 17)},
      {85, 36, 64, run(0, 15, 42)},
  };
  return rows;
}

/// Tight relative 4-design parameters for n <= 50, with the constituent
/// 3-design flagged when the row is excluded through Driessen's condition
/// (directly or through the complementary design).
struct Table4Row {
  int n, r1, r2;
  std::int64_t N1, N2, lambda3_1, lambda3_2;
  bool driessen_excluded;
};

inline const std::vector<Table4Row>& t4_table() {
  static const std::vector<Table4Row> rows{
      {11, 5, 6, 33, 33, 2, 4, true},
      {16, 6, 7, 56, 80, 2, 5, true},
      {16, 6, 9, 56, 80, 2, 12, true},
      {16, 7, 10, 80, 56, 5, 12, true},
      {16, 9, 10, 80, 56, 12, 12, true},
      {22, 6, 7, 77, 176, 1, 4, false},
      {22, 6, 15, 77, 176, 1, 52, false},
      {22, 7, 8, 88, 165, 2, 6, true},
      {22, 7, 14, 88, 165, 2, 39, true},
      {22, 7, 10, 176, 77, 4, 6, false},
      {22, 7, 12, 176, 77, 4, 11, false},
      {22, 7, 16, 176, 77, 4, 28, false},
      {22, 8, 15, 165, 88, 6, 26, true},
      {22, 10, 15, 77, 176, 6, 52, false},
      {22, 12, 15, 77, 176, 11, 52, false},
      {22, 14, 15, 165, 88, 39, 26, true},
      {22, 15, 16, 176, 77, 52, 28, false},
      {37, 9, 10, 185, 518, 2, 8, true},
      {37, 9, 27, 185, 518, 2, 195, true},
      {37, 9, 16, 370, 333, 4, 24, false},
      {37, 9, 21, 370, 333, 4, 57, false},
      {37, 10, 28, 518, 185, 8, 78, true},
      {37, 16, 28, 333, 370, 24, 156, false},
      {37, 21, 28, 333, 370, 57, 156, false},
      {37, 27, 28, 518, 185, 195, 78, true},
      {41, 15, 16, 328, 533, 14, 28, false},
      {41, 15, 25, 328, 533, 14, 115, false},
      {41, 16, 26, 533, 328, 28, 80, false},
      {41, 25, 26, 533, 328, 115, 80, false},
      {46, 10, 11, 253, 828, 2, 9, true},
      {46, 10, 35, 253, 828, 2, 357, true},
      {46, 11, 36, 828, 253, 9, 119, true},
      {46, 35, 36, 828, 253, 357, 119, true},
  };
  return rows;
}

/// Unequal-weight rows at n = 22 for the tight relative 4-design candidates.
struct Ratio4Row {
  int r1, r2;
  std::int64_t p, q;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

inline const std::vector<Ratio4Row>& t4_ratio_rows_n22() {
  static const std::vector<Ratio4Row> rows{
      {6, 15, 1, 20, {{0, 36}, {1, 16}}},
      {7, 16, 4, 23, {{0, 24}, {4, 1}}},
      {7, 16, 2, 21, {{0, 28}, {2, 7}}},
      {15, 16, 39, 1, {{0, 20}, {39, 19}}},
      {15, 16, 24, 5, {{0, 26}, {24, 21}, {48, 16}}},
      {15, 16, 26, 7, {{0, 28}, {26, 21}, {52, 14}}},
      {15, 16, 21, 2, {{3, 22}, {24, 20}, {45, 18}}},
      {15, 16, 27, 8, {{3, 28}, {30, 20}}},
      {15, 16, 23, 4, {{5, 24}, {28, 20}, {51, 16}}},
      {15, 16, 31, 12, {{10, 28}, {41, 16}}},
      {15, 16, 22, 3, {{12, 22}, {34, 19}}},
      {15, 16, 33, 14, {{12, 28}, {45, 14}}},
      {15, 16, 29, 10, {{13, 26}, {42, 16}}},
      {15, 16, 20, 1, {{16, 20}, {36, 19}}},
      {15, 16, 32, 13, {{16, 26}, {48, 13}}},
      {15, 16, 25, 6, {{21, 22}, {46, 16}}},
      {15, 16, 28, 9, {{24, 22}, {52, 13}}},
      {15, 16, 5, 24, {{31, 28}, {36, 4}}},
      {15, 16, 4, 23, {{32, 24}, {36, 1}}},
      {15, 16, 2, 21, {{32, 28}, {34, 7}}},
  };
  return rows;
}


}  // namespace reference
