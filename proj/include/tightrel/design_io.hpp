#pragma once

// DESIGN v1 text format:
//   DESIGN v1
//   n=<int> b=<int>
//   <b lines, each a strictly increasing list of 0-based point indices>

#include "design.hpp"
#include "errors.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace tightrel {

namespace io_detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline long long parse_int(std::string_view s, int line, std::string_view what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected integer for " + std::string(what) + ", got '" + std::string(s) + "'", line);
  return v;
}

/// Parses `key=value` tokens of a header line, in the given order.
inline std::vector<std::string_view> header_values(std::string_view text, std::initializer_list<std::string_view> keys,
                                                   int line) {
  std::vector<std::string_view> tokens;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    auto sp = rest.find_first_of(" \t");
    tokens.push_back(rest.substr(0, sp));
    rest = sp == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp));
  }
  if (tokens.size() != keys.size()) throw ParseError("malformed header '" + std::string(text) + "'", line);
  std::vector<std::string_view> values;
  auto key = keys.begin();
  for (auto tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string_view::npos || tok.substr(0, eq) != *key)
      throw ParseError("expected '" + std::string(*key) + "=...' in header, got '" + std::string(tok) + "'", line);
    values.push_back(tok.substr(eq + 1));
    ++key;
  }
  return values;
}

/// A strictly increasing list of point indices, all < n.
inline PointSet parse_block_line(std::string_view text, int n, int line) {
  PointSet block;
  int previous = -1;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    auto sp = rest.find_first_of(" \t");
    auto tok = rest.substr(0, sp);
    long long p = parse_int(tok, line, "point index");
    if (p < 0 || p >= n)
      throw ParseError("point index " + std::to_string(p) + " outside [0, " + std::to_string(n) + ")", line);
    if (p <= previous) throw ParseError("point indices must be strictly increasing", line);
    previous = static_cast<int>(p);
    block.insert(static_cast<int>(p));
    rest = sp == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp));
  }
  return block;
}

inline void write_block_line(std::ostream& out, const PointSet& block) { out << to_string(block) << '\n'; }

inline int parse_point_count(std::string_view s, int line) {
  long long n = parse_int(s, line, "n");
  if (n < 1 || n > kMaxPoints) throw ParseError("n=" + std::to_string(n) + " outside [1, 128]", line);
  return static_cast<int>(n);
}

}  // namespace io_detail

inline Design read_design(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    return true;
  };
  if (!next() || io_detail::trim(line) != "DESIGN v1") throw ParseError("missing 'DESIGN v1' magic line", 1);
  if (!next()) throw ParseError("missing 'n=<int> b=<int>' header", 2);
  auto values = io_detail::header_values(line, {"n", "b"}, lineno);
  int n = io_detail::parse_point_count(values[0], lineno);
  long long b = io_detail::parse_int(values[1], lineno, "b");
  if (b < 0) throw ParseError("negative block count", lineno);
  std::vector<PointSet> blocks;
  blocks.reserve(static_cast<std::size_t>(b));
  for (long long i = 0; i < b; ++i) {
    if (!next())
      throw ParseError("declared b=" + std::to_string(b) + " but found only " + std::to_string(i) + " block lines", lineno);
    blocks.push_back(io_detail::parse_block_line(line, n, lineno));
  }
  while (next())
    if (!io_detail::trim(line).empty())
      throw ParseError("more block lines than the declared b=" + std::to_string(b), lineno);
  return Design(n, std::move(blocks));
}

inline void write_design(std::ostream& out, const Design& d) {
  out << "DESIGN v1\n" << "n=" << d.n() << " b=" << d.block_count() << '\n';
  for (const auto& b : d.blocks()) io_detail::write_block_line(out, b);
}

inline Design parse_design(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_design(in);
}

inline std::string format_design(const Design& d) {
  std::ostringstream out;
  write_design(out, d);
  return out.str();
}

inline Design load_design(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return read_design(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline void save_design(const Design& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_design(out, d);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace tightrel
