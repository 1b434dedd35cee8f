#pragma once

// RELDESIGN v1 text format:
//   RELDESIGN v1
//   n=<int> t=<int>
//   shell r=<int> w=<p>/<q>
//   <block lines of that shell>
//   shell r=<int> w=<p>/<q>
//   <block lines>
// Shells appear in increasing r order. Blank lines are ignored.

#include "design_io.hpp"
#include "errors.hpp"
#include "hamming.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tightrel {

struct RelDesignFile {
  RelativeCandidate candidate;
  int t = 1;  // strength recorded in the header
};

inline RelDesignFile read_reldesign(std::istream& in, CandidateOptions options = {}) {
  std::string line;
  int lineno = 0;
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    return true;
  };
  if (!next() || io_detail::trim(line) != "RELDESIGN v1") throw ParseError("missing 'RELDESIGN v1' magic line", 1);
  if (!next()) throw ParseError("missing 'n=<int> t=<int>' header", 2);
  auto header = io_detail::header_values(line, {"n", "t"}, lineno);
  const int n = io_detail::parse_point_count(header[0], lineno);
  const long long t = io_detail::parse_int(header[1], lineno, "t");
  if (t < 1 || t > n) throw ParseError("t=" + std::to_string(t) + " outside [1, n]", lineno);

  struct Section {
    int r;
    Rational w;
    int line;
    std::vector<PointSet> blocks;
  };
  std::vector<Section> sections;
  while (next()) {
    auto text = io_detail::trim(line);
    if (text.empty()) continue;
    if (text.rfind("shell", 0) == 0 && (text.size() == 5 || text[5] == ' ' || text[5] == '\t')) {
      auto values = io_detail::header_values(text.substr(5), {"r", "w"}, lineno);
      const long long r = io_detail::parse_int(values[0], lineno, "r");
      if (r < 0 || r > n) throw ParseError("shell r=" + std::to_string(r) + " outside [0, n]", lineno);
      Rational w;
      try {
        w = parse_rational(values[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
      }
      if (w <= 0) throw ParseError("shell weight must be positive", lineno);
      if (!sections.empty() && r <= sections.back().r) throw ParseError("shells must appear in increasing r order", lineno);
      if (sections.size() == 2) throw ParseError("more than two shell sections", lineno);
      sections.push_back({static_cast<int>(r), w, lineno, {}});
      continue;
    }
    if (sections.empty()) throw ParseError("block line before the first 'shell' line", lineno);
    PointSet b = io_detail::parse_block_line(text, n, lineno);
    if (b.size() != sections.back().r)
      throw ParseError("block of size " + std::to_string(b.size()) + " in shell r=" + std::to_string(sections.back().r),
                       lineno);
    sections.back().blocks.push_back(b);
  }
  if (sections.size() != 2) throw ParseError("expected two shell sections, found " + std::to_string(sections.size()), lineno);

  try {
    Shell a{sections[0].r, Design(n, std::move(sections[0].blocks)), sections[0].w};
    Shell b{sections[1].r, Design(n, std::move(sections[1].blocks)), sections[1].w};
    return RelDesignFile{RelativeCandidate(std::move(a), std::move(b), options), static_cast<int>(t)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), sections[0].line);
  }
}

inline void write_reldesign(std::ostream& out, const RelativeCandidate& cand, int t) {
  out << "RELDESIGN v1\n" << "n=" << cand.n() << " t=" << t << '\n';
  for (const auto& sh : cand.shells()) {
    out << "shell r=" << sh.r << " w=" << to_string(sh.weight) << '\n';
    for (const auto& b : sh.design.blocks()) io_detail::write_block_line(out, b);
  }
}

inline RelDesignFile parse_reldesign(std::string_view text, CandidateOptions options = {}) {
  std::istringstream in{std::string(text)};
  return read_reldesign(in, options);
}

inline std::string format_reldesign(const RelativeCandidate& cand, int t) {
  std::ostringstream out;
  write_reldesign(out, cand, t);
  return out.str();
}

inline RelDesignFile load_reldesign(const std::filesystem::path& path, CandidateOptions options = {}) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return read_reldesign(in, options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline void save_reldesign(const RelativeCandidate& cand, int t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_reldesign(out, cand, t);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace tightrel
