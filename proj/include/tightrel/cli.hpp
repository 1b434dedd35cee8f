#pragma once

// Command-line front end. Every verb delegates to a library operation.
//
// Exit codes: 0 success / true, 1 false / ruled out, 2 usage error,
// 3 I/O or parse error.

#include "constructions.hpp"
#include "design.hpp"
#include "design_io.hpp"
#include "errors.hpp"
#include "feasibility.hpp"
#include "hamming.hpp"
#include "lambda_profile.hpp"
#include "nonexistence.hpp"
#include "parallel.hpp"
#include "relative.hpp"
#include "reldesign_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tightrel::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kIoError = 3 };

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
std::string join(const std::vector<T>& values, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

inline std::vector<long long> parse_int_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    auto tok = io_detail::trim(rest.substr(0, comma));
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw UsageError(std::string("bad ") + what + " '" + text + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

inline std::string oracle_witness_text(const OracleWitness& w) {
  return "s=" + std::to_string(w.s) + " coords={" + join(w.coordinates, " ") + "} lhs=" + to_string(w.shell_average) +
         " rhs=" + to_string(w.weighted_sum);
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative t-designs on two shells of the binary Hamming scheme", "tightrel"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every verb");

  unsigned threads = default_threads();
  std::string out_path;
  auto add_common = [&](CLI::App* sub, bool with_out) {
    sub->add_option("--threads", threads, "Worker threads for scans")->check(CLI::PositiveNumber);
    if (with_out) sub->add_option("--out", out_path, "Write the report to a file instead of stdout");
  };

  // Output sink: stdout unless --out is given.
  std::ostringstream buffer;
  int status = kOk;
  std::function<void()> action;

  // verify
  std::string design_path;
  int t = 0;
  auto* verify = app.add_subcommand("verify", "Check whether a design is a t-design");
  verify->add_option("design", design_path, "DESIGN v1 file")->required();
  verify->add_option("--t", t, "Strength")->required()->check(CLI::NonNegativeNumber);
  add_common(verify, true);
  verify->callback([&] {
    action = [&] {
      const Design d = load_design(design_path);
      auto check = is_t_design(d, t);
      buffer << "t-design: " << (check.holds ? "true" : "false");
      if (check.holds) buffer << "  lambda=[" << detail::join(check.lambdas) << "]";
      buffer << '\n';
      status = check.holds ? kOk : kFalse;
    };
  });

  // check-relative
  std::string rel_path;
  bool want_tight = false, allow_trivial = false;
  int rel_t = 0;
  auto* check = app.add_subcommand("check-relative", "Check a two-shell candidate (RELDESIGN v1) as a relative t-design");
  check->add_option("candidate", rel_path, "RELDESIGN v1 file")->required();
  check->add_option("--t", rel_t, "Strength (default: the file header)")->check(CLI::PositiveNumber);
  check->add_flag("--tight", want_tight, "Also require the tight size");
  check->add_flag("--allow-trivial", allow_trivial, "Accept shells outside 2 <= r1 < r2 <= n-2");
  add_common(check, true);
  check->callback([&] {
    action = [&] {
      const auto file = load_reldesign(rel_path, CandidateOptions{allow_trivial});
      const auto& cand = file.candidate;
      const int strength = rel_t > 0 ? rel_t : file.t;
      buffer << "n=" << cand.n() << " shells=(" << cand.shell(0).r << "," << cand.shell(1).r << ") sizes=("
             << cand.shell(0).size() << "," << cand.shell(1).size() << ") weights=(" << to_string(cand.shell(0).weight)
             << "," << to_string(cand.shell(1).weight) << ") t=" << strength << '\n';
      const auto oracle = relative_design_oracle(cand, strength);
      buffer << "oracle: " << (oracle.holds ? "true" : "false");
      if (oracle.witness) buffer << "  witness " << detail::oracle_witness_text(*oracle.witness);
      buffer << '\n';
      const auto crit = check_via_thm34(cand, strength);
      buffer << "t-subset criterion: " << (crit.holds ? "true" : "false") << "  rhs=" << to_string(crit.rhs);
      if (crit.shell_not_design) buffer << "  shell r=" << cand.shell(*crit.shell_not_design).r << " is not a (t-1)-design";
      if (crit.failing_subset)
        buffer << "  subset={" << detail::join(*crit.failing_subset, " ") << "} value=" << to_string(crit.failing_value);
      buffer << '\n';
      bool ok = oracle.holds;
      if (want_tight) {
        const auto bound = tight_size(strength, cand.n());
        const bool tight = is_tight(cand, strength);
        buffer << "tight: " << (tight ? "true" : "false") << "  size=" << cand.total_size() << " bound=" << bound << '\n';
        ok = ok && tight;
      }
      status = ok ? kOk : kFalse;
    };
  });

  // lambda-seq
  auto* lseq = app.add_subcommand("lambda-seq", "Print the lambda_t-sequence of a design");
  lseq->add_option("design", design_path, "DESIGN v1 file")->required();
  lseq->add_option("--t", t, "Subset size")->required()->check(CLI::NonNegativeNumber);
  add_common(lseq, true);
  lseq->callback([&] {
    action = [&] { buffer << lambda_sequence(load_design(design_path), t).to_string() << '\n'; };
  });

  // scan-3 / scan-4
  int max_n = 0;
  std::string cases_text = "1,2,3,4";
  auto* scan3 = app.add_subcommand("scan-3", "Feasible parameters of tight relative 3-designs (TSV)");
  scan3->add_option("--max-n", max_n, "Largest n")->required();
  scan3->add_option("--cases", cases_text, "Comma-separated subset of 1,2,3,4");
  add_common(scan3, true);
  scan3->callback([&] {
    action = [&] {
      std::set<int> cases;
      for (auto c : detail::parse_int_list(cases_text, "case list")) cases.insert(static_cast<int>(c));
      auto rows = scan_relative3(max_n, cases, threads);
      annotate_existence(rows);
      write_rows_tsv(buffer, rows);
    };
  });
  auto* scan4 = app.add_subcommand("scan-4", "Feasible parameters of tight relative 4-designs (TSV)");
  scan4->add_option("--max-n", max_n, "Largest n")->required();
  add_common(scan4, true);
  scan4->callback([&] {
    action = [&] {
      auto rows = scan_relative4(max_n, threads);
      annotate_existence(rows);
      write_rows_tsv(buffer, rows);
    };
  });

  // nonexist
  std::string params_text;
  auto* nonexist = app.add_subcommand("nonexist", "Apply the square, BRC and Driessen tests to a parameter set");
  nonexist->add_option("--params", params_text, "v,k,lambda[,t] (t defaults to 2)")->required();
  add_common(nonexist, true);
  nonexist->callback([&] {
    action = [&] {
      auto v = detail::parse_int_list(params_text, "parameter list");
      if (v.size() != 3 && v.size() != 4) throw detail::UsageError("--params expects v,k,lambda[,t]");
      DesignParams p{v[0], v[1], v[2], v.size() == 4 ? static_cast<int>(v[3]) : 2};
      p.validate();
      std::vector<NonexistenceVerdict> verdicts;
      if (p.t == 2) verdicts = {symmetric_square_test(p), brc_test(p)};
      else verdicts = {driessen_test(p)};
      buffer << p.to_string() << '\n';
      bool ruled_out = false;
      for (const auto& verdict : verdicts) {
        buffer << to_string(verdict.test) << ": " << to_string(verdict.outcome) << "  " << verdict.detail << '\n';
        ruled_out = ruled_out || verdict.outcome == Outcome::RuledOut;
      }
      status = ruled_out ? kFalse : kOk;
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Build a design (DESIGN v1 output)");
  construct->require_subcommand(1);
  add_common(construct, true);
  construct->fallthrough();
  auto emit = [&](const Design& d) { write_design(buffer, d); };
  construct->add_subcommand("fano", "The Fano plane (Paley q=7)")->callback([&] {
    action = [&] { emit(construct_paley_hadamard(7)); };
  });
  int q = 0;
  auto* paley = construct->add_subcommand("paley", "Paley-Hadamard 2-(q,(q-1)/2,(q-3)/4), prime q = 3 mod 4");
  paley->add_option("q", q, "Prime q")->required();
  paley->callback([&] { action = [&] { emit(construct_paley_hadamard(q)); }; });
  construct->add_subcommand("witt23", "The 4-(23,7,1) design from the binary Golay code")->callback([&] {
    action = [&] { emit(construct_witt_23()); };
  });
  auto* comp = construct->add_subcommand("complement", "Complementary design");
  comp->add_option("design", design_path)->required();
  comp->callback([&] { action = [&] { emit(complement(load_design(design_path))); }; });
  int point = 0;
  auto* der = construct->add_subcommand("derived", "Blocks through a point, point removed");
  der->add_option("design", design_path)->required();
  der->add_option("point", point)->required();
  der->callback([&] { action = [&] { emit(derived(load_design(design_path), point)); }; });
  auto* res = construct->add_subcommand("residual", "Blocks avoiding a point, point removed");
  res->add_option("design", design_path)->required();
  res->add_option("point", point)->required();
  res->callback([&] { action = [&] { emit(residual(load_design(design_path), point)); }; });
  std::string second_path;
  auto* ext = construct->add_subcommand("extend", "Blocks of A gain a new point n; blocks of B are kept");
  ext->add_option("a", design_path, "Design with block size r")->required();
  ext->add_option("b", second_path, "Design with block size r+1")->required();
  ext->callback([&] { action = [&] { emit(extend_pair(load_design(design_path), load_design(second_path))); }; });

  // transform
  auto* transform = app.add_subcommand("transform", "Relabel designs or assemble two-shell candidates");
  transform->require_subcommand(1);
  add_common(transform, true);
  transform->fallthrough();
  int header_t = 0;
  auto* pair = transform->add_subcommand("pair", "A design and its complement on two shells (RELDESIGN v1)");
  pair->add_option("design", design_path)->required();
  pair->add_option("--t", header_t, "Strength written to the header (default 2e+1 when the design is a 2e-design)");
  pair->callback([&] {
    action = [&] {
      const Design d = load_design(design_path);
      const auto cand = complementary_pair(d, CandidateOptions{allow_trivial});
      int strength = header_t;
      if (strength <= 0) {
        strength = 1;
        const int r = cand.shell(0).r;
        for (int e = 1; 2 * e <= r; ++e)
          if (is_t_design(d, 2 * e).holds) strength = 2 * e + 1;
      }
      write_reldesign(buffer, cand, strength);
    };
  });
  std::string weights_text = "1,1";
  auto* uni = transform->add_subcommand("union", "Two uniform designs as the shells of one candidate (RELDESIGN v1)");
  uni->add_option("a", design_path)->required();
  uni->add_option("b", second_path)->required();
  uni->add_option("--weights", weights_text, "w_a,w_b as rationals (default 1,1)");
  int union_t = 1;
  uni->add_option("--t", union_t, "Strength written to the header (default 1)");
  uni->add_flag("--allow-trivial", allow_trivial, "Accept shells outside 2 <= r1 < r2 <= n-2");
  uni->callback([&] {
    action = [&] {
      const Design a = load_design(design_path), b = load_design(second_path);
      auto comma = weights_text.find(',');
      if (comma == std::string::npos) throw detail::UsageError("--weights expects w_a,w_b");
      const Rational wa = parse_rational(weights_text.substr(0, comma));
      const Rational wb = parse_rational(weights_text.substr(comma + 1));
      auto ra = a.uniform_block_size(), rb = b.uniform_block_size();
      if (!ra || !rb) throw detail::UsageError("both designs need a uniform block size");
      RelativeCandidate cand(Shell{*ra, a, wa}, Shell{*rb, b, wb}, CandidateOptions{allow_trivial});
      write_reldesign(buffer, cand, union_t);
    };
  });
  std::string perm_text;
  auto* perm = transform->add_subcommand("permute", "Relabel points: point i becomes perm[i]");
  perm->add_option("design", design_path)->required();
  perm->add_option("perm", perm_text, "Comma-separated image of 0..n-1")->required();
  perm->callback([&] {
    action = [&] {
      std::vector<int> images;
      for (auto v : detail::parse_int_list(perm_text, "permutation")) images.push_back(static_cast<int>(v));
      emit(permuted(load_design(design_path), images));
    };
  });

  // conjecture2
  std::string corpus_dir;
  int seq_t = 3;
  auto* conj = app.add_subcommand("conjecture2", "Pairs of different designs with equal lambda_t-sequences (TSV)");
  conj->add_option("corpus", corpus_dir, "Directory of DESIGN v1 files")->required();
  conj->add_option("--t", seq_t, "Subset size (default 3)");
  add_common(conj, true);
  conj->callback([&] {
    action = [&] {
      namespace fs = std::filesystem;
      if (!fs::is_directory(corpus_dir)) throw IoError("'" + corpus_dir + "' is not a directory");
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      std::vector<Design> designs;
      for (const auto& f : files) designs.push_back(load_design(f));
      buffer << "design_a\tdesign_b\n";
      for (auto [i, j] : conjecture2_scan(designs, seq_t, threads))
        buffer << files[i].filename().string() << '\t' << files[j].filename().string() << '\n';
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!action) throw detail::UsageError("no action selected");
    action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kIoError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path);
    if (!file || !(file << buffer.str())) {
      err << "i/o error: cannot write '" << out_path << "'\n";
      return kIoError;
    }
  }
  return status;
}

}  // namespace tightrel::cli
