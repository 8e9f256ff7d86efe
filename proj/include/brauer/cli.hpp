#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "brauer/detect.hpp"
#include "brauer/matrix_io.hpp"
#include "brauer/report_json.hpp"
#include "brauer/resolvent.hpp"
#include "brauer/scan.hpp"
#include "brauer/selfcheck.hpp"

namespace brauer {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 2, kExitConsistency = 3, kExitBudget = 4 };

namespace cli_detail {

inline SymMat5 matrix_or_identity(const std::string& path) {
  return path.empty() ? SymMat5::identity() : read_matrix_file(path);
}

inline void require_nonsingular(const SymMat5& a) {
  if (is_zero(a.det())) throw Error(ErrorKind::DegenerateA, "det(A)=0");
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::InvalidInput, "write failed: " + path);
}

inline std::string summary_line(const ScanReport& r) {
  const auto& c = r.counts;
  std::ostringstream s;
  s << to_string(r.config.mode) << " P=" << r.config.height << " total=" << c.total << " disc_zero=" << c.disc_zero
    << " s1=" << c.s1_true << " s2=" << c.s2_true << " candidate=" << c.candidate
    << " generic_trivial=" << c.generic_trivial << " wall=" << format_double(r.wall_seconds) << "s";
  return s.str();
}

inline const ResolventTemplates& builtin_templates() {
  static const ResolventTemplates t = derive_templates();
  return t;
}

}  // namespace cli_detail

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of pencils of quadrics in five variables"};
  app.require_subcommand(1);

  std::string a_path, b_path, out_path, csv_path, templates_path, mode = "sample";
  bool exact = false, force_budget = false, verbose = false;
  long height = 1;
  std::uint64_t samples = 0, seed = 0;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<long> series;

  auto* analyze = app.add_subcommand("analyze", "classify one pencil and print the verdict as JSON");
  analyze->add_option("--A", a_path, "matrix file for A (default identity)");
  analyze->add_option("--B", b_path, "matrix file for B")->required();
  analyze->add_flag("--exact", exact, "also run the exact factorization of f");

  auto* resolvent = app.add_subcommand("resolvent", "print q_0..q_10 of the sum-of-pairs resolvent");
  resolvent->add_option("--A", a_path, "matrix file for A (default identity)");
  resolvent->add_option("--B", b_path, "matrix file for B")->required();

  auto* scan = app.add_subcommand("scan", "census or sample of B in a height box");
  scan->add_option("--A", a_path, "matrix file for A (default identity)");
  scan->add_option("--P", height, "height bound for the entries of B")->check(CLI::NonNegativeNumber);
  scan->add_option("--mode", mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  scan->add_option("--samples", samples, "number of samples in sample mode");
  scan->add_option("--seed", seed, "sampling seed");
  scan->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", out_path, "report file (stdout if omitted)");
  scan->add_flag("--exact", exact, "cross-check every instance against the exact factorization");
  scan->add_flag("--force-budget", force_budget, "run exhaustive scans above the budget");
  scan->add_option("--series", series, "heights for a density series (sample mode)")->delimiter(',');
  scan->add_option("--csv", csv_path, "CSV output for a density series");

  auto* selfcheck = app.add_subcommand("selfcheck", "run the invariant suites");
  selfcheck->add_flag("--verbose", verbose, "list every suite");
  selfcheck->add_option("--templates", templates_path, "use templates from a JSON file instead of the built-in ones");

  auto* templates = app.add_subcommand("templates", "derive the resolvent templates and print them as JSON");
  templates->add_option("--out", out_path, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*analyze || *resolvent) {
      const SymMat5 a = cli_detail::matrix_or_identity(a_path);
      const SymMat5 b = read_matrix_file(b_path);
      cli_detail::require_nonsingular(a);
      const auto& t = cli_detail::builtin_templates();
      if (*analyze) {
        out << verdict_to_json(classify(a, b, t, ClassifyOptions{exact})).dump(2) << '\n';
        return kExitOk;
      }
      const BigInt det_a = a.det();
      const BinaryQuintic f = char_form(a, b);
      const Resolvent10 via_templates = resolvent_of(f, det_a, t);
      const Resolvent10 via_oracle = resolvent_oracle(f, det_a);
      if (!(via_templates == via_oracle)) throw Error(ErrorKind::OracleMismatch, "template and oracle resolvents differ");
      out << resolvent_to_json(via_templates).dump() << '\n';
      return kExitOk;
    }

    if (*scan) {
      ScanConfig cfg;
      cfg.a = cli_detail::matrix_or_identity(a_path);
      cli_detail::require_nonsingular(cfg.a);
      cfg.height = height;
      cfg.mode = mode == "exhaustive" ? ScanMode::Exhaustive : ScanMode::Sample;
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.workers = workers;
      cfg.exact = exact;
      cfg.force_budget = force_budget;
      cfg.budget = scan_budget_from_env();
      const auto& t = cli_detail::builtin_templates();

      if (!series.empty()) {
        const auto start = std::chrono::steady_clock::now();
        const SeriesReport s = density_series(cfg, series, t);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string text = series_to_json(s).dump(2) + "\n";
        if (out_path.empty()) out << text;
        else cli_detail::write_file(out_path, text);
        if (!csv_path.empty()) cli_detail::write_file(csv_path, series_csv(s));
        (out_path.empty() ? err : out) << "series points=" << s.points.size() << " slope=" << format_double(s.slope)
                                       << " stderr=" << format_double(s.slope_stderr)
                                       << " wall=" << format_double(wall) << "s\n";
        return kExitOk;
      }

      const ScanReport r = run_scan(cfg, t);
      const std::string text = report_to_json(r).dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
        err << cli_detail::summary_line(r) << '\n';
      } else {
        cli_detail::write_file(out_path, text);
        out << cli_detail::summary_line(r) << '\n';
      }
      return kExitOk;
    }

    if (*selfcheck) {
      ResolventTemplates active;
      if (templates_path.empty()) {
        active = cli_detail::builtin_templates();
      } else {
        std::ifstream in(templates_path);
        if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + templates_path);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const Json::exception& e) {
          throw Error(ErrorKind::InvalidInput, templates_path + ": " + e.what());
        }
        active = templates_from_json(j);
      }
      const auto results = run_selfcheck(active);
      for (const auto& r : results) {
        if (verbose || !r.passed) {
          std::ostream& os = r.passed ? out : err;
          os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
          if (!r.passed) os << ": " << r.detail;
          os << '\n';
        }
        if (!r.passed) return kExitConsistency;
      }
      if (!verbose) out << "selfcheck: " << results.size() << " suites passed\n";
      return kExitOk;
    }

    if (*templates) {
      const std::string text = templates_to_json(cli_detail::builtin_templates()).dump() + "\n";
      if (out_path.empty()) out << text;
      else cli_detail::write_file(out_path, text);
      return kExitOk;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateA) {
      err << "error: det(A)=0\n";
      return kExitInvalid;
    }
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::BudgetExceeded) return kExitBudget;
    return e.is_consistency_failure() ? kExitConsistency : kExitInvalid;
  }
  return kExitOk;
}

}  // namespace brauer
