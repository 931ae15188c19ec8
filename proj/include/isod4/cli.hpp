#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cohomring.hpp"
#include "obstruct.hpp"
#include "pontsolve.hpp"
#include "report.hpp"
#include "rootsys.hpp"

namespace isod4::cli {

/// Exit codes: 0 all selected checks pass, 1 verification failure, 2 usage error.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct CliConfig {
  std::string command;
  std::string check_id;
  Format format = Format::text;
  std::int64_t window = 20;
  bool no_leaf_sphere = false;
  bool no_sum_zero = false;
  bool no_symmetry = false;
  bool skip_window_checks = false;
  std::string out_path;
  // weyl
  bool weyl_order = false;
  bool weyl_words = false;
  // tables
  std::string which = "all";

  [[nodiscard]] PipelineOptions pipeline() const {
    PipelineOptions o;
    o.solve.leaf_sphere = !no_leaf_sphere;
    o.solve.sum_zero = !no_sum_zero;
    o.solve.symmetry = !no_symmetry;
    o.window_checks = !skip_window_checks;
    o.window = window;
    return o;
  }
};

inline std::string render_roots() {
  const RootSystem rs = build_d4(4);
  std::string s = "positive roots of D4 (simple: a1 a2 a3 a9)\n";
  for (int i = 1; i <= 12; ++i) {
    const bool simple = std::find(kSimpleLabels.begin(), kSimpleLabels.end(), i) != kSimpleLabels.end();
    s += "  a" + std::to_string(i) + (i < 10 ? "  " : " ") + "= " + rs.root(i).str() + (simple ? "  simple" : "") + "\n";
  }
  const auto f = ambient_dims(rs.multiplicity());
  s += "m = " + std::to_string(f.multiplicity) + ", dim M = " + std::to_string(f.dim_M) +
       ", n = " + std::to_string(f.ambient_n) + "\n";
  return s;
}

inline std::string render_weyl(const CliConfig &cfg) {
  const RootSystem rs = build_d4(4);
  const WeylGroup w = weyl_group(rs);
  if (cfg.weyl_order && !cfg.weyl_words)
    return std::to_string(w.order()) + "\n";
  std::string s = "|W| = " + std::to_string(w.order()) + "\n";
  for (int g : kSimpleLabels)
    s += "  s" + std::to_string(g) + ": " + rs.generator(g).action.str("e") + "\n";
  if (cfg.weyl_words)
    for (const auto &e : w.elements())
      s += "  " + word_str(e.word) + " -> " + e.action.str("e") + "\n";
  return s;
}

inline const std::vector<std::string> &table_names() {
  static const std::vector<std::string> names{"all", "cartan", "kronecker", "t-actions", "4-2", "4-3", "solution"};
  return names;
}

inline std::string render_tables(const std::string &which) {
  const RootSystem rs = build_d4(4);
  const Cohomology coh(rs);
  const bool all = which == "all";
  std::string s;
  if (all || which == "cartan")
    s += "Cartan matrix (1,2,3,9): " + rs.simple_cartan_matrix().str() + "\n";
  if (all || which == "kronecker") {
    s += "Kronecker pairing <d_i, b_j>:\n";
    const Matrix &k = coh.kronecker_matrix();
    for (std::size_t i = 0; i < k.rows(); ++i) {
      s += "  ";
      for (std::size_t j = 0; j < k.cols(); ++j) {
        const std::string v = k(i, j).str();
        s += std::string(3 - std::min<std::size_t>(3, v.size()), ' ') + v;
      }
      s += "\n";
    }
  }
  if (all || which == "t-actions") {
    s += "action on t1..t4:\n";
    for (int g : kSimpleLabels)
      s += "  s" + std::to_string(g) + "^*: " + coh.action_on_t(g).str("t") + "\n";
  }
  const Solution sol = solve(coh);
  if (all || which == "4-2") {
    s += "p1(E_ai) at k1 = k2 = k:\n";
    for (std::size_t i = 0; i < 12; ++i)
      s += "  p1(E_a" + std::to_string(i + 1) + ") = " + sol.reduced_classes[i].str(kReducedNames) + "\n";
  }
  if (all || which == "4-3") {
    s += "p1(E_ai) after k3 = -k:\n";
    for (std::size_t i = 6; i < 12; ++i)
      s += "  p1(E_a" + std::to_string(i + 1) +
           ") = " + impose_sum_zero(sol.reduced_classes[i]).str(kReducedNames) + "\n";
  }
  if (all || which == "solution") {
    s += "constraints:\n";
    for (const auto &e : sol.equations)
      s += "  " + e.str() + "    [" + e.source + "]\n";
    if (sol.dimension() == 1) {
      const BundleClasses b = lemma8_classes(coh, sol);
      s += "e(E_a1) = " + b.euler.str() + "\np1(E_a1) = " + b.p1.str() + "\n";
    }
  }
  return s;
}

inline int emit(const CliConfig &cfg, const std::string &text, std::ostream &out, std::ostream &err) {
  out << text;
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      err << "cannot open " << cfg.out_path << " for writing\n";
      return kFailed;
    }
    f << text;
  }
  return kOk;
}

inline int dispatch(const CLI::App &app, const CliConfig &cfg, std::ostream &out, std::ostream &err);

/// Parses arguments and runs one command. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact verification of the D4 / multiplicity-4 isoparametric obstruction"};
  app.require_subcommand(1);
  CliConfig cfg;

  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  auto add_pipeline_flags = [&](CLI::App *sub) {
    sub->add_option("--format", cfg.format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--window", cfg.window, "window N for exhaustive bundle checks (N >= 4)")
        ->check(CLI::Range(std::int64_t{4}, std::int64_t{1000}));
    sub->add_flag("--no-leaf-sphere", cfg.no_leaf_sphere, "diagnostic: drop the leaf-sphere constraint");
    sub->add_flag("--no-sum-zero", cfg.no_sum_zero, "diagnostic: drop the p1(TM) = 0 constraint");
    sub->add_flag("--no-symmetry", cfg.no_symmetry, "diagnostic: drop the symmetry constraint");
    sub->add_flag("--skip-window-checks", cfg.skip_window_checks, "skip the windowed bundle scans");
    sub->add_option("--out", cfg.out_path, "also write the report to this file");
  };

  auto *verify_all = app.add_subcommand("verify-all", "run every check");
  add_pipeline_flags(verify_all);
  auto *verify = app.add_subcommand("verify", "run the pipeline and report one check");
  verify->add_option("check-id", cfg.check_id, "check id")->required();
  add_pipeline_flags(verify);
  auto *report = app.add_subcommand("report", "full report with tables (text) or JSON");
  add_pipeline_flags(report);
  auto *roots = app.add_subcommand("roots", "print the positive roots");
  roots->add_option("--out", cfg.out_path, "also write the output to this file");
  auto *weyl = app.add_subcommand("weyl", "Weyl group summary");
  weyl->add_flag("--order", cfg.weyl_order, "print only the group order");
  weyl->add_flag("--words", cfg.weyl_words, "list every element with its shortlex word");
  weyl->add_option("--out", cfg.out_path, "also write the output to this file");
  auto *tables = app.add_subcommand("tables", "print intermediate tables");
  tables->add_option("--which", cfg.which, "all, cartan, kronecker, t-actions, 4-2, 4-3, solution")
      ->check(CLI::IsMember(table_names()));
  tables->add_option("--out", cfg.out_path, "also write the output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    return dispatch(app, cfg, out, err);
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kFailed;
  }
}

inline int dispatch(const CLI::App &app, const CliConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto *roots = app.get_subcommand("roots");
  const auto *weyl = app.get_subcommand("weyl");
  const auto *tables = app.get_subcommand("tables");
  const auto *verify = app.get_subcommand("verify");
  const auto *report = app.get_subcommand("report");
  if (*roots)
    return emit(cfg, render_roots(), out, err);
  if (*weyl)
    return emit(cfg, render_weyl(cfg), out, err);
  if (*tables)
    return emit(cfg, render_tables(cfg.which), out, err);

  if (*verify && !is_known_check(cfg.check_id)) {
    err << "unknown check id: " << cfg.check_id << "\n";
    return kUsage;
  }

  const VerificationReport rep = theorem_pipeline(cfg.pipeline());
  if (*verify) {
    const CheckRecord *c = rep.find(cfg.check_id);
    if (!c) {
      err << "check " << cfg.check_id << " was not run under these options\n";
      return kFailed;
    }
    VerificationReport one;
    one.checks.push_back(*c);
    one.theorem = rep.theorem;
    const int rc = emit(cfg, render_report(one, cfg.format), out, err);
    return rc != kOk ? rc : (c->status == CheckStatus::pass ? kOk : kFailed);
  }

  std::string text = render_report(rep, cfg.format);
  if (*report && cfg.format == Format::text)
    text += "\n" + render_tables("all");
  const int rc = emit(cfg, text, out, err);
  if (rc != kOk)
    return rc;
  const bool ok = rep.all_passed() && rep.theorem.status == TheoremStatus::obstructed;
  if (!ok)
    err << "verification " << to_string(rep.theorem.status)
        << (rep.theorem.failing_check.empty() ? "" : " at " + rep.theorem.failing_check) << "\n";
  return ok ? kOk : kFailed;
}

} // namespace isod4::cli
