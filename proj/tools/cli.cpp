#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "ybx/enumeration.hpp"
#include "ybx/error.hpp"
#include "ybx/folding.hpp"
#include "ybx/parabolic.hpp"
#include "ybx/solution_io.hpp"

namespace ybx::cli {

namespace {

struct Common {
  std::string path;
  std::string inline_doc;
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  int depth = FoldingOptions{}.depth;
};

void add_input(CLI::App* cmd, Common& c) {
  auto* path = cmd->add_option("path", c.path, "Solution document (JSON file)");
  auto* inl = cmd->add_option("--inline", c.inline_doc, "Solution document as a JSON string");
  path->excludes(inl);
  inl->excludes(path);
}

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
}

void add_engine(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "Word reversing step budget per call")
      ->envname("YBX_BUDGET");
  cmd->add_option("--depth", c.depth, "Word length bound for folding checks")
      ->check(CLI::Range(1, 8));
}

SolutionTable load(const Common& c) {
  if (c.path.empty() == c.inline_doc.empty()) {
    throw ParseError("give exactly one of a path or --inline");
  }
  return c.path.empty() ? load_solution_text(c.inline_doc)
                        : load_solution_file(c.path);
}

void emit(std::ostream& out, const Common& c, const Json& j) {
  if (c.format == "text") {
    out << render_text(j);
  } else {
    out << j.dump(2) << "\n";
  }
}

// Non-solutions stop every analysis; the axiom report says why.
bool require_solution(const SolutionTable& s, std::ostream& err) {
  if (is_solution(s)) return true;
  err << "not a non-degenerate symmetric solution: " << check_report(s).dump() << "\n";
  return false;
}

int cmd_check(const Common& c, std::ostream& out) {
  SolutionTable s = load(c);
  Json rep = check_report(s);
  emit(out, c, rep);
  return rep["solution"].get<bool>() ? kPass : kFail;
}

int cmd_analyze(const Common& c, const std::string& lattice_out, std::ostream& out,
                std::ostream& err) {
  SolutionTable s = load(c);
  if (!require_solution(s, err)) return kFail;
  DivisorLattice lat(s, c.budget);
  Json rep = analysis_report(lat);
  if (!lattice_out.empty()) {
    std::ofstream f(lattice_out);
    if (!f) throw ParseError("cannot write " + lattice_out);
    f << lattice_dump(lat).dump(2) << "\n";
  }
  emit(out, c, rep);
  return kPass;
}

int cmd_presentation(const Common& c, std::ostream& out, std::ostream& err) {
  SolutionTable s = load(c);
  if (!require_solution(s, err)) return kFail;
  Json lines = Json::array();
  std::istringstream text(relation_text(presentation_of(s)));
  for (std::string line; std::getline(text, line);) lines.push_back(line);
  if (c.format == "text") {
    for (const Json& l : lines) out << l.get<std::string>() << "\n";
  } else {
    out << Json{{"n", s.size()}, {"relations", lines}}.dump(2) << "\n";
  }
  return kPass;
}

int cmd_fold(const Common& c, bool strong, const std::string& partition,
             std::ostream& out, std::ostream& err) {
  SolutionTable s = load(c);
  std::optional<Partition> p;
  if (!partition.empty()) p = parse_partition(partition, s.size());
  if (!require_solution(s, err)) return kFail;
  DivisorLattice lat(s, c.budget);
  FoldingOptions opts{c.depth};

  std::vector<FoldingReport> found;
  Json rep;
  if (p) {
    FoldingVerdict v = evaluate_folding(lat, *p, opts);
    if (v.report && (!strong || v.report->strong)) {
      found.push_back(std::move(*v.report));
    } else {
      rep["failure"] = v.report ? "folding is not strong" : v.failure;
    }
  } else if (strong) {
    found = find_strong_foldings(lat, opts);
  } else {
    found = find_foldings(lat, std::nullopt, opts);
  }
  Json list = Json::array();
  for (const auto& f : found) list.push_back(folding_json(lat, f));
  rep["count"] = found.size();
  rep["foldings"] = std::move(list);
  emit(out, c, rep);
  return found.empty() ? kFail : kPass;
}

// Runs `check` on one solution; an empty string means pass.
Json verify_one(const SolutionTable& s, const std::string& theorem,
                const Common& c) {
  Json r{{"theorem", theorem}};
  auto fail = [&](const std::string& why) {
    r["passed"] = false;
    r["witness"] = why;
    r["solution"] = solution_document(s);
  };
  if (!is_solution(s)) {
    fail("not a non-degenerate symmetric solution");
    return r;
  }
  try {
    DivisorLattice lat(s, c.budget);
    FoldingOptions fopts{c.depth};
    if (theorem == "a") {
      if (verify_theorem_A(lat)) {
        r["passed"] = true;
        Json inv = Json::array();
        for (AtomSet y : invariant_subsets(s)) inv.push_back(set_json(y));
        r["invariant_subsets"] = std::move(inv);
      } else {
        fail("invariant subsets and standard parabolic supports differ");
      }
    } else if (theorem == "b") {
      TheoremBReport b = theorem_B_report(lat, fopts);
      r["decomposable"] = b.decomposable;
      r["trivial_two_block_strong_folding"] = b.has_trivial_two_block_strong_folding;
      r["product_lattice"] = b.product_lattice_ok;
      if (!b.applicable) {
        r["passed"] = true;
        r["skipped"] = "n <= 2: no partition with 1 < k < n exists";
      } else if (b.holds()) {
        r["passed"] = true;
      } else {
        fail("decomposability and trivial strong folding disagree");
      }
    } else if (theorem == "garside") {
      std::set<AtomSet> all;
      for (const Simple& x : lat.simples()) all.insert(x.x_ell);
      GarsideCheck g = check_garside_generating_set(lat, all);
      r["simples"] = lat.simples().size();
      if (g.ok) {
        r["passed"] = true;
      } else {
        fail("Div(Delta) fails " + g.failed);
      }
    } else {
      PropertyOptions popts;
      popts.folding = fopts;
      PropertyReport rep = run_property_suite(s, popts);
      r["checks"] = rep.results.size();
      Json skipped = Json::array();
      for (const auto& k : rep.skipped()) skipped.push_back(k.name + ": " + k.witness);
      r["skipped"] = std::move(skipped);
      if (rep.all_passed()) {
        r["passed"] = true;
      } else {
        std::string why;
        for (const auto& f : rep.failures()) why += f.name + ": " + f.witness + "; ";
        fail(why);
      }
    }
  } catch (const BudgetExceeded& e) {
    fail(e.what());
  } catch (const TheoremViolation& e) {
    fail(std::string("theorem violation: ") + e.what());
  }
  return r;
}

int cmd_verify(const Common& c, const std::string& theorem,
               const std::string& census, std::ostream& out) {
  std::vector<SolutionTable> inputs;
  if (!census.empty()) {
    if (!c.path.empty() || !c.inline_doc.empty()) {
      throw ParseError("give exactly one of a path, --inline or --census");
    }
    std::ifstream in(census);
    if (!in) throw ParseError("cannot read " + census);
    inputs = read_census(in);
  } else {
    inputs.push_back(load(c));
  }
  Json results = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Json r = verify_one(inputs[i], theorem, c);
    r["index"] = i + 1;
    ok = ok && r["passed"].get<bool>();
    results.push_back(std::move(r));
  }
  emit(out, c, Json{{"theorem", theorem}, {"passed", ok},
                    {"count", inputs.size()}, {"results", std::move(results)}});
  return ok ? kPass : kFail;
}

struct EnumerateArgs {
  int n = 0;
  bool iso = false;
  std::string out_path;
  int jobs = 1;
  int sample = 0;
  std::uint64_t seed = 1;
  bool find_strong_indecomposable = false;
};

int cmd_enumerate(const Common& c, const EnumerateArgs& a, std::ostream& out) {
  SolutionCensus census;
  if (a.sample > 0) {
    if (a.n < 1 || a.n > 8) throw ParseError("--sample supports 1 <= n <= 8");
    census.n = a.n;
    auto found = random_solutions(a.n, a.sample, a.seed);
    census.raw_count = found.size();
    std::set<SolutionTable> canon;
    for (const auto& s : found) canon.insert(canonical_form(s));
    census.iso_count = canon.size();
    census.classes = a.iso ? std::vector<SolutionTable>(canon.begin(), canon.end())
                           : found;
  } else {
    if (a.n < 1 || a.n > kMaxCensusN) {
      throw ParseError("exhaustive enumeration supports 1 <= n <= " +
                       std::to_string(kMaxCensusN) + " (use --sample above)");
    }
    census = enumerate_solutions(a.n, a.iso, a.jobs);
  }

  Json summary{{"n", census.n},
               {"raw_count", census.raw_count},
               {"iso_count", census.iso_count}};
  if (a.find_strong_indecomposable) {
    Json hits = Json::array();
    for (const auto& s : census.classes) {
      if (s.size() < 3 || is_decomposable(s)) continue;
      DivisorLattice lat(s, c.budget);
      if (!find_strong_foldings(lat, FoldingOptions{c.depth}).empty()) {
        hits.push_back(solution_document(s));
      }
    }
    summary["strong_indecomposable"] = std::move(hits);
  }

  if (a.out_path.empty()) {
    write_census(out, census);
    if (a.find_strong_indecomposable) emit(out, c, summary);
  } else {
    std::ofstream f(a.out_path);
    if (!f) throw ParseError("cannot write " + a.out_path);
    write_census(f, census);
    emit(out, c, summary);
  }
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyse set-theoretic solutions of the Yang-Baxter equation "
               "through their Garside structure.", "ybx"};
  app.require_subcommand(1);

  Common check_c, analyze_c, pres_c, fold_c, verify_c, enum_c;
  std::string lattice_out, partition, theorem = "all", census;
  bool strong = false;
  EnumerateArgs ea;

  auto* check = app.add_subcommand("check", "Check the solution axioms and the QYBE");
  add_input(check, check_c);
  add_format(check, check_c);

  auto* analyze = app.add_subcommand(
      "analyze", "Invariant subsets, parabolics, decomposability, Delta classes");
  add_input(analyze, analyze_c);
  add_format(analyze, analyze_c);
  add_engine(analyze, analyze_c);
  analyze->add_option("--lattice-out", lattice_out, "Write the divisor lattice dump here");

  auto* pres = app.add_subcommand("presentation", "Defining relations of the structure monoid");
  add_input(pres, pres_c);
  add_format(pres, pres_c);

  auto* fold = app.add_subcommand("fold", "Foldings of the solution");
  add_input(fold, fold_c);
  add_format(fold, fold_c);
  add_engine(fold, fold_c);
  fold->add_flag("--strong", strong, "Only strong foldings");
  fold->add_option("--partition", partition, "Check one partition, e.g. 1,2,3,4|5");

  auto* verify = app.add_subcommand("verify", "Run a verifier: a, b, garside or all");
  verify->add_option("theorem", theorem, "a | b | garside | all")
      ->required()
      ->check(CLI::IsMember({"a", "b", "garside", "all"}));
  add_input(verify, verify_c);
  add_format(verify, verify_c);
  add_engine(verify, verify_c);
  verify->add_option("--census", census, "Census JSONL file instead of one document");

  auto* enumerate = app.add_subcommand("enumerate", "Census of solutions on n points");
  enumerate->add_option("n", ea.n, "Number of points")->required();
  enumerate->add_flag("--iso", ea.iso, "One canonical representative per class");
  enumerate->add_option("--out", ea.out_path, "Write the census here");
  enumerate->add_option("--jobs", ea.jobs, "Worker threads")->check(CLI::Range(1, 256));
  enumerate->add_option("--sample", ea.sample, "Random spot check with this many draws");
  enumerate->add_option("--seed", ea.seed, "Seed for --sample");
  enumerate->add_flag("--find-strong-indecomposable", ea.find_strong_indecomposable,
                      "List indecomposable solutions with a strong folding");
  add_format(enumerate, enum_c);
  add_engine(enumerate, enum_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*check) return cmd_check(check_c, out);
    if (*analyze) return cmd_analyze(analyze_c, lattice_out, out, err);
    if (*pres) return cmd_presentation(pres_c, out, err);
    if (*fold) return cmd_fold(fold_c, strong, partition, out, err);
    if (*verify) return cmd_verify(verify_c, theorem, census, out);
    if (*enumerate) return cmd_enumerate(enum_c, ea, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace ybx::cli
