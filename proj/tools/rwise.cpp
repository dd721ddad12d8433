// rwise: command-line front end for the r-wise t-intersecting family toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rwise/constructions.hpp"
#include "rwise/cover_hypergraph.hpp"
#include "rwise/covers.hpp"
#include "rwise/errors.hpp"
#include "rwise/formulas.hpp"
#include "rwise/io.hpp"
#include "rwise/predicates.hpp"
#include "rwise/search.hpp"
#include "rwise/verify.hpp"

namespace {

using namespace rwise;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kPrecondition = 3, kExceedance = 4 };

struct Common {
  bool quiet = false;
  unsigned workers = 1;
};

unsigned default_workers() {
  if (const char* env = std::getenv("RWISE_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring RWISE_WORKERS=" << env << "\n";
  }
  return 1;
}

void emit(const Json& report, const Common& common, const std::string& summary) {
  if (common.quiet) {
    std::cout << summary << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

std::string exact_text(const ExactRational& q) { return q.str(); }

// Which parameter ranges of the size comparisons cover these parameters.
Json gate_json(int n, int k, int r, int t) {
  Json g;
  g["n_ge_k4"] = meets_k4_gate(n, k);
  Json thresholds = Json::object();
  for (ThresholdKind kind :
       {ThresholdKind::WideCover, ThresholdKind::NotClique, ThresholdKind::TooLarge, ThresholdKind::TooSmall}) {
    if (kind == ThresholdKind::WideCover && r < 3) continue;
    const ThresholdSpec spec = threshold_n0(r, t, kind);
    const BigInt n_min = threshold_upper(spec, k);
    Json entry;
    entry["c"] = exact_text(spec.c);
    entry["c_exact"] = spec.c_exact;
    entry["d"] = exact_text(spec.d);
    entry["n_min"] = exact_json(n_min);
    entry["holds"] = BigInt(n) >= n_min;
    thresholds[to_string(kind)] = std::move(entry);
  }
  g["thresholds"] = std::move(thresholds);
  return g;
}

struct FamilyArgs {
  std::string in;
  std::optional<int> r;
  std::optional<int> t;
};

struct Loaded {
  FamilyFile file;
  int r = 2;
  int t = 1;
};

Loaded load(const FamilyArgs& a, bool need_r) {
  Loaded l;
  l.file = read_family_file(a.in);
  const auto t = a.t ? a.t : l.file.t;
  const auto r = a.r ? a.r : l.file.r;
  if (!t) throw UsageError("--t is required (not in the file either)");
  if (need_r && !r) throw UsageError("--r is required (not in the file either)");
  l.t = *t;
  l.r = r.value_or(2);
  if (l.t < 1) throw UsageError("t must be >= 1");
  if (l.r < 2) throw UsageError("r must be >= 2");
  return l;
}

void add_family_args(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--in", a.in, "FamilyFile to read")->required();
  cmd->add_option("--r", a.r, "r (defaults to the file's r)");
  cmd->add_option("--t", a.t, "t (defaults to the file's t)");
}

// ---- construct ----

struct ConstructArgs {
  std::string family;
  int n = 0, k = 0, r = 2, t = 1;
  std::optional<int> ell, i;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, const Common& common) {
  Family fam;
  std::optional<int> r_meta = a.r;
  const Params p{a.n, a.k, a.r, a.t};
  if (a.family == "g") {
    fam = build_G(p);
  } else if (a.family == "gprime") {
    fam = build_Gprime(p);
  } else if (a.family == "g-block") {
    if (!a.i) throw UsageError("--i is required for g-block");
    fam = build_G_block(p, *a.i);
  } else if (a.family == "two-block") {
    fam = build_two_block(p);
  } else if (a.family == "trivial") {
    fam = build_trivial(a.n, a.k, a.t);
    r_meta.reset();
  } else if (a.family == "frankl") {
    if (!a.ell) throw UsageError("--ell is required for frankl");
    fam = build_frankl(a.n, a.k, a.t, *a.ell);
    r_meta = 2;
  } else if (a.family == "two-cover") {
    fam = build_two_cover(a.n, a.k, a.t);
    r_meta = 2;
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  const std::string text = serialize_family(fam, r_meta, a.t);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(a.out, text);
    if (!common.quiet) std::cerr << "wrote " << fam.size() << " sets to " << a.out << "\n";
  }
  return kOk;
}

// ---- check / triangles / covers / hypergraph ----

int cmd_check(const FamilyArgs& a, const Common& common) {
  const Loaded l = load(a, false);
  const Family& fam = l.file.family;
  Json j;
  j["n"] = fam.n();
  j["k"] = fam.k();
  j["r"] = l.r;
  j["t"] = l.t;
  j["size"] = fam.size();
  const bool inter = is_r_wise_t_intersecting(fam, l.r, l.t);
  j["intersecting"] = inter;
  j["trivial"] = is_trivial(fam, l.t);
  if (inter) {
    j["maximal"] = is_maximal(fam, l.r, l.t);
  } else {
    j["maximal"] = nullptr;
  }
  if (fam.empty()) {
    j["tau"] = nullptr;
  } else {
    j["tau"] = covering_number(fam, l.t);
  }
  std::string summary = std::string("intersecting=") + (inter ? "true" : "false") +
                        " trivial=" + (j["trivial"].get<bool>() ? "true" : "false");
  emit(j, common, summary);
  return kOk;
}

int cmd_triangles(const FamilyArgs& a, bool list, bool force, const Common& common) {
  const Loaded l = load(a, true);
  const Family& fam = l.file.family;
  if (list) {
    for_each_triangle(
        fam, l.r, l.t, [&](std::span<const Subset> tuple) { std::cout << subsets_json(tuple).dump() << "\n"; }, force);
  }
  const BigInt count = count_triangles(fam, l.r, l.t, {force, common.workers});
  Json j;
  j["n"] = fam.n();
  j["k"] = fam.k();
  j["r"] = l.r;
  j["t"] = l.t;
  j["size"] = fam.size();
  j["forced"] = force;
  j["triangle_count"] = exact_json(count);
  if (l.t <= fam.k() - l.r) {
    const Params p{fam.n(), fam.k(), l.r, l.t};
    j["reference_count"] = exact_json(exact_count_G(p));
    j["gates"] = gate_json(fam.n(), fam.k(), l.r, l.t);
  }
  emit(j, common, count.str());
  return kOk;
}

int cmd_covers(const FamilyArgs& a, bool list, const Common& common) {
  const Loaded l = load(a, false);
  const Family& fam = l.file.family;
  const std::vector<Subset> covers = min_covers(fam, l.t);
  if (list) {
    for (const Subset& c : covers) std::cout << Json(c.elements()).dump() << "\n";
  }
  Json j;
  j["n"] = fam.n();
  j["k"] = fam.k();
  j["t"] = l.t;
  j["tau"] = covers.front().size();
  j["min_cover_count"] = covers.size();
  j["min_covers"] = subsets_json(covers);
  std::string summary = "tau=" + std::to_string(covers.front().size()) + " covers=" + std::to_string(covers.size());
  if (l.r == 2 && is_r_wise_t_intersecting(fam, 2, l.t) && is_maximal(fam, 2, l.t)) {
    const CoverReport rep = classify_cover_family(fam, l.t);
    Json c;
    c["pattern"] = to_string(rep.classification);
    if (rep.classification == CoverPattern::Case3) c["ell"] = rep.ell;
    if (!rep.witness.empty()) {
      c["core"] = rep.core.elements();
      std::vector<int> w(rep.witness.begin() + 1, rep.witness.end());
      c["witness"] = w;
    }
    c["covers_t_intersecting"] = rep.covers_t_intersecting;
    j["classification"] = std::move(c);
    summary += " " + to_string(rep.classification);
    j["gate_n_ge_k4"] = meets_k4_gate(fam.n(), fam.k());
  } else {
    j["classification"] = nullptr;
    j["classification_note"] = "classification needs a maximal t-intersecting family (r = 2)";
  }
  emit(j, common, summary);
  return kOk;
}

std::string claim_kind_text(Claim::Kind kind) {
  switch (kind) {
    case Claim::Kind::ZeroTriangles: return "zero-triangles";
    case Claim::Kind::SandwichedGGp: return "sandwiched";
    case Claim::Kind::FewerThanG: return "fewer-than-G";
    case Claim::Kind::None: return "none";
  }
  return "none";
}

int cmd_hypergraph(const FamilyArgs& a, bool list, const Common& common) {
  const Loaded l = load(a, true);
  const Family& fam = l.file.family;
  const CoverHypergraph hg = build_cover_hypergraph(fam, l.t);
  if (list) {
    for (const Subset& e : hg.edges) std::cout << Json(e.elements()).dump() << "\n";
  }
  const ComponentReport rep = decompose(hg, l.r);
  Json j;
  j["n"] = fam.n();
  j["k"] = fam.k();
  j["r"] = l.r;
  j["t"] = l.t;
  j["tau"] = hg.tau;
  j["edges"] = subsets_json(hg.edges);
  j["edges_pairwise_t"] = hg.edges_pairwise_t;
  Json comps = Json::array();
  for (const Component& c : rep.components) {
    Json cj;
    cj["vertices"] = c.vertices.elements();
    cj["order"] = c.order();
    cj["edge_count"] = c.edges.size();
    cj["is_clique"] = c.is_clique;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  j["verdict"] = to_string(rep.verdict);
  Json warnings = Json::array();
  for (const auto& w : hg.warnings) warnings.push_back(w);
  for (const auto& w : rep.warnings) warnings.push_back(w);
  j["warnings"] = std::move(warnings);
  if (l.t <= fam.k() - l.r) {
    const Params p{fam.n(), fam.k(), l.r, l.t};
    const Claim claim = verdict_consequence(rep, p);
    const ClaimResult res = check_claim(claim, fam, p);
    Json cj;
    cj["kind"] = claim_kind_text(claim.kind);
    cj["description"] = claim.description;
    cj["asserted"] = res.asserted;
    if (res.asserted) {
      cj["holds"] = res.holds;
    } else {
      cj["holds"] = nullptr;
    }
    if (!res.note.empty()) cj["note"] = res.note;
    j["claim"] = std::move(cj);
    j["gates"] = gate_json(fam.n(), fam.k(), l.r, l.t);
  }
  emit(j, common, to_string(rep.verdict));
  return kOk;
}

// ---- formula ----

struct FormulaArgs {
  std::string which;
  std::optional<int> n, k, r, t, cover_case, ell, s;
  std::string kind;
};

int need(const std::optional<int>& v, const char* name) {
  if (!v) throw UsageError(std::string("--") + name + " is required for this formula");
  return *v;
}

int cmd_formula(const FormulaArgs& a, const Common& common) {
  // Short names on the left, descriptive synonyms on the right.
  static const std::map<std::string, std::string> aliases{{"lower-21", "g-lower-bound"},
                                                          {"size-22", "wide-cover-size"},
                                                          {"size-24", "cover-case-size"},
                                                          {"size-42", "level-size"},
                                                          {"floor-41", "pair-floor"}};
  std::string which = a.which;
  if (auto it = aliases.find(which); it != aliases.end()) which = it->second;
  auto params = [&] { return Params{need(a.n, "n"), need(a.k, "k"), need(a.r, "r"), need(a.t, "t")}; };
  std::string out;
  if (which == "exact-count") {
    out = exact_count_G(params()).str();
  } else if (which == "g-lower-bound") {
    out = g_count_lower_bound(params()).str();
  } else if (which == "wide-cover-size") {
    out = wide_cover_size_bound(need(a.n, "n"), need(a.k, "k"), need(a.t, "t")).str();
  } else if (which == "cover-case-size") {
    out = cover_case_size_bound(need(a.n, "n"), need(a.k, "k"), need(a.t, "t"), need(a.cover_case, "case")).str();
  } else if (which == "level-size") {
    out = level_size_bound(need(a.n, "n"), need(a.k, "k"), need(a.t, "t"), need(a.ell, "ell"), need(a.s, "s")).str();
  } else if (which == "pair-floor") {
    out = std::to_string(intersection_floor(need(a.r, "r"), need(a.s, "s"), need(a.t, "t")));
  } else if (which == "threshold") {
    if (a.kind.empty()) throw UsageError("--threshold is required");
    const ThresholdSpec spec = threshold_n0(need(a.r, "r"), need(a.t, "t"), parse_threshold_kind(a.kind));
    Json j;
    j["threshold"] = to_string(spec.kind);
    j["c"] = spec.c.str();
    j["c_exact"] = spec.c_exact;
    j["c_expression"] = spec.c_expression;
    j["d"] = spec.d.str();
    if (a.k) j["n_min"] = exact_json(threshold_upper(spec, *a.k));
    if (common.quiet) {
      std::cout << "c=" << spec.c.str() << " d=" << spec.d.str() << "\n";
    } else {
      std::cout << j.dump(2) << "\n";
    }
    return kOk;
  } else {
    throw UsageError("unknown formula '" + a.which + "'");
  }
  std::cout << out << "\n";
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite = "all";
  VerifyOptions options;
  std::string counterexample = "counterexample.json";
};

int cmd_verify(VerifyArgs a, const Common& common) {
  // Numbered suite names accepted for compatibility with existing scripts.
  static const std::map<std::string, std::string> aliases{{"lemma21", "g-count"},    {"lemma23", "cover-patterns"},
                                                          {"lemma24", "size-bounds"}, {"lemma41", "pair-floor"},
                                                          {"lemma47", "two-cliques"}};
  if (auto it = aliases.find(a.suite); it != aliases.end()) a.suite = it->second;
  a.options.workers = common.workers;
  const std::vector<Suite> suites = parse_suites(a.suite);
  std::uint64_t passed = 0, failed = 0, skipped = 0;
  std::optional<Counterexample> first;
  for (Suite s : suites) {
    const SuiteResult res = run_suite(s, a.options);
    passed += res.passed;
    failed += res.failed;
    skipped += res.skipped;
    if (!first && res.first_failure) first = res.first_failure;
    if (!common.quiet) {
      std::cout << to_string(s) << ": " << res.passed << " passed, " << res.failed << " failed, " << res.skipped
                << " skipped (" << static_cast<long long>(res.seconds * 1000) << " ms)\n";
      if (res.first_failure) {
        std::cout << "  first failure: " << res.first_failure->check << ": " << res.first_failure->detail << "\n";
      }
    }
  }
  if (first) {
    std::string text;
    if (first->family) {
      text = serialize_family(*first->family, first->r ? std::optional<int>(first->r) : std::nullopt,
                              first->t ? std::optional<int>(first->t) : std::nullopt);
    } else {
      Json j;
      j["check"] = first->check;
      j["detail"] = first->detail;
      text = j.dump() + "\n";
    }
    write_text_file(a.counterexample, text);
    std::cerr << "counterexample (" << first->check << ") written to " << a.counterexample << "\n";
  }
  Json summary;
  summary["suite"] = a.suite;
  summary["seed"] = a.options.seed;
  summary["passed"] = passed;
  summary["failed"] = failed;
  summary["skipped"] = skipped;
  summary["ok"] = failed == 0;
  std::cout << summary.dump() << "\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

// ---- search ----

struct SearchArgs {
  int n = 0, k = 0, r = 2, t = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100;
  std::string out;
};

int finish_search(const SearchReport& report, const SearchArgs& a, const Common& common) {
  Json j = report_json(report);
  if (report.params.t <= report.params.k - report.params.r) {
    j["gates"] = gate_json(report.params.n, report.params.k, report.params.r, report.params.t);
  }
  const std::string text = j.dump() + "\n";
  if (!a.out.empty()) write_text_file(a.out, text);
  const std::string summary = "best_count=" + report.best_count.str() + " reference=" + report.reference_count.str() +
                              (report.exceedance ? " EXCEEDANCE" : "");
  if (common.quiet) {
    std::cout << summary << "\n";
  } else if (a.out.empty()) {
    std::cout << text;
  } else {
    std::cout << summary << "\n";
  }
  return report.exceedance ? kExceedance : kOk;
}

int cmd_exhaustive(const SearchArgs& a, const Common& common) {
  return finish_search(exhaustive_search(a.n, a.k, a.t), a, common);
}

int cmd_stochastic(const SearchArgs& a, const Common& common) {
  const Params p{a.n, a.k, a.r, a.t};
  return finish_search(stochastic_search(p, a.seed, a.budget, common.workers), a, common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on r-wise t-intersecting uniform set families"};
  app.require_subcommand(1);
  Common common;
  common.workers = default_workers();
  app.add_flag("--quiet,-q", common.quiet, "Summary-only output");
  app.add_option("--workers", common.workers, "Worker threads (default: $RWISE_WORKERS or 1)")
      ->check(CLI::Range(1u, 256u));
  // Accept global flags after the subcommand as well.
  app.fallthrough();

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a named family and write it as a FamilyFile");
  c->add_option("--family", construct.family, "g|gprime|g-block|trivial|frankl|two-block|two-cover")->required();
  c->add_option("--n", construct.n)->required();
  c->add_option("--k", construct.k)->required();
  c->add_option("--r", construct.r, "default 2");
  c->add_option("--t", construct.t, "default 1");
  c->add_option("--ell", construct.ell);
  c->add_option("--i", construct.i);
  c->add_option("--out", construct.out, "Output path (default: standard output)");

  FamilyArgs check_args, tri_args, cov_args, hyp_args;
  bool list = false, force = false;
  auto* ck = app.add_subcommand("check", "Intersection, triviality, maximality and covering number");
  add_family_args(ck, check_args);
  auto* tr = app.add_subcommand("triangles", "Count (r+1,t)-triangles");
  add_family_args(tr, tri_args);
  tr->add_flag("--list", list, "Print every triangle");
  tr->add_flag("--force", force, "Count even when the family is not r-wise t-intersecting");
  auto* cv = app.add_subcommand("covers", "Minimum t-covers and their classification");
  add_family_args(cv, cov_args);
  cv->add_flag("--list", list, "Print every minimum cover");
  auto* hy = app.add_subcommand("hypergraph", "Cover hypergraph components and verdict");
  add_family_args(hy, hyp_args);
  hy->add_flag("--list", list, "Print every edge");

  FormulaArgs formula;
  auto* fo = app.add_subcommand("formula", "Evaluate a closed form or bound exactly");
  fo->add_option("--which", formula.which,
                 "exact-count|lower-21|size-22|size-24|size-42|floor-41|threshold (or the descriptive names "
                 "g-lower-bound, wide-cover-size, cover-case-size, level-size, pair-floor)")
      ->required();
  fo->add_option("--n", formula.n);
  fo->add_option("--k", formula.k);
  fo->add_option("--r", formula.r);
  fo->add_option("--t", formula.t);
  fo->add_option("--case", formula.cover_case);
  fo->add_option("--ell", formula.ell);
  fo->add_option("--s", formula.s);
  fo->add_option("--lemma,--threshold", formula.kind, "4.3|4.4|4.5|4.6 or wide-cover|not-clique|too-large|too-small");

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify", "Run verification suites");
  ve->add_option("--suite", verify.suite,
                 "oracle|g-count|cover-patterns|size-bounds|pair-floor|two-cliques|hypergraph|all "
                 "(also lemma21|lemma23|lemma24|lemma41|lemma47)");
  ve->add_option("--max-n", verify.options.max_n);
  ve->add_option("--max-k", verify.options.max_k);
  ve->add_option("--seed", verify.options.seed);
  ve->add_option("--samples", verify.options.samples, "Random families per randomized check (0: suite default)");
  ve->add_option("--counterexample", verify.counterexample, "Where to write the first counterexample");

  SearchArgs ex_args, st_args;
  auto* se = app.add_subcommand("search", "Search for triangle-rich maximal families");
  se->require_subcommand(1);
  auto* ex = se->add_subcommand("exhaustive", "All maximal t-intersecting families (r = 2), up to isomorphism");
  ex->add_option("--n", ex_args.n)->required();
  ex->add_option("--k", ex_args.k)->required();
  ex->add_option("--t", ex_args.t)->required();
  ex->add_option("--r", ex_args.r, "must be 2")->check(CLI::IsMember({2}));
  ex->add_option("--out", ex_args.out);
  auto* st = se->add_subcommand("stochastic", "Seeded random saturation");
  st->add_option("--n", st_args.n)->required();
  st->add_option("--k", st_args.k)->required();
  st->add_option("--r", st_args.r)->required();
  st->add_option("--t", st_args.t)->required();
  st->add_option("--seed", st_args.seed);
  st->add_option("--budget", st_args.budget);
  st->add_option("--out", st_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c->parsed()) return cmd_construct(construct, common);
    if (ck->parsed()) return cmd_check(check_args, common);
    if (tr->parsed()) return cmd_triangles(tri_args, list, force, common);
    if (cv->parsed()) return cmd_covers(cov_args, list, common);
    if (hy->parsed()) return cmd_hypergraph(hyp_args, list, common);
    if (fo->parsed()) return cmd_formula(formula, common);
    if (ve->parsed()) return cmd_verify(verify, common);
    if (ex->parsed()) return cmd_exhaustive(ex_args, common);
    if (st->parsed()) return cmd_stochastic(st_args, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
