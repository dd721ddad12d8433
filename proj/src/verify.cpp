#include "rwise/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>

#include "rwise/constructions.hpp"
#include "rwise/cover_hypergraph.hpp"
#include "rwise/covers.hpp"
#include "rwise/errors.hpp"
#include "rwise/formulas.hpp"
#include "rwise/naive.hpp"
#include "rwise/predicates.hpp"
#include "rwise/random.hpp"

namespace rwise {

namespace {

class Tally {
 public:
  explicit Tally(SuiteResult& result) : result_(result) {}

  bool check(bool ok, const std::string& check, const std::string& detail, const Family* fam = nullptr, int r = 0,
             int t = 0) {
    if (ok) {
      ++result_.passed;
      return true;
    }
    ++result_.failed;
    if (!result_.first_failure) {
      Counterexample ce;
      ce.check = check;
      ce.detail = detail;
      if (fam) ce.family = *fam;
      ce.r = r;
      ce.t = t;
      result_.first_failure = std::move(ce);
    }
    return false;
  }

  void skip() { ++result_.skipped; }

  // Runs body; an exception counts as a failed check.
  void guarded(const std::string& check, const Family* fam, int r, int t, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      this->check(false, check, std::string("unexpected exception: ") + e.what(), fam, r, t);
    }
  }

 private:
  SuiteResult& result_;
};

std::string params_text(int n, int k, int r, int t) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r) + " t=" + std::to_string(t);
}

naive::SetList to_naive(const Family& fam) {
  naive::SetList out;
  for (const Subset& s : fam) out.push_back(s.elements());
  return out;
}

naive::SetList to_naive(std::span<const Subset> sets) {
  naive::SetList out;
  for (const Subset& s : sets) out.push_back(s.elements());
  std::sort(out.begin(), out.end());
  return out;
}

int below(std::mt19937_64& rng, int bound) { return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(bound))); }

// Random inclusive integer in [lo, hi].
int between(std::mt19937_64& rng, int lo, int hi) { return lo + below(rng, hi - lo + 1); }

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n; i > 1; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(between(rng, 1, i))]);
  return perm;
}

// A maximal r-wise t-intersecting family: a few compatible k-sets drawn from a
// small window of [n] and scattered by a random relabeling, then saturated.
// The window keeps the seeds overlapping, which gives non-star families.
Family random_saturated(std::mt19937_64& rng, int n, int k, int r, int t) {
  const int window = std::min(n, between(rng, k + 1, std::max(k + 1, std::min(n, 2 * k + 1))));
  const int wanted = between(rng, 1, r + 2);
  std::vector<Subset> seeds;
  for (int attempt = 0; attempt < 8 * wanted && static_cast<int>(seeds.size()) < wanted; ++attempt) {
    const Subset c = random_k_subset(rng, window, k);
    if (std::find(seeds.begin(), seeds.end(), c) != seeds.end()) continue;
    if (can_extend(seeds, c, r, t)) seeds.push_back(c);
  }
  const Family scattered = Family(n, k, std::move(seeds)).relabeled(random_perm(rng, n));
  return saturate(scattered, r, t);
}

int samples_or(const VerifyOptions& o, int fallback) { return o.samples > 0 ? o.samples : fallback; }

// Members outside the core meet it in exactly t-1 elements.
bool core_clause_holds(const Family& fam, const Subset& core, int t) {
  for (const Subset& f : fam) {
    if (core.is_subset_of(f)) continue;
    if (intersection_size(f, core) != t - 1) return false;
  }
  return true;
}

void oracle_suite(Tally& tally, const VerifyOptions& o, std::mt19937_64& rng) {
  for (int n = 2; n <= o.max_n; ++n) {
    for (int k = 1; k <= std::min(o.max_k, n); ++k) {
      for (int r = 2; r <= 3; ++r) {
        for (int t = 1; t <= k - r; ++t) {
          const Params p{n, k, r, t};
          const Family g = build_G(p);
          tally.guarded("closed-form count", &g, r, t, [&] {
            const BigInt counted = count_triangles(g, r, t, {false, o.workers});
            const BigInt formula = exact_count_G(p);
            tally.check(counted == formula, "closed-form count",
                        params_text(n, k, r, t) + ": formula " + formula.str() + " vs enumerated " + counted.str(), &g, r,
                        t);
            if (g.size() <= 24) {
              const auto slow = naive::count_triangles(to_naive(g), r, t);
              tally.check(BigInt(slow) == counted, "naive count of G",
                          params_text(n, k, r, t) + ": naive " + std::to_string(slow) + " vs " + counted.str(), &g, r,
                          t);
            }
          });
        }
      }
    }
  }

  const int samples = samples_or(o, 150);
  const int top_n = std::max(4, std::min(o.max_n, 8));
  for (int i = 0; i < samples; ++i) {
    const int n = between(rng, 4, top_n);
    const int k = between(rng, 2, std::max(2, std::min(o.max_k, n - 1)));
    const int r = between(rng, 2, 3);
    const int t = between(rng, 1, 2);
    const int m = between(rng, 2, 10);
    std::vector<Subset> members;
    for (int j = 0; j < m; ++j) {
      const Subset c = random_k_subset(rng, n, k);
      if (std::find(members.begin(), members.end(), c) == members.end()) members.push_back(c);
    }
    const Family fam(n, k, std::move(members));
    const auto slow = to_naive(fam);
    const std::string where = params_text(n, k, r, t);
    tally.guarded("random family vs naive", &fam, r, t, [&] {
      const bool inter = is_r_wise_t_intersecting(fam, r, t);
      tally.check(inter == naive::intersecting(slow, r, t), "intersecting predicate", where, &fam, r, t);
      const BigInt forced = count_triangles(fam, r, t, {true, 1});
      tally.check(forced == BigInt(naive::count_triangles(slow, r, t)), "forced triangle count", where, &fam, r, t);
      tally.check(covering_number(fam, t) == naive::covering_number(slow, n, t), "covering number", where, &fam, r, t);
      tally.check(to_naive(min_covers(fam, t)) == naive::min_covers(slow, n, t), "minimum covers", where, &fam, r, t);
      if (inter) {
        tally.check(is_maximal(fam, r, t) == naive::maximal(slow, n, k, r, t), "maximality", where, &fam, r, t);
      }
    });

    std::vector<Subset> seeds;
    for (const Subset& s : fam) {
      if (can_extend(seeds, s, r, t)) seeds.push_back(s);
    }
    const Family base(n, k, seeds);
    tally.guarded("saturation", &base, r, t, [&] {
      const Family sat = saturate(base, r, t);
      bool keeps = true;
      for (const Subset& s : base) keeps = keeps && sat.contains(s);
      tally.check(keeps, "saturation keeps seeds", where, &base, r, t);
      const auto sat_slow = to_naive(sat);
      tally.check(naive::intersecting(sat_slow, r, t), "saturation stays intersecting", where, &sat, r, t);
      if (sat.size() <= 30) {
        tally.check(naive::maximal(sat_slow, n, k, r, t), "saturation is maximal", where, &sat, r, t);
      } else {
        tally.skip();
      }
    });
  }
}

void g_count_suite(Tally& tally, const VerifyOptions& o) {
  struct Rtk {
    int r, t, k;
  };
  for (const Rtk& x : {Rtk{2, 1, 3}, Rtk{2, 2, 4}, Rtk{3, 1, 4}, Rtk{3, 2, 5}, Rtk{2, 1, 4}, Rtk{2, 3, 5}, Rtk{3, 1, 5}}) {
    const long long k4 = static_cast<long long>(x.k) * x.k * x.k * x.k;
    for (long long n : {k4, k4 + 1, 2 * k4}) {
      if (n > kMaxGround) continue;
      const Params p{static_cast<int>(n), x.k, x.r, x.t};
      tally.check(meets_k4_gate(n, x.k), "k^4 gate", params_text(p.n, p.k, p.r, p.t));
      const BigInt exact = exact_count_G(p);
      const ExactRational bound = g_count_lower_bound(p);
      tally.check(ExactRational(exact) >= bound, "lower bound on N(G)",
                  params_text(p.n, p.k, p.r, p.t) + ": " + exact.str() + " < " + bound.str(), nullptr, p.r, p.t);
    }
  }

  for (int n = 2; n <= o.max_n; ++n) {
    for (int k = 1; k <= std::min(o.max_k, n); ++k) {
      for (int r = 2; r <= 3; ++r) {
        for (int t = 1; t <= k - r; ++t) {
          const Params p{n, k, r, t};
          const Family g = build_G(p);
          const Family gp = build_Gprime(p);
          const std::string where = params_text(n, k, r, t);
          tally.guarded("G' vs G", &gp, r, t, [&] {
            bool inside = true;
            for (const Subset& s : g) inside = inside && gp.contains(s);
            tally.check(inside, "G inside G'", where, &gp, r, t);
            tally.check(is_r_wise_t_intersecting(gp, r, t), "G' intersecting", where, &gp, r, t);
            const BigInt cg = count_triangles(g, r, t, {false, o.workers});
            const BigInt cgp = count_triangles(gp, r, t, {false, o.workers});
            tally.check(cg == cgp, "N(G') = N(G)", where + ": " + cgp.str() + " vs " + cg.str(), &gp, r, t);
          });
        }
      }
    }
  }
}

void check_classified(Tally& tally, const Family& fam, int t, CoverPattern expected, int expected_ell,
                      const std::string& where) {
  tally.guarded("classification", &fam, 2, t, [&] {
    const CoverReport rep = classify_cover_family(fam, t);
    std::string got = to_string(rep.classification);
    if (rep.classification == CoverPattern::Case3) got += "(" + std::to_string(rep.ell) + ")";
    std::string want = to_string(expected);
    if (expected == CoverPattern::Case3) want += "(" + std::to_string(expected_ell) + ")";
    tally.check(got == want, "classification", where + ": expected " + want + ", got " + got, &fam, 2, t);
    if (rep.tau == t + 1) {
      tally.check(rep.covers_t_intersecting, "covers t-intersecting", where, &fam, 2, t);
    }
    if (rep.classification == CoverPattern::Case1 || rep.classification == CoverPattern::Case2 ||
        rep.classification == CoverPattern::Case3) {
      tally.check(core_clause_holds(fam, rep.core, t), "members off the core meet it in t-1", where, &fam, 2, t);
    }
  });
}

void cover_patterns_suite(Tally& tally, const VerifyOptions& o, std::mt19937_64& rng) {
  for (int k = 3; k <= o.max_k; ++k) {
    for (int t = 1; t <= k - 2; ++t) {
      for (int n = 2 * k + 1; n <= std::max(o.max_n, 2 * k + 1); ++n) {
        if (choose_u64(n, k) > 5000) continue;
        const Family gp = build_Gprime(Params{n, k, 2, t});
        check_classified(tally, gp, t, CoverPattern::FullSimplex, 0, "G'_{2,t} " + params_text(n, k, 2, t));
      }
    }
  }

  struct Nkt {
    int n, k, t;
  };
  for (const Nkt& x : {Nkt{12, 4, 1}, Nkt{12, 4, 2}, Nkt{12, 5, 2}}) {
    for (int ell = x.t + 2; ell <= x.k + 1; ++ell) {
      const Family fam = saturate(build_frankl(x.n, x.k, x.t, ell), 2, x.t);
      const std::string where = "frankl " + params_text(x.n, x.k, 2, x.t) + " ell=" + std::to_string(ell);
      // At ell = t+2 the construction coincides with G'_{2,t}.
      if (ell == x.t + 2) {
        tally.check(fam == build_Gprime(Params{x.n, x.k, 2, x.t}), "frankl at t+2 is G'", where, &fam, 2, x.t);
        check_classified(tally, fam, x.t, CoverPattern::FullSimplex, 0, where);
      } else {
        check_classified(tally, fam, x.t, CoverPattern::Case3, ell, where);
      }
    }
    const Family two = build_two_cover(x.n, x.k, x.t);
    tally.check(is_maximal(two, 2, x.t), "two-cover family maximal", params_text(x.n, x.k, 2, x.t), &two, 2, x.t);
    check_classified(tally, two, x.t, CoverPattern::Case2, 0, "two-cover " + params_text(x.n, x.k, 2, x.t));
  }

  // Random maximal intersecting families where the structure is guaranteed (n >= k^4).
  const int samples = samples_or(o, 8);
  for (int i = 0; i < samples; ++i) {
    const Family fam = random_saturated(rng, 81, 3, 2, 1);
    tally.guarded("random classification", &fam, 2, 1, [&] {
      const CoverReport rep = classify_cover_family(fam, 1);
      tally.check(rep.tau <= 3, "covering number at most k", "random n=81 k=3 t=1", &fam, 2, 1);
      if (rep.tau == 2) tally.check(rep.covers_t_intersecting, "covers t-intersecting", "random n=81 k=3 t=1", &fam, 2, 1);
      if (rep.classification == CoverPattern::Case1 || rep.classification == CoverPattern::Case2 ||
          rep.classification == CoverPattern::Case3) {
        tally.check(core_clause_holds(fam, rep.core, 1), "members off the core meet it in t-1", "random n=81 k=3",
                    &fam, 2, 1);
      }
    });
  }
}

void size_bounds_suite(Tally& tally, const VerifyOptions& o, std::mt19937_64& rng) {
  const int n = 81, k = 3, t = 1;
  auto check_bound = [&](const Family& fam, const std::string& label) {
    tally.guarded("size bound", &fam, 2, t, [&] {
      const CoverReport rep = classify_cover_family(fam, t);
      const BigInt size(fam.size());
      std::string where = label + ": |F|=" + size.str() + " " + to_string(rep.classification);
      switch (rep.classification) {
        case CoverPattern::Case1:
        case CoverPattern::Case2:
        case CoverPattern::Case3: {
          const int which = rep.classification == CoverPattern::Case1 ? 1 : rep.classification == CoverPattern::Case2 ? 2 : 3;
          const ExactRational bound = cover_case_size_bound(n, k, t, which);
          tally.check(ExactRational(size) <= bound, "size bound by cover case", where + " bound " + bound.str(), &fam, 2, t);
          break;
        }
        case CoverPattern::Unclassified: {
          const BigInt bound = wide_cover_size_bound(n, k, t);
          tally.check(size <= bound, "size bound for wide covers", where + " bound " + bound.str(), &fam, 2, t);
          break;
        }
        case CoverPattern::FullSimplex:
          tally.check(fam.size() == build_Gprime(Params{n, k, 2, t}).size(), "full simplex has the size of G'", where, &fam, 2, t);
          break;
        case CoverPattern::Trivial:
          tally.skip();
          break;
      }
    });
  };

  check_bound(saturate(build_frankl(n, k, t, 4), 2, t), "frankl ell=4");
  check_bound(build_two_cover(n, k, t), "two-cover");
  // Fano plane and all triples of [5]: maximal intersecting with τ = 3.
  const Family fano(n, k, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
  check_bound(saturate(fano, 2, t), "fano");
  check_bound(saturate(Family(n, k, k_subsets(Subset::prefix(5), 3)), 2, t), "triples of [5]");

  const int samples = samples_or(o, 8);
  for (int i = 0; i < samples; ++i) check_bound(random_saturated(rng, n, k, 2, t), "random");
}

void pair_floor_suite(Tally& tally, const VerifyOptions& o, std::mt19937_64& rng) {
  const int samples = samples_or(o, 100);
  for (int i = 0; i < samples; ++i) {
    const int r = between(rng, 3, 4);
    const int n = between(rng, std::min(r + 3, o.max_n), std::max(r + 3, o.max_n));
    const int k = between(rng, r + 1, std::max(r + 1, std::min(o.max_k, n - 1)));
    const int t = between(rng, 1, std::max(1, k - r));
    if (k >= n) {
      tally.skip();
      continue;
    }
    const Family fam = random_saturated(rng, n, k, r, t);
    const std::string where = params_text(n, k, r, t);
    tally.guarded("pair floor", &fam, r, t, [&] {
      const int s = covering_number(fam, t);
      const int floor = intersection_floor(r, s, t);
      int worst = k;
      for (std::size_t a = 0; a < fam.size(); ++a) {
        for (std::size_t b = a + 1; b < fam.size(); ++b) worst = std::min(worst, intersection_size(fam[a], fam[b]));
      }
      tally.check(worst >= floor, "pairwise intersection floor",
                  where + " tau=" + std::to_string(s) + ": min pair meet " + std::to_string(worst) + " < " +
                      std::to_string(floor),
                  &fam, r, t);
    });
  }
}

void two_cliques_suite(Tally& tally, const VerifyOptions& o) {
  for (const Params& p : {Params{10, 7, 2, 2}, Params{12, 9, 3, 2}, Params{12, 8, 2, 3}, Params{8, 6, 2, 2},
                          Params{9, 6, 2, 2}, Params{10, 6, 2, 2}, Params{11, 7, 2, 2}}) {
    const Family fam = build_two_block(p);
    const std::string where = params_text(p.n, p.k, p.r, p.t);
    tally.guarded("two-block", &fam, p.r, p.t, [&] {
      const BigInt count = count_triangles(fam, p.r, p.t, {false, o.workers});
      tally.check(count == 0, "two-block has no triangles", where + ": " + count.str(), &fam, p.r, p.t);
      const ComponentReport rep = decompose(build_cover_hypergraph(fam, p.t), p.r);
      tally.check(rep.verdict == Verdict::MultiClique, "two-block verdict", where + ": " + to_string(rep.verdict), &fam,
                  p.r, p.t);
      const ClaimResult res = check_claim(verdict_consequence(rep, p), fam, p);
      tally.check(res.asserted && res.holds, "zero-triangle consequence", where, &fam, p.r, p.t);
    });
  }
}

// Components by breadth-first search over edges sharing a vertex.
std::vector<std::vector<Subset>> brute_components(const std::vector<Subset>& edges) {
  std::vector<std::vector<Subset>> out;
  std::vector<bool> seen(edges.size(), false);
  for (std::size_t s = 0; s < edges.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (!seen[j] && intersection_size(edges[queue[q]], edges[j]) > 0) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    std::vector<Subset> comp;
    for (std::size_t i : queue) comp.push_back(edges[i]);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_components(Tally& tally, const Family& fam, int r, int t, const std::string& where) {
  const CoverHypergraph hg = build_cover_hypergraph(fam, t);
  const ComponentReport rep = decompose(hg, r);
  std::vector<std::vector<Subset>> mine;
  bool flags_ok = true;
  for (const Component& c : rep.components) {
    std::vector<Subset> e = c.edges;
    std::sort(e.begin(), e.end());
    mine.push_back(e);
    Subset vs;
    for (const Subset& x : e) vs |= x;
    const bool clique = e == k_subsets(vs, t + 1);
    flags_ok = flags_ok && clique == c.is_clique && vs == c.vertices;
  }
  std::sort(mine.begin(), mine.end());
  tally.check(mine == brute_components(hg.edges), "components", where, &fam, r, t);
  tally.check(flags_ok, "clique flags", where, &fam, r, t);
}

void hypergraph_suite(Tally& tally, const VerifyOptions& o, std::mt19937_64& rng) {
  for (int n = 2; n <= o.max_n; ++n) {
    for (int k = 1; k <= std::min(o.max_k, n); ++k) {
      for (int r = 2; r <= 3; ++r) {
        for (int t = 1; t <= k - r; ++t) {
          const Params p{n, k, r, t};
          if (build_G(p).empty()) continue;
          const Family gp = build_Gprime(p);
          const std::string where = "G' " + params_text(n, k, r, t);
          tally.guarded("G' hypergraph", &gp, r, t, [&] {
            const ComponentReport rep = decompose(build_cover_hypergraph(gp, t), r);
            check_components(tally, gp, r, t, where);
            // At n = k+1, G' is every k-subset of [k+1] and every (t+1)-subset of
            // [k+1] is a cover: one clique of order k+1 > r+t.
            const int order = n == k + 1 ? n : r + t;
            const bool single = rep.components.size() == 1 && rep.components.front().is_clique &&
                                rep.components.front().order() == order;
            tally.check(single, "single clique", where + ": " + to_string(rep.verdict), &gp, r, t);
            if (n == k + 1) {
              tally.check(rep.verdict == Verdict::TooLarge, "complete family verdict", where, &gp, r, t);
              return;
            }
            tally.check(rep.verdict == Verdict::SingleCliqueOrderRPlusT, "verdict", where + ": " + to_string(rep.verdict),
                        &gp, r, t);
            const ClaimResult res = check_claim(verdict_consequence(rep, p), gp, p);
            tally.check(res.asserted && res.holds, "sandwich consequence", where + " " + res.note, &gp, r, t);
          });
        }
      }
    }
  }

  {
    const Params p{10, 7, 2, 2};
    const Family fam = build_two_block(p);
    tally.guarded("two-block hypergraph", &fam, 2, 2, [&] {
      const ComponentReport rep = decompose(build_cover_hypergraph(fam, 2), 2);
      tally.check(rep.verdict == Verdict::MultiClique && rep.components.size() == 2, "two cliques",
                  "two-block n=10 k=7 r=2 t=2", &fam, 2, 2);
      check_components(tally, fam, 2, 2, "two-block");
    });
  }
  {
    const Params p{12, 4, 2, 1};
    const Family fam = saturate(build_frankl(12, 4, 1, 5), 2, 1);
    tally.guarded("frankl hypergraph", &fam, 2, 1, [&] {
      const ComponentReport rep = decompose(build_cover_hypergraph(fam, 1), 2);
      tally.check(rep.verdict == Verdict::NotClique && rep.components.size() == 1 &&
                      rep.components.front().order() == 5,
                  "star is not a clique", "frankl n=12 k=4 t=1 ell=5", &fam, 2, 1);
      const ClaimResult res = check_claim(verdict_consequence(rep, p), fam, p);
      if (res.asserted) {
        tally.check(res.holds, "gated consequence", "frankl n=12", &fam, 2, 1);
      } else {
        tally.skip();
      }
    });
  }

  const int samples = samples_or(o, 40);
  for (int i = 0; i < samples; ++i) {
    const int n = between(rng, 6, std::max(6, o.max_n));
    const int k = between(rng, 3, std::max(3, std::min(o.max_k, n - 2)));
    const int t = between(rng, 1, std::max(1, k - 2));
    const Family fam = random_saturated(rng, n, k, 2, t);
    const std::string where = "random " + params_text(n, k, 2, t);
    tally.guarded("random hypergraph", &fam, 2, t, [&] { check_components(tally, fam, 2, t, where); });
  }
}

}  // namespace

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Oracle: return "oracle";
    case Suite::GCount: return "g-count";
    case Suite::CoverPatterns: return "cover-patterns";
    case Suite::SizeBounds: return "size-bounds";
    case Suite::PairFloor: return "pair-floor";
    case Suite::TwoCliques: return "two-cliques";
    case Suite::Hypergraph: return "hypergraph";
  }
  return "?";
}

std::vector<Suite> parse_suites(const std::string& name) {
  const std::vector<Suite> all{Suite::Oracle,    Suite::GCount,     Suite::CoverPatterns, Suite::SizeBounds,
                               Suite::PairFloor, Suite::TwoCliques, Suite::Hypergraph};
  if (name == "all") return all;
  for (Suite s : all) {
    if (to_string(s) == name) return {s};
  }
  throw UsageError("unknown suite '" + name + "'");
}

SuiteResult run_suite(Suite suite, const VerifyOptions& options) {
  if (options.max_n < 2 || options.max_n > 16) throw UsageError("max-n must be in 2..16");
  if (options.max_k < 1 || options.max_k > options.max_n) throw UsageError("max-k must be in 1..max-n");
  SuiteResult result;
  result.suite = suite;
  Tally tally(result);
  std::mt19937_64 rng(splitmix64(options.seed ^ static_cast<std::uint64_t>(suite)));
  const auto start = std::chrono::steady_clock::now();
  switch (suite) {
    case Suite::Oracle: oracle_suite(tally, options, rng); break;
    case Suite::GCount: g_count_suite(tally, options); break;
    case Suite::CoverPatterns: cover_patterns_suite(tally, options, rng); break;
    case Suite::SizeBounds: size_bounds_suite(tally, options, rng); break;
    case Suite::PairFloor: pair_floor_suite(tally, options, rng); break;
    case Suite::TwoCliques: two_cliques_suite(tally, options); break;
    case Suite::Hypergraph: hypergraph_suite(tally, options, rng); break;
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace rwise
