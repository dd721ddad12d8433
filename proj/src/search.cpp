#include "rwise/search.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "rwise/errors.hpp"
#include "rwise/formulas.hpp"
#include "rwise/predicates.hpp"
#include "rwise/random.hpp"

namespace rwise {

namespace {

struct ElementClass {
  std::vector<int> elements;
  std::vector<int> key;  // size, degree, sorted codegrees of the first element
};

bool are_twins(const Family& fam, const std::unordered_set<Subset, SubsetHash>& lookup, int x, int y) {
  for (const Subset& f : fam) {
    const bool has_x = f.contains(x), has_y = f.contains(y);
    if (has_x == has_y) continue;
    Subset swapped = f;
    swapped.erase(has_x ? x : y);
    swapped.insert(has_x ? y : x);
    if (!lookup.contains(swapped)) return false;
  }
  return true;
}

// Twin classes of the support, each carrying its invariant key.
std::vector<ElementClass> element_classes(const Family& fam) {
  const std::vector<int> support = fam.support().elements();
  const int n = fam.n();
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> codegree(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (const Subset& f : fam) {
    const auto elems = f.elements();
    for (int a : elems) {
      ++degree[static_cast<std::size_t>(a)];
      for (int b : elems) {
        if (a != b) ++codegree[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
    }
  }
  const std::unordered_set<Subset, SubsetHash> lookup(fam.begin(), fam.end());
  std::vector<ElementClass> classes;
  for (int x : support) {
    bool placed = false;
    for (ElementClass& c : classes) {
      const int rep = c.elements.front();
      if (degree[static_cast<std::size_t>(rep)] == degree[static_cast<std::size_t>(x)] && are_twins(fam, lookup, rep, x)) {
        c.elements.push_back(x);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(ElementClass{{x}, {}});
  }
  for (ElementClass& c : classes) {
    const int rep = c.elements.front();
    std::vector<int> co;
    for (int y : support) {
      if (y != rep) co.push_back(codegree[static_cast<std::size_t>(rep)][static_cast<std::size_t>(y)]);
    }
    std::sort(co.begin(), co.end());
    c.key = {static_cast<int>(c.elements.size()), degree[static_cast<std::size_t>(rep)]};
    c.key.insert(c.key.end(), co.begin(), co.end());
  }
  return classes;
}

void append_word(std::string& out, Subset::word w) {
  for (int shift = 120; shift >= 0; shift -= 8) out.push_back(static_cast<char>(static_cast<unsigned char>(w >> shift)));
}

// Odometer over the permutations of every group; false once all have wrapped.
bool next_ordering(std::vector<std::vector<std::size_t>>& groups) {
  for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
    if (std::next_permutation(g->begin(), g->end())) return true;
  }
  return false;
}

using VertexSet = std::bitset<kMaxIntersectionGraph>;

template <typename Fn>
void for_each_vertex(const VertexSet& set, Fn&& fn) {
  for (std::size_t v = 0; v < set.size(); ++v) {
    if (set.test(v)) fn(v);
  }
}

class MaximalCliques {
 public:
  MaximalCliques(std::vector<VertexSet> adjacency, std::function<void(const VertexSet&)> report)
      : adj_(std::move(adjacency)), report_(std::move(report)) {}

  void run(std::size_t vertex_count) {
    VertexSet all;
    for (std::size_t v = 0; v < vertex_count; ++v) all.set(v);
    expand(VertexSet{}, all, VertexSet{});
  }

 private:
  void expand(VertexSet clique, VertexSet candidates, VertexSet excluded) {
    if (candidates.none()) {
      if (excluded.none()) report_(clique);
      return;
    }
    // Tomita pivot: the vertex with most neighbours among the candidates.
    std::size_t pivot = 0, best = 0;
    const VertexSet pool = candidates | excluded;
    for_each_vertex(pool, [&](std::size_t u) {
      const std::size_t c = (candidates & adj_[u]).count();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    });
    const VertexSet branch = candidates & ~adj_[pivot];
    for_each_vertex(branch, [&](std::size_t v) {
      VertexSet next = clique;
      next.set(v);
      expand(next, candidates & adj_[v], excluded & adj_[v]);
      candidates.reset(v);
      excluded.set(v);
    });
  }

  std::vector<VertexSet> adj_;
  std::function<void(const VertexSet&)> report_;
};

struct Visited {
  Family family;
  BigInt count;
  bool shortcut = false;
};

Visited visit_family(const Family& fam, int r, int t) {
  Visited v{fam, 0, false};
  if (is_trivial(fam, t)) {
    v.shortcut = true;
  } else {
    v.count = count_triangles(fam, r, t);
  }
  return v;
}

SearchReport run_stochastic(const Params& p, std::uint64_t seed, std::uint64_t budget, const VisitFn& visit) {
  SearchReport report;
  report.mode = "stochastic";
  report.params = p;
  report.seed = seed;
  report.budget = budget;
  report.best_family = Family(p.n, p.k);
  std::mt19937_64 rng(seed);
  const int max_seeds = p.r + 2;
  for (std::uint64_t step = 0; step < budget; ++step) {
    const int wanted = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_seeds - 1)));
    std::vector<Subset> seeds;
    for (int attempt = 0; attempt < 8 * max_seeds && static_cast<int>(seeds.size()) < wanted; ++attempt) {
      const Subset c = random_k_subset(rng, p.n, p.k);
      if (std::find(seeds.begin(), seeds.end(), c) != seeds.end()) continue;
      if (can_extend(seeds, c, p.r, p.t)) seeds.push_back(c);
    }
    const Family saturated = saturate(Family(p.n, p.k, std::move(seeds)), p.r, p.t);
    const Visited v = visit_family(saturated, p.r, p.t);
    ++report.families_examined;
    if (v.shortcut) ++report.trivial_shortcuts;
    if (visit) visit(v.family, v.shortcut, v.count);
    if (report.families_examined == 1 || v.count > report.best_count) {
      report.best_count = v.count;
      report.best_family = v.family;
    }
  }
  return report;
}

}  // namespace

std::string canonical_form(const Family& fam) {
  std::vector<ElementClass> classes = element_classes(fam);
  std::stable_sort(classes.begin(), classes.end(), [](const ElementClass& a, const ElementClass& b) { return a.key < b.key; });

  // Groups of classes with equal keys; only their internal order is free.
  std::vector<std::vector<std::size_t>> groups;
  std::uint64_t orderings = 1;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i == 0 || classes[i].key != classes[i - 1].key) groups.emplace_back();
    groups.back().push_back(i);
    orderings *= groups.back().size();
    if (orderings > kMaxCanonicalOrderings) throw UsageError("family too symmetric-free for exact canonical form");
  }

  std::vector<int> perm(static_cast<std::size_t>(fam.n()) + 1, 0);
  std::vector<Subset> image(fam.size()), best;
  do {
    int label = 1;
    for (const auto& g : groups) {
      for (std::size_t ci : g) {
        for (int e : classes[ci].elements) perm[static_cast<std::size_t>(e)] = label++;
      }
    }
    for (std::size_t i = 0; i < fam.size(); ++i) image[i] = relabel(fam[i], perm);
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  } while (next_ordering(groups));

  std::string out;
  out.push_back(static_cast<char>(fam.n()));
  out.push_back(static_cast<char>(fam.k()));
  for (const Subset& s : best) append_word(out, s.bits());
  return out;
}

std::string invariant_fingerprint(const Family& fam) {
  std::vector<std::vector<int>> keys;
  for (const ElementClass& c : element_classes(fam)) {
    for (std::size_t i = 0; i < c.elements.size(); ++i) keys.push_back(c.key);
  }
  std::sort(keys.begin(), keys.end());
  std::string out = std::to_string(fam.n()) + ":" + std::to_string(fam.k()) + ":" + std::to_string(fam.size());
  for (const auto& key : keys) {
    out += '|';
    for (int v : key) out += std::to_string(v) + ',';
  }
  return out;
}

std::vector<Family> enumerate_maximal_r2(int n, int k, int t, const std::function<void(const Family&)>& emit,
                                         EnumerationStats* stats) {
  if (n < 1 || n > kMaxGround || k < 1 || k > n) throw UsageError("need 1 <= k <= n <= 128");
  if (t < 1 || t > k) throw UsageError("need 1 <= t <= k");
  if (choose_u64(n, k) > kMaxIntersectionGraph) {
    throw UsageError("C(n,k) exceeds " + std::to_string(kMaxIntersectionGraph) + " vertices; exhaustive enumeration refused");
  }
  const std::vector<Subset> vertices = k_subsets(Subset::prefix(n), k);
  std::vector<VertexSet> adjacency(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && intersection_size(vertices[i], vertices[j]) >= t) adjacency[i].set(j);
    }
  }

  EnumerationStats local;
  std::set<std::string> seen;
  std::vector<Family> classes;
  MaximalCliques cliques(std::move(adjacency), [&](const VertexSet& clique) {
    ++local.maximal_cliques;
    std::vector<Subset> members;
    for_each_vertex(clique, [&](std::size_t v) { members.push_back(vertices[v]); });
    Family fam(n, k, std::move(members));
    std::string key;
    try {
      key = canonical_form(fam);
    } catch (const UsageError&) {
      key = "~" + invariant_fingerprint(fam);
      local.approximate_dedup = true;
    }
    if (!seen.insert(key).second) return;
    if (emit) emit(fam);
    classes.push_back(std::move(fam));
  });
  cliques.run(vertices.size());
  if (stats) *stats = local;
  return classes;
}

SearchReport exhaustive_search(int n, int k, int t) {
  const Params p{n, k, 2, t};
  p.validate();
  SearchReport report;
  report.mode = "exhaustive";
  report.params = p;
  report.best_family = Family(n, k);
  EnumerationStats stats;
  const std::vector<Family> classes = enumerate_maximal_r2(n, k, t, {}, &stats);
  report.families_examined = stats.maximal_cliques;
  report.approximate_dedup = stats.approximate_dedup;
  report.complete = !stats.approximate_dedup;
  for (const Family& fam : classes) {
    const Visited v = visit_family(fam, 2, t);
    if (v.shortcut) ++report.trivial_shortcuts;
    report.classes.push_back(ClassSummary{fam, v.count, v.shortcut});
    if (report.classes.size() == 1 || v.count > report.best_count) {
      report.best_count = v.count;
      report.best_family = fam;
    }
  }
  report.reference_count = exact_count_G(p);
  report.exceedance = report.best_count > report.reference_count;
  return report;
}

SearchReport stochastic_search(const Params& p, std::uint64_t seed, std::uint64_t budget, unsigned workers,
                               const VisitFn& visit) {
  p.validate();
  workers = std::max(1u, workers);
  SearchReport merged;
  if (workers == 1) {
    merged = run_stochastic(p, seed, budget, visit);
  } else {
    std::vector<SearchReport> parts(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t share = budget / workers + (w < budget % workers ? 1 : 0);
        pool.emplace_back([&, w, share] { parts[w] = run_stochastic(p, splitmix64(seed + w), share, {}); });
      }
    }
    merged = parts.front();
    merged.families_examined = 0;
    merged.trivial_shortcuts = 0;
    bool have_best = false;
    for (const SearchReport& part : parts) {
      merged.families_examined += part.families_examined;
      merged.trivial_shortcuts += part.trivial_shortcuts;
      if (part.families_examined > 0 && (!have_best || part.best_count > merged.best_count)) {
        merged.best_count = part.best_count;
        merged.best_family = part.best_family;
        have_best = true;
      }
    }
  }
  merged.seed = seed;
  merged.budget = budget;
  merged.workers = workers;
  merged.complete = false;
  merged.reference_count = exact_count_G(p);
  merged.exceedance = merged.best_count > merged.reference_count;
  return merged;
}

}  // namespace rwise
