#include "rwise/cover_hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rwise/covers.hpp"
#include "rwise/errors.hpp"
#include "rwise/predicates.hpp"

namespace rwise {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

CoverHypergraph build_cover_hypergraph(const Family& fam, int t) {
  if (fam.empty()) throw UsageError("cover hypergraph of an empty family is undefined");
  CoverHypergraph hg;
  hg.n = fam.n();
  hg.t = t;
  hg.tau = covering_number(fam, t);
  if (hg.tau != t + 1) {
    hg.warnings.push_back("covering number is " + std::to_string(hg.tau) + ", not t+1 = " + std::to_string(t + 1) +
                          "; the hypergraph has no edges");
    return hg;
  }
  hg.edges = min_covers(fam, t);
  for (const Subset& e : hg.edges) hg.vertices |= e;
  for (std::size_t i = 0; i < hg.edges.size() && hg.edges_pairwise_t; ++i) {
    for (std::size_t j = i + 1; j < hg.edges.size(); ++j) {
      if (intersection_size(hg.edges[i], hg.edges[j]) != t) {
        hg.edges_pairwise_t = false;
        break;
      }
    }
  }
  if (!hg.edges_pairwise_t) {
    hg.warnings.push_back("some edges do not meet in exactly t vertices (expected only for maximal t-intersecting families)");
  }
  return hg;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::SingleCliqueOrderRPlusT: return "SingleCliqueOrderRPlusT";
    case Verdict::NotClique: return "NotClique";
    case Verdict::TooLarge: return "TooLarge";
    case Verdict::TooSmall: return "TooSmall";
    case Verdict::MultiClique: return "MultiClique";
    case Verdict::Empty: return "Empty";
  }
  return "?";
}

ComponentReport decompose(const CoverHypergraph& hg, int r) {
  ComponentReport report;
  if (hg.edges.empty()) {
    report.verdict = Verdict::Empty;
    report.warnings.push_back("no edges: verdict undefined");
    return report;
  }
  DisjointSets sets(hg.edges.size());
  for (int v : hg.vertices.elements()) {
    std::size_t first = hg.edges.size();
    for (std::size_t i = 0; i < hg.edges.size(); ++i) {
      if (!hg.edges[i].contains(v)) continue;
      if (first == hg.edges.size()) {
        first = i;
      } else {
        sets.unite(first, i);
      }
    }
  }
  std::map<std::size_t, Component> by_root;
  for (std::size_t i = 0; i < hg.edges.size(); ++i) {
    Component& c = by_root[sets.find(i)];
    c.edges.push_back(hg.edges[i]);
    c.vertices |= hg.edges[i];
  }
  for (auto& [root, c] : by_root) {
    c.is_clique = choose_u64(c.order(), hg.t + 1) == c.edges.size();
    report.components.push_back(std::move(c));
  }

  const int target = r + hg.t;
  const auto& comps = report.components;
  auto any = [&](auto pred) { return std::any_of(comps.begin(), comps.end(), pred); };
  if (any([](const Component& c) { return !c.is_clique; })) {
    report.verdict = Verdict::NotClique;
  } else if (any([&](const Component& c) { return c.order() > target; })) {
    report.verdict = Verdict::TooLarge;
  } else if (any([&](const Component& c) { return c.order() < target; })) {
    report.verdict = Verdict::TooSmall;
  } else if (comps.size() >= 2) {
    report.verdict = Verdict::MultiClique;
  } else {
    report.verdict = Verdict::SingleCliqueOrderRPlusT;
  }
  return report;
}

Claim verdict_consequence(const ComponentReport& report, const Params& p) {
  Claim claim;
  auto gate = [&](ThresholdKind kind) {
    claim.kind = Claim::Kind::FewerThanG;
    claim.gated = true;
    claim.threshold_kind = kind;
    claim.threshold = threshold_upper(threshold_n0(p.r, p.t, kind), p.k);
    claim.description = "N(F) < N(G_{r,t}) for n >= c k^d (" + to_string(kind) + " threshold, n >= " + claim.threshold.str() + ")";
  };
  switch (report.verdict) {
    case Verdict::MultiClique:
      claim.kind = Claim::Kind::ZeroTriangles;
      claim.description = "N(F) = 0";
      break;
    case Verdict::SingleCliqueOrderRPlusT:
      claim.kind = Claim::Kind::SandwichedGGp;
      claim.clique = report.components.front().vertices;
      claim.description = "G_{r,t} ⊆ F ⊆ G'_{r,t} with [r+t] relabeled to " + claim.clique.to_string();
      break;
    case Verdict::NotClique: gate(ThresholdKind::NotClique); break;
    case Verdict::TooLarge: gate(ThresholdKind::TooLarge); break;
    case Verdict::TooSmall: gate(ThresholdKind::TooSmall); break;
    case Verdict::Empty:
      claim.kind = Claim::Kind::None;
      claim.description = "no consequence";
      break;
  }
  return claim;
}

ClaimResult check_claim(const Claim& claim, const Family& fam, const Params& p) {
  ClaimResult result;
  switch (claim.kind) {
    case Claim::Kind::None:
      result.note = "nothing to check";
      return result;
    case Claim::Kind::ZeroTriangles:
      result.asserted = true;
      result.holds = count_triangles(fam, p.r, p.t) == 0;
      return result;
    case Claim::Kind::SandwichedGGp: {
      result.asserted = true;
      const int head = p.r + p.t;
      if (claim.clique.size() != head) {
        result.note = "clique order differs from r+t";
        return result;
      }
      std::size_t exact_members = 0;
      bool inside = true;
      for (const Subset& f : fam) {
        const int meet = intersection_size(f, claim.clique);
        if (meet < head - 1) inside = false;
        if (meet == head - 1) ++exact_members;
      }
      const BigInt g_size = BigInt(head) * binomial(p.n - head, p.k - head + 1);
      result.holds = inside && BigInt(exact_members) == g_size;
      if (!inside) result.note = "a member meets the clique in fewer than r+t-1 vertices";
      else if (!result.holds) result.note = "F misses some member of G_{r,t}";
      return result;
    }
    case Claim::Kind::FewerThanG:
      if (BigInt(p.n) < claim.threshold) {
        result.note = "below threshold: consequence not asserted";
        return result;
      }
      result.asserted = true;
      result.holds = count_triangles(fam, p.r, p.t) < exact_count_G(p);
      return result;
  }
  return result;
}

}  // namespace rwise
