#pragma once

#include <string>
#include <vector>

#include "rwise/bigint.hpp"
#include "rwise/family.hpp"
#include "rwise/formulas.hpp"

namespace rwise {

/// The (t+1)-uniform hypergraph whose edges are the (t+1)-element t-covers of a
/// family with τ_t = t+1. Vertices are the union of the edges.
struct CoverHypergraph {
  int n = 0;
  int t = 0;
  int tau = 0;
  std::vector<Subset> edges;
  Subset vertices;
  /// Every two distinct edges meet in exactly t vertices.
  bool edges_pairwise_t = true;
  std::vector<std::string> warnings;
};

/// Throws UsageError on an empty family. Outside the τ_t = t+1 regime the edge
/// set is empty and a warning is recorded.
CoverHypergraph build_cover_hypergraph(const Family& fam, int t);

struct Component {
  Subset vertices;
  std::vector<Subset> edges;
  int order() const { return vertices.size(); }
  bool is_clique = false;
};

enum class Verdict {
  SingleCliqueOrderRPlusT,
  NotClique,
  TooLarge,
  TooSmall,
  MultiClique,
  /// No edges, hence no components.
  Empty
};

std::string to_string(Verdict verdict);

struct ComponentReport {
  std::vector<Component> components;
  Verdict verdict = Verdict::Empty;
  std::vector<std::string> warnings;
};

/// Components under "edges sharing a vertex". Verdict precedence: any
/// non-clique, then any clique of order > r+t, then any of order < r+t, then
/// two or more cliques of order r+t, else the single clique of order r+t.
ComponentReport decompose(const CoverHypergraph& hg, int r);

/// The checkable statement attached to a verdict.
struct Claim {
  enum class Kind {
    ZeroTriangles,    // N_{r+1,t}(F) = 0
    SandwichedGGp,    // G_{r,t} ⊆ F ⊆ G'_{r,t} after relabeling the clique to [r+t]
    FewerThanG,       // N_{r+1,t}(F) < N_{r+1,t}(G_{r,t}), only for n >= c k^d
    None
  };
  Kind kind = Kind::None;
  std::string description;
  /// For FewerThanG: the threshold supplying (c, d) and an integer N >= c k^d.
  bool gated = false;
  ThresholdKind threshold_kind = ThresholdKind::NotClique;
  BigInt threshold;
  /// For SandwichedGGp: the clique's vertex set.
  Subset clique;
};

Claim verdict_consequence(const ComponentReport& report, const Params& p);

struct ClaimResult {
  /// False when the claim is gated and n is below the threshold.
  bool asserted = false;
  bool holds = false;
  std::string note;
};

ClaimResult check_claim(const Claim& claim, const Family& fam, const Params& p);

}  // namespace rwise
