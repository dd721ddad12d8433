#include <doctest.h>

#include <random>

#include "rwise/constructions.hpp"
#include "rwise/cover_hypergraph.hpp"
#include "rwise/covers.hpp"
#include "rwise/errors.hpp"
#include "rwise/predicates.hpp"
#include "support.hpp"

using namespace rwise;
using testing::lists;
using Lists = std::vector<std::vector<int>>;

TEST_CASE("hypergraph of G'") {
  const Family gp = build_Gprime(Params{8, 3, 2, 1});
  const CoverHypergraph hg = build_cover_hypergraph(gp, 1);
  CHECK(hg.tau == 2);
  CHECK(lists(hg.edges) == Lists{{1, 2}, {1, 3}, {2, 3}});
  CHECK(hg.vertices == Subset{1, 2, 3});
  CHECK(hg.edges_pairwise_t);
  const ComponentReport rep = decompose(hg, 2);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].is_clique);
  CHECK(rep.components[0].order() == 3);
  CHECK(rep.verdict == Verdict::SingleCliqueOrderRPlusT);
  const Params p{8, 3, 2, 1};
  const Claim claim = verdict_consequence(rep, p);
  CHECK(claim.kind == Claim::Kind::SandwichedGGp);
  const ClaimResult res = check_claim(claim, gp, p);
  CHECK(res.asserted);
  CHECK(res.holds);
  // G itself is also sandwiched.
  CHECK(check_claim(claim, build_G(p), p).holds);
}

TEST_CASE("sandwich claim fails when part of G is missing") {
  const Params p{8, 4, 2, 1};
  const Family gp = build_Gprime(p);
  const ComponentReport rep = decompose(build_cover_hypergraph(gp, 1), 2);
  const Claim claim = verdict_consequence(rep, p);
  auto without = [&](const Subset& drop) {
    std::vector<Subset> rest;
    for (const Subset& x : gp) {
      if (x != drop) rest.push_back(x);
    }
    return Family(8, 4, rest);
  };
  // {1,2,3,4} lies in G' but not in G; {1,2,4,5} lies in G.
  CHECK(check_claim(claim, without(Subset{1, 2, 3, 4}), p).holds);
  CHECK_FALSE(check_claim(claim, without(Subset{1, 2, 4, 5}), p).holds);
  CHECK_FALSE(check_claim(claim, gp.with(Subset{1, 4, 5, 6}), p).holds);
}

TEST_CASE("hypergraph of a star pattern is not a clique") {
  const Family f = saturate(build_frankl(12, 4, 1, 5), 2, 1);
  const CoverHypergraph hg = build_cover_hypergraph(f, 1);
  CHECK(lists(hg.edges) == Lists{{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  const ComponentReport rep = decompose(hg, 2);
  REQUIRE(rep.components.size() == 1);
  CHECK_FALSE(rep.components[0].is_clique);
  CHECK(rep.components[0].order() == 5);
  CHECK(rep.verdict == Verdict::NotClique);
  const Params p{12, 4, 2, 1};
  const Claim claim = verdict_consequence(rep, p);
  CHECK(claim.kind == Claim::Kind::FewerThanG);
  CHECK(claim.gated);
  CHECK(claim.threshold_kind == ThresholdKind::NotClique);
  const ClaimResult res = check_claim(claim, f, p);
  CHECK_FALSE(res.asserted);
}

TEST_CASE("two-block hypergraph has two cliques") {
  const Params p{10, 7, 2, 2};
  const Family f = build_two_block(p);
  const ComponentReport rep = decompose(build_cover_hypergraph(f, 2), 2);
  REQUIRE(rep.components.size() == 2);
  for (const Component& c : rep.components) {
    CHECK(c.is_clique);
    CHECK(c.order() == 4);
  }
  CHECK(rep.verdict == Verdict::MultiClique);
  const Claim claim = verdict_consequence(rep, p);
  CHECK(claim.kind == Claim::Kind::ZeroTriangles);
  const ClaimResult res = check_claim(claim, f, p);
  CHECK(res.asserted);
  CHECK(res.holds);
}

TEST_CASE("trivial family has no edges") {
  const CoverHypergraph hg = build_cover_hypergraph(build_trivial(7, 3, 1), 1);
  CHECK(hg.tau == 1);
  CHECK(hg.edges.empty());
  CHECK_FALSE(hg.warnings.empty());
  const ComponentReport rep = decompose(hg, 2);
  CHECK(rep.components.empty());
  CHECK(rep.verdict == Verdict::Empty);
  CHECK(verdict_consequence(rep, Params{7, 3, 2, 1}).kind == Claim::Kind::None);
  CHECK_THROWS_AS(build_cover_hypergraph(Family(5, 2), 1), UsageError);
}

TEST_CASE("verdicts for small and large cliques") {
  // G'_{3,1} on [4] viewed with r = 2: one clique of order 4 > r+t.
  const Family gp = build_Gprime(Params{9, 4, 3, 1});
  CHECK(decompose(build_cover_hypergraph(gp, 1), 2).verdict == Verdict::TooLarge);
  // G'_{2,1} viewed with r = 3: one clique of order 3 < r+t.
  const Family g2 = build_Gprime(Params{9, 4, 2, 1});
  CHECK(decompose(build_cover_hypergraph(g2, 1), 3).verdict == Verdict::TooSmall);
}

TEST_CASE("decompose commutes with relabeling") {
  std::mt19937_64 rng(99);
  const std::vector<Family> families{saturate(build_frankl(10, 4, 1, 5), 2, 1), build_two_block(Params{10, 7, 2, 2}),
                                     build_Gprime(Params{9, 4, 3, 1})};
  for (const Family& f : families) {
    for (int i = 0; i < 10; ++i) {
      const std::vector<int> perm = testing::random_perm(rng, f.n());
      const int t = f == families[1] ? 2 : 1;
      const ComponentReport a = decompose(build_cover_hypergraph(f, t), 2);
      const ComponentReport b = decompose(build_cover_hypergraph(f.relabeled(perm), t), 2);
      CHECK(a.verdict == b.verdict);
      REQUIRE(a.components.size() == b.components.size());
      std::vector<Subset> va, vb;
      for (const Component& c : a.components) va.push_back(relabel(c.vertices, perm));
      for (const Component& c : b.components) vb.push_back(c.vertices);
      std::sort(va.begin(), va.end());
      std::sort(vb.begin(), vb.end());
      CHECK(va == vb);
    }
  }
}

TEST_CASE("hypergraph edges are the minimum covers when tau = t+1") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const int n = testing::between(rng, 7, 10);
    const int k = testing::between(rng, 3, 4);
    const int t = testing::between(rng, 1, k - 2);
    std::vector<Subset> seeds;
    for (int j = 0; j < 4; ++j) {
      const Subset c = random_k_subset(rng, k + 2, k);
      if (std::find(seeds.begin(), seeds.end(), c) == seeds.end() && can_extend(seeds, c, 2, t)) seeds.push_back(c);
    }
    const Family f = saturate(Family(n, k, seeds), 2, t);
    const CoverHypergraph hg = build_cover_hypergraph(f, t);
    if (hg.tau != t + 1) {
      CHECK(hg.edges.empty());
      continue;
    }
    CHECK(hg.edges == min_covers(f, t));
    CHECK(hg.edges_pairwise_t);
    for (const Component& c : decompose(hg, 2).components) CHECK(c.order() >= t + 1);
  }
}
