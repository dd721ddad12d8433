#include <doctest.h>

#include <random>

#include "rwise/constructions.hpp"
#include "rwise/covers.hpp"
#include "rwise/errors.hpp"
#include "rwise/naive.hpp"
#include "rwise/predicates.hpp"
#include "support.hpp"

using namespace rwise;
using testing::fam;
using testing::lists;
using Lists = std::vector<std::vector<int>>;

namespace {

// Found by random saturation; its only minimum 1-cover is {2,6}.
Family single_cover_family() {
  return fam(9, 3, {{1, 2, 4}, {1, 2, 6}, {2, 3, 6}, {2, 4, 6}, {2, 5, 6}, {4, 5, 6}, {2, 4, 7}, {2, 5, 7}, {1, 6, 7},
                    {2, 6, 7}, {4, 6, 7}, {2, 6, 8}, {2, 6, 9}});
}

}  // namespace

TEST_CASE("is_t_cover") {
  const Family tri = fam(5, 2, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(is_t_cover(Subset{1, 2}, tri, 1));
  CHECK_FALSE(is_t_cover(Subset{1}, tri, 1));
  CHECK(is_t_cover(Subset::prefix(2), build_trivial(7, 4, 2), 2));
}

TEST_CASE("covering_number") {
  CHECK(covering_number(fam(5, 2, {{1, 2}, {1, 3}, {2, 3}}), 1) == 2);
  CHECK(covering_number(build_trivial(6, 3, 2), 2) == 2);
  CHECK(covering_number(build_Gprime(Params{8, 3, 2, 1}), 1) == 2);
  CHECK(covering_number(saturate(Family(6, 3), 2, 1), 1) == 3);
  CHECK_THROWS_AS(covering_number(Family(5, 2), 1), UsageError);
}

TEST_CASE("min_covers") {
  CHECK(lists(min_covers(fam(5, 2, {{1, 2}, {1, 3}, {2, 3}}), 1)) == Lists{{1, 2}, {1, 3}, {2, 3}});
  CHECK(lists(min_covers(build_Gprime(Params{8, 4, 2, 2}), 2)) == Lists{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(lists(min_covers(build_trivial(9, 4, 3), 3)) == Lists{{1, 2, 3}});
  CHECK(lists(min_covers(build_Gprime(Params{8, 4, 3, 1}), 1)) == Lists{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
}

TEST_CASE("covers_up_to") {
  const Family tri = fam(4, 2, {{1, 2}, {1, 3}, {2, 3}});
  // The three pairs inside [3] and all four triples of [4].
  const auto covers = covers_up_to(tri, 1, 3);
  for (const Subset& c : covers) CHECK(is_t_cover(c, tri, 1));
  CHECK(covers.size() == 7);
  CHECK(covers_up_to(tri, 1, 1).empty());
}

TEST_CASE("covering number and minimum covers agree with subset brute force") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const int n = testing::between(rng, 3, 10);
    const int k = testing::between(rng, 1, n);
    const int t = testing::between(rng, 1, k);
    const Family f = testing::random_family(rng, n, k, testing::between(rng, 1, 12));
    const auto slow = naive::min_covers(lists(f), n, t);
    CHECK(covering_number(f, t) == static_cast<int>(slow.front().size()));
    auto fast = lists(min_covers(f, t));
    std::sort(fast.begin(), fast.end());
    CHECK(fast == slow);
  }
}

TEST_CASE("classification patterns") {
  SUBCASE("full simplex") {
    const CoverReport rep = classify_cover_family(build_Gprime(Params{8, 4, 2, 2}), 2);
    CHECK(rep.classification == CoverPattern::FullSimplex);
    CHECK(rep.tau == 3);
    CHECK(rep.covers_t_intersecting);
  }
  SUBCASE("trivial") {
    const CoverReport rep = classify_cover_family(build_trivial(8, 3, 1), 1);
    CHECK(rep.classification == CoverPattern::Trivial);
    CHECK(rep.tau == 1);
  }
  SUBCASE("star of four covers") {
    const CoverReport rep = classify_cover_family(saturate(build_frankl(12, 4, 1, 5), 2, 1), 1);
    CHECK(rep.classification == CoverPattern::Case3);
    CHECK(rep.ell == 5);
    CHECK(lists(rep.min_covers) == Lists{{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    CHECK(rep.core == Subset{1});
  }
  SUBCASE("frankl at ell = t+2 is the full simplex") {
    const Family f = saturate(build_frankl(12, 4, 2, 4), 2, 2);
    const CoverReport rep = classify_cover_family(f, 2);
    CHECK(rep.classification == CoverPattern::FullSimplex);
    CHECK(lists(rep.min_covers) == Lists{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  }
  SUBCASE("two covers") {
    const Family f = build_two_cover(12, 4, 2);
    const CoverReport rep = classify_cover_family(f, 2);
    CHECK(rep.classification == CoverPattern::Case2);
    CHECK(lists(rep.min_covers) == Lists{{1, 2, 3}, {1, 2, 4}});
    CHECK(rep.core == Subset{1, 2});
  }
  SUBCASE("single cover") {
    const Family f = single_cover_family();
    REQUIRE(is_maximal(f, 2, 1));
    const CoverReport rep = classify_cover_family(f, 1);
    CHECK(rep.classification == CoverPattern::Case1);
    CHECK(lists(rep.min_covers) == Lists{{2, 6}});
    CHECK(rep.core.size() == 1);
  }
  SUBCASE("covering number at least t+2") {
    const Family f = saturate(Family(6, 3), 2, 1);
    const CoverReport rep = classify_cover_family(f, 1);
    CHECK(rep.classification == CoverPattern::Unclassified);
    CHECK(rep.tau == 3);
  }
}

TEST_CASE("classification witness maps covers onto the pattern") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Family base = saturate(build_frankl(10, 4, 1, 4), 2, 1);
    const Family f = base.relabeled(testing::random_perm(rng, 10));
    const CoverReport rep = classify_cover_family(f, 1);
    REQUIRE(rep.classification == CoverPattern::Case3);
    CHECK(rep.ell == 4);
    std::vector<Subset> image;
    for (const Subset& c : rep.min_covers) image.push_back(relabel(c, rep.witness));
    std::sort(image.begin(), image.end());
    CHECK(lists(image) == Lists{{1, 2}, {1, 3}, {1, 4}});
    // Members off the core meet it in t-1 = 0 elements.
    for (const Subset& s : f) {
      if (!rep.core.is_subset_of(s)) CHECK(intersection_size(s, rep.core) == 0);
    }
  }
}

TEST_CASE("classification preconditions") {
  CHECK_THROWS_AS(classify_cover_family(fam(5, 2, {{1, 2}, {3, 4}}), 1), PreconditionError);
  CHECK_THROWS_AS(classify_cover_family(fam(5, 2, {{1, 2}, {1, 3}}), 1), PreconditionError);
  CHECK_THROWS_AS(classify_cover_family(build_trivial(6, 3, 1), 1, 3), UsageError);
}
