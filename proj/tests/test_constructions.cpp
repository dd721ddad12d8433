#include <doctest.h>

#include "rwise/constructions.hpp"
#include "rwise/covers.hpp"
#include "rwise/errors.hpp"
#include "rwise/formulas.hpp"
#include "rwise/predicates.hpp"
#include "support.hpp"

using namespace rwise;
using testing::lists;
using Lists = std::vector<std::vector<int>>;

TEST_CASE("build_G") {
  CHECK(lists(build_G(Params{5, 2, 2, 1})) == Lists{{1, 2}, {1, 3}, {2, 3}});
  CHECK(build_G(Params{6, 4, 2, 2}).size() == 8);
  CHECK(build_G(Params{3, 3, 2, 1}).empty());
  CHECK_THROWS_AS(build_G(Params{5, 2, 2, 3}), UsageError);
  CHECK_THROWS_AS(build_G(Params{5, 2, 1, 1}), UsageError);
  // Sizes against (r+t) C(n-r-t, k-r-t+1).
  for (int n = 4; n <= 10; ++n) {
    for (int k = 3; k <= std::min(6, n); ++k) {
      for (int r = 2; r <= 3; ++r) {
        for (int t = 1; t <= k - r; ++t) {
          const Params p{n, k, r, t};
          CHECK(BigInt(build_G(p).size()) == BigInt(r + t) * binomial(n - r - t, k - r - t + 1));
          CHECK(BigInt(build_Gprime(p).size()) == BigInt(build_G(p).size()) + binomial(n - r - t, k - r - t));
        }
      }
    }
  }
}

TEST_CASE("build_Gprime") {
  CHECK(lists(build_Gprime(Params{5, 2, 2, 1})) == Lists{{1, 2}, {1, 3}, {2, 3}});
  CHECK(build_Gprime(Params{6, 4, 2, 2}).size() == 9);
  CHECK(build_Gprime(Params{8, 3, 2, 1}).size() == 16);
  const Family g = build_G(Params{8, 4, 3, 1});
  const Family gp = build_Gprime(Params{8, 4, 3, 1});
  for (const Subset& s : g) CHECK(gp.contains(s));
}

TEST_CASE("build_G_block") {
  CHECK(lists(build_G_block(Params{5, 2, 2, 1}, 3)) == Lists{{1, 2}});
  CHECK(lists(build_G_block(Params{6, 4, 2, 2}, 1)) == Lists{{2, 3, 4, 5}, {2, 3, 4, 6}});
  const Params p{9, 5, 3, 1};
  std::vector<Subset> all;
  for (int i = 1; i <= 4; ++i) {
    const Family block = build_G_block(p, i);
    CHECK(BigInt(block.size()) == binomial(5, 2));
    all.insert(all.end(), block.begin(), block.end());
  }
  CHECK(Family(9, 5, all) == build_G(p));
  CHECK_THROWS_AS(build_G_block(p, 5), UsageError);
  CHECK_THROWS_AS(build_G_block(p, 0), UsageError);
}

TEST_CASE("build_trivial") {
  CHECK(lists(build_trivial(4, 2, 1)) == Lists{{1, 2}, {1, 3}, {1, 4}});
  CHECK(build_trivial(6, 3, 2).size() == 4);
  CHECK(count_triangles(build_trivial(7, 3, 1), 2, 1) == 0);
  CHECK(count_triangles(build_trivial(7, 4, 1), 3, 1) == 0);
  CHECK_THROWS_AS(build_trivial(4, 2, 3), UsageError);
}

TEST_CASE("build_frankl") {
  // (C(n-t,k-t) - C(n-ell,k-t)) + t C(n-ell, k-ell+1)
  auto expected = [](int n, int k, int t, int ell) {
    return binomial(n - t, k - t) - binomial(n - ell, k - t) + BigInt(t) * binomial(n - ell, k - ell + 1);
  };
  CHECK(build_frankl(12, 4, 1, 5).size() == 131);
  CHECK(build_frankl(81, 3, 1, 4).size() == 235);
  for (int t = 1; t <= 2; ++t) {
    for (int k = t + 2; k <= 6; ++k) {
      for (int ell = t + 2; ell <= k + 1; ++ell) {
        const Family f = build_frankl(11, k, t, ell);
        CHECK(BigInt(f.size()) == expected(11, k, t, ell));
        CHECK(is_r_wise_t_intersecting(f, 2, t));
      }
    }
  }
  CHECK_THROWS_AS(build_frankl(12, 4, 1, 2), UsageError);
  CHECK_THROWS_AS(build_frankl(12, 4, 1, 6), UsageError);
}

TEST_CASE("frankl at ell = t+2 is G'_{2,t}") {
  for (int t = 1; t <= 2; ++t) {
    for (int k = t + 2; k <= 5; ++k) CHECK(build_frankl(10, k, t, t + 2) == build_Gprime(Params{10, k, 2, t}));
  }
}

TEST_CASE("build_two_cover") {
  // Sizes from an independent enumeration.
  CHECK(build_two_cover(12, 4, 1).size() == 103);
  CHECK(build_two_cover(12, 4, 2).size() == 22);
  CHECK(build_two_cover(12, 5, 2).size() == 101);
  CHECK(build_two_cover(81, 3, 1).size() == 160);
  const Family f = build_two_cover(12, 4, 2);
  CHECK(is_r_wise_t_intersecting(f, 2, 2));
  CHECK(is_maximal(f, 2, 2));
  CHECK(lists(min_covers(f, 2)) == Lists{{1, 2, 3}, {1, 2, 4}});
  CHECK_THROWS_AS(build_two_cover(5, 4, 1), UsageError);
  CHECK_THROWS_AS(build_two_cover(12, 2, 1), UsageError);
}

TEST_CASE("build_two_block") {
  const Family f = build_two_block(Params{10, 7, 2, 2});
  CHECK(f.size() == 40);
  CHECK(is_r_wise_t_intersecting(f, 2, 2));
  CHECK(count_triangles(f, 2, 2) == 0);
  CHECK(build_two_block(Params{8, 6, 2, 2}).size() == 16);
  CHECK(two_block_zero_guarantee(2));
  CHECK_FALSE(two_block_zero_guarantee(1));
  CHECK_THROWS_AS(build_two_block(Params{7, 6, 2, 2}), UsageError);
  CHECK_THROWS_AS(build_two_block(Params{10, 5, 2, 2}), UsageError);
}
