#include <doctest.h>

#include "rwise/errors.hpp"
#include "rwise/subset.hpp"

using namespace rwise;

TEST_CASE("subset basics") {
  Subset s{1, 3, 128};
  CHECK(s.size() == 3);
  CHECK(s.contains(128));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min_element() == 1);
  CHECK(s.max_element() == 128);
  CHECK(s.to_string() == "{1,3,128}");
  s.erase(128);
  CHECK(s.elements() == std::vector<int>{1, 3});
  CHECK(Subset().min_element() == 0);
  CHECK_THROWS_AS(s.insert(0), UsageError);
  CHECK_THROWS_AS(s.insert(129), UsageError);
}

TEST_CASE("prefix and range") {
  CHECK(Subset::prefix(3) == Subset{1, 2, 3});
  CHECK(Subset::prefix(0).empty());
  CHECK(Subset::range(4, 6) == Subset{4, 5, 6});
  CHECK(Subset::range(6, 4).empty());
  CHECK(Subset::prefix(128).size() == 128);
  CHECK(Subset::range(60, 70).size() == 11);
}

TEST_CASE("set algebra and order") {
  const Subset a{1, 2, 3}, b{2, 3, 4};
  CHECK((a & b) == Subset{2, 3});
  CHECK((a | b) == Subset{1, 2, 3, 4});
  CHECK((a - b) == Subset{1});
  CHECK(intersection_size(a, b) == 2);
  CHECK(Subset{2, 3}.is_subset_of(a));
  // Bit-vector order: {1,2,3} = 7 < {1,2,4} = 11 < {3,4} = 12.
  CHECK(a < Subset{1, 2, 4});
  CHECK(Subset{1, 2, 4} < Subset{3, 4});
}

TEST_CASE("k-subset enumeration") {
  std::vector<Subset> seen;
  for_each_k_subset(5, 2, [&](const Subset& s) {
    seen.push_back(s);
    return true;
  });
  CHECK(seen.size() == 10);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == Subset{1, 2});
  CHECK(seen.back() == Subset{4, 5});

  // Pool enumeration over scattered elements, and early stop.
  const auto pool = k_subsets(Subset{2, 7, 9, 100}, 3);
  CHECK(pool.size() == 4);
  CHECK(pool.front() == Subset{2, 7, 9});
  int visits = 0;
  CHECK_FALSE(for_each_k_subset(10, 3, [&](const Subset&) { return ++visits < 5; }));
  CHECK(visits == 5);
  CHECK(k_subsets(Subset::prefix(4), 0).size() == 1);
  CHECK(k_subsets(Subset::prefix(4), 5).empty());
  // Across the 64-bit word boundary.
  CHECK(k_subsets(Subset::range(60, 70), 4).size() == 330);
}

TEST_CASE("choose_u64 saturates") {
  CHECK(choose_u64(10, 3) == 120);
  CHECK(choose_u64(5, 7) == 0);
  CHECK(choose_u64(128, 64) == UINT64_MAX);
}

TEST_CASE("relabel") {
  std::vector<int> perm{0, 3, 1, 2};  // 1->3, 2->1, 3->2
  CHECK(relabel(Subset{1, 2}, perm) == Subset{1, 3});
}
