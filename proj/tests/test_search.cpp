#include <doctest.h>

#include <random>
#include <set>

#include "rwise/constructions.hpp"
#include "rwise/covers.hpp"
#include "rwise/errors.hpp"
#include "rwise/formulas.hpp"
#include "rwise/predicates.hpp"
#include "rwise/search.hpp"
#include "support.hpp"

using namespace rwise;
using testing::fam;

namespace {

// Isomorphism-class representatives of all maximal t-intersecting families,
// by brute force over every subfamily and every permutation of [n].
std::vector<Family> brute_maximal_classes(int n, int k, int t) {
  const std::vector<Subset> all = k_subsets(Subset::prefix(n), k);
  const std::size_t m = all.size();
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    std::vector<int> perm{0};
    perm.insert(perm.end(), p.begin(), p.end());
    perms.push_back(perm);
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<std::vector<Subset>> seen;
  std::vector<Family> reps;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<Subset> members;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) members.push_back(all[i]);
    }
    bool ok = true;
    for (std::size_t a = 0; a < members.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < members.size() && ok; ++b) ok = intersection_size(members[a], members[b]) >= t;
    }
    if (!ok) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < m && maximal; ++i) {
      if (mask & (1u << i)) continue;
      bool fits = true;
      for (const Subset& s : members) fits = fits && intersection_size(s, all[i]) >= t;
      if (fits) maximal = false;
    }
    if (!maximal) continue;
    if (seen.count(members)) continue;
    reps.emplace_back(n, k, members);
    for (const auto& perm : perms) {
      std::vector<Subset> image;
      for (const Subset& s : members) image.push_back(relabel(s, perm));
      std::sort(image.begin(), image.end());
      seen.insert(image);
    }
  }
  return reps;
}

std::multiset<std::pair<std::size_t, std::string>> class_profile(const std::vector<Family>& classes, int t) {
  std::multiset<std::pair<std::size_t, std::string>> out;
  for (const Family& f : classes) out.insert({f.size(), count_triangles(f, 2, t).str()});
  return out;
}

}  // namespace

TEST_CASE("canonical_form") {
  const Family a = fam(6, 2, {{1, 2}, {1, 3}, {2, 3}});
  const Family b = fam(6, 2, {{4, 5}, {4, 6}, {5, 6}});
  const Family star = fam(6, 2, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(a) != canonical_form(star));
  CHECK(canonical_form(a) != canonical_form(fam(7, 2, {{1, 2}, {1, 3}, {2, 3}})));
  CHECK(canonical_form(Family(5, 2)) == canonical_form(Family(5, 2)));
}

TEST_CASE("canonical_form is invariant under random relabeling") {
  std::mt19937_64 rng(17);
  const std::vector<Family> families{build_G(Params{7, 4, 2, 1}), saturate(build_frankl(9, 4, 1, 4), 2, 1),
                                     build_two_block(Params{10, 7, 2, 2}), build_trivial(16, 2, 1),
                                     saturate(Family(6, 3), 2, 1)};
  for (const Family& f : families) {
    const std::string base = canonical_form(f);
    for (int i = 0; i < 20; ++i) CHECK(canonical_form(f.relabeled(testing::random_perm(rng, f.n()))) == base);
  }
}

TEST_CASE("canonical_form separates non-isomorphic random families") {
  // Brute-force isomorphism on [6] as the reference.
  std::mt19937_64 rng(8);
  std::vector<int> p{1, 2, 3, 4, 5, 6};
  std::vector<std::vector<int>> perms;
  do {
    std::vector<int> perm{0};
    perm.insert(perm.end(), p.begin(), p.end());
    perms.push_back(perm);
  } while (std::next_permutation(p.begin(), p.end()));
  for (int i = 0; i < 150; ++i) {
    const Family f = testing::random_family(rng, 6, 3, testing::between(rng, 1, 6));
    const Family g = testing::random_family(rng, 6, 3, static_cast<int>(f.size()));
    if (f.size() != g.size()) continue;
    bool iso = false;
    for (const auto& perm : perms) {
      if (f.relabeled(perm) == g) {
        iso = true;
        break;
      }
    }
    CHECK((canonical_form(f) == canonical_form(g)) == iso);
  }
}

TEST_CASE("invariant_fingerprint is relabeling invariant") {
  std::mt19937_64 rng(1);
  const Family f = build_G(Params{8, 4, 2, 2});
  CHECK(invariant_fingerprint(f) == invariant_fingerprint(f.relabeled(testing::random_perm(rng, 8))));
  CHECK(invariant_fingerprint(f) != invariant_fingerprint(build_Gprime(Params{8, 4, 2, 2})));
}

TEST_CASE("enumerate_maximal_r2 for k = 2") {
  for (int n : {5, 8, 16}) {
    EnumerationStats stats;
    const auto classes = enumerate_maximal_r2(n, 2, 1, {}, &stats);
    CHECK(classes.size() == 2);
    CHECK_FALSE(stats.approximate_dedup);
    std::multiset<std::pair<std::size_t, std::string>> want{{3, "1"}, {static_cast<std::size_t>(n - 1), "0"}};
    CHECK(class_profile(classes, 1) == want);
  }
}

TEST_CASE("enumerate_maximal_r2 matches subfamily brute force") {
  struct Nkt {
    int n, k, t;
  };
  for (const Nkt& x : {Nkt{4, 2, 1}, Nkt{5, 2, 1}, Nkt{6, 2, 1}, Nkt{4, 3, 2}, Nkt{5, 3, 1}, Nkt{5, 3, 2}, Nkt{6, 3, 2}}) {
    const auto fast = enumerate_maximal_r2(x.n, x.k, x.t);
    const auto slow = brute_maximal_classes(x.n, x.k, x.t);
    CHECK_MESSAGE(fast.size() == slow.size(), x.n, " ", x.k, " ", x.t);
    CHECK(class_profile(fast, x.t) == class_profile(slow, x.t));
    std::set<std::string> forms;
    for (const Family& f : fast) {
      CHECK(is_r_wise_t_intersecting(f, 2, x.t));
      CHECK(is_maximal(f, 2, x.t));
      forms.insert(canonical_form(f));
    }
    CHECK(forms.size() == fast.size());
  }
}

TEST_CASE("enumerate_maximal_r2 gate and callback") {
  CHECK_THROWS_AS(enumerate_maximal_r2(12, 3, 1), UsageError);
  int emitted = 0;
  enumerate_maximal_r2(6, 2, 1, [&](const Family&) { ++emitted; });
  CHECK(emitted == 2);
}

TEST_CASE("exhaustive_search report") {
  const SearchReport rep = exhaustive_search(5, 2, 1);
  CHECK(rep.mode == "exhaustive");
  CHECK(rep.complete);
  CHECK(rep.classes.size() == 2);
  CHECK(rep.best_count == 1);
  CHECK(rep.reference_count == 1);
  CHECK_FALSE(rep.exceedance);
  CHECK(rep.best_family == fam(5, 2, {{1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("stochastic_search basics") {
  SUBCASE("small instance finds the triangle family") {
    const SearchReport rep = stochastic_search(Params{5, 2, 2, 1}, 3, 50);
    CHECK(rep.best_count == 1);
    CHECK_FALSE(rep.complete);
    CHECK(rep.families_examined == 50);
  }
  SUBCASE("zero budget") {
    const SearchReport rep = stochastic_search(Params{9, 3, 2, 1}, 3, 0);
    CHECK(rep.families_examined == 0);
    CHECK(rep.best_family.empty());
    CHECK(rep.best_count == 0);
    CHECK_FALSE(rep.complete);
  }
  SUBCASE("deterministic with one worker") {
    const SearchReport a = stochastic_search(Params{10, 4, 3, 1}, 42, 40);
    const SearchReport b = stochastic_search(Params{10, 4, 3, 1}, 42, 40);
    CHECK(a.best_family == b.best_family);
    CHECK(a.best_count == b.best_count);
    CHECK(a.trivial_shortcuts == b.trivial_shortcuts);
  }
  SUBCASE("workers merge by maximum") {
    const SearchReport rep = stochastic_search(Params{9, 4, 2, 1}, 5, 60, 3);
    CHECK(rep.families_examined == 60);
    CHECK(rep.best_count == count_triangles(rep.best_family, 2, 1));
    CHECK(rep.best_count <= rep.reference_count);
  }
}

TEST_CASE("stochastic_search visits maximal families and shortcuts trivial ones") {
  int visited = 0, shortcuts = 0;
  const Params p{9, 4, 3, 1};
  const SearchReport rep = stochastic_search(p, 7, 40, 1, [&](const Family& f, bool shortcut, const BigInt& count) {
    ++visited;
    CHECK(is_r_wise_t_intersecting(f, p.r, p.t));
    CHECK(is_maximal(f, p.r, p.t));
    const bool trivial = covering_number(f, p.t) == p.t;
    CHECK(shortcut == trivial);
    if (shortcut) {
      ++shortcuts;
      CHECK(count == 0);
    } else {
      CHECK(count == count_triangles(f, p.r, p.t));
    }
  });
  CHECK(visited == 40);
  CHECK(rep.trivial_shortcuts == static_cast<std::uint64_t>(shortcuts));
  CHECK(rep.best_count == count_triangles(rep.best_family, p.r, p.t));
}
