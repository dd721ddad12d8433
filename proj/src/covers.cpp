#include "rwise/covers.hpp"

#include <algorithm>

#include "rwise/constructions.hpp"
#include "rwise/errors.hpp"
#include "rwise/predicates.hpp"

namespace rwise {

namespace {

// Branching search for t-covers of size <= budget. Any cover C ⊇ T must hold at
// least t - |T ∩ F| elements of every member F, so we branch on the elements of
// the most demanding unsatisfied member. Branch i forbids the elements tried in
// branches 1..i-1, which makes every cover reachable along exactly one path.
class CoverSearch {
 public:
  CoverSearch(std::span<const Subset> members, int t) : members_(members), t_(t) {}

  // Collects covers found with at most `budget` elements; stops after the first
  // when `first_only`.
  void run(int budget, bool first_only) {
    budget_ = budget;
    first_only_ = first_only;
    found_.clear();
    descend(Subset{}, Subset{});
  }

  const std::vector<Subset>& found() const { return found_; }

 private:
  bool descend(Subset chosen, Subset forbidden) {
    const int room = budget_ - chosen.size();
    const Subset* pick = nullptr;
    int pick_need = 0;
    int pick_options = 0;
    for (const Subset& f : members_) {
      const int need = t_ - intersection_size(f, chosen);
      if (need <= 0) continue;
      const int options = (f - chosen - forbidden).size();
      if (need > room || options < need) return true;  // dead end
      if (pick == nullptr || need > pick_need || (need == pick_need && options < pick_options)) {
        pick = &f;
        pick_need = need;
        pick_options = options;
      }
    }
    if (pick == nullptr) {
      found_.push_back(chosen);
      return !first_only_;
    }
    for (int e : (*pick - chosen - forbidden).elements()) {
      Subset next = chosen;
      next.insert(e);
      if (!descend(next, forbidden)) return false;
      forbidden.insert(e);
    }
    return true;
  }

  std::span<const Subset> members_;
  int t_;
  int budget_ = 0;
  bool first_only_ = false;
  std::vector<Subset> found_;
};

void require_nonempty(const Family& fam, int t) {
  if (fam.empty()) throw UsageError("covering number of an empty family is undefined");
  if (t < 1) throw UsageError("t must be at least 1");
}

// Relabeling sending `ordered` to 1, 2, ... and every other element after them
// in increasing order.
std::vector<int> front_loading_perm(int n, const std::vector<int>& ordered) {
  std::vector<int> perm(static_cast<std::size_t>(n) + 1, 0);
  int next = 1;
  for (int e : ordered) perm[static_cast<std::size_t>(e)] = next++;
  for (int e = 1; e <= n; ++e) {
    if (perm[static_cast<std::size_t>(e)] == 0) perm[static_cast<std::size_t>(e)] = next++;
  }
  return perm;
}

std::vector<Subset> relabel_all(const std::vector<Subset>& sets, const std::vector<int>& perm) {
  std::vector<Subset> out;
  out.reserve(sets.size());
  for (const Subset& s : sets) out.push_back(relabel(s, perm));
  std::sort(out.begin(), out.end());
  return out;
}

// {[t] ∪ {j} : j in [t+1, ell]}.
std::vector<Subset> star_pattern(int t, int ell) {
  std::vector<Subset> out;
  for (int j = t + 1; j <= ell; ++j) {
    Subset s = Subset::prefix(t);
    s.insert(j);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_t_cover(const Subset& cover, const Family& fam, int t) {
  return std::all_of(fam.begin(), fam.end(), [&](const Subset& f) { return intersection_size(cover, f) >= t; });
}

int covering_number(const Family& fam, int t) {
  require_nonempty(fam, t);
  if (fam.k() < t) throw UsageError("no t-cover exists when t > k");
  CoverSearch search(fam.members(), t);
  for (int size = t; size <= fam.n(); ++size) {
    search.run(size, true);
    if (!search.found().empty()) return search.found().front().size();
  }
  throw InconsistencyError("no t-cover found within [n]");
}

std::vector<Subset> min_covers(const Family& fam, int t) {
  const int tau = covering_number(fam, t);
  CoverSearch search(fam.members(), t);
  search.run(tau, false);
  std::vector<Subset> covers = search.found();
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<Subset> covers_up_to(const Family& fam, int t, int max_size) {
  std::uint64_t total = 0;
  for (int s = 0; s <= std::min(max_size, fam.n()); ++s) total += choose_u64(fam.n(), s);
  if (total > kMaxCandidateScan) throw UsageError("too many candidate covers to list");
  std::vector<Subset> out;
  for (int s = 0; s <= std::min(max_size, fam.n()); ++s) {
    for_each_k_subset(fam.n(), s, [&](const Subset& c) {
      if (is_t_cover(c, fam, t)) out.push_back(c);
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(CoverPattern pattern) {
  switch (pattern) {
    case CoverPattern::Trivial: return "Trivial";
    case CoverPattern::FullSimplex: return "FullSimplex";
    case CoverPattern::Case1: return "Case1";
    case CoverPattern::Case2: return "Case2";
    case CoverPattern::Case3: return "Case3";
    case CoverPattern::Unclassified: return "Unclassified";
  }
  return "?";
}

CoverReport classify_cover_family(const Family& fam, int t, int r) {
  if (r != 2) throw UsageError("cover classification applies to 2-wise t-intersecting families only");
  require_nonempty(fam, t);
  if (!is_r_wise_t_intersecting(fam, 2, t)) throw PreconditionError("family is not t-intersecting");
  if (!is_maximal(fam, 2, t)) throw PreconditionError("cover classification needs a maximal family");

  CoverReport report;
  report.min_covers = min_covers(fam, t);
  report.tau = report.min_covers.front().size();
  const auto& covers = report.min_covers;
  for (std::size_t i = 0; i < covers.size() && report.covers_t_intersecting; ++i) {
    for (std::size_t j = i + 1; j < covers.size(); ++j) {
      if (intersection_size(covers[i], covers[j]) < t) {
        report.covers_t_intersecting = false;
        break;
      }
    }
  }

  if (report.tau == t) {
    report.classification = CoverPattern::Trivial;
    report.core = covers.front();
    return report;
  }
  if (report.tau >= t + 2) {
    report.classification = CoverPattern::Unclassified;
    return report;
  }

  Subset common = covers.front();
  Subset support;
  for (const Subset& c : covers) {
    common &= c;
    support |= c;
  }
  const int n = fam.n();

  if (common.size() >= t) {
    // τ_t of the cover family is t: a t-core plus one extra element each.
    std::vector<int> core = common.elements();
    if (covers.size() == 1) core.resize(static_cast<std::size_t>(t));
    Subset core_set(core);
    std::vector<int> order = core;
    for (int e : (support - core_set).elements()) order.push_back(e);
    report.witness = front_loading_perm(n, order);
    report.core = core_set;
    const int ell = t + static_cast<int>(covers.size());
    std::vector<Subset> pattern = covers.size() == 1 ? std::vector<Subset>{Subset::prefix(t + 1)} : star_pattern(t, ell);
    if (relabel_all(covers, report.witness) != pattern) {
      throw InconsistencyError("minimum covers share a t-core but do not form a star pattern");
    }
    if (covers.size() == 1) {
      report.classification = CoverPattern::Case1;
    } else if (covers.size() == 2) {
      report.classification = CoverPattern::Case2;
    } else {
      report.classification = CoverPattern::Case3;
      report.ell = ell;
    }
    return report;
  }

  // τ_t of the cover family is t+1: only the full simplex on t+2 points fits.
  if (support.size() == t + 2 && covers.size() == static_cast<std::size_t>(t) + 2) {
    report.witness = front_loading_perm(n, support.elements());
    if (relabel_all(covers, report.witness) != k_subsets(Subset::prefix(t + 2), t + 1)) {
      throw InconsistencyError("full-simplex cover family failed relabeling check");
    }
    const Family image = fam.relabeled(report.witness);
    if (image != build_Gprime(Params{n, fam.k(), 2, t})) {
      throw InconsistencyError("covers form a full simplex but the family is not G'_{2,t}");
    }
    report.classification = CoverPattern::FullSimplex;
    return report;
  }
  throw InconsistencyError("minimum (t+1)-covers match none of the cover patterns");
}

}  // namespace rwise
