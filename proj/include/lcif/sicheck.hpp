#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcif/detail/parallel.hpp"
#include "lcif/error.hpp"
#include "lcif/setcore.hpp"

namespace lcif {

/// Outcome of the counting criterion for one generator pair. When it holds,
/// `level` is the smallest l with mu(G,l) + mu(H,l) > l.
struct CriterionVerdict {
  bool holds = false;
  std::optional<int> level;
};

/// G and H are strongly intersecting iff mu(G,l) + mu(H,l) > l for some l in
/// [1, n]. Both counts are constant past max(G ∪ H), so the scan stops there.
inline CriterionVerdict criterion(const SortedSet& g, const SortedSet& h,
                                  const GroundContext& ctx) {
  if (g.empty() || h.empty()) throw DomainError("criterion on an empty set");
  const int last = std::min<int>(ctx.n(), std::max(g.back(), h.back()));
  for (int l = 1; l <= last; ++l) {
    if (count_at_most(g, l) + count_at_most(h, l) > l) {
      return CriterionVerdict{true, l};
    }
  }
  return CriterionVerdict{};
}

/// Exhaustive search for G' <= G and H' <= H with G' ∩ H' = ∅.
inline std::optional<std::pair<SortedSet, SortedSet>> find_disjoint_dominated(
    const SortedSet& g, const SortedSet& h) {
  std::vector<std::pair<std::vector<Element>, std::uint64_t>> lower_h;
  for_each_dominated(h.elements(), [&](std::span<const Element> s) {
    std::uint64_t m = 0;
    for (Element x : s) m |= SortedSet::bit(x);
    lower_h.emplace_back(std::vector<Element>(s.begin(), s.end()), m);
  });
  std::optional<std::pair<SortedSet, SortedSet>> found;
  for_each_dominated(g.elements(), [&](std::span<const Element> s) {
    if (found) return;
    std::uint64_t m = 0;
    for (Element x : s) m |= SortedSet::bit(x);
    for (const auto& [elems, mask] : lower_h) {
      if ((m & mask) == 0) {
        found.emplace(SortedSet(std::vector<Element>(s.begin(), s.end())),
                      SortedSet(elems));
        return;
      }
    }
  });
  return found;
}

/// Strong intersection decided straight from its definition.
inline bool strongly_intersecting_oracle(const SortedSet& g,
                                         const SortedSet& h) {
  return !find_disjoint_dominated(g, h).has_value();
}

// ---------------------------------------------------------------------------
// Disjoint-witness construction.

struct WitnessLevel {
  int level;
  int x;  // mu(G, level)
  int y;  // mu(H, level)
  int z;  // x + y
  SortedSet g_part;
  SortedSet h_part;
};

/// Certificate that G and H are not strongly intersecting: the level-by-level
/// build of G_l <= G∩[l], H_l <= H∩[l] partitioning [z_l], and the padded
/// disjoint pair A ⪯ G, B ⪯ H.
struct WitnessTrace {
  std::vector<WitnessLevel> levels;
  int m;
  KSet a;
  KSet b;
};

/// Requires the criterion to fail (z_l <= l at every level).
///
/// At each level l+1:
///   - l+1 outside G ∪ H: both parts carry over;
///   - l+1 in exactly one of G, H: that side gains z_{l+1};
///   - l+1 in both: the G side gains z_l + 1, the H side gains z_l + 2.
/// The parts are then padded with the smallest unused elements of
/// [z_m + 1, n], the G side first.
inline WitnessTrace witness_construct(const GeneratorSet& g,
                                      const GeneratorSet& h,
                                      const GroundContext& ctx) {
  if (auto v = criterion(g, h, ctx); v.holds) {
    throw PreconditionError("pair (" + to_string(g) + "," + to_string(h) +
                            ") satisfies the criterion at level " +
                            std::to_string(*v.level) +
                            "; no disjoint witness exists");
  }
  const int m = std::max(g.back(), h.back());
  std::vector<Element> gp;
  std::vector<Element> hp;
  std::vector<WitnessLevel> levels;
  levels.reserve(m);
  int z = 0;
  for (int l = 1; l <= m; ++l) {
    const bool in_g = g.contains(l);
    const bool in_h = h.contains(l);
    if (in_g && in_h) {
      gp.push_back(z + 1);
      hp.push_back(z + 2);
      z += 2;
    } else if (in_g) {
      gp.push_back(++z);
    } else if (in_h) {
      hp.push_back(++z);
    }
    levels.push_back(WitnessLevel{l, count_at_most(g, l), count_at_most(h, l),
                                  z, SortedSet(gp), SortedSet(hp)});
  }
  const int k = ctx.k();
  const int need = (k - static_cast<int>(g.size())) +
                   (k - static_cast<int>(h.size()));
  if (z + need > ctx.n()) {
    throw DomainError("no room to pad the witness pair inside [" +
                      std::to_string(ctx.n()) + "]");
  }
  Element next = z + 1;
  while (static_cast<int>(gp.size()) < k) gp.push_back(next++);
  while (static_cast<int>(hp.size()) < k) hp.push_back(next++);
  return WitnessTrace{std::move(levels), m, KSet(ctx, std::move(gp)),
                      KSet(ctx, std::move(hp))};
}

// ---------------------------------------------------------------------------
// Collections.

struct PairResult {
  std::size_t first;
  std::size_t second;
  CriterionVerdict verdict;
};

struct PairFailure {
  std::size_t first;
  std::size_t second;
  WitnessTrace trace;
};

struct CollectionVerdict {
  bool passes = true;
  std::vector<PairResult> pairs;  // (i, j) with i <= j in collection order
  std::optional<PairFailure> first_failure;
};

/// F(G) is intersecting iff every pair of generators, each generator paired
/// with itself included, satisfies the criterion. On failure the first
/// failing pair in collection order carries its witness trace.
inline CollectionVerdict check_collection(const GeneratorCollection& gc,
                                          unsigned threads = 1) {
  if (gc.empty()) throw DomainError("check_collection of an empty collection");
  CollectionVerdict out;
  for (std::size_t i = 0; i < gc.size(); ++i) {
    for (std::size_t j = i; j < gc.size(); ++j) {
      out.pairs.push_back(PairResult{i, j, {}});
    }
  }
  detail::parallel_for(out.pairs.size(), threads, [&](std::size_t p) {
    auto& pr = out.pairs[p];
    pr.verdict = criterion(gc[pr.first], gc[pr.second], gc.context());
  });
  for (const auto& pr : out.pairs) {
    if (!pr.verdict.holds) {
      out.passes = false;
      out.first_failure.emplace(PairFailure{
          pr.first, pr.second,
          witness_construct(gc[pr.first], gc[pr.second], gc.context())});
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force family checks.

inline std::optional<std::pair<KSet, KSet>> find_disjoint_pair(
    const SetFamily& f1, const SetFamily& f2) {
  if (!(f1.context() == f2.context())) {
    throw DomainError("families over different ground contexts");
  }
  for (const KSet& a : f1) {
    for (const KSet& b : f2) {
      if (!a.intersects(b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

inline bool cross_intersecting_oracle(const SetFamily& f1,
                                      const SetFamily& f2) {
  return !find_disjoint_pair(f1, f2).has_value();
}

inline std::optional<std::pair<KSet, KSet>> find_disjoint_members(
    const SetFamily& f) {
  if (f.empty()) throw DomainError("intersecting check of an empty family");
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!f[i].intersects(f[j])) return std::pair{f[i], f[j]};
    }
  }
  return std::nullopt;
}

inline bool is_intersecting_family(const SetFamily& f) {
  return !find_disjoint_members(f).has_value();
}

// ---------------------------------------------------------------------------
// Index condition on k-sets.

/// First (i, j), 1-based, with i + j > max(a_i, b_j).
inline std::optional<std::pair<int, int>> bond_indices(const SortedSet& a,
                                                       const SortedSet& b) {
  if (a.size() != b.size()) {
    throw DomainError("bond_condition compares sets of equal size");
  }
  const int k = static_cast<int>(a.size());
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i + j > std::max(a[i - 1], b[j - 1])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

inline bool bond_condition(const SortedSet& a, const SortedSet& b) {
  return bond_indices(a, b).has_value();
}

/// The variant with i + j >= max(a_i, b_j). It does not characterize strong
/// intersection ({2,4} with itself satisfies it at i = j = 1); kept for
/// comparison only.
inline bool bond_condition_nonstrict(const SortedSet& a, const SortedSet& b) {
  if (a.size() != b.size()) {
    throw DomainError("bond_condition compares sets of equal size");
  }
  const int k = static_cast<int>(a.size());
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i + j >= std::max(a[i - 1], b[j - 1])) return true;
    }
  }
  return false;
}

}  // namespace lcif
