#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcif/error.hpp"
#include "lcif/genfam.hpp"
#include "lcif/setcore.hpp"
#include "lcif/sicheck.hpp"

namespace lcif {

// ---------------------------------------------------------------------------
// Named families.

/// "star": members containing 1. "a23": members meeting {1,2,3} in at least
/// two elements. "hm": star members meeting [2, k+1], plus [2, k+1] itself.
inline SetFamily named_family(std::string_view name, const GroundContext& ctx) {
  const int k = ctx.k();
  std::uint64_t low3 = SortedSet::bit(1) | SortedSet::bit(2) | SortedSet::bit(3);
  std::uint64_t hm_block = 0;
  for (Element x = 2; x <= k + 1; ++x) hm_block |= SortedSet::bit(x);

  auto member = [&](const KSet& a) {
    if (name == "star") return a.contains(1);
    if (name == "a23") return std::popcount(a.mask() & low3) >= 2;
    return (a.contains(1) && (a.mask() & hm_block) != 0) ||
           a.mask() == hm_block;
  };
  if (name != "star" && name != "a23" && name != "hm") {
    throw DomainError("unknown family name '" + std::string(name) +
                      "' (expected star, a23 or hm)");
  }
  std::vector<KSet> out;
  for (KSet& a : all_ksets(ctx)) {
    if (member(a)) out.push_back(std::move(a));
  }
  return SetFamily(ctx, std::move(out));
}

// ---------------------------------------------------------------------------
// Maximality.

struct MaximalityVerdict {
  bool is_maximal = true;
  std::optional<KSet> blocker;  // first addable k-set when not maximal
};

inline MaximalityVerdict is_maximal_intersecting(const SetFamily& f) {
  if (f.empty()) throw DomainError("maximality of an empty family");
  if (auto d = find_disjoint_members(f)) {
    throw PreconditionError("family is not intersecting: " +
                            to_string(d->first) + " and " +
                            to_string(d->second) + " are disjoint");
  }
  MaximalityVerdict out;
  for_each_kset(f.context(), [&](std::span<const Element> s) {
    if (out.blocker) return;
    SortedSet c(std::vector<Element>(s.begin(), s.end()));
    if (f.contains(c)) return;
    bool addable = std::all_of(f.begin(), f.end(),
                               [&](const KSet& a) { return a.intersects(c); });
    if (addable) {
      out.is_maximal = false;
      out.blocker.emplace(f.context(), c.to_vector());
    }
  });
  return out;
}

/// Necessary condition on generators of a maximal left-compressed
/// intersecting family: G ⊆ [k + |G| - 1].
inline bool lemma31_check(const GeneratorSet& g, const GroundContext& ctx) {
  return g.back() <= ctx.k() + static_cast<int>(g.size()) - 1;
}

// ---------------------------------------------------------------------------
// Greedy extension.

namespace detail {

inline void require_lcif(const SetFamily& f) {
  if (f.empty()) throw DomainError("extension of an empty family");
  if (auto v = find_downclosure_violation(f)) {
    throw PreconditionError("family is not left-compressed: " +
                            to_string(v->member) + " is a member but " +
                            to_string(v->missing) + " is not");
  }
  if (auto d = find_disjoint_members(f)) {
    throw PreconditionError("family is not intersecting: " +
                            to_string(d->first) + " and " +
                            to_string(d->second) + " are disjoint");
  }
}

// Members of L(c) not yet in f, or nullopt when adding L(c) would break
// the intersecting property.
inline std::optional<std::vector<KSet>> addable_closure(const SetFamily& f,
                                                        const KSet& c) {
  std::vector<KSet> fresh;
  for (const KSet& s : lower_closure(c, f.context())) {
    if (!f.contains(s)) fresh.push_back(s);
  }
  for (std::size_t p = 0; p < fresh.size(); ++p) {
    for (const KSet& a : f) {
      if (!a.intersects(fresh[p])) return std::nullopt;
    }
    for (std::size_t q = p + 1; q < fresh.size(); ++q) {
      if (!fresh[p].intersects(fresh[q])) return std::nullopt;
    }
  }
  return fresh;
}

}  // namespace detail

/// Scans all k-sets in lexicographic order and adds the closure L(C)
/// whenever the family stays intersecting. A rejected closure conflicts with
/// members that stay, so one pass leaves no addable closure.
inline SetFamily greedy_extend(const SetFamily& f) {
  detail::require_lcif(f);
  SetFamily cur = f;
  for (const KSet& c : all_ksets(f.context())) {
    if (cur.contains(c)) continue;
    if (auto fresh = detail::addable_closure(cur, c)) {
      cur = unite(cur, SetFamily(cur.context(), std::move(*fresh)));
    }
  }
  return cur;
}

/// First k-set whose closure could still be added, if any.
inline std::optional<KSet> find_addable_closure(const SetFamily& f) {
  for (const KSet& c : all_ksets(f.context())) {
    if (f.contains(c)) continue;
    if (detail::addable_closure(f, c)) return c;
  }
  return std::nullopt;
}

struct ExtensionAudit {
  SetFamily family;
  MaximalityVerdict maximality;
  std::optional<std::string> finding;
};

/// Runs greedy_extend and tests the result for maximality among all
/// intersecting families. A closure-saturated result that still admits a
/// k-set is reported as a finding.
inline ExtensionAudit extend_and_audit(const SetFamily& f) {
  auto ext = greedy_extend(f);
  auto verdict = is_maximal_intersecting(ext);
  std::optional<std::string> finding;
  if (!verdict.is_maximal) {
    finding = "closure-saturated-not-maximal: greedy extension admits " +
              to_string(*verdict.blocker);
  }
  return ExtensionAudit{std::move(ext), std::move(verdict),
                        std::move(finding)};
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration.

struct MlcifEntry {
  SetFamily family;
  GeneratorCollection generators;  // k-set antichain
  GeneratorCollection reduced;     // pi of the antichain; same family
};

struct MlcifCatalogue {
  GroundContext context;
  std::vector<MlcifEntry> families;
};

namespace detail {

class Bits {
 public:
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) {
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] |= o.words_[w];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~o.words_[w];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t x = words_[w]; x != 0; x &= x - 1) {
        f(w * 64 + std::countr_zero(x));
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Bron-Kerbosch with Tomita pivoting; outer level in degeneracy order.
class MaximalCliques {
 public:
  explicit MaximalCliques(std::vector<Bits> adj) : adj_(std::move(adj)) {}

  template <class F>
  void run(F&& report) {
    const std::size_t v = adj_.size();
    std::vector<std::size_t> order = degeneracy_order();
    std::vector<std::size_t> pos(v);
    for (std::size_t i = 0; i < v; ++i) pos[order[i]] = i;
    std::vector<std::size_t> clique;
    for (std::size_t i = 0; i < v; ++i) {
      const std::size_t u = order[i];
      Bits p(v), x(v);
      adj_[u].for_each([&](std::size_t w) {
        if (pos[w] > i) p.set(w); else x.set(w);
      });
      clique.assign(1, u);
      expand(clique, std::move(p), std::move(x), report);
    }
  }

 private:
  std::vector<std::size_t> degeneracy_order() const {
    const std::size_t v = adj_.size();
    std::vector<std::size_t> degree(v);
    for (std::size_t i = 0; i < v; ++i) degree[i] = adj_[i].count();
    std::vector<bool> removed(v, false);
    std::vector<std::size_t> order;
    order.reserve(v);
    for (std::size_t step = 0; step < v; ++step) {
      std::size_t best = v;
      for (std::size_t i = 0; i < v; ++i) {
        if (!removed[i] && (best == v || degree[i] < degree[best])) best = i;
      }
      removed[best] = true;
      order.push_back(best);
      adj_[best].for_each([&](std::size_t w) {
        if (!removed[w]) --degree[w];
      });
    }
    return order;
  }

  template <class F>
  void expand(std::vector<std::size_t>& clique, Bits p, Bits x, F& report) {
    if (p.none()) {
      if (x.none()) report(clique);
      return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    (p | x).for_each([&](std::size_t u) {
      std::size_t c = (p & adj_[u]).count();
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    });
    Bits candidates = p.minus(adj_[pivot]);
    candidates.for_each([&](std::size_t w) {
      clique.push_back(w);
      expand(clique, p & adj_[w], x & adj_[w], report);
      clique.pop_back();
      p.reset(w);
      x.set(w);
    });
  }

  std::vector<Bits> adj_;
};

}  // namespace detail

inline constexpr std::size_t kDefaultEnumerationBudget = 40;

/// Every maximal left-compressed intersecting family over ctx: maximal
/// cliques of the intersection graph on k-sets that are down-closed, each
/// with its generator antichain, ordered by generator collection.
inline MlcifCatalogue enumerate_mlcif(
    const GroundContext& ctx,
    std::size_t budget = kDefaultEnumerationBudget) {
  auto vertices = all_ksets(ctx);
  if (vertices.size() > budget) {
    throw BudgetExceeded("enumeration over " + std::to_string(vertices.size()) +
                         " k-sets exceeds the budget of " +
                         std::to_string(budget));
  }
  const std::size_t v = vertices.size();
  std::vector<detail::Bits> adj(v, detail::Bits(v));
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (vertices[a].intersects(vertices[b])) {
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  }
  MlcifCatalogue out{ctx, {}};
  detail::MaximalCliques(std::move(adj))
      .run([&](const std::vector<std::size_t>& clique) {
        std::vector<KSet> members;
        members.reserve(clique.size());
        for (auto idx : clique) members.push_back(vertices[idx]);
        SetFamily fam(ctx, std::move(members));
        if (!is_left_compressed_downclosed(fam)) return;
        auto gens = extract_generators(fam);
        auto reduced = pi_collection(gens);
        out.families.push_back(
            MlcifEntry{std::move(fam), std::move(gens), std::move(reduced)});
      });
  std::sort(out.families.begin(), out.families.end(),
            [](const MlcifEntry& a, const MlcifEntry& b) {
              return std::lexicographical_compare(
                  a.generators.begin(), a.generators.end(),
                  b.generators.begin(), b.generators.end());
            });
  return out;
}

}  // namespace lcif
