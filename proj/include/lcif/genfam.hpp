#pragma once

#include <string>
#include <vector>

#include "lcif/error.hpp"
#include "lcif/setcore.hpp"

namespace lcif {

/// F(n,k,G): every k-set S with S ⪯ G for some generator G. The result is
/// down-closed whether or not it is intersecting.
inline SetFamily build_family(const GeneratorCollection& gc) {
  const auto& ctx = gc.context();
  std::vector<KSet> out;
  for (const GeneratorSet& g : gc) {
    for_each_kset_preceq(ctx, g.elements(), [&](std::span<const Element> s) {
      out.emplace_back(ctx, std::vector<Element>(s.begin(), s.end()));
    });
  }
  return SetFamily::merged(ctx, std::move(out));
}

/// Generators of a left-compressed family: its maximal k-sets.
inline GeneratorCollection extract_generators(const SetFamily& f) {
  if (f.empty()) throw DomainError("extract_generators of an empty family");
  if (auto v = find_downclosure_violation(f)) {
    throw PreconditionError("family is not left-compressed: " +
                            to_string(v->member) + " is a member but " +
                            to_string(v->missing) + " <= it is not");
  }
  const auto& ctx = f.context();
  std::vector<GeneratorSet> gens;
  for (const KSet& a : maximal_sets(f)) gens.emplace_back(ctx, a.to_vector());
  return GeneratorCollection(ctx, std::move(gens));
}

/// A generator with its type r (largest index with g_r < k + r) and the
/// truncation {g_1, ..., g_r}.
struct TypedGenerator {
  GeneratorSet generator;
  int type_index;
  GeneratorSet truncation;
};

inline TypedGenerator type_of(const GeneratorSet& g, const GroundContext& ctx) {
  const int k = ctx.k();
  if (g.front() > k) {
    throw PreconditionError("generator " + to_string(g) +
                            " incompatible with any intersecting family "
                            "(first element exceeds k=" +
                            std::to_string(k) + ")");
  }
  // g_t >= k + t propagates upward once it holds, so r is the length of the
  // leading run with g_t < k + t.
  int r = 0;
  while (r < static_cast<int>(g.size()) && g[r] < k + r + 1) ++r;
  std::vector<Element> head(g.begin(), g.begin() + r);
  return TypedGenerator{g, r, GeneratorSet(ctx, std::move(head))};
}

/// Keeps the ⪯-maximal generators. F(G) ⊆ F(H) whenever G ⪯ H, so the
/// built family is unchanged.
inline GeneratorCollection prune_dominated(const GeneratorCollection& gc) {
  std::vector<GeneratorSet> keep;
  for (const GeneratorSet& g : gc) {
    bool dominated = std::any_of(gc.begin(), gc.end(), [&](const auto& h) {
      return h != g && preceq(g, h);
    });
    if (!dominated) keep.push_back(g);
  }
  return GeneratorCollection(gc.context(), std::move(keep));
}

/// π(G): every generator truncated to its type, deduplicated and pruned.
inline GeneratorCollection pi_collection(const GeneratorCollection& gc) {
  std::vector<GeneratorSet> out;
  out.reserve(gc.size());
  for (const GeneratorSet& g : gc) {
    out.push_back(type_of(g, gc.context()).truncation);
  }
  return prune_dominated(
      GeneratorCollection::merged(gc.context(), std::move(out)));
}

}  // namespace lcif
