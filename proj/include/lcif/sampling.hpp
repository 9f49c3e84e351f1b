#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lcif/genfam.hpp"
#include "lcif/setcore.hpp"
#include "lcif/shifting.hpp"
#include "lcif/sicheck.hpp"

namespace lcif {

using Rng = std::mt19937_64;

/// Shuffles all k-sets and inserts greedily while the family stays
/// intersecting, stopping at `max_size` members (0 = no cap, which yields a
/// maximal intersecting family).
inline SetFamily random_intersecting_family(const GroundContext& ctx, Rng& rng,
                                            std::size_t max_size = 0) {
  auto pool = all_ksets(ctx);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<KSet> chosen;
  for (auto& c : pool) {
    if (max_size != 0 && chosen.size() >= max_size) break;
    bool ok = std::all_of(chosen.begin(), chosen.end(),
                          [&](const KSet& a) { return a.intersects(c); });
    if (ok) chosen.push_back(std::move(c));
  }
  return SetFamily(ctx, std::move(chosen));
}

/// Intersecting family with a uniformly drawn size cap, then compressed:
/// a left-compressed intersecting family.
inline SetFamily random_lcif(const GroundContext& ctx, Rng& rng) {
  const auto full = random_intersecting_family(ctx, rng);
  std::uniform_int_distribution<std::size_t> size(1, full.size());
  return compress(random_intersecting_family(ctx, rng, size(rng))).family;
}

/// Draws random nonempty subsets of [universe] of size at most
/// min(max_size, k), keeping each that satisfies the criterion with itself
/// and every generator kept so far, until `count` are kept or `attempts`
/// draws are spent.
inline GeneratorCollection random_strongly_intersecting_collection(
    const GroundContext& ctx, Rng& rng, int universe, int max_size,
    std::size_t count, int attempts = 1000) {
  max_size = std::min(max_size, ctx.k());
  universe = std::min(universe, ctx.n());
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::vector<Element> ground(universe);
  for (int x = 0; x < universe; ++x) ground[x] = x + 1;
  std::vector<GeneratorSet> kept;
  for (int t = 0; t < attempts && kept.size() < count; ++t) {
    std::shuffle(ground.begin(), ground.end(), rng);
    std::vector<Element> elems(ground.begin(), ground.begin() + size_dist(rng));
    std::sort(elems.begin(), elems.end());
    GeneratorSet g(ctx, std::move(elems));
    if (std::find(kept.begin(), kept.end(), g) != kept.end()) continue;
    if (!criterion(g, g, ctx).holds) continue;
    bool ok = std::all_of(kept.begin(), kept.end(), [&](const auto& h) {
      return criterion(g, h, ctx).holds;
    });
    if (ok) kept.push_back(std::move(g));
  }
  return GeneratorCollection(ctx, std::move(kept));
}

}  // namespace lcif
