#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lcif/error.hpp"
#include "lcif/setcore.hpp"

namespace lcif {

struct ShiftStep {
  Element i;
  Element j;
  std::size_t moved;
  long weight_after;  // sum of all elements over all members
};

struct ShiftReport {
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::size_t rounds = 0;        // full sweeps, including the final stable one
  std::vector<ShiftStep> applied;  // shifts that moved at least one member
};

inline long element_weight(const SetFamily& f) {
  long w = 0;
  for (const KSet& a : f) {
    for (Element x : a) w += x;
  }
  return w;
}

namespace detail {

// One (i,j) pass. Candidates are read against the family as it stood at the
// start of the pass; replacements land together at the end.
inline std::pair<SetFamily, std::size_t> shift_pass(const SetFamily& f,
                                                    Element i, Element j) {
  const auto& ctx = f.context();
  std::vector<KSet> out;
  out.reserve(f.size());
  std::vector<KSet> targets;
  std::size_t moved = 0;
  for (const KSet& a : f) {
    if (!a.contains(j) || a.contains(i)) {
      out.push_back(a);
      continue;
    }
    KSet target(ctx, replace_element(a, j, i));
    const bool taken =
        f.contains(target) ||
        std::find(targets.begin(), targets.end(), target) != targets.end();
    if (taken) {
      out.push_back(a);
    } else {
      targets.push_back(target);
      out.push_back(std::move(target));
      ++moved;
    }
  }
  return {SetFamily(ctx, std::move(out)), moved};
}

}  // namespace detail

/// The (i,j)-shift: each member containing j but not i becomes
/// A - {j} + {i} unless that set is already present.
inline SetFamily ij_shift(const SetFamily& f, Element i, Element j) {
  if (i < 1 || i >= j || j > f.context().n()) {
    throw DomainError("shift requires 1 <= i < j <= n (got i=" +
                      std::to_string(i) + ", j=" + std::to_string(j) + ")");
  }
  return detail::shift_pass(f, i, j).first;
}

struct CompressResult {
  SetFamily family;
  ShiftReport report;
};

/// Sweeps all pairs i < j in lexicographic order, applying each shift, until
/// a full sweep moves nothing. `on_step`, when set, sees the family after
/// every shift that moved something.
inline CompressResult compress(
    const SetFamily& f,
    const std::function<void(const SetFamily&, const ShiftStep&)>& on_step =
        {}) {
  const int n = f.context().n();
  SetFamily cur = f;
  ShiftReport report;
  report.input_size = f.size();
  bool changed = true;
  while (changed) {
    changed = false;
    ++report.rounds;
    for (Element i = 1; i < n; ++i) {
      for (Element j = i + 1; j <= n; ++j) {
        auto [next, moved] = detail::shift_pass(cur, i, j);
        if (moved == 0) continue;
        cur = std::move(next);
        changed = true;
        report.applied.push_back(ShiftStep{i, j, moved, element_weight(cur)});
        if (on_step) on_step(cur, report.applied.back());
      }
    }
  }
  report.output_size = cur.size();
  return CompressResult{std::move(cur), std::move(report)};
}

}  // namespace lcif
