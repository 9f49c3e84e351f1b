#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcif/error.hpp"

namespace lcif {

using Element = int;

/// The universe [n] together with the uniformity k. Requires 4 <= 2k <= n.
/// n is capped at 64 so every set fits a single bitmask word.
class GroundContext {
 public:
  static constexpr int kMaxN = 64;

  GroundContext(int n, int k) : n_(n), k_(k) {
    if (k < 2 || 2 * k > n) {
      throw DomainError("ground context requires 4 <= 2k <= n (got n=" +
                        std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
    if (n > kMaxN) {
      throw DomainError("ground context supports n <= " +
                        std::to_string(kMaxN) + " (got n=" +
                        std::to_string(n) + ")");
    }
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  friend bool operator==(const GroundContext&, const GroundContext&) = default;

 private:
  int n_;
  int k_;
};

/// A strictly increasing sequence of positive elements, with a bitmask
/// mirror for constant-time membership and intersection tests.
/// Equality and ordering are lexicographic on the element sequence.
class SortedSet {
 public:
  SortedSet() = default;

  SortedSet(std::initializer_list<Element> elems)
      : SortedSet(std::vector<Element>(elems)) {}

  explicit SortedSet(std::vector<Element> elems) : elems_(std::move(elems)) {
    Element prev = 0;
    for (Element x : elems_) {
      if (x <= prev) {
        throw DomainError(x < 1 ? "element " + std::to_string(x) +
                                      " is not positive"
                                : "elements are not strictly increasing");
      }
      if (x > GroundContext::kMaxN) {
        throw DomainError("element " + std::to_string(x) + " exceeds " +
                          std::to_string(GroundContext::kMaxN));
      }
      mask_ |= bit(x);
      prev = x;
    }
  }

  std::span<const Element> elements() const noexcept { return elems_; }
  const std::vector<Element>& to_vector() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }

  // Zero-based: a[0] is a_1.
  Element operator[](std::size_t i) const { return elems_[i]; }
  Element front() const { return elems_.front(); }
  Element back() const { return elems_.back(); }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(Element x) const noexcept {
    return x >= 1 && x <= GroundContext::kMaxN && (mask_ & bit(x)) != 0;
  }
  bool intersects(const SortedSet& other) const noexcept {
    return (mask_ & other.mask_) != 0;
  }

  friend bool operator==(const SortedSet& a, const SortedSet& b) {
    return a.elems_ == b.elems_;
  }
  friend std::strong_ordering operator<=>(const SortedSet& a,
                                          const SortedSet& b) {
    return a.elems_ <=> b.elems_;
  }

  static constexpr std::uint64_t bit(Element x) noexcept {
    return std::uint64_t{1} << (x - 1);
  }

 private:
  std::vector<Element> elems_;
  std::uint64_t mask_ = 0;
};

inline std::string to_string(const SortedSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += '}';
  return out;
}

/// A k-element subset of [n].
class KSet : public SortedSet {
 public:
  KSet(const GroundContext& ctx, std::vector<Element> elems)
      : SortedSet(std::move(elems)) {
    if (!fits(ctx)) {
      throw DomainError("k-set " + lcif::to_string(*this) + " is not a " +
                        std::to_string(ctx.k()) + "-subset of [" +
                        std::to_string(ctx.n()) + "]");
    }
  }
  KSet(const GroundContext& ctx, std::initializer_list<Element> elems)
      : KSet(ctx, std::vector<Element>(elems)) {}

  bool fits(const GroundContext& ctx) const noexcept {
    return static_cast<int>(size()) == ctx.k() && back() <= ctx.n();
  }
};

/// A generator: 1..k elements of [n].
class GeneratorSet : public SortedSet {
 public:
  GeneratorSet(const GroundContext& ctx, std::vector<Element> elems)
      : SortedSet(std::move(elems)) {
    if (!fits(ctx)) {
      throw DomainError("generator " + lcif::to_string(*this) +
                        " must have 1.." + std::to_string(ctx.k()) +
                        " elements of [" + std::to_string(ctx.n()) + "]");
    }
  }
  GeneratorSet(const GroundContext& ctx, std::initializer_list<Element> elems)
      : GeneratorSet(ctx, std::vector<Element>(elems)) {}

  bool fits(const GroundContext& ctx) const noexcept {
    return !empty() && static_cast<int>(size()) <= ctx.k() &&
           back() <= ctx.n();
  }
};

/// Duplicate-free collection of members kept in lexicographic order.
template <class Member>
class Collection {
 public:
  using value_type = Member;
  using const_iterator = typename std::vector<Member>::const_iterator;

  explicit Collection(GroundContext ctx) : ctx_(ctx) {}

  /// Rejects duplicates and members that do not fit the context.
  Collection(GroundContext ctx, std::vector<Member> members)
      : ctx_(ctx), members_(std::move(members)) {
    for (const auto& m : members_) {
      if (!m.fits(ctx_)) {
        throw DomainError("member " + to_string(m) +
                          " does not fit the ground context");
      }
    }
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
      throw DomainError("duplicate set " + to_string(*dup));
    }
  }

  /// Builds from members that may repeat; repeats are merged.
  static Collection merged(GroundContext ctx, std::vector<Member> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Collection(ctx, std::move(members));
  }

  const GroundContext& context() const noexcept { return ctx_; }
  std::span<const Member> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const Member& operator[](std::size_t i) const { return members_[i]; }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  bool contains(const SortedSet& s) const {
    return std::binary_search(
        members_.begin(), members_.end(), s,
        [](const SortedSet& a, const SortedSet& b) { return a < b; });
  }

  bool includes(const Collection& other) const {
    return std::includes(members_.begin(), members_.end(),
                         other.members_.begin(), other.members_.end());
  }

  friend bool operator==(const Collection&, const Collection&) = default;

 private:
  GroundContext ctx_;
  std::vector<Member> members_;
};

using SetFamily = Collection<KSet>;
using GeneratorCollection = Collection<GeneratorSet>;

inline SetFamily unite(const SetFamily& a, const SetFamily& b) {
  if (!(a.context() == b.context())) {
    throw DomainError("families over different ground contexts");
  }
  std::vector<KSet> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return SetFamily(a.context(), std::move(out));
}

// ---------------------------------------------------------------------------
// The counting function and the two orders.

/// |X ∩ [l]| without range checks.
inline int count_at_most(const SortedSet& x, Element l) noexcept {
  return static_cast<int>(
      std::upper_bound(x.begin(), x.end(), l) - x.begin());
}

/// Number of elements of X that are <= l, for l in [1, n].
inline int mu(const SortedSet& x, int l, const GroundContext& ctx) {
  if (x.empty()) throw DomainError("mu of an empty set");
  if (l < 1 || l > ctx.n()) {
    throw DomainError("mu level " + std::to_string(l) + " outside [1, " +
                      std::to_string(ctx.n()) + "]");
  }
  return count_at_most(x, l);
}

/// Componentwise order on equal-size sets.
inline bool leq(const SortedSet& a, const SortedSet& b) {
  if (a.size() != b.size()) {
    throw DomainError("leq compares sets of equal size (got " +
                      std::to_string(a.size()) + " and " +
                      std::to_string(b.size()) + ")");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool strictly_less(const SortedSet& a, const SortedSet& b) {
  return leq(a, b) && a != b;
}

/// Extended domination: |A| >= |B| and the first |B| elements of A are
/// componentwise at most B.
inline bool preceq(const SortedSet& a, const SortedSet& b) {
  if (a.size() < b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration.

/// Calls f(std::span<const Element>) for every strictly increasing sequence
/// s with 1 <= s_i <= bound_i, in lexicographic order.
template <class F>
void for_each_dominated(std::span<const Element> bound, F&& f) {
  std::vector<Element> cur(bound.size());
  auto rec = [&](auto&& self, std::size_t i, Element lo) -> void {
    if (i == bound.size()) {
      f(std::span<const Element>(cur));
      return;
    }
    for (Element v = lo; v <= bound[i]; ++v) {
      cur[i] = v;
      self(self, i + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
}

/// Calls f(std::span<const Element>) for every k-subset S of [n] with
/// S ⪯ bound, in lexicographic order. An empty bound visits all k-sets.
template <class F>
void for_each_kset_preceq(const GroundContext& ctx, std::span<const Element> bound,
                          F&& f) {
  const int n = ctx.n();
  const int k = ctx.k();
  if (static_cast<int>(bound.size()) > k) return;
  std::vector<Element> cur(k);
  auto rec = [&](auto&& self, int i, Element lo) -> void {
    if (i == k) {
      f(std::span<const Element>(cur));
      return;
    }
    // Leave room for the remaining k - i - 1 elements.
    Element hi = n - (k - i - 1);
    if (i < static_cast<int>(bound.size())) hi = std::min(hi, bound[i]);
    for (Element v = lo; v <= hi; ++v) {
      cur[i] = v;
      self(self, i + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
}

template <class F>
void for_each_kset(const GroundContext& ctx, F&& f) {
  for_each_kset_preceq(ctx, std::span<const Element>{}, std::forward<F>(f));
}

inline std::vector<KSet> all_ksets(const GroundContext& ctx) {
  std::vector<KSet> out;
  for_each_kset(ctx, [&](std::span<const Element> s) {
    out.emplace_back(ctx, std::vector<Element>(s.begin(), s.end()));
  });
  return out;
}

/// L(A): every k-set S with S <= A.
inline SetFamily lower_closure(const KSet& a, const GroundContext& ctx) {
  std::vector<KSet> out;
  for_each_dominated(a.elements(), [&](std::span<const Element> s) {
    out.emplace_back(ctx, std::vector<Element>(s.begin(), s.end()));
  });
  return SetFamily(ctx, std::move(out));
}

// ---------------------------------------------------------------------------
// Left-compression.

/// A member A of F and a set B <= A that F lacks.
struct DownclosureViolation {
  KSet member;
  KSet missing;
};

/// Finds a member with an absent immediate predecessor. Every B < A is
/// reachable from A by unit decrements of single coordinates that keep the
/// sequence strictly increasing, so checking those predecessors suffices.
inline std::optional<DownclosureViolation> find_downclosure_violation(
    const SetFamily& f) {
  const auto& ctx = f.context();
  for (const KSet& a : f) {
    std::vector<Element> b = a.to_vector();
    for (std::size_t t = 0; t < b.size(); ++t) {
      const Element floor = t == 0 ? 0 : b[t - 1];
      if (b[t] - 1 <= floor) continue;
      --b[t];
      if (!f.contains(SortedSet(b))) {
        return DownclosureViolation{a, KSet(ctx, b)};
      }
      ++b[t];
    }
  }
  return std::nullopt;
}

/// Down-closed under <=: A in F and B <= A imply B in F.
inline bool is_left_compressed_downclosed(const SetFamily& f) {
  return !find_downclosure_violation(f).has_value();
}

/// A member A, a shift pair i < j with j in A and i not in A, and the
/// shifted set A - {j} + {i} that F lacks.
struct ShiftViolation {
  KSet member;
  Element i;
  Element j;
  KSet missing;
};

inline std::vector<Element> replace_element(const SortedSet& a, Element from,
                                            Element to) {
  std::vector<Element> out;
  out.reserve(a.size());
  for (Element x : a) {
    if (x != from) out.push_back(x);
  }
  out.insert(std::lower_bound(out.begin(), out.end(), to), to);
  return out;
}

inline std::optional<ShiftViolation> find_shift_violation(const SetFamily& f) {
  const auto& ctx = f.context();
  for (const KSet& a : f) {
    for (Element j : a) {
      for (Element i = 1; i < j; ++i) {
        if (a.contains(i)) continue;
        auto shifted = replace_element(a, j, i);
        if (!f.contains(SortedSet(shifted))) {
          return ShiftViolation{a, i, j, KSet(ctx, std::move(shifted))};
        }
      }
    }
  }
  return std::nullopt;
}

/// Closed under every (i,j)-shift.
inline bool is_left_compressed_shiftstable(const SetFamily& f) {
  return !find_shift_violation(f).has_value();
}

/// Members A with no B in F satisfying A < B.
inline SetFamily maximal_sets(const SetFamily& f) {
  if (f.empty()) throw DomainError("maximal_sets of an empty family");
  std::vector<KSet> out;
  for (const KSet& a : f) {
    bool dominated = std::any_of(f.begin(), f.end(), [&](const KSet& b) {
      return strictly_less(a, b);
    });
    if (!dominated) out.push_back(a);
  }
  return SetFamily(f.context(), std::move(out));
}

/// Elements shared by every member.
inline std::vector<Element> common_elements(const SetFamily& f) {
  if (f.empty()) throw DomainError("common elements of an empty family");
  std::uint64_t m = ~std::uint64_t{0};
  for (const KSet& a : f) m &= a.mask();
  std::vector<Element> out;
  for (Element x = 1; x <= f.context().n(); ++x) {
    if (m & SortedSet::bit(x)) out.push_back(x);
  }
  return out;
}

inline bool has_common_element(const SetFamily& f) {
  return !common_elements(f).empty();
}

}  // namespace lcif
