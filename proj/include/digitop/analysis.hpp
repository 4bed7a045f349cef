#pragma once

// Invariants and function-level constructions on digital images: the clique
// Euler characteristic, orientations of 0-manifolds, connected-ray linear
// orders, digital supports and partition-of-unity verification.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "digitop/errors.hpp"
#include "digitop/lattice.hpp"
#include "digitop/manifold.hpp"
#include "digitop/morphisms.hpp"

namespace digitop {

/// sum_r (-1)^r alpha_r over the simplex census.
inline std::int64_t euler_characteristic(const SimplexCensus& census) {
  std::int64_t chi = 0;
  for (std::size_t r = 0; r < census.counts.size(); ++r) {
    const auto a = static_cast<std::int64_t>(census.counts[r]);
    chi += (r % 2 == 0) ? a : -a;
  }
  return chi;
}

inline std::int64_t euler_characteristic(const DigitalImage& image) {
  return euler_characteristic(simplex_census(image));
}

// ---------------------------------------------------------------------------
// Orientations

namespace detail {

inline void require_zero_manifold(const DigitalImage& image) {
  const auto report = manifold_report(image, 1, false);
  if (!report.verdict || report.dimension != 0) {
    throw PreconditionError("image is not a digital 0-manifold");
  }
}

}  // namespace detail

/// Number of functions M -> {-1, +1} on a digital 0-manifold.
inline std::uint64_t count_orientations_0(const DigitalImage& image) {
  detail::require_zero_manifold(image);
  if (image.size() >= 64) throw BoundsError("orientation count does not fit in 64 bits");
  return std::uint64_t{1} << image.size();
}

/// All orientations, as sign vectors aligned with image.points(), in
/// lexicographic order (-1 before +1).
inline std::vector<std::vector<int>> enumerate_orientations_0(const DigitalImage& image,
                                                              std::size_t bound = 16) {
  detail::require_zero_manifold(image);
  if (image.size() > bound) throw BoundsError("orientation enumeration bound exceeded");
  std::vector<std::vector<int>> out;
  const std::uint64_t total = std::uint64_t{1} << image.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> signs(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      signs[i] = (mask >> (image.size() - 1 - i)) & 1 ? 1 : -1;
    }
    out.push_back(std::move(signs));
  }
  return out;
}

/// A total order; position in the sequence is the rank.
struct LinearOrder {
  std::vector<LatticePoint> sequence;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend auto operator<=>(const LinearOrder&, const LinearOrder&) = default;
};

namespace detail {

inline bool subset_connected(const AdjacencyGraph& g, std::span<const std::size_t> subset) {
  if (subset.size() <= 1) return true;
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (auto v : subset) in[v] = 1;
  std::vector<std::size_t> stack{subset[0]};
  seen[subset[0]] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors[u]) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == subset.size();
}

}  // namespace detail

/// Every total order whose down-rays {p < r} and up-rays {p > r} are all
/// digitally connected (or empty), in lexicographic order of the sequences.
inline std::vector<LinearOrder> connected_ray_orders(const DigitalImage& image,
                                                     std::size_t bound = 8) {
  if (image.size() > bound) {
    throw BoundsError("ray-order enumeration bound exceeded: " + std::to_string(image.size()) +
                      " > " + std::to_string(bound));
  }
  const auto g = adjacency_graph(image);
  const std::size_t n = image.size();
  std::vector<LinearOrder> out;
  std::vector<std::size_t> seq;
  std::vector<char> used(n, 0);
  // Down-rays are exactly the proper prefixes, so they prune the search;
  // up-rays (proper suffixes) are checked on complete sequences.
  auto rec = [&](auto&& self) -> void {
    if (seq.size() == n) {
      for (std::size_t i = 1; i < n; ++i) {
        if (!detail::subset_connected(g, std::span(seq).subspan(i))) return;
      }
      LinearOrder order;
      for (auto v : seq) order.sequence.push_back(image.point(v));
      out.push_back(std::move(order));
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      seq.push_back(v);
      if (seq.size() == n || detail::subset_connected(g, seq)) {
        used[v] = 1;
        self(self);
        used[v] = 0;
      }
      seq.pop_back();
    }
  };
  rec(rec);
  return out;
}

// ---------------------------------------------------------------------------
// Functions and supports

/// f : M -> Z, values aligned with domain().points().
class LatticeFunction {
 public:
  LatticeFunction(DigitalImage domain, std::vector<std::int64_t> values)
      : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_.size()) {
      throw PreconditionError("function is not total on its domain");
    }
  }

  static LatticeFunction from_pairs(DigitalImage domain,
                                    std::span<const std::pair<LatticePoint, std::int64_t>> pairs) {
    std::vector<std::optional<std::int64_t>> slots(domain.size());
    for (const auto& [p, v] : pairs) {
      auto& s = slots[domain.require_index(p)];
      if (s) throw PreconditionError("function value given twice at " + to_string(p));
      s = v;
    }
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!slots[i]) {
        throw PreconditionError("function is not total: no value at " + to_string(domain.point(i)));
      }
      values.push_back(*slots[i]);
    }
    return LatticeFunction(std::move(domain), std::move(values));
  }

  template <class F>
  static LatticeFunction from_function(DigitalImage domain, F&& f) {
    std::vector<std::int64_t> values;
    for (const auto& p : domain.points()) values.push_back(f(p));
    return LatticeFunction(std::move(domain), std::move(values));
  }

  const DigitalImage& domain() const noexcept { return domain_; }
  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::int64_t operator()(const LatticePoint& p) const { return values_[domain_.require_index(p)]; }

  bool nonnegative() const {
    return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v >= 0; });
  }

  friend bool operator==(const LatticeFunction&, const LatticeFunction&) = default;

 private:
  DigitalImage domain_;
  std::vector<std::int64_t> values_;
};

namespace detail {

template <class Op>
LatticeFunction pointwise(const LatticeFunction& f, const LatticeFunction& g, Op op) {
  if (!(f.domain() == g.domain())) throw PreconditionError("functions have different domains");
  std::vector<std::int64_t> out(f.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (op(f.values()[i], g.values()[i], &out[i])) {
      throw BoundsError("integer overflow in pointwise function arithmetic");
    }
  }
  return LatticeFunction(f.domain(), std::move(out));
}

}  // namespace detail

inline LatticeFunction operator+(const LatticeFunction& f, const LatticeFunction& g) {
  return detail::pointwise(f, g, [](auto a, auto b, auto* r) { return __builtin_add_overflow(a, b, r); });
}

inline LatticeFunction operator*(const LatticeFunction& f, const LatticeFunction& g) {
  return detail::pointwise(f, g, [](auto a, auto b, auto* r) { return __builtin_mul_overflow(a, b, r); });
}

/// sp(f) = {p : f(p) != 0}, sorted.
inline std::vector<LatticePoint> support(const LatticeFunction& f) {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (f.values()[i] != 0) out.push_back(f.domain().point(i));
  }
  return out;
}

struct SupportAlgebraReport {
  bool product_is_intersection = false;  // sp(fg) = sp(f) n sp(g)
  bool sum_within_union = false;         // sp(f+g) c sp(f) u sp(g)
  bool sum_is_union = false;             // sp(f+g) = sp(f) u sp(g)
  bool both_nonnegative = false;
  std::vector<LatticePoint> cancellations;  // in sp(f) u sp(g) but f+g = 0 there

  // The laws that hold for all integer functions, plus union equality when
  // no cancellation is possible.
  bool laws_hold() const noexcept {
    return product_is_intersection && sum_within_union && (!both_nonnegative || sum_is_union);
  }
};

inline SupportAlgebraReport support_algebra_check(const LatticeFunction& f,
                                                  const LatticeFunction& g) {
  const auto sf = support(f);
  const auto sg = support(g);
  const auto sprod = support(f * g);
  const auto ssum = support(f + g);
  std::vector<LatticePoint> meet, join;
  std::set_intersection(sf.begin(), sf.end(), sg.begin(), sg.end(), std::back_inserter(meet));
  std::set_union(sf.begin(), sf.end(), sg.begin(), sg.end(), std::back_inserter(join));

  SupportAlgebraReport r;
  r.product_is_intersection = sprod == meet;
  r.sum_within_union = std::includes(join.begin(), join.end(), ssum.begin(), ssum.end());
  r.sum_is_union = ssum == join;
  r.both_nonnegative = f.nonnegative() && g.nonnegative();
  std::set_difference(join.begin(), join.end(), ssum.begin(), ssum.end(),
                      std::back_inserter(r.cancellations));
  return r;
}

/// sp(f o alpha) = alpha^{-1}(sp(f)) for an isomorphism alpha onto f's domain.
inline bool support_pullback_check(const LatticeFunction& f, const DigitalMap& alpha) {
  if (!(alpha.target() == f.domain())) {
    throw PreconditionError("map does not land in the function's domain");
  }
  if (!is_isomorphism(alpha)) throw PreconditionError("map is not a digital isomorphism");
  std::vector<std::int64_t> pulled;
  for (auto t : alpha.table()) pulled.push_back(f.values()[t]);
  const auto lhs = support(LatticeFunction(alpha.source(), std::move(pulled)));
  const auto sp = support(f);
  std::vector<LatticePoint> rhs;
  for (std::size_t i = 0; i < alpha.table().size(); ++i) {
    if (std::binary_search(sp.begin(), sp.end(), alpha.target().point(alpha.table()[i]))) {
      rhs.push_back(alpha.source().point(i));
    }
  }
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Partitions of unity

struct PartitionCandidate {
  std::vector<LatticeFunction> functions;
  std::int64_t target = 0;  // required constant pointwise sum
  std::optional<std::vector<std::vector<LatticePoint>>> cover;
};

struct NeighborhoodMiss {
  LatticePoint point;
  std::size_t function;

  friend bool operator==(const NeighborhoodMiss&, const NeighborhoodMiss&) = default;
};

struct PartitionReport {
  bool nonnegative = true;
  std::vector<NeighborhoodMiss> negative_values;
  bool neighborhoods_meet_supports = true;
  std::vector<NeighborhoodMiss> neighborhood_misses;
  bool sum_is_target = true;
  std::vector<LatticePoint> sum_failures;
  std::optional<bool> subordinate;  // absent when no cover was given
  std::vector<std::size_t> unsubordinated;

  bool pass() const noexcept {
    return nonnegative && neighborhoods_meet_supports && sum_is_target && subordinate.value_or(true);
  }
};

/// Checks, separately: every function is nonnegative; every point of
/// check_domain has a neighbor in every support; the pointwise sum is the
/// target everywhere; and, with a cover, sp(alpha_i) lies in cover set i.
inline PartitionReport verify_partition_of_unity(const PartitionCandidate& candidate,
                                                 std::span<const LatticePoint> check_domain) {
  if (candidate.functions.empty()) throw PreconditionError("partition has no functions");
  const auto& domain = candidate.functions.front().domain();
  for (const auto& f : candidate.functions) {
    if (!(f.domain() == domain)) throw PreconditionError("partition functions have different domains");
  }
  if (candidate.cover && candidate.cover->size() != candidate.functions.size()) {
    throw PreconditionError("cover must have one set per function");
  }
  for (const auto& p : check_domain) domain.require_index(p);

  PartitionReport r;
  std::vector<std::vector<LatticePoint>> supports;
  for (std::size_t i = 0; i < candidate.functions.size(); ++i) {
    const auto& f = candidate.functions[i];
    for (std::size_t j = 0; j < f.values().size(); ++j) {
      if (f.values()[j] < 0) r.negative_values.push_back({domain.point(j), i});
    }
    supports.push_back(support(f));
  }
  r.nonnegative = r.negative_values.empty();

  for (const auto& p : check_domain) {
    const auto nbhd = neighborhood(domain, p);
    for (std::size_t i = 0; i < supports.size(); ++i) {
      const bool meets = std::any_of(nbhd.begin(), nbhd.end(), [&](const LatticePoint& q) {
        return std::binary_search(supports[i].begin(), supports[i].end(), q);
      });
      if (!meets) r.neighborhood_misses.push_back({p, i});
    }
  }
  r.neighborhoods_meet_supports = r.neighborhood_misses.empty();

  for (std::size_t j = 0; j < domain.size(); ++j) {
    std::int64_t sum = 0;
    bool overflow = false;
    for (const auto& f : candidate.functions) overflow |= __builtin_add_overflow(sum, f.values()[j], &sum);
    if (overflow || sum != candidate.target) r.sum_failures.push_back(domain.point(j));
  }
  r.sum_is_target = r.sum_failures.empty();

  if (candidate.cover) {
    for (std::size_t i = 0; i < supports.size(); ++i) {
      auto set = (*candidate.cover)[i];
      for (const auto& p : set) domain.require_index(p);
      std::sort(set.begin(), set.end());
      if (!std::includes(set.begin(), set.end(), supports[i].begin(), supports[i].end())) {
        r.unsubordinated.push_back(i);
      }
    }
    r.subordinate = r.unsubordinated.empty();
  }
  return r;
}

}  // namespace digitop
