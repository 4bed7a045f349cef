#pragma once

// Points of Z^d, the kappa_l adjacency family, finite digital images and the
// graph-level machinery built on them: neighborhoods, components, clique
// census, normal-product adjacency and generators for the standard images.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "digitop/errors.hpp"

namespace digitop {

using Coord = std::int64_t;

/// A point of the integer lattice Z^d.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords) : coords_(coords) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const noexcept { return coords_; }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<Coord> coords_;
};

inline std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ')';
}

/// Concatenation (p, q) in Z^{dim p + dim q}.
inline LatticePoint concat(const LatticePoint& p, const LatticePoint& q) {
  std::vector<Coord> c(p.coords().begin(), p.coords().end());
  c.insert(c.end(), q.coords().begin(), q.coords().end());
  return LatticePoint(std::move(c));
}

/// Number of lattice neighbors of a point of Z^d under kappa_l, i.e. the
/// "named" adjacency: sum_{i=1..l} C(d,i) 2^i (4/8 in Z^2, 6/18/26 in Z^3).
inline std::uint64_t lattice_neighbor_count(int l, std::size_t d) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(d, i)
  std::uint64_t pow2 = 1;
  for (std::size_t i = 1; i <= d && i <= static_cast<std::size_t>(l); ++i) {
    binom = binom * (d - i + 1) / i;
    pow2 *= 2;
    total += binom * pow2;
  }
  return total;
}

/// The kappa_l adjacency relation on Z^d.
///
/// Invariant: 1 <= l <= d. The degenerate lattice Z^0 (a single point, no
/// neighbors) accepts any l >= 1 so that 0-dimensional model spaces can carry
/// the adjacency of the query that produced them.
class Adjacency {
 public:
  Adjacency(int l, std::size_t d) : l_(l), d_(d) {
    if (l < 1 || (d > 0 && static_cast<std::size_t>(l) > d)) {
      throw DimensionError("adjacency kappa_" + std::to_string(l) +
                           " is not defined in Z^" + std::to_string(d));
    }
  }

  /// Resolves a named adjacency (the neighbor count, e.g. 4, 8, 6, 18, 26).
  static Adjacency from_named(std::uint64_t count, std::size_t d) {
    for (std::size_t l = 1; l <= d; ++l) {
      if (lattice_neighbor_count(static_cast<int>(l), d) == count) {
        return Adjacency(static_cast<int>(l), d);
      }
    }
    throw DimensionError(std::to_string(count) + "-adjacency does not exist in Z^" +
                         std::to_string(d));
  }

  int l() const noexcept { return l_; }
  std::size_t d() const noexcept { return d_; }
  std::uint64_t named() const { return lattice_neighbor_count(l_, d_); }

  friend bool operator==(const Adjacency&, const Adjacency&) = default;

 private:
  int l_;
  std::size_t d_;
};

namespace detail {

inline bool differs_by_one(Coord a, Coord b) noexcept {
  constexpr Coord kMax = std::numeric_limits<Coord>::max();
  return (b != kMax && a == b + 1) || (a != kMax && b == a + 1);
}

inline void require_dim(const LatticePoint& p, std::size_t d) {
  if (p.dim() != d) {
    throw DimensionError("point " + to_string(p) + " has dimension " +
                         std::to_string(p.dim()) + ", expected " + std::to_string(d));
  }
}

}  // namespace detail

/// kappa_l adjacency of two lattice points: distinct, every coordinate differs
/// by 0 or 1, and at most l coordinates differ.
inline bool adjacent(const LatticePoint& p, const LatticePoint& q, const Adjacency& adj) {
  detail::require_dim(p, adj.d());
  detail::require_dim(q, adj.d());
  int differing = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] == q[i]) continue;
    if (!detail::differs_by_one(p[i], q[i])) return false;
    if (++differing > adj.l()) return false;
  }
  return differing > 0;
}

/// Normal-product adjacency of (p, p') and (q, q') in M x N.
inline bool np_adjacent(const std::pair<LatticePoint, LatticePoint>& first,
                        const std::pair<LatticePoint, LatticePoint>& second,
                        const Adjacency& adj_m, const Adjacency& adj_n) {
  const bool eq_m = first.first == second.first;
  const bool eq_n = first.second == second.second;
  const bool adj_first = adjacent(first.first, second.first, adj_m);
  const bool adj_second = adjacent(first.second, second.second, adj_n);
  return (eq_m && adj_second) || (adj_first && eq_n) || (adj_first && adj_second);
}

/// A finite set of lattice points with an adjacency. Points are kept in
/// lexicographic order, which is the canonical order used by every
/// deterministic search in the library.
class DigitalImage {
 public:
  explicit DigitalImage(Adjacency adjacency, std::vector<LatticePoint> points = {})
      : adjacency_(adjacency), points_(std::move(points)) {
    for (const auto& p : points_) detail::require_dim(p, adjacency_.d());
    std::sort(points_.begin(), points_.end());
    auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end()) {
      throw PreconditionError("duplicate point " + to_string(*dup) + " in digital image");
    }
  }

  std::size_t dim() const noexcept { return adjacency_.d(); }
  const Adjacency& adjacency() const noexcept { return adjacency_; }
  std::span<const LatticePoint> points() const noexcept { return points_; }
  const LatticePoint& point(std::size_t i) const { return points_[i]; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  std::optional<std::size_t> index_of(const LatticePoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }

  bool contains(const LatticePoint& p) const { return index_of(p).has_value(); }

  std::size_t require_index(const LatticePoint& p) const {
    detail::require_dim(p, dim());
    auto idx = index_of(p);
    if (!idx) throw MembershipError("point " + to_string(p) + " is not in the image");
    return *idx;
  }

  /// Same points under another adjacency of the same dimension.
  DigitalImage with_adjacency(int l) const { return DigitalImage(Adjacency(l, dim()), points_); }

  /// The induced sub-image on a subset of this image's points.
  DigitalImage subimage(std::span<const LatticePoint> subset) const {
    std::vector<LatticePoint> pts;
    pts.reserve(subset.size());
    for (const auto& p : subset) {
      require_index(p);
      pts.push_back(p);
    }
    return DigitalImage(adjacency_, std::move(pts));
  }

  friend bool operator==(const DigitalImage&, const DigitalImage&) = default;

 private:
  Adjacency adjacency_;
  std::vector<LatticePoint> points_;
};

/// The graph induced by an image's adjacency. Vertex i is image point i;
/// neighbor lists are sorted.
struct AdjacencyGraph {
  std::vector<LatticePoint> vertices;
  std::vector<std::vector<std::size_t>> neighbors;

  std::size_t size() const noexcept { return vertices.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& n : neighbors) twice += n.size();
    return twice / 2;
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    return std::binary_search(neighbors[u].begin(), neighbors[u].end(), v);
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < neighbors.size(); ++u) {
      for (std::size_t v : neighbors[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }
};

namespace detail {

// All offsets in {-1,0,1}^d with between 1 and l nonzero entries.
inline std::vector<std::vector<Coord>> neighbor_offsets(const Adjacency& adj) {
  std::vector<std::vector<Coord>> out;
  std::vector<Coord> cur(adj.d(), 0);
  auto rec = [&](auto&& self, std::size_t i, int nonzero) -> void {
    if (i == adj.d()) {
      if (nonzero > 0) out.push_back(cur);
      return;
    }
    for (Coord v : {Coord{-1}, Coord{0}, Coord{1}}) {
      if (v != 0 && nonzero == adj.l()) continue;
      cur[i] = v;
      self(self, i + 1, nonzero + (v != 0 ? 1 : 0));
    }
    cur[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

inline std::optional<LatticePoint> offset_point(const LatticePoint& p,
                                                const std::vector<Coord>& off) {
  std::vector<Coord> c(p.coords().begin(), p.coords().end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Coord r;
    if (__builtin_add_overflow(c[i], off[i], &r)) return std::nullopt;
    c[i] = r;
  }
  return LatticePoint(std::move(c));
}

}  // namespace detail

inline AdjacencyGraph adjacency_graph(const DigitalImage& image) {
  AdjacencyGraph g;
  g.vertices.assign(image.points().begin(), image.points().end());
  g.neighbors.resize(image.size());
  const auto& adj = image.adjacency();
  const std::uint64_t offsets = lattice_neighbor_count(adj.l(), adj.d());
  if (offsets <= image.size()) {
    const auto offs = detail::neighbor_offsets(adj);
    for (std::size_t i = 0; i < image.size(); ++i) {
      for (const auto& off : offs) {
        auto q = detail::offset_point(image.point(i), off);
        if (!q) continue;
        if (auto j = image.index_of(*q)) g.neighbors[i].push_back(*j);
      }
      std::sort(g.neighbors[i].begin(), g.neighbors[i].end());
    }
  } else {
    for (std::size_t i = 0; i < image.size(); ++i) {
      for (std::size_t j = i + 1; j < image.size(); ++j) {
        if (adjacent(image.point(i), image.point(j), adj)) {
          g.neighbors[i].push_back(j);
          g.neighbors[j].push_back(i);
        }
      }
    }
  }
  return g;
}

/// Adjacent points of p inside the image (sorted).
inline std::vector<LatticePoint> neighborhood(const DigitalImage& image, const LatticePoint& p) {
  image.require_index(p);
  std::vector<LatticePoint> out;
  for (const auto& q : image.points()) {
    if (adjacent(p, q, image.adjacency())) out.push_back(q);
  }
  return out;
}

/// neighborhood(image, p) together with p itself.
inline std::vector<LatticePoint> neighborhood_star(const DigitalImage& image,
                                                   const LatticePoint& p) {
  auto out = neighborhood(image, p);
  out.insert(std::lower_bound(out.begin(), out.end(), p), p);
  return out;
}

/// The neighborhood of p as a digital image with the ambient adjacency.
inline DigitalImage neighborhood_image(const DigitalImage& image, const LatticePoint& p) {
  return DigitalImage(image.adjacency(), neighborhood(image, p));
}

/// Connected components, each sorted, ordered by their smallest point.
inline std::vector<std::vector<LatticePoint>> components(const DigitalImage& image) {
  const auto g = adjacency_graph(image);
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<LatticePoint>> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> stack{s};
    std::vector<std::size_t> members;
    comp[s] = id;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (auto v : g.neighbors[u]) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<LatticePoint> block;
    block.reserve(members.size());
    for (auto m : members) block.push_back(g.vertices[m]);
    out.push_back(std::move(block));
  }
  return out;
}

inline bool is_connected(const DigitalImage& image) { return components(image).size() <= 1; }

inline bool is_totally_disconnected(const DigitalImage& image) {
  return adjacency_graph(image).edge_count() == 0;
}

/// alpha_r = number of (r+1)-point subsets that are pairwise adjacent.
struct SimplexCensus {
  std::vector<std::uint64_t> counts;  // counts[r] = alpha_r; no trailing zeros

  std::uint64_t alpha(std::size_t r) const { return r < counts.size() ? counts[r] : 0; }
  friend bool operator==(const SimplexCensus&, const SimplexCensus&) = default;
};

inline SimplexCensus simplex_census(const AdjacencyGraph& g) {
  SimplexCensus census;
  std::vector<std::size_t> candidates;
  // Every clique is counted once, from its smallest vertex, extending only
  // with higher-indexed common neighbors.
  auto extend = [&](auto&& self, std::size_t size, const std::vector<std::size_t>& cand) -> void {
    if (census.counts.size() < size) census.counts.resize(size, 0);
    ++census.counts[size - 1];
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g.has_edge(cand[i], cand[j])) next.push_back(cand[j]);
      }
      self(self, size + 1, next);
    }
  };
  for (std::size_t v = 0; v < g.size(); ++v) {
    candidates.clear();
    for (auto w : g.neighbors[v]) {
      if (w > v) candidates.push_back(w);
    }
    extend(extend, 1, candidates);
  }
  return census;
}

inline SimplexCensus simplex_census(const DigitalImage& image) {
  return simplex_census(adjacency_graph(image));
}

// ---------------------------------------------------------------------------
// Generators

inline constexpr std::uint64_t kMaxGeneratedPoints = std::uint64_t{1} << 22;

/// [a, b]_Z in Z^1.
inline DigitalImage gen_interval(Coord a, Coord b, int l = 1) {
  if (a > b) throw BoundsError("interval bounds out of order: a > b");
  const auto span = static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a);
  if (span >= kMaxGeneratedPoints) throw BoundsError("interval too large to enumerate");
  std::vector<LatticePoint> pts;
  for (Coord x = a;; ++x) {
    pts.push_back(LatticePoint{x});
    if (x == b) break;
  }
  return DigitalImage(Adjacency(l, 1), std::move(pts));
}

/// Product of integer intervals [a_1,b_1] x ... x [a_d,b_d].
inline DigitalImage gen_box(std::span<const std::pair<Coord, Coord>> intervals, int l = 1) {
  if (intervals.empty()) throw BoundsError("box needs at least one interval");
  std::uint64_t total = 1;
  for (const auto& [a, b] : intervals) {
    if (a > b) throw BoundsError("box interval bounds out of order");
    const auto len = static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a) + 1;
    if (len == 0 || len > kMaxGeneratedPoints || total * len > kMaxGeneratedPoints) {
      throw BoundsError("box too large to enumerate");
    }
    total *= len;
  }
  std::vector<LatticePoint> pts;
  pts.reserve(total);
  std::vector<Coord> cur(intervals.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == intervals.size()) {
      pts.emplace_back(cur);
      return;
    }
    for (Coord x = intervals[i].first;; ++x) {
      cur[i] = x;
      self(self, i + 1);
      if (x == intervals[i].second) break;
    }
  };
  rec(rec, 0);
  return DigitalImage(Adjacency(l, intervals.size()), std::move(pts));
}

inline DigitalImage gen_box(std::initializer_list<std::pair<Coord, Coord>> intervals, int l = 1) {
  return gen_box(std::span<const std::pair<Coord, Coord>>(intervals.begin(), intervals.size()), l);
}

/// The digital n-sphere [-1,1]^{n+1} minus the origin, in Z^{n+1}.
inline DigitalImage gen_sphere(int n, int l = 1) {
  if (n < 0) throw BoundsError("sphere dimension must be non-negative");
  if (n + 1 > 13) throw BoundsError("sphere too large to enumerate");
  std::vector<std::pair<Coord, Coord>> cube(static_cast<std::size_t>(n) + 1, {-1, 1});
  auto box = gen_box(cube, l);
  std::vector<LatticePoint> pts;
  for (const auto& p : box.points()) {
    if (std::any_of(p.coords().begin(), p.coords().end(), [](Coord c) { return c != 0; })) {
      pts.push_back(p);
    }
  }
  return DigitalImage(box.adjacency(), std::move(pts));
}

/// The coordinate cross Z x {0} u {0} x Z truncated to [-k, k].
inline DigitalImage gen_cross(Coord k, int l = 1) {
  if (k < 1) throw BoundsError("cross half-width must be at least 1");
  if (static_cast<std::uint64_t>(k) > kMaxGeneratedPoints / 4) {
    throw BoundsError("cross too large to enumerate");
  }
  std::vector<LatticePoint> pts;
  for (Coord x = -k; x <= k; ++x) pts.push_back(LatticePoint{x, 0});
  for (Coord y = -k; y <= k; ++y) {
    if (y != 0) pts.push_back(LatticePoint{0, y});
  }
  return DigitalImage(Adjacency(l, 2), std::move(pts));
}

/// Endpoints of a truncated cross: the points whose lattice neighborhood in
/// the untruncated cross is cut by the truncation.
inline std::vector<LatticePoint> cross_rim(Coord k) {
  std::vector<LatticePoint> rim{{-k, 0}, {0, -k}, {0, k}, {k, 0}};
  std::sort(rim.begin(), rim.end());
  return rim;
}

/// image minus the given points; removing a point that is absent is an error.
inline DigitalImage remove_points(const DigitalImage& image,
                                  std::span<const LatticePoint> removed) {
  std::vector<LatticePoint> drop(removed.begin(), removed.end());
  for (const auto& p : drop) image.require_index(p);
  std::sort(drop.begin(), drop.end());
  std::vector<LatticePoint> pts;
  for (const auto& p : image.points()) {
    if (!std::binary_search(drop.begin(), drop.end(), p)) pts.push_back(p);
  }
  return DigitalImage(image.adjacency(), std::move(pts));
}

inline DigitalImage remove_points(const DigitalImage& image,
                                  std::initializer_list<LatticePoint> removed) {
  return remove_points(image, std::span<const LatticePoint>(removed.begin(), removed.size()));
}

/// M x N embedded in Z^{d1+d2} with kappa_{l+s}.
inline DigitalImage product(const DigitalImage& m, const DigitalImage& n) {
  std::vector<LatticePoint> pts;
  pts.reserve(m.size() * n.size());
  for (const auto& p : m.points()) {
    for (const auto& q : n.points()) pts.push_back(concat(p, q));
  }
  return DigitalImage(Adjacency(m.adjacency().l() + n.adjacency().l(), m.dim() + n.dim()),
                      std::move(pts));
}

}  // namespace digitop
