#pragma once

// Maps between digital images: continuity, isomorphism (with a deterministic
// search), embeddings, composition and verification of supplied homotopies.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "digitop/errors.hpp"
#include "digitop/lattice.hpp"

namespace digitop {

/// A total map between the point sets of two digital images, stored as the
/// target index of every source point.
class DigitalMap {
 public:
  DigitalMap(DigitalImage source, DigitalImage target, std::vector<std::size_t> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    if (table_.size() != source_.size()) {
      throw PreconditionError("map table is not total on the source image");
    }
    for (auto t : table_) {
      if (t >= target_.size()) throw PreconditionError("map value outside the target image");
    }
  }

  static DigitalMap from_pairs(DigitalImage source, DigitalImage target,
                               std::span<const std::pair<LatticePoint, LatticePoint>> pairs) {
    constexpr auto kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> table(source.size(), kUnset);
    for (const auto& [p, q] : pairs) {
      const auto i = source.require_index(p);
      const auto j = target.require_index(q);
      if (table[i] != kUnset) throw PreconditionError("point " + to_string(p) + " mapped twice");
      table[i] = j;
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] == kUnset) {
        throw PreconditionError("map is not total: no value for " + to_string(source.point(i)));
      }
    }
    return DigitalMap(std::move(source), std::move(target), std::move(table));
  }

  template <class F>
  static DigitalMap from_function(DigitalImage source, DigitalImage target, F&& f) {
    std::vector<std::size_t> table;
    table.reserve(source.size());
    for (const auto& p : source.points()) table.push_back(target.require_index(f(p)));
    return DigitalMap(std::move(source), std::move(target), std::move(table));
  }

  static DigitalMap identity(const DigitalImage& image) {
    std::vector<std::size_t> table(image.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
    return DigitalMap(image, image, std::move(table));
  }

  const DigitalImage& source() const noexcept { return source_; }
  const DigitalImage& target() const noexcept { return target_; }
  std::span<const std::size_t> table() const noexcept { return table_; }

  const LatticePoint& operator()(const LatticePoint& p) const {
    return target_.point(table_[source_.require_index(p)]);
  }

  std::vector<std::pair<LatticePoint, LatticePoint>> pairs() const {
    std::vector<std::pair<LatticePoint, LatticePoint>> out;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      out.emplace_back(source_.point(i), target_.point(table_[i]));
    }
    return out;
  }

  bool is_injective() const {
    std::vector<std::size_t> sorted(table_);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  bool is_bijective() const { return source_.size() == target_.size() && is_injective(); }

  /// Image points f(source), sorted.
  std::vector<LatticePoint> image_points() const {
    std::vector<std::size_t> idx(table_);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<LatticePoint> out;
    for (auto i : idx) out.push_back(target_.point(i));
    return out;
  }

  /// Inverse of a bijection.
  DigitalMap inverse() const {
    if (!is_bijective()) throw PreconditionError("only a bijection has an inverse");
    std::vector<std::size_t> inv(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i) inv[table_[i]] = i;
    return DigitalMap(target_, source_, std::move(inv));
  }

  friend bool operator==(const DigitalMap&, const DigitalMap&) = default;

 private:
  DigitalImage source_;
  DigitalImage target_;
  std::vector<std::size_t> table_;
};

/// g o f.
inline DigitalMap compose(const DigitalMap& g, const DigitalMap& f) {
  if (!(f.target() == g.source())) throw PreconditionError("maps are not composable");
  std::vector<std::size_t> table;
  table.reserve(f.table().size());
  for (auto t : f.table()) table.push_back(g.table()[t]);
  return DigitalMap(f.source(), g.target(), std::move(table));
}

/// Adjacent source points go to equal or adjacent target points. This is
/// equivalent to "connected subsets have connected images".
inline bool is_continuous(const DigitalMap& f) {
  const auto g = adjacency_graph(f.source());
  const auto& tgt = f.target();
  for (const auto& [u, v] : g.edges()) {
    const auto fu = f.table()[u];
    const auto fv = f.table()[v];
    if (fu != fv && !adjacent(tgt.point(fu), tgt.point(fv), tgt.adjacency())) return false;
  }
  return true;
}

inline bool is_isomorphism(const DigitalMap& f) {
  if (!f.is_bijective()) return false;
  return is_continuous(f) && is_continuous(f.inverse());
}

namespace detail {

// Joint colour refinement of two graphs; colours are comparable across them.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(const AdjacencyGraph& a,
                                                                  const AdjacencyGraph& b) {
  const std::size_t na = a.size();
  const std::size_t n = na + b.size();
  auto nbrs = [&](std::size_t v) -> const std::vector<std::size_t>& {
    return v < na ? a.neighbors[v] : b.neighbors[v - na];
  };
  auto offset = [&](std::size_t v) { return v < na ? std::size_t{0} : na; };
  std::vector<int> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<int>(nbrs(v).size());
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> around;
      for (auto w : nbrs(v)) around.push_back(color[w + offset(v)]);
      std::sort(around.begin(), around.end());
      sig[v] = {color[v], std::move(around)};
      ids.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) color[v] = ids.at(sig[v]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::vector<int>(color.begin(), color.begin() + static_cast<std::ptrdiff_t>(na)),
          std::vector<int>(color.begin() + static_cast<std::ptrdiff_t>(na), color.end())};
}

}  // namespace detail

/// Vertex bijection a -> b preserving adjacency in both directions, or none.
/// Source vertices are assigned in index order and target candidates tried in
/// ascending order, so the witness is the lexicographically smallest one.
inline std::optional<std::vector<std::size_t>> find_graph_isomorphism(const AdjacencyGraph& a,
                                                                      const AdjacencyGraph& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto [ca, cb] = detail::refine_colors(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::vector<char>> adj_a(n, std::vector<char>(n, 0)), adj_b = adj_a;
  for (std::size_t u = 0; u < n; ++u) {
    for (auto v : a.neighbors[u]) adj_a[u][v] = 1;
    for (auto v : b.neighbors[u]) adj_b[u][v] = 1;
  }
  std::vector<std::size_t> map(n);
  std::vector<char> used(n, 0);
  auto assign = [&](auto&& self, std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || ca[u] != cb[v]) continue;
      bool ok = true;
      for (std::size_t w = 0; w < u && ok; ++w) ok = adj_a[u][w] == adj_b[v][map[w]];
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (self(self, u + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return map;
}

/// A witness isomorphism a -> b, if the images are digitally isomorphic.
inline std::optional<DigitalMap> find_isomorphism(const DigitalImage& a, const DigitalImage& b) {
  auto table = find_graph_isomorphism(adjacency_graph(a), adjacency_graph(b));
  if (!table) return std::nullopt;
  return DigitalMap(a, b, std::move(*table));
}

/// gamma is an isomorphism onto its image, the image carrying the induced
/// target adjacency.
inline bool is_embedding(const DigitalMap& gamma) {
  if (!gamma.is_injective()) return false;
  const auto image = gamma.target().subimage(gamma.image_points());
  std::vector<std::size_t> table;
  table.reserve(gamma.table().size());
  for (auto t : gamma.table()) table.push_back(*image.index_of(gamma.target().point(t)));
  return is_isomorphism(DigitalMap(gamma.source(), image, std::move(table)));
}

/// A table H : M x [0,j]_Z -> M'.
class HomotopyTable {
 public:
  using Triple = std::tuple<LatticePoint, int, LatticePoint>;

  HomotopyTable(DigitalImage source, DigitalImage target, int steps,
                std::span<const Triple> triples)
      : source_(std::move(source)), target_(std::move(target)), steps_(steps) {
    if (steps_ < 0) throw PreconditionError("homotopy step count must be non-negative");
    constexpr auto kUnset = static_cast<std::size_t>(-1);
    table_.assign(static_cast<std::size_t>(steps_) + 1,
                  std::vector<std::size_t>(source_.size(), kUnset));
    for (const auto& [p, t, q] : triples) {
      if (t < 0 || t > steps_) {
        throw PreconditionError("homotopy time " + std::to_string(t) + " outside [0," +
                                std::to_string(steps_) + "]");
      }
      auto& slot = table_[static_cast<std::size_t>(t)][source_.require_index(p)];
      if (slot != kUnset) throw PreconditionError("homotopy value given twice");
      slot = target_.require_index(q);
    }
    for (std::size_t t = 0; t < table_.size(); ++t) {
      for (std::size_t i = 0; i < source_.size(); ++i) {
        if (table_[t][i] == kUnset) {
          throw PreconditionError("homotopy table is not total: missing (" +
                                  to_string(source_.point(i)) + ", " + std::to_string(t) + ")");
        }
      }
    }
  }

  const DigitalImage& source() const noexcept { return source_; }
  const DigitalImage& target() const noexcept { return target_; }
  int steps() const noexcept { return steps_; }

  /// H_t : M -> M'.
  DigitalMap slice(int t) const {
    return DigitalMap(source_, target_, table_.at(static_cast<std::size_t>(t)));
  }

  /// H_m : ([0,j]_Z, 2) -> M'.
  DigitalMap track(const LatticePoint& m) const {
    const auto i = source_.require_index(m);
    std::vector<std::size_t> table;
    for (const auto& row : table_) table.push_back(row[i]);
    return DigitalMap(gen_interval(0, steps_), target_, std::move(table));
  }

 private:
  DigitalImage source_;
  DigitalImage target_;
  int steps_;
  std::vector<std::vector<std::size_t>> table_;  // [t][source index]
};

enum class HomotopyStatus {
  kValid,
  kStartMismatch,       // H(., 0) != f
  kEndMismatch,         // H(., j) != g
  kTrackDiscontinuous,  // some t -> H(m, t) is not continuous
  kSliceDiscontinuous,  // some m -> H(m, t) is not continuous
};

struct HomotopyVerdict {
  HomotopyStatus status = HomotopyStatus::kValid;
  std::optional<LatticePoint> point;  // offending source point, if any
  std::optional<int> step;            // offending time, if any

  bool ok() const noexcept { return status == HomotopyStatus::kValid; }
};

inline HomotopyVerdict verify_homotopy(const HomotopyTable& h, const DigitalMap& f,
                                       const DigitalMap& g) {
  for (const auto* m : {&f, &g}) {
    if (!(m->source() == h.source()) || !(m->target() == h.target())) {
      throw PreconditionError("endpoint maps do not share the homotopy's source and target");
    }
  }
  const auto start = h.slice(0);
  const auto end = h.slice(h.steps());
  for (std::size_t i = 0; i < h.source().size(); ++i) {
    if (start.table()[i] != f.table()[i]) {
      return {HomotopyStatus::kStartMismatch, h.source().point(i), 0};
    }
    if (end.table()[i] != g.table()[i]) {
      return {HomotopyStatus::kEndMismatch, h.source().point(i), h.steps()};
    }
  }
  for (const auto& m : h.source().points()) {
    if (!is_continuous(h.track(m))) return {HomotopyStatus::kTrackDiscontinuous, m, std::nullopt};
  }
  for (int t = 0; t <= h.steps(); ++t) {
    if (!is_continuous(h.slice(t))) return {HomotopyStatus::kSliceDiscontinuous, std::nullopt, t};
  }
  return {};
}

}  // namespace digitop
