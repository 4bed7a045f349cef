#pragma once

// Model neighborhoods: the neighborhood graph of a point of Z^n or of the
// orthant D_+^n = {m : m_j >= 0}, under a model adjacency kappa_l. A point
// of D_+^n is represented by its number k of zero coordinates; nonzero
// coordinates are 2, so a kappa_l step never leaves the orthant through them
// and the finite computation equals the infinite model's neighborhood.

#include <cstdint>
#include <string>
#include <vector>

#include "digitop/errors.hpp"
#include "digitop/lattice.hpp"
#include "digitop/morphisms.hpp"

namespace digitop {

struct ModelClass {
  int n = 0;           // model dimension
  int model_l = 1;     // kappa_l of the model space
  int zero_count = 0;  // k = 0 is the Z^n (interior) class
  LatticePoint representative;
  DigitalImage neighborhood{Adjacency(1, 0)};
  AdjacencyGraph graph;

  bool is_boundary() const noexcept { return zero_count > 0; }
};

namespace detail {

inline void check_model_args(int n, int l, int k) {
  if (n < 0) throw BoundsError("model dimension must be non-negative");
  if (k < 0 || k > n) {
    throw BoundsError("zero count " + std::to_string(k) + " outside [0," + std::to_string(n) + "]");
  }
  if (l < 1 || (n > 0 && l > n)) {
    throw DimensionError("model adjacency kappa_" + std::to_string(l) + " is not defined in Z^" +
                         std::to_string(n));
  }
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace detail

/// Vertex count of the (n, kappa_l, k) model class without building it:
/// a zero coordinate can only step up, a positive one either way.
inline std::uint64_t model_class_size(int n, int l, int k) {
  detail::check_model_args(n, l, k);
  const auto zeros = static_cast<std::uint64_t>(k);
  const auto free = static_cast<std::uint64_t>(n - k);
  std::uint64_t total = 0;
  for (std::uint64_t a = 0; a <= zeros; ++a) {
    for (std::uint64_t b = 0; b <= free; ++b) {
      if (a + b == 0 || a + b > static_cast<std::uint64_t>(l)) continue;
      total += detail::binomial(zeros, a) * detail::binomial(free, b) * (std::uint64_t{1} << b);
    }
  }
  return total;
}

inline ModelClass model_neighborhood(int n, int l, int k) {
  detail::check_model_args(n, l, k);
  const auto d = static_cast<std::size_t>(n);
  std::vector<Coord> rep(d, 2);
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) rep[i] = 0;

  ModelClass out;
  out.n = n;
  out.model_l = l;
  out.zero_count = k;
  out.representative = LatticePoint(rep);

  const Adjacency adj(l, d);
  std::vector<LatticePoint> pts;
  for (const auto& off : detail::neighbor_offsets(adj)) {
    std::vector<Coord> c(rep);
    bool inside = true;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] += off[i];
      if (c[i] < 0) inside = false;
    }
    if (inside) pts.emplace_back(std::move(c));
  }
  out.neighborhood = DigitalImage(adj, std::move(pts));
  out.graph = adjacency_graph(out.neighborhood);
  return out;
}

/// The model classes of one query, ascending in k, pairwise non-isomorphic
/// (a class isomorphic to one with smaller k is dropped).
inline std::vector<ModelClass> enumerate_model_classes(int n, int l, bool with_boundary) {
  detail::check_model_args(n, l, 0);
  std::vector<ModelClass> out;
  const int last = with_boundary ? n : 0;
  for (int k = 0; k <= last; ++k) {
    auto cls = model_neighborhood(n, l, k);
    bool duplicate = false;
    for (const auto& kept : out) {
      if (find_graph_isomorphism(kept.graph, cls.graph)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace digitop
