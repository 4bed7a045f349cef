#pragma once

// Manifold classification: each point's neighborhood is matched against the
// model classes of a query (n, kappa_l, with/without boundary), the least n
// at which every point matches is the dimension, and points matching the
// k = 0 class form the interior.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "digitop/errors.hpp"
#include "digitop/lattice.hpp"
#include "digitop/models.hpp"
#include "digitop/morphisms.hpp"

namespace digitop {

/// A matched model class and the chart N(p) -> N_lambda(s) witnessing it.
struct ChartMatch {
  int zero_count;
  DigitalMap chart;
};

struct PointMatch {
  LatticePoint point;
  std::size_t neighborhood_size = 0;
  std::vector<ChartMatch> matches;

  bool matched() const noexcept { return !matches.empty(); }
  bool interior() const {
    return std::any_of(matches.begin(), matches.end(),
                       [](const ChartMatch& m) { return m.zero_count == 0; });
  }
};

struct PointFailure {
  LatticePoint point;
  std::size_t neighborhood_size;

  friend bool operator==(const PointFailure&, const PointFailure&) = default;
};

struct ManifoldOptions {
  std::optional<int> n_cap;               // default: largest neighborhood size
  std::vector<LatticePoint> excluded;     // labelled, but not required to match
};

struct ManifoldReport {
  int model_l = 1;
  bool with_boundary = false;
  bool verdict = false;
  std::optional<int> dimension;  // least passing n
  int evaluated_dimension = 0;   // n the point sets below refer to
  std::vector<LatticePoint> interior;
  std::vector<LatticePoint> boundary;
  std::vector<PointFailure> failures;
  std::vector<LatticePoint> excluded;

  friend bool operator==(const ManifoldReport&, const ManifoldReport&) = default;
};

namespace detail {

struct LocalView {
  DigitalImage nbhd;
  AdjacencyGraph graph;
};

inline LocalView local_view(const DigitalImage& image, const LatticePoint& p) {
  auto nbhd = neighborhood_image(image, p);
  auto graph = adjacency_graph(nbhd);
  return {std::move(nbhd), std::move(graph)};
}

// Model classes of one (n, l, with_boundary) restricted to the given vertex
// counts; the result equals enumerate_model_classes filtered by size.
inline std::vector<ModelClass> classes_of_sizes(int n, int l, bool with_boundary,
                                                const std::set<std::size_t>& sizes) {
  std::vector<ModelClass> out;
  const int last = with_boundary ? n : 0;
  for (int k = 0; k <= last; ++k) {
    if (!sizes.contains(model_class_size(n, l, k))) continue;
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

struct RawMatch {
  int zero_count;
  std::vector<std::size_t> table;
};

inline std::vector<RawMatch> match_classes(const LocalView& view,
                                           std::span<const ModelClass> classes) {
  std::vector<RawMatch> out;
  for (const auto& cls : classes) {
    if (cls.graph.size() != view.graph.size()) continue;
    if (auto table = find_graph_isomorphism(view.graph, cls.graph)) {
      out.push_back({cls.zero_count, std::move(*table)});
    }
  }
  return out;
}

inline void check_query(int n, int l) {
  if (n < 0) throw BoundsError("manifold dimension must be non-negative");
  if (l < 1 || (n > 0 && l > n)) {
    throw DimensionError("model adjacency kappa_" + std::to_string(l) + " is not defined in Z^" +
                         std::to_string(n));
  }
}

}  // namespace detail

/// Every model class of the query whose graph is isomorphic to the induced
/// neighborhood of p, each with one deterministic chart.
inline PointMatch classify_point(const DigitalImage& image, const LatticePoint& p, int n, int l,
                                 bool with_boundary) {
  image.require_index(p);
  detail::check_query(n, l);
  const auto view = detail::local_view(image, p);
  PointMatch out{p, view.nbhd.size(), {}};
  for (const auto& cls : enumerate_model_classes(n, l, with_boundary)) {
    if (cls.graph.size() != view.graph.size()) continue;
    if (auto table = find_graph_isomorphism(view.graph, cls.graph)) {
      out.matches.push_back({cls.zero_count, DigitalMap(view.nbhd, cls.neighborhood, *table)});
    }
  }
  return out;
}

/// Scans n = 0, 1, ... up to the cap for the least n at which every
/// (non-excluded) point has a local model. Dimensions 0 < n < l are skipped
/// since kappa_l does not exist in Z^n. If no n passes, the point sets
/// describe the scanned n with the fewest failures.
inline ManifoldReport manifold_report(const DigitalImage& image, int l, bool with_boundary,
                                      const ManifoldOptions& options = {}) {
  if (l < 1) throw DimensionError("model adjacency must be kappa_l with l >= 1");
  std::vector<LatticePoint> excluded = options.excluded;
  for (const auto& p : excluded) image.require_index(p);
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());

  std::vector<std::size_t> active;
  std::vector<detail::LocalView> views;
  std::set<std::size_t> sizes;
  std::size_t max_size = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    const auto& p = image.point(i);
    if (std::binary_search(excluded.begin(), excluded.end(), p)) continue;
    active.push_back(i);
    views.push_back(detail::local_view(image, p));
    sizes.insert(views.back().nbhd.size());
    max_size = std::max(max_size, views.back().nbhd.size());
  }
  const int cap = options.n_cap ? *options.n_cap : static_cast<int>(max_size);
  if (cap < 0) throw BoundsError("dimension cap must be non-negative");

  ManifoldReport report;
  report.model_l = l;
  report.with_boundary = with_boundary;
  report.excluded = excluded;

  std::optional<ManifoldReport> best;
  for (int n = 0; n <= cap; ++n) {
    if (n > 0 && n < l) continue;
    const auto classes = detail::classes_of_sizes(n, l, with_boundary, sizes);
    ManifoldReport attempt = report;
    attempt.evaluated_dimension = n;
    for (std::size_t a = 0; a < active.size(); ++a) {
      const auto& p = image.point(active[a]);
      const auto matches = detail::match_classes(views[a], classes);
      if (matches.empty()) {
        attempt.failures.push_back({p, views[a].nbhd.size()});
      } else if (std::any_of(matches.begin(), matches.end(),
                             [](const detail::RawMatch& m) { return m.zero_count == 0; })) {
        attempt.interior.push_back(p);
      } else {
        attempt.boundary.push_back(p);
      }
    }
    if (attempt.failures.empty()) {
      attempt.verdict = true;
      attempt.dimension = n;
      return attempt;
    }
    if (!best || attempt.failures.size() < best->failures.size()) best = std::move(attempt);
  }
  return best ? *best : report;
}

/// Reports of every model adjacency kappa_1..kappa_cap that yields a verdict.
inline std::vector<ManifoldReport> sweep_model_adjacencies(const DigitalImage& image,
                                                           bool with_boundary,
                                                           const ManifoldOptions& options = {}) {
  std::size_t max_size = 0;
  for (const auto& p : image.points()) max_size = std::max(max_size, neighborhood(image, p).size());
  const int top = std::max(1, options.n_cap ? *options.n_cap : static_cast<int>(max_size));
  std::vector<ManifoldReport> out;
  for (int l = 1; l <= top; ++l) {
    auto r = manifold_report(image, l, with_boundary, options);
    if (r.verdict) out.push_back(std::move(r));
  }
  return out;
}

/// S is an r-dimensional manifold (with or without boundary) under the model
/// adjacency kappa_l, and gamma : S -> M is an embedding.
inline bool is_submanifold(const DigitalImage& s, const DigitalImage& m, const DigitalMap& gamma,
                           int r, int l = 1) {
  if (!(gamma.source() == s) || !(gamma.target() == m)) {
    throw PreconditionError("embedding does not map the submanifold candidate into the image");
  }
  const bool has_dim = manifold_report(s, l, false).dimension == r ||
                       manifold_report(s, l, true).dimension == r;
  return has_dim && is_embedding(gamma);
}

}  // namespace digitop
