#pragma once

// JSON and plain-text file formats for images, maps, homotopies, functions
// and partitions, and the JSON/text renderings of manifold reports.
//
//   image:     {"dim": d, "adjacency": l, "points": [[c1,...,cd], ...]}
//   map:       {"source": <image>, "target": <image>, "pairs": [[[p...],[q...]], ...]}
//   homotopy:  {"steps": j, "triples": [[[p...], t, [q...]], ...]}
//   function:  {"image": <image>, "values": [[[p...], v], ...]}
//   partition: {"target": c, "functions": [<function>, ...], "cover": [[points...], ...]?}

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "digitop/analysis.hpp"
#include "digitop/lattice.hpp"
#include "digitop/manifold.hpp"
#include "digitop/morphisms.hpp"

namespace digitop::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// Malformed input; the message carries the file name and a position (a
/// JSON pointer, a byte offset or a line number).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

inline const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

inline std::int64_t integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    fail(where, "integer out of range");
  }
  return j.get<std::int64_t>();
}

inline const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

// Wraps library precondition errors raised while assembling a value from a
// document so that they carry the document position.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

}  // namespace detail

inline LatticePoint point_from_json(const json& j, std::size_t dim, const std::string& where) {
  detail::array(j, where);
  if (j.size() != dim) {
    detail::fail(where, "point has " + std::to_string(j.size()) + " coordinates, expected " +
                            std::to_string(dim));
  }
  std::vector<Coord> c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    c.push_back(detail::integer(j[i], where + "/" + std::to_string(i)));
  }
  return LatticePoint(std::move(c));
}

inline ordered_json point_to_json(const LatticePoint& p) {
  ordered_json out = ordered_json::array();
  for (auto c : p.coords()) out.push_back(c);
  return out;
}

inline ordered_json points_to_json(std::span<const LatticePoint> pts) {
  ordered_json out = ordered_json::array();
  for (const auto& p : pts) out.push_back(point_to_json(p));
  return out;
}

inline std::vector<LatticePoint> points_from_json(const json& j, std::size_t dim,
                                                  const std::string& where) {
  detail::array(j, where);
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(point_from_json(j[i], dim, where + "/" + std::to_string(i)));
  }
  return out;
}

inline DigitalImage image_from_json(const json& j, const std::string& where) {
  const auto dim_raw = detail::integer(detail::member(j, "dim", where), where + "/dim");
  if (dim_raw < 0) detail::fail(where + "/dim", "dimension must be non-negative");
  const auto dim = static_cast<std::size_t>(dim_raw);
  const auto l = detail::integer(detail::member(j, "adjacency", where), where + "/adjacency");
  auto pts = points_from_json(detail::member(j, "points", where), dim, where + "/points");
  return detail::located(where, [&] {
    return DigitalImage(Adjacency(static_cast<int>(l), dim), std::move(pts));
  });
}

inline ordered_json image_to_json(const DigitalImage& image) {
  ordered_json out;
  out["dim"] = image.dim();
  out["adjacency"] = image.adjacency().l();
  out["points"] = points_to_json(image.points());
  return out;
}

inline DigitalMap map_from_json(const json& j, const std::string& where) {
  auto source = image_from_json(detail::member(j, "source", where), where + "/source");
  auto target = image_from_json(detail::member(j, "target", where), where + "/target");
  const auto& raw = detail::array(detail::member(j, "pairs", where), where + "/pairs");
  std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto at = where + "/pairs/" + std::to_string(i);
    if (!raw[i].is_array() || raw[i].size() != 2) detail::fail(at, "expected [source, target]");
    pairs.emplace_back(point_from_json(raw[i][0], source.dim(), at + "/0"),
                       point_from_json(raw[i][1], target.dim(), at + "/1"));
  }
  return detail::located(where + "/pairs", [&] {
    return DigitalMap::from_pairs(std::move(source), std::move(target), pairs);
  });
}

inline ordered_json map_to_json(const DigitalMap& f) {
  ordered_json out;
  out["source"] = image_to_json(f.source());
  out["target"] = image_to_json(f.target());
  ordered_json pairs = ordered_json::array();
  for (const auto& [p, q] : f.pairs()) pairs.push_back({point_to_json(p), point_to_json(q)});
  out["pairs"] = std::move(pairs);
  return out;
}

inline HomotopyTable homotopy_from_json(const json& j, const DigitalImage& source,
                                        const DigitalImage& target, const std::string& where) {
  const auto steps = detail::integer(detail::member(j, "steps", where), where + "/steps");
  if (steps < 0 || steps > std::numeric_limits<int>::max()) {
    detail::fail(where + "/steps", "step count out of range");
  }
  const auto& raw = detail::array(detail::member(j, "triples", where), where + "/triples");
  std::vector<HomotopyTable::Triple> triples;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto at = where + "/triples/" + std::to_string(i);
    if (!raw[i].is_array() || raw[i].size() != 3) detail::fail(at, "expected [point, t, point]");
    const auto t = detail::integer(raw[i][1], at + "/1");
    triples.emplace_back(point_from_json(raw[i][0], source.dim(), at + "/0"),
                         static_cast<int>(std::clamp<std::int64_t>(t, -1, steps + 1)),
                         point_from_json(raw[i][2], target.dim(), at + "/2"));
  }
  return detail::located(where + "/triples", [&] {
    return HomotopyTable(source, target, static_cast<int>(steps), triples);
  });
}

inline LatticeFunction function_from_json(const json& j, const std::string& where) {
  auto domain = image_from_json(detail::member(j, "image", where), where + "/image");
  const auto& raw = detail::array(detail::member(j, "values", where), where + "/values");
  std::vector<std::pair<LatticePoint, std::int64_t>> pairs;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto at = where + "/values/" + std::to_string(i);
    if (!raw[i].is_array() || raw[i].size() != 2) detail::fail(at, "expected [point, value]");
    pairs.emplace_back(point_from_json(raw[i][0], domain.dim(), at + "/0"),
                       detail::integer(raw[i][1], at + "/1"));
  }
  return detail::located(where + "/values", [&] {
    return LatticeFunction::from_pairs(std::move(domain), pairs);
  });
}

inline ordered_json function_to_json(const LatticeFunction& f) {
  ordered_json out;
  out["image"] = image_to_json(f.domain());
  ordered_json values = ordered_json::array();
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    values.push_back({point_to_json(f.domain().point(i)), f.values()[i]});
  }
  out["values"] = std::move(values);
  return out;
}

inline PartitionCandidate partition_from_json(const json& j, const std::string& where) {
  PartitionCandidate out;
  out.target = detail::integer(detail::member(j, "target", where), where + "/target");
  const auto& fs = detail::array(detail::member(j, "functions", where), where + "/functions");
  if (fs.empty()) detail::fail(where + "/functions", "partition has no functions");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out.functions.push_back(function_from_json(fs[i], where + "/functions/" + std::to_string(i)));
  }
  if (j.contains("cover")) {
    const auto& cov = detail::array(j["cover"], where + "/cover");
    std::vector<std::vector<LatticePoint>> sets;
    const auto dim = out.functions.front().domain().dim();
    for (std::size_t i = 0; i < cov.size(); ++i) {
      sets.push_back(points_from_json(cov[i], dim, where + "/cover/" + std::to_string(i)));
    }
    out.cover = std::move(sets);
  }
  return out;
}

inline ordered_json partition_to_json(const PartitionCandidate& p) {
  ordered_json out;
  out["target"] = p.target;
  ordered_json fs = ordered_json::array();
  for (const auto& f : p.functions) fs.push_back(function_to_json(f));
  out["functions"] = std::move(fs);
  if (p.cover) {
    ordered_json cov = ordered_json::array();
    for (const auto& s : *p.cover) cov.push_back(points_to_json(s));
    out["cover"] = std::move(cov);
  }
  return out;
}

/// Parses a JSON document; parse errors report the byte offset.
inline json parse_json(std::istream& in, const std::string& name) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(name + ": byte " + std::to_string(e.byte) + ": invalid JSON");
  }
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  return parse_json(in, path);
}

/// Plain-text points: one point per line, whitespace-separated integers.
/// Blank lines and lines starting with '#' are skipped. The dimension is
/// taken from the first point.
inline std::vector<LatticePoint> read_text_points(std::istream& in, const std::string& name) {
  std::vector<LatticePoint> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<Coord> c;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw InputError(name + ": line " + std::to_string(lineno) + ": not an integer: " + tok);
      }
      c.push_back(v);
    }
    if (!out.empty() && c.size() != out.front().dim()) {
      throw InputError(name + ": line " + std::to_string(lineno) + ": point has " +
                       std::to_string(c.size()) + " coordinates, expected " +
                       std::to_string(out.front().dim()));
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

inline ordered_json report_to_json(const ManifoldReport& r) {
  ordered_json out;
  out["verdict"] = r.verdict;
  out["dimension"] = r.dimension ? ordered_json(*r.dimension) : ordered_json(nullptr);
  out["model_adjacency"] = r.model_l;
  out["with_boundary"] = r.with_boundary;
  out["interior"] = points_to_json(r.interior);
  out["boundary"] = points_to_json(r.boundary);
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json e;
    e["point"] = point_to_json(f.point);
    e["neighborhood_size"] = f.neighborhood_size;
    failures.push_back(std::move(e));
  }
  out["failures"] = std::move(failures);
  out["evaluated_dimension"] = r.evaluated_dimension;
  out["excluded"] = points_to_json(r.excluded);
  return out;
}

inline std::string join_points(std::span<const LatticePoint> pts) {
  std::string s;
  for (const auto& p : pts) {
    if (!s.empty()) s += ' ';
    s += to_string(p);
  }
  return s;
}

inline std::string report_to_text(const ManifoldReport& r) {
  std::ostringstream os;
  const std::string kind = r.with_boundary ? "manifold with boundary" : "manifold";
  if (r.verdict) {
    os << "verdict: digital " << *r.dimension << "-" << kind;
  } else {
    os << "verdict: not a digital " << kind << " (closest: n = " << r.evaluated_dimension << ")";
  }
  os << ", model adjacency kappa_" << r.model_l << '\n';
  os << "interior (" << r.interior.size() << "): " << join_points(r.interior) << '\n';
  os << "boundary (" << r.boundary.size() << "): " << join_points(r.boundary) << '\n';
  os << "failures (" << r.failures.size() << "):";
  for (const auto& f : r.failures) os << ' ' << to_string(f.point) << "[" << f.neighborhood_size << "]";
  os << '\n';
  if (!r.excluded.empty()) {
    os << "rim, excluded from verdict (" << r.excluded.size() << "): " << join_points(r.excluded)
       << '\n';
  }
  return os.str();
}

}  // namespace digitop::io
