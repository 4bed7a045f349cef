#pragma once

// Command-line front end. run() is the whole program; tools/digitop.cpp only
// forwards argv to it.
//
// Exit codes: 0 computed result (including "not a manifold"), 1 a check-*
// verb whose check failed (or a corpus case failed), 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "digitop/analysis.hpp"
#include "digitop/corpus.hpp"
#include "digitop/io.hpp"
#include "digitop/lattice.hpp"
#include "digitop/manifold.hpp"
#include "digitop/morphisms.hpp"

namespace digitop::cli {

using io::InputError;
using io::ordered_json;

struct Options {
  std::string file;
  std::string gen;
  std::optional<std::int64_t> adjacency;
  std::optional<int> kl;
  int model_l = 1;
  bool with_boundary = false;
  std::optional<int> n_cap;
  std::optional<int> dim;
  std::string points;
  std::string remove;
  bool json = false;
  bool text = false;
  bool include_rim = false;
  bool sweep = false;
  std::string against;
  std::string from;
  std::string to;
  std::string filter;
  std::size_t order_bound = 8;
};

/// A loaded or generated image, plus the truncation rim of generated
/// infinite images.
struct LoadedImage {
  DigitalImage image;
  std::vector<LatticePoint> rim;
};

/// Named adjacency (4, 8, 6, 18, 26, ...) if the value is one for this
/// dimension, otherwise the parametric kappa_l with 1 <= l <= d. Named counts
/// always exceed d, so the two readings never collide.
inline Adjacency resolve_adjacency(std::int64_t value, std::size_t d) {
  for (std::size_t l = 1; l <= d; ++l) {
    if (static_cast<std::int64_t>(lattice_neighbor_count(static_cast<int>(l), d)) == value) {
      return Adjacency(static_cast<int>(l), d);
    }
  }
  if (value >= 1 && static_cast<std::size_t>(value) <= d) return Adjacency(static_cast<int>(value), d);
  throw InputError("--adjacency: " + std::to_string(value) + " is not an adjacency of Z^" +
                   std::to_string(d));
}

/// "(0,0),(2,0)" -> points of the given dimension.
inline std::vector<LatticePoint> parse_point_list(const std::string& text, std::size_t d,
                                                  const std::string& flag) {
  static const std::regex group(R"(\(([^()]*)\))");
  std::vector<LatticePoint> out;
  std::string rest;
  auto begin = std::sregex_iterator(text.begin(), text.end(), group);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += text.substr(last, static_cast<std::size_t>(it->position()) - last);
    last = static_cast<std::size_t>(it->position() + it->length());
    std::vector<Coord> c;
    std::stringstream ss((*it)[1].str());
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || tok.find_first_not_of(" \t", used) != std::string::npos) {
        throw InputError(flag + ": not an integer: '" + tok + "'");
      }
      c.push_back(v);
    }
    if (c.size() != d) {
      throw InputError(flag + ": point (" + (*it)[1].str() + ") has " + std::to_string(c.size()) +
                       " coordinates, expected " + std::to_string(d));
    }
    out.emplace_back(std::move(c));
  }
  rest += text.substr(last);
  if (rest.find_first_not_of(" ,;\t") != std::string::npos) {
    throw InputError(flag + ": expected a list like \"(0,0),(2,0)\"");
  }
  return out;
}

namespace detail {

inline std::vector<std::int64_t> split_ints(const std::string& spec, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw InputError("--gen " + what + ": bad argument '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline std::optional<Adjacency> flag_adjacency(const Options& o, std::size_t d) {
  if (o.adjacency && o.kl) throw InputError("give either --adjacency or --kl, not both");
  if (o.adjacency) return resolve_adjacency(*o.adjacency, d);
  if (o.kl) {
    try {
      return Adjacency(*o.kl, d);
    } catch (const DimensionError& e) {
      throw InputError(std::string("--kl: ") + e.what());
    }
  }
  return std::nullopt;
}

inline LoadedImage generate(const Options& o) {
  const auto colon = o.gen.find(':');
  const auto name = o.gen.substr(0, colon);
  const auto args = colon == std::string::npos ? std::vector<std::int64_t>{}
                                                : split_ints(o.gen.substr(colon + 1), name);
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw InputError("--gen " + name + ": expected " + std::to_string(n) + " argument(s)");
    }
  };
  LoadedImage out{DigitalImage(Adjacency(1, 1)), {}};
  if (name == "interval") {
    need(2);
    out.image = gen_interval(args[0], args[1]);
  } else if (name == "sphere") {
    need(1);
    if (args[0] < 0 || args[0] > 12) throw InputError("--gen sphere: dimension out of range");
    out.image = gen_sphere(static_cast<int>(args[0]));
  } else if (name == "box") {
    if (args.empty() || args.size() % 2 != 0) {
      throw InputError("--gen box: expected pairs of bounds a1:b1:a2:b2:...");
    }
    std::vector<std::pair<Coord, Coord>> iv;
    for (std::size_t i = 0; i < args.size(); i += 2) iv.emplace_back(args[i], args[i + 1]);
    out.image = gen_box(iv);
  } else if (name == "cross") {
    need(1);
    out.image = gen_cross(args[0]);
    out.rim = cross_rim(args[0]);
  } else {
    throw InputError("--gen: unknown generator '" + name + "' (interval, sphere, box, cross)");
  }
  if (auto adj = flag_adjacency(o, out.image.dim())) out.image = out.image.with_adjacency(adj->l());
  return out;
}

inline bool looks_like_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  char c = 0;
  while (in.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  }
  return false;
}

inline LoadedImage load_file(const Options& o) {
  if (looks_like_json(o.file)) {
    auto image = io::image_from_json(io::load_json(o.file), o.file + ":");
    if (auto adj = flag_adjacency(o, image.dim()); adj && !(*adj == image.adjacency())) {
      throw InputError(o.file + ": adjacency kappa_" + std::to_string(image.adjacency().l()) +
                       " in file, kappa_" + std::to_string(adj->l()) + " on the command line");
    }
    return {std::move(image), {}};
  }
  std::ifstream in(o.file);
  auto pts = io::read_text_points(in, o.file);
  if (pts.empty()) throw InputError(o.file + ": no points (dimension unknown)");
  auto adj = flag_adjacency(o, pts.front().dim());
  if (!adj) throw InputError(o.file + ": plain-text images need --adjacency or --kl");
  try {
    return {DigitalImage(*adj, std::move(pts)), {}};
  } catch (const PreconditionError& e) {
    throw InputError(o.file + ": " + e.what());
  }
}

inline LoadedImage load_image(const Options& o) {
  if (o.file.empty() == o.gen.empty()) throw InputError("give exactly one of --file or --gen");
  auto loaded = o.file.empty() ? generate(o) : load_file(o);
  if (!o.remove.empty()) {
    const auto drop = parse_point_list(o.remove, loaded.image.dim(), "--remove");
    try {
      loaded.image = remove_points(loaded.image, drop);
    } catch (const MembershipError& e) {
      throw InputError(std::string("--remove: ") + e.what());
    }
    std::erase_if(loaded.rim, [&](const LatticePoint& p) { return !loaded.image.contains(p); });
  }
  return loaded;
}

inline void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

inline ordered_json pairs_json(const DigitalMap& f) {
  ordered_json out = ordered_json::array();
  for (const auto& [p, q] : f.pairs()) out.push_back({io::point_to_json(p), io::point_to_json(q)});
  return out;
}

inline std::string pairs_text(const DigitalMap& f) {
  std::string s;
  for (const auto& [p, q] : f.pairs()) {
    if (!s.empty()) s += ", ";
    s += to_string(p) + "->" + to_string(q);
  }
  return s;
}

// --------------------------------------------------------------------------
// Verbs

inline int analyze_points(const Options& o, const LoadedImage& in, std::ostream& out) {
  const auto& image = in.image;
  const auto pts = parse_point_list(o.points, image.dim(), "--points");
  for (const auto& p : pts) {
    if (!image.contains(p)) throw InputError("--points: " + to_string(p) + " is not in the image");
  }
  ordered_json doc;
  doc["model_adjacency"] = o.model_l;
  doc["with_boundary"] = o.with_boundary;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  for (const auto& p : pts) {
    const auto nbhd = neighborhood(image, p);
    const int top = o.dim ? *o.dim : (o.n_cap ? *o.n_cap : static_cast<int>(nbhd.size()));
    const int bottom = o.dim ? *o.dim : 0;
    ordered_json matches = ordered_json::array();
    std::string summary;
    for (int n = bottom; n <= top; ++n) {
      if (n > 0 && n < o.model_l) continue;
      const auto m = classify_point(image, p, n, o.model_l, o.with_boundary);
      for (const auto& cm : m.matches) {
        ordered_json e;
        e["n"] = n;
        e["zero_count"] = cm.zero_count;
        e["boundary"] = cm.zero_count > 0;
        e["chart"] = pairs_json(cm.chart);
        matches.push_back(std::move(e));
        summary += " n=" + std::to_string(n) + (cm.zero_count > 0 ? "(boundary, k=" +
                                                                       std::to_string(cm.zero_count) + ")"
                                                                 : "(interior)");
      }
    }
    const bool disconnected = is_totally_disconnected(image.subimage(nbhd));
    ordered_json row;
    row["point"] = io::point_to_json(p);
    row["neighborhood_size"] = nbhd.size();
    row["totally_disconnected"] = disconnected;
    row["neighborhood"] = io::points_to_json(nbhd);
    row["matches"] = std::move(matches);
    rows.push_back(std::move(row));
    text << to_string(p) << ": " << nbhd.size() << " neighbors"
         << (disconnected ? " (totally disconnected)" : "") << ", matches:"
         << (summary.empty() ? " none" : summary) << '\n';
  }
  doc["points"] = std::move(rows);
  if (o.json) {
    emit(out, doc);
  } else {
    out << text.str();
  }
  return 0;
}

inline int analyze(const Options& o, std::ostream& out) {
  const auto in = load_image(o);
  if (!o.points.empty()) return analyze_points(o, in, out);
  ManifoldOptions mo;
  mo.n_cap = o.n_cap;
  if (!o.include_rim) mo.excluded = in.rim;
  if (o.sweep) {
    const auto reports = sweep_model_adjacencies(in.image, o.with_boundary, mo);
    if (o.json) {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(io::report_to_json(r));
      emit(out, arr);
    } else {
      if (reports.empty()) out << "no model adjacency yields a manifold\n";
      for (const auto& r : reports) out << io::report_to_text(r);
    }
    return 0;
  }
  const auto r = manifold_report(in.image, o.model_l, o.with_boundary, mo);
  if (o.json) {
    auto j = io::report_to_json(r);
    j["rim"] = io::points_to_json(in.rim);
    emit(out, j);
  } else {
    out << io::report_to_text(r);
    if (o.include_rim && !in.rim.empty()) {
      out << "rim, included in verdict (" << in.rim.size() << "): " << io::join_points(in.rim) << '\n';
    }
  }
  return 0;
}

inline int euler(const Options& o, std::ostream& out) {
  const auto in = load_image(o);
  const auto census = simplex_census(in.image);
  const auto chi = euler_characteristic(census);
  if (o.json) {
    ordered_json j;
    j["euler_characteristic"] = chi;
    j["census"] = census.counts;
    emit(out, j);
  } else {
    out << chi << '\n';
  }
  return 0;
}

inline int components_verb(const Options& o, std::ostream& out) {
  const auto in = load_image(o);
  const auto comps = components(in.image);
  const bool totally = is_totally_disconnected(in.image);
  if (o.json) {
    ordered_json j;
    j["count"] = comps.size();
    j["connected"] = comps.size() <= 1;
    j["totally_disconnected"] = totally;
    ordered_json arr = ordered_json::array();
    for (const auto& c : comps) arr.push_back(io::points_to_json(c));
    j["components"] = std::move(arr);
    emit(out, j);
  } else {
    out << comps.size() << " component(s)" << (totally ? ", totally disconnected" : "") << '\n';
    for (const auto& c : comps) out << "  " << io::join_points(c) << '\n';
  }
  return 0;
}

inline int orient(const Options& o, std::ostream& out) {
  const auto in = load_image(o);
  const auto report = manifold_report(in.image, 1, false);
  const bool zero = report.verdict && report.dimension == 0;
  std::optional<std::uint64_t> orientations;
  if (zero && in.image.size() < 64) orientations = count_orientations_0(in.image);
  std::optional<std::vector<LinearOrder>> orders;
  if (in.image.size() <= o.order_bound) orders = connected_ray_orders(in.image, o.order_bound);
  if (o.json) {
    ordered_json j;
    j["zero_manifold"] = zero;
    j["orientations"] = orientations ? ordered_json(*orientations) : ordered_json(nullptr);
    j["ray_orders"] = orders ? ordered_json(orders->size()) : ordered_json(nullptr);
    ordered_json arr = ordered_json::array();
    if (orders) {
      for (const auto& ord : *orders) arr.push_back(io::points_to_json(ord.sequence));
    }
    j["orders"] = std::move(arr);
    emit(out, j);
  } else {
    out << "0-manifold: " << (zero ? "yes" : "no") << '\n';
    if (orientations) out << "orientations: " << *orientations << '\n';
    if (orders) {
      out << "connected-ray orders: " << orders->size() << '\n';
      for (const auto& ord : *orders) out << "  " << io::join_points(ord.sequence) << '\n';
    } else {
      out << "connected-ray orders: skipped (" << in.image.size() << " points > bound "
          << o.order_bound << ")\n";
    }
  }
  return 0;
}

inline DigitalMap load_map(const std::string& path) {
  if (path.empty()) throw InputError("a map file is required");
  return io::map_from_json(io::load_json(path), path + ":");
}

inline int check_map(const Options& o, std::ostream& out) {
  const auto f = load_map(o.file);
  const bool cont = is_continuous(f);
  if (o.json) {
    ordered_json j;
    j["continuous"] = cont;
    j["isomorphism"] = is_isomorphism(f);
    j["embedding"] = is_embedding(f);
    emit(out, j);
  } else {
    out << (cont ? "continuous" : "not continuous") << '\n';
  }
  return cont ? 0 : 1;
}

inline int check_iso(const Options& o, std::ostream& out) {
  if (o.against.empty()) {
    const auto f = load_map(o.file);
    const bool iso = is_isomorphism(f);
    if (o.json) {
      ordered_json j;
      j["isomorphism"] = iso;
      emit(out, j);
    } else {
      out << (iso ? "isomorphism" : "not an isomorphism") << '\n';
    }
    return iso ? 0 : 1;
  }
  const auto a = load_image(o).image;
  Options other;
  other.file = o.against;
  const auto b = load_image(other).image;
  const auto w = find_isomorphism(a, b);
  if (o.json) {
    ordered_json j;
    j["isomorphic"] = w.has_value();
    j["witness"] = w ? pairs_json(*w) : ordered_json(nullptr);
    emit(out, j);
  } else {
    out << (w ? "isomorphic: " + pairs_text(*w) : std::string("not isomorphic")) << '\n';
  }
  return w ? 0 : 1;
}

inline int check_pou(const Options& o, std::ostream& out) {
  if (o.file.empty()) throw InputError("check-pou needs --file");
  const auto p = io::partition_from_json(io::load_json(o.file), o.file + ":");
  const auto& domain = p.functions.front().domain();
  std::vector<LatticePoint> check(domain.points().begin(), domain.points().end());
  if (!o.points.empty()) {
    check = parse_point_list(o.points, domain.dim(), "--points");
    for (const auto& q : check) {
      if (!domain.contains(q)) throw InputError("--points: " + to_string(q) + " is outside the domain");
    }
  }
  PartitionReport r;
  try {
    r = verify_partition_of_unity(p, check);
  } catch (const std::exception& e) {
    throw InputError(o.file + ": " + e.what());
  }
  if (o.json) {
    ordered_json j;
    j["pass"] = r.pass();
    j["nonnegative"] = r.nonnegative;
    j["neighborhoods_meet_supports"] = r.neighborhoods_meet_supports;
    j["sum_is_target"] = r.sum_is_target;
    j["subordinate"] = r.subordinate ? ordered_json(*r.subordinate) : ordered_json(nullptr);
    ordered_json misses = ordered_json::array();
    for (const auto& m : r.neighborhood_misses) {
      misses.push_back({{"point", io::point_to_json(m.point)}, {"function", m.function}});
    }
    j["neighborhood_misses"] = std::move(misses);
    j["sum_failures"] = io::points_to_json(r.sum_failures);
    emit(out, j);
  } else {
    auto yn = [](bool b) { return b ? "ok" : "FAILED"; };
    out << "nonnegative: " << yn(r.nonnegative) << '\n'
        << "neighborhoods meet supports: " << yn(r.neighborhoods_meet_supports) << " ("
        << r.neighborhood_misses.size() << " misses)\n"
        << "sum equals " << p.target << ": " << yn(r.sum_is_target) << '\n'
        << "subordinate to cover: " << (r.subordinate ? yn(*r.subordinate) : "no cover") << '\n'
        << (r.pass() ? "partition of unity" : "not a partition of unity") << '\n';
  }
  return r.pass() ? 0 : 1;
}

inline const char* status_name(HomotopyStatus s) {
  switch (s) {
    case HomotopyStatus::kValid: return "valid";
    case HomotopyStatus::kStartMismatch: return "start-mismatch";
    case HomotopyStatus::kEndMismatch: return "end-mismatch";
    case HomotopyStatus::kTrackDiscontinuous: return "track-discontinuous";
    case HomotopyStatus::kSliceDiscontinuous: return "slice-discontinuous";
  }
  return "unknown";
}

inline int check_homotopy(const Options& o, std::ostream& out) {
  if (o.file.empty() || o.from.empty() || o.to.empty()) {
    throw InputError("check-homotopy needs --file, --from and --to");
  }
  const auto f = load_map(o.from);
  const auto g = load_map(o.to);
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw InputError(o.to + ": endpoint maps have different source or target");
  }
  const auto h = io::homotopy_from_json(io::load_json(o.file), f.source(), f.target(), o.file + ":");
  const auto v = verify_homotopy(h, f, g);
  if (o.json) {
    ordered_json j;
    j["valid"] = v.ok();
    j["status"] = status_name(v.status);
    j["point"] = v.point ? io::point_to_json(*v.point) : ordered_json(nullptr);
    j["step"] = v.step ? ordered_json(*v.step) : ordered_json(nullptr);
    emit(out, j);
  } else {
    out << status_name(v.status);
    if (v.point) out << " at " << to_string(*v.point);
    if (v.step) out << " (t = " << *v.step << ")";
    out << '\n';
  }
  return v.ok() ? 0 : 1;
}

inline int gen(const Options& o, std::ostream& out) {
  if (!o.file.empty()) throw InputError("gen takes --gen, not --file");
  const auto in = load_image(o);
  if (o.text) {
    for (const auto& p : in.image.points()) {
      for (std::size_t i = 0; i < p.dim(); ++i) out << (i ? " " : "") << p[i];
      out << '\n';
    }
  } else {
    emit(out, io::image_to_json(in.image));
  }
  return 0;
}

inline int corpus_verb(const Options& o, std::ostream& out) {
  const auto results = corpus::run(o.filter);
  if (o.json) {
    emit(out, corpus::to_json(results));
  } else {
    out << corpus::to_text(results);
  }
  return corpus::all_reproduced(results) ? 0 : 1;
}

}  // namespace detail

/// args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"digitop: digital topology on integer lattices"};
  app.require_subcommand(1, 1);
  Options o;

  auto image_flags = [&](CLI::App* sub) {
    sub->add_option("--file", o.file, "image file (JSON, or plain text with --adjacency/--kl)");
    sub->add_option("--gen", o.gen, "generator: interval:A:B, sphere:N, box:A1:B1:..., cross:K");
    sub->add_option("--adjacency", o.adjacency, "named (4, 8, 6, 18, 26, ...) or parametric l");
    sub->add_option("--kl", o.kl, "parametric adjacency kappa_l");
    sub->add_option("--remove", o.remove, "points to remove, e.g. \"(2,2)\"");
  };
  auto format_flags = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", o.json, "JSON output");
    auto* t = sub->add_flag("--text", o.text, "text output (default)");
    j->excludes(t);
  };

  auto* analyze = app.add_subcommand("analyze", "classify an image as a digital manifold");
  image_flags(analyze);
  format_flags(analyze);
  analyze->add_option("--model-adjacency", o.model_l, "kappa_l of the model space")->check(CLI::PositiveNumber);
  analyze->add_flag("--with-boundary", o.with_boundary, "allow orthant (boundary) models");
  analyze->add_option("--n-cap", o.n_cap, "largest dimension to try")->check(CLI::NonNegativeNumber);
  analyze->add_option("--dim", o.dim, "with --points: classify at this dimension only")
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--points", o.points, "classify only these points, e.g. \"(0,0),(2,0)\"");
  analyze->add_flag("--include-rim", o.include_rim, "count truncation rim points in the verdict");
  analyze->add_flag("--sweep", o.sweep, "try every model adjacency and report the passing ones");

  auto* euler = app.add_subcommand("euler", "digital Euler characteristic");
  image_flags(euler);
  format_flags(euler);

  auto* comps = app.add_subcommand("components", "connected components");
  image_flags(comps);
  format_flags(comps);

  auto* orient = app.add_subcommand("orient", "orientations and connected-ray linear orders");
  image_flags(orient);
  format_flags(orient);
  orient->add_option("--order-bound", o.order_bound, "largest image for order enumeration");

  auto* check_map = app.add_subcommand("check-map", "is a map file digitally continuous");
  check_map->add_option("--file", o.file, "map file")->required();
  format_flags(check_map);

  auto* check_iso = app.add_subcommand("check-iso", "verify a map, or search an isomorphism");
  image_flags(check_iso);
  format_flags(check_iso);
  check_iso->add_option("--against", o.against, "second image: search an isomorphism --file -> it");

  auto* check_pou = app.add_subcommand("check-pou", "verify a partition of unity");
  check_pou->add_option("--file", o.file, "partition file")->required();
  check_pou->add_option("--points", o.points, "points where the neighborhood condition is checked");
  format_flags(check_pou);

  auto* check_h = app.add_subcommand("check-homotopy", "verify a digital homotopy");
  check_h->add_option("--file", o.file, "homotopy file")->required();
  check_h->add_option("--from", o.from, "map file of H(., 0)")->required();
  check_h->add_option("--to", o.to, "map file of H(., j)")->required();
  format_flags(check_h);

  auto* gen = app.add_subcommand("gen", "write a generated image");
  image_flags(gen);
  format_flags(gen);

  auto* corpus = app.add_subcommand("corpus", "run the golden corpus of published examples");
  corpus->add_option("--filter", o.filter, "run cases whose name contains this text");
  format_flags(corpus);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*analyze) return detail::analyze(o, out);
    if (*euler) return detail::euler(o, out);
    if (*comps) return detail::components_verb(o, out);
    if (*orient) return detail::orient(o, out);
    if (*check_map) return detail::check_map(o, out);
    if (*check_iso) {
      if (o.against.empty() && (!o.gen.empty() || o.adjacency || o.kl || !o.remove.empty())) {
        throw InputError("check-iso without --against takes only a map --file");
      }
      return detail::check_iso(o, out);
    }
    if (*check_pou) return detail::check_pou(o, out);
    if (*check_h) return detail::check_homotopy(o, out);
    if (*gen) return detail::gen(o, out);
    if (*corpus) return detail::corpus_verb(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace digitop::cli
