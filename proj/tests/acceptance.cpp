// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "digitop/analysis.hpp"
#include "digitop/corpus.hpp"
#include "digitop/manifold.hpp"
#include "oracles.hpp"

using namespace digitop;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Verdict sphere0() {
  Verdict v;
  const auto r = manifold_report(gen_sphere(0), 1, false);
  v.require(r.verdict && r.dimension == 0, "{-1,1} is a 0-manifold");
  v.require(r.boundary.empty(), "no boundary");
  const auto rb = manifold_report(gen_sphere(0), 1, true);
  v.require(rb.dimension == 0 && rb.boundary.empty(), "no boundary with boundary models allowed");
  return v;
}

Verdict intervals() {
  Verdict v;
  int checked = 0;
  for (Coord a = -5; a <= 5; ++a) {
    for (Coord len = 2; len <= 10; ++len) {
      const auto r = manifold_report(gen_interval(a, a + len), 1, true);
      v.require(r.verdict && r.dimension == 1,
                "[" + std::to_string(a) + "," + std::to_string(a + len) + "] is a 1-manifold");
      v.require(r.boundary == std::vector<LatticePoint>{{a}, {a + len}}, "boundary is {a, b}");
      ++checked;
    }
  }
  v.notes << " " << checked << " intervals";
  return v;
}

Verdict spheres() {
  Verdict v;
  const auto s = gen_sphere(2);
  const auto r6 = manifold_report(s, 1, true);
  std::vector<LatticePoint> corners;
  for (Coord x : {-1, 1}) {
    for (Coord y : {-1, 1}) {
      for (Coord z : {-1, 1}) corners.push_back({x, y, z});
    }
  }
  v.require(r6.verdict && r6.dimension == 2, "6-adjacency: 2-manifold with boundary");
  v.require(r6.boundary == corners, "6-adjacency: boundary is {-1,1}^3");

  for (int l : {2, 3}) {
    const auto m = s.with_adjacency(l);
    const auto r = manifold_report(m, 1, false);
    const bool ok = r.verdict && r.dimension == 2 && r.boundary.empty();
    std::set<std::size_t> sizes;
    for (const auto& p : m.points()) sizes.insert(neighborhood(m, p).size());
    std::string list;
    for (auto n : sizes) list += (list.empty() ? "" : "/") + std::to_string(n);
    v.require(ok, std::to_string(m.adjacency().named()) +
                      "-adjacency: 2-manifold without boundary (neighborhood sizes " + list + ")");
  }

  bool any = false;
  for (const auto& p : s.points()) any |= classify_point(s, p, 2, 2, true).matched();
  v.require(!any, "model kappa_2: no point has a 2-dimensional chart");
  v.require(!manifold_report(s, 2, true, {2, {}}).verdict, "model kappa_2: not a 2-manifold");
  return v;
}

Verdict counterexamples() {
  Verdict v;
  for (int l : {1, 2}) {
    const auto cross = gen_cross(4, l);
    const auto a = neighborhood(cross, {0, 0}).size();
    const auto b = neighborhood(cross, {2, 0}).size();
    v.require(a == 4 && b == 2, "cross neighborhood sizes 4 vs 2 under kappa_" + std::to_string(l));
    ManifoldOptions opts;
    opts.excluded = cross_rim(4);
    v.require(!manifold_report(cross, 1, false, opts).verdict, "cross is not a manifold");
  }
  v.require(manifold_report(corpus::square_ring(), 1, false).dimension == 1, "ring is a 1-manifold");
  v.require(manifold_report(corpus::square_diagonal(), 1, false).dimension == 0,
            "diagonal is a 0-manifold");
  v.require(!manifold_report(corpus::ring_plus_diagonal(), 1, true).verdict,
            "ring plus diagonal is not a manifold");

  const auto four = corpus::four_cycle();
  v.require(manifold_report(four, 1, false).dimension == 1, "four-cycle is a 1-manifold");
  v.require(!find_isomorphism(four, gen_sphere(1)), "four-cycle is not isomorphic to S^1");
  bool interval_iso = false;
  for (Coord len = 0; len <= 10; ++len) interval_iso |= find_isomorphism(four, gen_interval(0, len)).has_value();
  v.require(!interval_iso, "four-cycle is not isomorphic to an interval");

  const auto sq = product(gen_interval(0, 1), gen_interval(0, 1)).with_adjacency(1);
  const auto r = manifold_report(sq, 1, false);
  v.require(r.verdict && r.dimension == 1 && r.boundary.empty(),
            "[0,1]x[0,1] under 4-adjacency is a 1-manifold without boundary");
  return v;
}

Verdict interiors() {
  Verdict v;
  const auto box = manifold_report(gen_box({{1, 3}, {1, 3}}), 1, true);
  v.require(box.dimension == 2 && box.interior == std::vector<LatticePoint>{{2, 2}},
            "[1,3]^2 has interior {(2,2)}");
  const auto m = corpus::punctured_square();
  const auto r = manifold_report(m, 1, true);
  v.require(r.dimension == 2, "punctured square is a 2-manifold with boundary");
  v.require(r.interior == sorted({{1, 1}, {3, 1}, {3, 3}, {1, 3}}), "interior is the four diagonal points");
  v.require(is_connected(m), "image is connected");
  v.require(!is_connected(m.subimage(r.interior)), "interior is disconnected");
  return v;
}

Verdict euler() {
  Verdict v;
  v.require(euler_characteristic(gen_interval(0, 1)) == 1, "chi([0,1]) = 1");

  const auto s18 = gen_sphere(2, 2);
  const auto census = simplex_census(s18);
  const auto oracle_chi = oracle::euler(s18);
  v.require(census.counts == oracle::clique_census(s18), "census agrees with the clique oracle");
  v.notes << " chi(S^2,18): oracle " << oracle_chi << ", library " << euler_characteristic(census);
  v.require(euler_characteristic(census) == -2, "chi(S^2, 18-adjacency) = -2");

  const auto sq = gen_box({{0, 1}, {0, 1}});
  const auto iv = gen_interval(0, 1);
  const auto chi_sq = oracle::euler(sq);
  v.require(euler_characteristic(sq) == chi_sq, "product square agrees with oracle");
  v.require(chi_sq != euler_characteristic(iv) * euler_characteristic(iv), "chi(product) != chi * chi");
  const DigitalImage pair_of_edges(Adjacency(1, 2), {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const DigitalImage a(Adjacency(1, 2), {{0, 0}, {1, 0}}), b(Adjacency(1, 2), {{0, 1}, {1, 1}});
  const auto chi_union = oracle::euler(pair_of_edges);
  v.require(chi_union != oracle::euler(a) + oracle::euler(b), "chi(union) != chi + chi");
  v.notes << "; product " << chi_sq << ", union " << chi_union << " (published -4 for both)";
  return v;
}

Verdict np_law() {
  Verdict v;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<Coord> c(-1, 1);
  int cases = 0, failures = 0;
  std::string first;
  for (; cases < 5000; ++cases) {
    const std::size_t d1 = 1 + rng() % 3, d2 = 1 + rng() % 3;
    const int l = 1 + static_cast<int>(rng() % d1);
    const int s = 1 + static_cast<int>(rng() % d2);
    auto draw = [&](std::size_t d) {
      std::vector<Coord> x(d);
      for (auto& e : x) e = c(rng);
      return LatticePoint(x);
    };
    const auto p = draw(d1), q = draw(d1), p2 = draw(d2), q2 = draw(d2);
    const bool np = np_adjacent({p, p2}, {q, q2}, Adjacency(l, d1), Adjacency(s, d2));
    const bool kls = adjacent(concat(p, p2), concat(q, q2), Adjacency(l + s, d1 + d2));
    if (np != kls) {
      if (failures++ == 0) {
        first = to_string(concat(p, p2)) + " vs " + to_string(concat(q, q2)) + " with kappa_" +
                std::to_string(l) + " on Z^" + std::to_string(d1) + ", kappa_" + std::to_string(s) +
                " on Z^" + std::to_string(d2) + ": NP " + (np ? "yes" : "no") + ", kappa_" +
                std::to_string(l + s) + " " + (kls ? "yes" : "no");
      }
    }
  }
  v.notes << " " << cases << " cases, " << failures << " disagreements";
  if (failures) v.notes << "; first: " << first;
  v.require(failures == 0, "NP(kappa_l, kappa_s) = kappa_{l+s}");
  return v;
}

Verdict continuity() {
  Verdict v;
  std::mt19937_64 rng(8);
  int disagreements = 0, continuous = 0;
  const int maps = 1000;
  for (int i = 0; i < maps; ++i) {
    const std::size_t d = 1 + i % 3;
    const auto a = oracle::random_image(rng, d, 1 + static_cast<int>(rng() % d), 8, 1);
    const auto b = oracle::random_image(rng, d, 1 + static_cast<int>(rng() % d), 8, 1);
    std::vector<std::size_t> table(a.size());
    for (auto& t : table) t = rng() % b.size();
    const DigitalMap f(a, b, table);
    const bool lib = is_continuous(f);
    continuous += lib;
    disagreements += lib != oracle::continuous(f);
  }
  v.notes << " " << maps << " maps (" << continuous << " continuous), " << disagreements
          << " disagreements";
  v.require(disagreements == 0, "adjacency continuity = connected-subset continuity");
  return v;
}

Verdict invariance() {
  Verdict v;
  std::mt19937_64 rng(9);
  int manifolds = 0;
  const int images = 300;
  for (int i = 0; i < images; ++i) {
    const std::size_t d = 2 + i % 2;
    const auto m = oracle::random_image(rng, d, 1 + static_cast<int>(rng() % d), 14, 1);
    const auto [copy, images_of] = oracle::random_congruent_copy(rng, m);
    std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
    for (std::size_t k = 0; k < m.size(); ++k) pairs.emplace_back(m.point(k), images_of[k]);
    const auto phi = DigitalMap::from_pairs(m, copy, pairs);
    if (!is_isomorphism(phi)) {
      v.require(false, "generated copy is isomorphic");
      continue;
    }
    v.require(find_isomorphism(m, copy).has_value(), "isomorphism search finds the copy");
    v.require(simplex_census(m) == simplex_census(copy), "census invariant");
    v.require(euler_characteristic(m) == euler_characteristic(copy), "chi invariant");
    for (bool wb : {false, true}) {
      const auto ra = manifold_report(m, 1, wb);
      const auto rb = manifold_report(copy, 1, wb);
      v.require(ra.verdict == rb.verdict && ra.dimension == rb.dimension, "verdict and dimension invariant");
      manifolds += ra.verdict;
      std::vector<LatticePoint> mapped_int, mapped_bd;
      for (const auto& p : ra.interior) mapped_int.push_back(phi(p));
      for (const auto& p : ra.boundary) mapped_bd.push_back(phi(p));
      v.require(sorted(mapped_int) == rb.interior, "interior maps to interior");
      v.require(sorted(mapped_bd) == rb.boundary, "boundary maps to boundary");
    }
  }
  v.notes << " " << images << " images, " << manifolds << " manifold reports";
  return v;
}

Verdict orientations() {
  Verdict v;
  for (Coord size = 2; size <= 8; ++size) {
    const auto orders = connected_ray_orders(gen_interval(0, size - 1));
    v.require(orders.size() == 2, "interval of size " + std::to_string(size) + " has 2 orders");
  }
  const auto four = corpus::four_cycle();
  const auto brute = oracle::ray_order_count(four);
  const auto lib = connected_ray_orders(four).size();
  v.notes << " four-cycle: " << lib << " orders (permutation scan " << brute << ")";
  v.require(lib == brute, "four-cycle count agrees with the permutation scan");
  v.require(brute == 16, "four-cycle regression value 16");
  return v;
}

Verdict partition() {
  Verdict v;
  const auto pou = corpus::ramp_partition(3);
  const auto r = verify_partition_of_unity(pou, corpus::ramp_overlap(3));
  v.require(r.nonnegative, "(1) nonnegative");
  v.require(r.neighborhoods_meet_supports, "(2) neighborhoods meet supports on the overlap");
  v.require(r.sum_is_target, "(3) sum is m");
  v.require(r.subordinate == true, "(4) subordinate to the cover");
  const auto wide = verify_partition_of_unity(pou, pou.functions[0].domain().points());
  v.require(!wide.neighborhoods_meet_supports, "(2) fails on the whole window");
  const bool at_edge = std::any_of(wide.neighborhood_misses.begin(), wide.neighborhood_misses.end(),
                                   [](const NeighborhoodMiss& m) { return m.point[0] == -2; });
  v.require(at_edge, "(2) fails at p1 = -2");
  v.notes << " whole window: " << wide.neighborhood_misses.size() << " misses";
  return v;
}

Verdict supports() {
  Verdict v;
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> any(-3, 3), nonneg(0, 3);
  const auto window = gen_box({{-2, 3}, {-2, 2}});
  const int functions = 600;
  int cancelling = 0;
  for (int i = 0; i < functions; ++i) {
    auto draw = [&](auto& dist) {
      std::vector<std::int64_t> vals(window.size());
      for (auto& x : vals) x = dist(rng);
      return LatticeFunction(window, std::move(vals));
    };
    const auto f = draw(any), g = draw(any);
    std::vector<LatticePoint> meet;
    const auto sf = support(f), sg = support(g);
    std::set_intersection(sf.begin(), sf.end(), sg.begin(), sg.end(), std::back_inserter(meet));
    v.require(support(f * g) == meet, "sp(fg) = sp(f) n sp(g)");
    const auto r = support_algebra_check(f, g);
    v.require(r.sum_within_union, "sp(f+g) c sp(f) u sp(g)");
    cancelling += !r.cancellations.empty();
    const auto fp = draw(nonneg), gp = draw(nonneg);
    v.require(support_algebra_check(fp, gp).sum_is_union, "sp(f+g) = sp(f) u sp(g) for f, g >= 0");
  }
  const DigitalImage pt(Adjacency(1, 1), {{0}});
  const auto w = support_algebra_check(LatticeFunction(pt, {1}), LatticeFunction(pt, {-1}));
  v.require(!w.sum_is_union && w.cancellations == std::vector<LatticePoint>{{0}},
            "cancellation witness f = 1, g = -1");
  v.notes << " " << functions << " random pairs, " << cancelling << " with cancellation";
  return v;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "0-sphere classification", sphere0},
      {2, "interval classification", intervals},
      {3, "sphere suite", spheres},
      {4, "counterexample suite", counterexamples},
      {5, "interior/boundary anomalies", interiors},
      {6, "Euler characteristic", euler},
      {7, "NP-adjacency law", np_law},
      {8, "continuity oracle equivalence", continuity},
      {9, "isomorphism invariance", invariance},
      {10, "orientations", orientations},
      {11, "partition of unity", partition},
      {12, "support algebra", supports},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    ++ran;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.notes << " [exception: " << e.what() << "]";
    }
    failed += !v.pass;
    std::cout << "AC" << c.id << ' ' << (v.pass ? "PASS" : "FAIL") << "  " << c.title << ":"
              << v.notes.str() << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  return failed ? 1 : 0;
}
