#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "digitop/lattice.hpp"
#include "oracles.hpp"

using namespace digitop;

TEST_CASE("named adjacency counts", "[lattice]") {
  CHECK(lattice_neighbor_count(1, 1) == 2);
  CHECK(lattice_neighbor_count(1, 2) == 4);
  CHECK(lattice_neighbor_count(2, 2) == 8);
  CHECK(lattice_neighbor_count(1, 3) == 6);
  CHECK(lattice_neighbor_count(2, 3) == 18);
  CHECK(lattice_neighbor_count(3, 3) == 26);
  CHECK(lattice_neighbor_count(4, 4) == 80);

  CHECK(Adjacency::from_named(4, 2).l() == 1);
  CHECK(Adjacency::from_named(8, 2).l() == 2);
  CHECK(Adjacency::from_named(6, 3).l() == 1);
  CHECK(Adjacency::from_named(18, 3).l() == 2);
  CHECK(Adjacency::from_named(26, 3).l() == 3);
  CHECK(Adjacency(3, 3).named() == 26);
  CHECK_THROWS_AS(Adjacency::from_named(6, 2), DimensionError);
  CHECK_THROWS_AS(Adjacency::from_named(8, 3), DimensionError);
}

TEST_CASE("adjacency parameters are validated", "[lattice]") {
  CHECK_THROWS_AS(Adjacency(0, 2), DimensionError);
  CHECK_THROWS_AS(Adjacency(3, 2), DimensionError);
  CHECK_NOTHROW(Adjacency(1, 0));
}

TEST_CASE("kappa_l adjacency", "[lattice]") {
  const Adjacency a4(1, 2), a8(2, 2);
  CHECK(adjacent({0, 0}, {1, 0}, a4));
  CHECK_FALSE(adjacent({0, 0}, {1, 1}, a4));
  CHECK(adjacent({0, 0}, {1, 1}, a8));
  CHECK_FALSE(adjacent({0, 0}, {0, 0}, a8));
  CHECK_FALSE(adjacent({0, 0}, {2, 0}, a8));
  CHECK_THROWS_AS(adjacent({0, 0, 0}, {1, 0}, a4), DimensionError);

  const Coord big = std::numeric_limits<Coord>::max();
  const Coord small = std::numeric_limits<Coord>::min();
  CHECK_FALSE(adjacent({big}, {small}, Adjacency(1, 1)));
  CHECK(adjacent({big}, {big - 1}, Adjacency(1, 1)));
}

TEST_CASE("adjacency agrees with the Chebyshev/Hamming oracle", "[lattice][property]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Coord> c(-2, 2);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const int l = 1 + static_cast<int>(rng() % d);
    std::vector<Coord> p(d), q(d);
    for (auto& x : p) x = c(rng);
    for (auto& x : q) x = c(rng);
    REQUIRE(adjacent(LatticePoint(p), LatticePoint(q), Adjacency(l, d)) ==
            oracle::adjacent(LatticePoint(p), LatticePoint(q), l));
  }
}

TEST_CASE("normal product adjacency contains and is contained in kappa_{l+s}", "[lattice][property]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coord> c(0, 1);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t d1 = 1 + rng() % 3, d2 = 1 + rng() % 3;
    const int l = 1 + static_cast<int>(rng() % d1);
    const int s = 1 + static_cast<int>(rng() % d2);
    auto draw = [&](std::size_t d) {
      std::vector<Coord> v(d);
      for (auto& x : v) x = c(rng);
      return LatticePoint(v);
    };
    const auto p = draw(d1), q = draw(d1), p2 = draw(d2), q2 = draw(d2);
    const bool np = np_adjacent({p, p2}, {q, q2}, Adjacency(l, d1), Adjacency(s, d2));
    const bool kls = adjacent(concat(p, p2), concat(q, q2), Adjacency(l + s, d1 + d2));
    if (np) REQUIRE(kls);
    if (l == static_cast<int>(d1) && s == static_cast<int>(d2)) {
      REQUIRE(np == kls);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("kappa_{l+s} is strictly coarser than NP when a factor is not maximal", "[lattice]") {
  // (0,0)|(0) and (1,1)|(0): two coordinates of the first factor change.
  const LatticePoint p{0, 0}, q{1, 1}, r{0};
  CHECK(adjacent(concat(p, r), concat(q, r), Adjacency(2, 3)));
  CHECK_FALSE(np_adjacent({p, r}, {q, r}, Adjacency(1, 2), Adjacency(1, 1)));
}

TEST_CASE("images are sorted sets with validated dimensions", "[lattice]") {
  const DigitalImage m(Adjacency(1, 2), {{1, 0}, {0, 0}, {0, 1}});
  REQUIRE(m.size() == 3);
  CHECK(m.point(0) == LatticePoint{0, 0});
  CHECK(m.point(2) == LatticePoint{1, 0});
  CHECK(m.contains({0, 1}));
  CHECK_FALSE(m.contains({5, 5}));
  CHECK_THROWS_AS(m.require_index({5, 5}), MembershipError);
  CHECK_THROWS_AS(DigitalImage(Adjacency(1, 2), {{0, 0}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(DigitalImage(Adjacency(1, 2), {{0, 0, 0}}), DimensionError);
  CHECK(m.with_adjacency(2).adjacency().l() == 2);
  CHECK_THROWS_AS(m.with_adjacency(3), DimensionError);
  CHECK(DigitalImage(Adjacency(1, 2)).empty());
}

TEST_CASE("neighborhoods are taken inside the image", "[lattice]") {
  const auto box = gen_box({{0, 2}, {0, 2}});
  CHECK(neighborhood(box, {1, 1}).size() == 4);
  CHECK(neighborhood(box, {0, 0}).size() == 2);
  CHECK(neighborhood(box.with_adjacency(2), {1, 1}).size() == 8);
  CHECK(neighborhood(box.with_adjacency(2), {0, 0}).size() == 3);
  CHECK(neighborhood_star(box, {1, 1}).size() == 5);
  CHECK_THROWS_AS(neighborhood(box, {9, 9}), MembershipError);

  const auto nbhd = neighborhood_image(box, {1, 1});
  CHECK(nbhd.size() == 4);
  CHECK(is_totally_disconnected(nbhd));
}

TEST_CASE("adjacency graph matches pairwise adjacency", "[lattice][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const int l = 1 + static_cast<int>(rng() % d);
    const auto m = oracle::random_image(rng, d, l, 1 + trial % 40);
    const auto g = adjacency_graph(m);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        REQUIRE(g.has_edge(i, j) == (i != j && oracle::adjacent_in(m, i, j)));
      }
    }
  }
}

TEST_CASE("components and connectivity", "[lattice]") {
  const DigitalImage two(Adjacency(1, 2), {{0, 0}, {1, 0}, {3, 3}});
  const auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<LatticePoint>{{0, 0}, {1, 0}});
  CHECK(comps[1] == std::vector<LatticePoint>{{3, 3}});
  CHECK_FALSE(is_connected(two));
  CHECK(is_connected(gen_interval(0, 5)));
  CHECK(is_connected(DigitalImage(Adjacency(1, 1))));
  CHECK(is_totally_disconnected(gen_sphere(0)));
  CHECK_FALSE(is_connected(gen_box({{0, 1}, {0, 1}}).subimage(std::vector<LatticePoint>{{0, 0}, {1, 1}})));
  CHECK(is_connected(gen_box({{0, 1}, {0, 1}}, 2).subimage(std::vector<LatticePoint>{{0, 0}, {1, 1}})));
}

TEST_CASE("simplex census matches subset enumeration", "[lattice][property]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const int l = 1 + static_cast<int>(rng() % d);
    const auto m = oracle::random_image(rng, d, l, 12, 1);
    REQUIRE(simplex_census(m).counts == oracle::clique_census(m));
  }
}

TEST_CASE("simplex census of small images", "[lattice]") {
  CHECK(simplex_census(gen_interval(0, 1)).counts == std::vector<std::uint64_t>{2, 1});
  CHECK(simplex_census(gen_box({{0, 1}, {0, 1}}, 2)).counts ==
        std::vector<std::uint64_t>{4, 6, 4, 1});
  CHECK(simplex_census(DigitalImage(Adjacency(1, 1))).counts.empty());
  CHECK(simplex_census(gen_sphere(2, 2)).counts == std::vector<std::uint64_t>{26, 108, 148, 64});
}

TEST_CASE("generators", "[lattice]") {
  const auto iv = gen_interval(-1, 3);
  CHECK(iv.size() == 5);
  CHECK(iv.dim() == 1);
  CHECK_THROWS_AS(gen_interval(3, 1), BoundsError);

  CHECK(gen_box({{0, 2}, {0, 3}}).size() == 12);
  CHECK(gen_box({{0, 1}, {0, 1}, {0, 1}}, 3).adjacency().named() == 26);

  const auto s0 = gen_sphere(0);
  CHECK(s0.points().size() == 2);
  CHECK(s0.point(0) == LatticePoint{-1});
  CHECK(gen_sphere(1).size() == 8);
  CHECK(gen_sphere(2).size() == 26);
  CHECK_FALSE(gen_sphere(2).contains({0, 0, 0}));
  CHECK_THROWS(gen_sphere(-1));

  const auto cross = gen_cross(3);
  CHECK(cross.size() == 13);
  CHECK(cross.contains({0, -3}));
  CHECK_FALSE(cross.contains({1, 1}));
  CHECK(cross_rim(3) == std::vector<LatticePoint>{{-3, 0}, {0, -3}, {0, 3}, {3, 0}});

  const auto punctured = remove_points(gen_box({{0, 4}, {0, 4}}), {LatticePoint{2, 2}});
  CHECK(punctured.size() == 24);
  CHECK_THROWS_AS(remove_points(gen_box({{0, 1}, {0, 1}}), {LatticePoint{5, 5}}), MembershipError);
}

TEST_CASE("generator sizes are bounded", "[lattice]") {
  CHECK_THROWS_AS(gen_box({{0, 4096}, {0, 4096}}), BoundsError);
  CHECK_THROWS_AS(gen_interval(std::numeric_limits<Coord>::min(), std::numeric_limits<Coord>::max()),
                  BoundsError);
}

TEST_CASE("products carry kappa_{l+s}", "[lattice]") {
  const auto sq = product(gen_interval(0, 1), gen_interval(0, 1));
  CHECK(sq.size() == 4);
  CHECK(sq.adjacency().l() == 2);
  CHECK(sq.contains({1, 0}));
  CHECK(product(gen_box({{0, 1}, {0, 1}}, 2), gen_interval(0, 2)).adjacency().l() == 3);
}

TEST_CASE("translation leaves neighborhoods and census unchanged", "[lattice][property]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::random_image(rng, 2, 1 + trial % 2, 15);
    std::vector<LatticePoint> moved;
    for (const auto& p : m.points()) moved.push_back({p[0] + 1000, p[1] - 77});
    const DigitalImage t(m.adjacency(), moved);
    REQUIRE(simplex_census(m) == simplex_census(t));
    for (std::size_t i = 0; i < m.size(); ++i) {
      REQUIRE(neighborhood(m, m.point(i)).size() == neighborhood(t, t.point(i)).size());
    }
  }
}
