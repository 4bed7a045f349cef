#include <catch2/catch_amalgamated.hpp>

#include "digitop/models.hpp"
#include "oracles.hpp"

using namespace digitop;

TEST_CASE("model class sizes under kappa_1 are 2n - k", "[models]") {
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto cls = model_neighborhood(n, 1, k);
      REQUIRE(cls.neighborhood.size() == static_cast<std::size_t>(2 * n - k));
      REQUIRE(model_class_size(n, 1, k) == static_cast<std::uint64_t>(2 * n - k));
    }
  }
}

TEST_CASE("closed-form class size matches the built neighborhood", "[models][property]") {
  for (int n = 1; n <= 4; ++n) {
    for (int l = 1; l <= n; ++l) {
      for (int k = 0; k <= n; ++k) {
        REQUIRE(model_class_size(n, l, k) == model_neighborhood(n, l, k).neighborhood.size());
      }
    }
  }
  CHECK(model_class_size(3, 3, 0) == 26);
  CHECK(model_class_size(2, 2, 0) == 8);
  CHECK(model_class_size(2, 2, 2) == 3);
}

TEST_CASE("representatives and neighborhoods", "[models]") {
  const auto corner = model_neighborhood(2, 1, 2);
  CHECK(corner.representative == LatticePoint{0, 0});
  CHECK(corner.is_boundary());
  CHECK(corner.neighborhood.points().size() == 2);
  CHECK(corner.neighborhood.contains({1, 0}));

  const auto interior = model_neighborhood(2, 1, 0);
  CHECK(interior.representative == LatticePoint{2, 2});
  CHECK_FALSE(interior.is_boundary());
  CHECK(is_totally_disconnected(interior.neighborhood));

  const auto point = model_neighborhood(0, 1, 0);
  CHECK(point.neighborhood.empty());
  CHECK(point.representative.dim() == 0);
}

TEST_CASE("model arguments are validated", "[models]") {
  CHECK_THROWS_AS(model_neighborhood(-1, 1, 0), BoundsError);
  CHECK_THROWS_AS(model_neighborhood(2, 1, 3), BoundsError);
  CHECK_THROWS_AS(model_neighborhood(2, 3, 0), DimensionError);
  CHECK_THROWS_AS(model_class_size(2, 0, 0), DimensionError);
  CHECK_THROWS_AS(enumerate_model_classes(1, 2, true), DimensionError);
}

TEST_CASE("enumerated classes are ascending and pairwise non-isomorphic", "[models][property]") {
  for (int n = 0; n <= 3; ++n) {
    for (int l = 1; l <= std::max(1, n); ++l) {
      const auto classes = enumerate_model_classes(n, l, true);
      REQUIRE(classes.front().zero_count == 0);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        REQUIRE(classes[i].n == n);
        REQUIRE(classes[i].model_l == l);
        if (i > 0) REQUIRE(classes[i - 1].zero_count < classes[i].zero_count);
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
          if (classes[i].neighborhood.size() > 7) continue;
          REQUIRE_FALSE(oracle::isomorphic(classes[i].neighborhood, classes[j].neighborhood));
        }
      }
    }
  }
}

TEST_CASE("without boundary only the interior class remains", "[models]") {
  const auto classes = enumerate_model_classes(3, 2, false);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].zero_count == 0);
  CHECK(enumerate_model_classes(2, 1, true).size() == 3);
}
