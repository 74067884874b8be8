#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "scengen/errors.hpp"
#include "scengen/pareto.hpp"
#include "scengen/rng.hpp"

using namespace scengen;

namespace {

std::vector<ParetoPoint> as_points(const std::vector<std::vector<double>>& objectives) {
  std::vector<ParetoPoint> out;
  for (std::size_t i = 0; i < objectives.size(); ++i) out.push_back({objectives[i], i});
  return out;
}

}  // namespace

TEST_CASE("strict dominance splits into two fronts") {
  const auto fronts = non_dominated_sort(as_points({{1, 1}, {2, 2}}));
  REQUIRE(fronts.size() == 2);
  CHECK(fronts[0] == std::vector<std::size_t>{0});
  CHECK(fronts[1] == std::vector<std::size_t>{1});
}

TEST_CASE("mutually non-dominated points form one front") {
  const auto fronts = non_dominated_sort(as_points({{1, 3}, {2, 2}, {3, 1}}));
  REQUIRE(fronts.size() == 1);
  CHECK(fronts[0].size() == 3);
}

TEST_CASE("non-dominated sort matches brute force on random sets") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(20));
    const int k = 2 + static_cast<int>(rng.uniform_index(3));
    std::vector<std::vector<double>> objs(n, std::vector<double>(k));
    for (auto& row : objs) {
      for (double& v : row) v = std::floor(rng.uniform(0, 6));  // ties on purpose
    }
    const auto got = non_dominated_sort(as_points(objs));
    const auto want = oracles::non_dominated_sort(objs);
    REQUIRE(got.size() == want.size());
    for (std::size_t f = 0; f < got.size(); ++f) {
      CHECK(got[f] == want[f]);
    }
  }
}

TEST_CASE("crowding distance marks boundaries infinite") {
  const auto two = crowding_distance(as_points({{0, 1}, {1, 0}}));
  CHECK(std::isinf(two[0]));
  CHECK(std::isinf(two[1]));

  const auto three = crowding_distance(as_points({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(std::isinf(three[0]));
  CHECK(std::isinf(three[2]));
  CHECK(three[1] == doctest::Approx(2.0));
}

TEST_CASE("crowding distance matches brute force on small fronts") {
  Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(8));
    std::vector<std::vector<double>> objs(n, std::vector<double>(2));
    for (auto& row : objs) {
      row[0] = rng.uniform(0, 1);
      row[1] = -row[0] + rng.uniform(0, 0.01);  // roughly front-shaped
    }
    const auto got = crowding_distance(as_points(objs));
    const auto want = oracles::crowding(objs);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (std::isinf(want[i])) {
        CHECK(std::isinf(got[i]));
      } else {
        CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("hypervolume of simple fronts") {
  CHECK(hypervolume(as_points({{0.5, 0.5}}), {1, 1}) == doctest::Approx(0.25));
  CHECK(hypervolume(as_points({{0.25, 0.75}, {0.75, 0.25}}), {1, 1}) ==
        doctest::Approx(0.3125));
  CHECK(hypervolume({}, {1, 1}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(hypervolume(as_points({{1.5, 0.5}}), {1, 1}), Error);
}

TEST_CASE("hypervolume ignores duplicates and dominated points") {
  const double base = hypervolume(as_points({{0.25, 0.75}, {0.75, 0.25}}), {1, 1});
  CHECK(hypervolume(as_points({{0.25, 0.75}, {0.75, 0.25}, {0.25, 0.75}}), {1, 1}) ==
        doctest::Approx(base));
  CHECK(hypervolume(as_points({{0.25, 0.75}, {0.75, 0.25}, {0.8, 0.8}}), {1, 1}) ==
        doctest::Approx(base));
  // A new non-dominated point can only grow the volume.
  CHECK(hypervolume(as_points({{0.25, 0.75}, {0.75, 0.25}, {0.5, 0.4}}), {1, 1}) >= base);
}

TEST_CASE("hypervolume matches Monte Carlo on random fronts") {
  Rng rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(6));
    std::vector<std::vector<double>> objs;
    for (int i = 0; i < n; ++i) {
      objs.push_back({rng.uniform(0, 0.9), rng.uniform(0, 0.9)});
    }
    const double exact = hypervolume(as_points(objs), {1, 1});
    const auto mc = oracles::hypervolume_mc(objs, {1, 1}, 200000, 1000 + trial);
    CHECK(std::fabs(exact - mc.value) <= 3.0 * mc.sigma + 1e-9);
  }
}

TEST_CASE("spread of uniform and non-uniform fronts") {
  // Equally spaced collinear points, extremes defaulting to the boundary.
  CHECK(spread(as_points({{0, 2}, {1, 1}, {2, 0}})) == doctest::Approx(0.0));
  // Gaps 1 and 3: (|1-2| + |3-2|) / (2*2).
  CHECK(spread(as_points({{0, 0}, {1, 0}, {4, 0}})) == doctest::Approx(0.5));
  CHECK_THROWS_AS(spread(as_points({{0, 1}, {1, 0}})), Error);

  // Configured extremes add the boundary gap terms.
  const auto front = as_points({{0, 2}, {1, 1}, {2, 0}});
  const double with_extremes =
      spread(front, std::make_pair(std::vector<double>{-1.0, 3.0}, std::vector<double>{3.0, -1.0}));
  const double d_f = std::sqrt(2.0);
  CHECK(with_extremes == doctest::Approx(2.0 * d_f / (2.0 * d_f + 2.0 * std::sqrt(2.0))));
}
