#include <doctest.h>

#include "scengen/catalog.hpp"
#include "scengen/rng.hpp"
#include "scengen/search_space.hpp"

using namespace scengen;

TEST_CASE("space of one parameter") {
  const auto space = SearchSpace::create({{"bv_speed", Axis::kTrafficParticipant, 4, 0.0, 15.0, "m/s"}});
  CHECK(space.dimension() == 1);
  CHECK(space.index_of("bv_speed") == 0);
}

TEST_CASE("axis and layer bookkeeping") {
  const auto space = SearchSpace::create({
      {"bv_speed", Axis::kTrafficParticipant, 4, 0.5, 15.0, "m/s"},
      {"bv_spawn_delay", Axis::kTemporaryChange, 3, 0.0, 10.0, "s"},
      {"fog_density", Axis::kWeather, 5, 0.0, 100.0, "%"},
      {"wetness", Axis::kWeather, 5, 0.0, 100.0, "%"},
  });
  CHECK(space.dimension() == 4);
  int weather = 0;
  for (const auto& spec : space.specs()) {
    if (spec.axis == Axis::kWeather) ++weather;
  }
  CHECK(weather == 2);
  CHECK(space.static_indices().empty());
  CHECK(space.dynamic_indices().size() == 4);
}

TEST_CASE("duplicate names and inverted bounds are rejected") {
  CHECK_THROWS_AS(SearchSpace::create({
                      {"bv_speed", Axis::kTrafficParticipant, 4, 0.0, 15.0, "m/s"},
                      {"bv_speed", Axis::kTrafficParticipant, 4, 0.0, 10.0, "m/s"},
                  }),
                  Error);
  CHECK_THROWS_AS(SearchSpace::create({{"x", Axis::kExtension, 5, 2.0, 1.0, ""}}), Error);
  CHECK_THROWS_AS(SearchSpace::create({}), Error);
}

TEST_CASE("encode places values in layout order") {
  const auto space = SearchSpace::create({{"bv_speed", Axis::kTrafficParticipant, 4, 0.0, 15.0, "m/s"}});
  const auto v = encode(space, {{"bv_speed", 1.8}});
  CHECK(v.values == std::vector<double>{1.8});

  CHECK_THROWS_AS(encode(space, {}), Error);
  CHECK_THROWS_AS(encode(space, {{"unknown", 1.0}, {"bv_speed", 1.0}}), Error);
}

TEST_CASE("encode/decode round trip on random maps") {
  const auto space = SearchSpace::default_dynamic(true);
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<std::string, double> named;
    for (const auto& spec : space.specs()) {
      named[spec.name] = rng.uniform(spec.lower, spec.upper);
    }
    const auto v = encode(space, named);
    CHECK(decode(space, v) == named);
    CHECK(encode(space, decode(space, v)).values == v.values);
  }
}

TEST_CASE("clamp projects onto bounds and is idempotent") {
  const auto space = SearchSpace::create({{"bv_speed", Axis::kTrafficParticipant, 4, 0.0, 15.0, "m/s"}});
  CHECK(clamp_to_bounds(space, {{20.0}}).values == std::vector<double>{15.0});
  CHECK(clamp_to_bounds(space, {{-3.0}}).values == std::vector<double>{0.0});
  CHECK(clamp_to_bounds(space, {{7.5}}).values == std::vector<double>{7.5});

  Rng rng(11);
  const auto wide = SearchSpace::default_dynamic(true);
  for (int trial = 0; trial < 200; ++trial) {
    ScenarioVector v;
    for (std::size_t d = 0; d < wide.dimension(); ++d) v.values.push_back(rng.uniform(-50, 150));
    const auto once = clamp_to_bounds(wide, v);
    CHECK(within_bounds(wide, once));
    CHECK(clamp_to_bounds(wide, once).values == once.values);
  }

  CHECK_THROWS_AS(clamp_to_bounds(space, {{1.0, 2.0}}), Error);
}

TEST_CASE("static partition holds exactly the layer 1-2 specs") {
  const auto space = SearchSpace::create({
      {"lane_width", Axis::kStatic, 1, 2.5, 5.0, "m"},
      {"signal_cycle", Axis::kStatic, 2, 10.0, 120.0, "s"},
      {"bv_speed", Axis::kTrafficParticipant, 4, 0.5, 15.0, "m/s"},
  });
  CHECK(space.static_indices() == std::vector<std::size_t>{0, 1});
  CHECK(space.dynamic_indices() == std::vector<std::size_t>{2});
}

TEST_CASE("search space loads from JSON") {
  const auto space = SearchSpace::from_json_text(R"([
    {"name": "bv_speed", "axis": "traffic_participant", "layer": 4,
     "lower": 0.5, "upper": 15.0, "unit": "m/s"},
    {"name": "fog_density", "axis": "weather", "layer": 5, "lower": 0, "upper": 100}
  ])");
  CHECK(space.dimension() == 2);
  CHECK(space.spec(1).axis == Axis::kWeather);
  CHECK_THROWS_AS(SearchSpace::from_json_text("{"), Error);
}

TEST_CASE("catalog returns the configured logical scenarios") {
  const auto s1 = catalog_scenario("S1");
  CHECK(s1.ego_start == "P5");
  CHECK(s1.ego_end == "P2");
  CHECK(s1.ego_speed == doctest::Approx(6.9));
  CHECK(s1.bv_start == "P3");
  CHECK(s1.bv_end == "P8");
  CHECK(s1.bv_speed == doctest::Approx(1.8));
  CHECK(s1.conflict == "C1");

  const auto s3 = catalog_scenario("S3");
  CHECK(s3.ego_start == "P1");
  CHECK(s3.ego_end == "P6");
  CHECK(s3.ego_speed == doctest::Approx(6.9));
  CHECK(s3.bv_start == "P7");
  CHECK(s3.bv_end == "P2");
  CHECK(s3.bv_speed == doctest::Approx(5.5));
  CHECK(s3.conflict == "C3");

  const auto s4 = catalog_scenario("S4");
  CHECK(s4.ego_sim_speed_override == doctest::Approx(2.0));

  CHECK_THROWS_AS(catalog_scenario("S9"), Error);
}
