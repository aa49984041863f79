#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "simdis/grid.hpp"
#include "simdis/scalar_map.hpp"

using namespace simdis;

TEST_CASE("builders invert on their domains") {
  struct Case {
    ScalarMap map;
    std::vector<double> probes;
  };
  Case cases[] = {
      {linear_map(2.0, -1.0), {-3.0, 0.0, 4.5}},
      {power_map(2.0), {0.0, 0.3, 2.0}},
      {power_map(0.5), {0.0, 0.09, 4.0}},
      {exp_shift_map(), {0.0, 1.0, 3.0}},
      {one_minus_map(1.0), {0.0, 0.25, 1.0}},
      {one_minus_map(2.0), {0.0, 0.25, 1.0}},
      {ratio_map(1.0), {0.0, 2.0, 9.0}},
  };
  for (const auto& c : cases) {
    INFO(c.map.name());
    for (double z : c.probes) {
      CHECK(c.map.inverse(c.map.forward(z)) == Catch::Approx(z).margin(1e-12));
    }
  }
}

TEST_CASE("builder preconditions") {
  CHECK_THROWS_AS(linear_map(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(power_map(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(one_minus_map(0.0), std::invalid_argument);
  CHECK_THROWS_AS(one_minus_map(-2.0), std::invalid_argument);
  CHECK_THROWS_AS(ratio_map(0.0), std::invalid_argument);
}

TEST_CASE("spec string parsing") {
  CHECK(parse_scalar_map("lin:2:1").forward(3.0) == 7.0);
  CHECK(parse_scalar_map("pow:2").forward(3.0) == 9.0);
  CHECK(parse_scalar_map("explog").forward(0.0) == 0.0);
  CHECK(parse_scalar_map("oneminus:1").forward(0.25) == 0.75);
  CHECK(parse_scalar_map("ratk:1").forward(1.0) == 0.5);
  CHECK(parse_scalar_map("id").forward(0.5) == 0.5);
  CHECK_THROWS_AS(parse_scalar_map("warp:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar_map("pow:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar_map("lin:1"), std::invalid_argument);
}

TEST_CASE("reversed swaps the reading direction") {
  auto f = exp_shift_map();
  auto r = f.reversed();
  CHECK(r.forward(f.forward(2.0)) == Catch::Approx(2.0));
  CHECK(r.domain().same_bounds(f.codomain()));
  CHECK(r.direction() == f.direction());
}

TEST_CASE("interval images track direction and flags") {
  auto up = power_map(2.0);
  auto img = up.map_interval(Interval::lower_closed(0.0, 3.0));
  CHECK(img.lo() == 0.0);
  CHECK(img.hi() == 9.0);
  CHECK(img.lo_closed());
  CHECK_FALSE(img.hi_closed());

  auto down = one_minus_map(1.0);
  auto flipped = down.map_interval(Interval::lower_closed(0.0, 1.0));  // [0,1) -> (0,1]
  CHECK(flipped.lo() == 0.0);
  CHECK_FALSE(flipped.lo_closed());
  CHECK(flipped.hi() == 1.0);
  CHECK(flipped.hi_closed());

  // Unbounded end of the domain lands on the declared codomain end.
  auto ratio = ratio_map(1.0);
  auto whole = ratio.map_interval(ratio.domain());
  CHECK(whole.lo() == 0.0);
  CHECK(whole.hi() == 1.0);
  CHECK_FALSE(whole.hi_closed());

  CHECK_THROWS_AS(down.map_interval(Interval::closed(0.0, 2.0)), std::invalid_argument);
}

TEST_CASE("unit transformations validate the endpoint swap") {
  auto flip = make_unit_transformation([](double z) { return 1.0 - z; },
                                       [](double y) { return 1.0 - y; }, kDefaultTol,
                                       "flip");
  CHECK(flip.forward(0.25) == 0.75);

  // Increasing candidate: endpoints are the wrong way around.
  CHECK_THROWS_AS(make_unit_transformation([](double z) { return z; }),
                  std::invalid_argument);
  // Right endpoints, not monotone in between.
  CHECK_THROWS_AS(make_unit_transformation([](double z) {
                    return 1.0 - z + 0.2 * std::sin(6.283185307179586 * z);
                  }),
                  std::invalid_argument);
}

TEST_CASE("involution check") {
  auto grid = make_real_grid(0.0, 1.0, 0.05);

  auto flip = one_minus_map(1.0);
  CHECK(is_involutive(flip, grid).involutive);

  auto sqrt_flip = one_minus_map(2.0);
  auto res = is_involutive(sqrt_flip, {0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_FALSE(res.involutive);
  CHECK(res.witness == 0.25);  // endpoints are fixed, the first interior point is not
  double twice = sqrt_flip.forward(sqrt_flip.forward(0.25));
  CHECK(res.error == Catch::Approx(std::fabs(twice - 0.25)));

  // Endpoints alone are fixed by the bijection conditions.
  CHECK(is_involutive(sqrt_flip, {0.0, 1.0}).involutive);
}

TEST_CASE("numeric inverses hit bisection accuracy") {
  // Strictly increasing with no closed-form inverse to hand.
  auto warp = make_numeric_inverse_map(
      [](double z) { return z + 0.5 * std::sin(z); }, Interval::closed(0.0, 2.0),
      Interval::closed(0.0, 2.0 + 0.5 * std::sin(2.0)), MapDirection::increasing, "warp");
  CHECK(warp.has_numeric_inverse());
  for (double y : {0.1, 0.9, 2.0}) {
    CHECK(warp.forward(warp.inverse(y)) == Catch::Approx(y).margin(1e-10));
  }

  // A unit transformation without a supplied inverse gets one bisected.
  auto curved = make_unit_transformation(
      [](double z) { return (1.0 - z) / (1.0 + z); });
  CHECK(curved.has_numeric_inverse());
  CHECK(curved.inverse(curved.forward(0.3)) == Catch::Approx(0.3).margin(1e-10));
}

TEST_CASE("general transformations wire through the unit interval") {
  auto unit = identity_map();
  auto flip = one_minus_map(1.0);

  SECTION("identity wrapping returns the unit transformation itself") {
    auto f = make_general_transformation(unit, flip, unit);
    for (double z : make_real_grid(0.0, 1.0, 0.1)) {
      CHECK(f.forward(z) == Catch::Approx(1.0 - z));
    }
    CHECK(f.direction() == MapDirection::decreasing);
  }

  SECTION("power carrier reproduces the one-minus family") {
    auto f = make_general_transformation(power_map(0.5), flip, unit);
    auto target = one_minus_map(2.0);
    for (double z : make_real_grid(0.0, 1.0, 0.05)) {
      CHECK(f.forward(z) == Catch::Approx(target.forward(z)).margin(1e-12));
    }
  }

  SECTION("ratio carrier builds the bounded-metric transformation") {
    auto f = make_general_transformation(unit, flip, ratio_map(1.0));
    for (double z : make_real_grid(0.0, 10.0, 0.5)) {
      CHECK(f.forward(z) == Catch::Approx(1.0 - z / (z + 1.0)).margin(1e-12));
    }
    CHECK(f.codomain().lo() == 0.0);
    CHECK_FALSE(f.codomain().lo_closed());
    CHECK(f.codomain().hi_closed());
    CHECK(f.inverse(f.forward(3.0)) == Catch::Approx(3.0).margin(1e-12));
  }

  SECTION("seam mismatches are rejected") {
    CHECK_THROWS_AS(make_general_transformation(unit, flip, exp_shift_map()),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_general_transformation(unit, power_map(2.0), unit),
                    std::invalid_argument);
  }
}
