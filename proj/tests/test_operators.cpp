#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "simdis/grid.hpp"
#include "simdis/measure.hpp"
#include "simdis/operators.hpp"
#include "simdis/verifier.hpp"

using namespace simdis;

TEST_CASE("builtin operator values") {
  auto bsum = builtin_operator("bounded_sum");
  CHECK(bsum(0.7, 0.6) == 1.0);
  CHECK(bsum(0.2, 0.3) == Catch::Approx(0.5));

  auto prodshift = builtin_operator("product_shifted");
  CHECK(prodshift(2.0, 3.0) == 11.0);

  auto luk1 = builtin_operator("lukasiewicz_family", 1.0);
  // The alpha = 1 member degenerates to max(a + b - 1, 0), bit for bit.
  for (double a : make_real_grid(0.0, 1.0, 0.05)) {
    for (double b : make_real_grid(0.0, 1.0, 0.05)) {
      CHECK(luk1(a, b) == std::max(a + b - 1.0, 0.0));
    }
  }

  CHECK_THROWS_AS(builtin_operator("nope"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_operator("lukasiewicz_family", 0.0), std::invalid_argument);
  CHECK_THROWS_AS(builtin_operator("lukasiewicz_family"), std::invalid_argument);
}

TEST_CASE("null element placement is enforced at construction") {
  CHECK_THROWS_AS(TransitivityOperator(Interval::unit(), 0.5, OperatorSide::dissimilarity,
                                       [](double a, double b) { return a * b; }, "bad"),
                  std::invalid_argument);
  CHECK_THROWS_AS(TransitivityOperator(Interval::unit(), 0.0, OperatorSide::similarity,
                                       [](double a, double b) { return a * b; }, "bad"),
                  std::invalid_argument);
}

TEST_CASE("axiom check flags the null failure of min at the bottom") {
  // min sits on the dissimilarity side with null element 0, where
  // min(x, 0) = 0 != x; the report must say so while the other axioms pass.
  auto rep = check_operator_axioms(builtin_operator("min"), {0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_FALSE(rep.null_element.holds);
  REQUIRE_FALSE(rep.null_element.counterexamples.empty());
  CHECK(rep.null_element.counterexamples.front().inputs[1] == "0");
  CHECK(rep.monotonicity.holds);
  CHECK(rep.symmetry.holds);
  CHECK(rep.associativity.holds);
  CHECK_FALSE(rep.axioms_pass());
  REQUIRE(rep.failing().size() == 1);
  CHECK(rep.failing().front()->property == "null_element");
}

TEST_CASE("axiom check flags the null failure of max at the top") {
  auto rep = check_operator_axioms(builtin_operator("max"), {0.0, 0.5, 1.0});
  CHECK_FALSE(rep.null_element.holds);  // max(x, 1) = 1 != x
  CHECK(rep.monotonicity.holds);
  CHECK(rep.symmetry.holds);
  CHECK(rep.associativity.holds);
}

TEST_CASE("sum and the product family pass all four axioms") {
  for (const char* name : {"sum", "product_shifted", "bounded_sum"}) {
    auto rep = check_operator_axioms(builtin_operator(name),
                                     name == std::string("bounded_sum")
                                         ? std::vector<double>{0.0, 0.25, 0.5, 1.0}
                                         : std::vector<double>{0.0, 1.0, 2.0, 5.0});
    INFO(name);
    CHECK(rep.axioms_pass());
    CHECK(rep.closure.holds);
  }
  auto rep = check_operator_axioms(builtin_operator("product_on_1inf"), {1.0, 2.0, 4.0});
  CHECK(rep.axioms_pass());
  CHECK(rep.closure.holds);
}

TEST_CASE("axiom grid must live inside the operator domain") {
  CHECK_THROWS_AS(check_operator_axioms(builtin_operator("min"), {0.0, 1.5}),
                  std::invalid_argument);
  // The null element is appended when the grid misses it.
  auto rep = check_operator_axioms(builtin_operator("sum"), {1.0, 2.0});
  CHECK(rep.null_element.checked_count == 3);
}

TEST_CASE("closure holds for every builtin on its default grid") {
  for (const char* name : {"min", "max", "bounded_sum", "sum", "product_shifted",
                           "product_on_1inf"}) {
    auto op = builtin_operator(name);
    auto rep = check_operator_axioms(op, default_operator_grid(op));
    INFO(name);
    CHECK(rep.closure.holds);
  }
  auto luk = builtin_operator("lukasiewicz_family", 2.0);
  CHECK(check_operator_axioms(luk, default_operator_grid(luk)).closure.holds);
}

TEST_CASE("restrictiveness gradation") {
  std::vector<double> grid{0.0, 1.0, 2.0, 5.0};

  SECTION("sum never exceeds the shifted product and dips below it") {
    auto res = compare_restrictiveness(builtin_operator("sum"),
                                       builtin_operator("product_shifted"), grid);
    CHECK(res.verdict == Restrictiveness::more_restrictive);
    REQUIRE(res.op1_below.has_value());
    CHECK_FALSE(res.op1_above.has_value());
    CHECK(res.checked_count == 16);
  }

  SECTION("an operator equals itself") {
    auto res = compare_restrictiveness(builtin_operator("min"), builtin_operator("min"),
                                       {0.0, 0.5, 1.0});
    CHECK(res.verdict == Restrictiveness::equal);
  }

  SECTION("min is the more restrictive of min and bounded sum") {
    // Full enumeration of the 3x3 grid: bounded_sum >= min everywhere,
    // strictly above at (0, .5) and (.5, .5).
    auto res = compare_restrictiveness(builtin_operator("bounded_sum"),
                                       builtin_operator("min"), {0.0, 0.5, 1.0});
    CHECK(res.verdict == Restrictiveness::less_restrictive);
    REQUIRE(res.op1_above.has_value());
    CHECK(res.op1_above->inputs[0] == "0");
    CHECK(res.op1_above->inputs[1] == "0.5");
  }

  SECTION("domains must match") {
    CHECK_THROWS_AS(compare_restrictiveness(builtin_operator("sum"),
                                            builtin_operator("min"), {0.0, 1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("transitivity under the more restrictive operator implies the other") {
  Measure<double> metric(MeasureKind::dissimilarity, Interval::nonnegative(),
                         [](double x, double y) { return std::fabs(x - y); }, "metric");
  std::vector<double> pts;
  for (int v = -10; v <= 10; ++v) pts.push_back(v);
  DomainSample<double> dom(pts);

  auto under_sum = verify_transitivity(metric, builtin_operator("sum"), dom);
  auto under_prod = verify_transitivity(metric, builtin_operator("product_shifted"), dom);
  REQUIRE(under_sum.holds);
  CHECK(under_prod.holds);
}

TEST_CASE("default operator grids truncate unbounded domains") {
  auto g = default_operator_grid(builtin_operator("sum"));
  CHECK(g.size() == 21);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 10.0);
  auto u = default_operator_grid(builtin_operator("min"));
  CHECK(u.front() == 0.0);
  CHECK(u.back() == 1.0);
}
