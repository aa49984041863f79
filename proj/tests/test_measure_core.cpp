#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "simdis/grid.hpp"
#include "simdis/measure.hpp"

using namespace simdis;

namespace {

Measure<double> abs_diff_measure(double hi = 1.0) {
  return Measure<double>(MeasureKind::dissimilarity, Interval::closed(0.0, hi),
                         [](double x, double y) { return std::fabs(x - y); }, "absdiff");
}

}  // namespace

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(Interval::closed(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval::closed(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(0.0, Interval::infinity(), true, true), std::invalid_argument);
  CHECK_THROWS_AS(Interval(-Interval::infinity(), 0.0, true, true), std::invalid_argument);

  auto iv = Interval::upper_closed(0.0, 1.0);  // (0, 1]
  CHECK(iv.contains(1.0));
  CHECK_FALSE(iv.contains(0.0));
  CHECK(iv.contains(0.5));
  CHECK(iv.contains_within(-1e-12, 1e-9));
  CHECK_FALSE(iv.contains_within(-1.0, 1e-9));

  CHECK(Interval::closed(0.0, 1.0).superset_of(iv));
  CHECK_FALSE(iv.superset_of(Interval::closed(0.0, 1.0)));
  CHECK(Interval::nonnegative().superset_of(Interval::closed(1.0, 7.0)));
}

TEST_CASE("make_measure validates kind against codomain") {
  auto d1 = make_measure<double>(MeasureKind::dissimilarity, Interval::unit(),
                                 [](double x, double y) { return std::fabs(x - y); }, "d1");
  CHECK(d1.diagonal_extremum() == 0.0);
  CHECK(d1(0.25, 0.75) == Catch::Approx(0.5));

  // A similarity needs a finite top, a dissimilarity a finite bottom.
  CHECK_THROWS_AS(
      make_measure<double>(MeasureKind::similarity,
                           Interval::lower_closed(0.0, Interval::infinity()),
                           [](double, double) { return 0.0; }, "bad"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_measure<double>(MeasureKind::dissimilarity,
                           Interval::upper_closed(-Interval::infinity(), 0.0),
                           [](double, double) { return 0.0; }, "bad"),
      std::invalid_argument);
}

TEST_CASE("make_measure applies the non-negativity shift only when needed") {
  // Top already at zero: no shift.
  auto s0 = make_measure<double>(MeasureKind::similarity, Interval::closed(-1.0, 0.0),
                                 [](double x, double y) { return -std::fabs(x - y); },
                                 "shifted");
  CHECK(s0.diagonal_extremum() == 0.0);
  CHECK(s0.name() == "shifted");
  CHECK(s0(0.0, 0.5) == Catch::Approx(-0.5));

  // Top at -1: shifted up by 1, recorded in the name.
  auto s1 = make_measure<double>(MeasureKind::similarity, Interval::closed(-2.0, -1.0),
                                 [](double x, double y) { return -1.0 - std::fabs(x - y); },
                                 "neg");
  CHECK(s1.diagonal_extremum() == 0.0);
  CHECK(s1.codomain().lo() == -1.0);
  CHECK(s1.name() == "neg+1");
  CHECK(s1(0.0, 0.0) == 0.0);
}

TEST_CASE("measures are total and stay on their bounded side over samples") {
  auto d1 = abs_diff_measure();
  auto grid = make_real_grid(0.0, 1.0, 0.05);
  for (double x : grid) {
    for (double y : grid) {
      double v = d1(x, y);
      CHECK(std::isfinite(v));
      CHECK(v >= d1.codomain().lo());
    }
  }
}

TEST_CASE("domain sample rejects duplicates and emptiness") {
  CHECK_THROWS_AS(DomainSample<double>({}), std::invalid_argument);
  CHECK_THROWS_AS(DomainSample<double>({0.0, 1.0, 0.0}), std::invalid_argument);
  DomainSample<double> ok({0.0, 0.5, 1.0});
  CHECK(ok.size() == 3);
  CHECK(ok.label(1) == "0.5");
}

TEST_CASE("induced preorder compares pair values") {
  auto d1 = abs_diff_measure();
  DomainSample<double> dom({0.0, 0.5, 1.0});
  auto pre = induced_preorder(d1, dom);

  // (0, 0.5) precedes (0, 1) because 0.5 <= 1.
  CHECK(pre.leq(pre.pair_index(0, 1), pre.pair_index(0, 2)));
  CHECK_FALSE(pre.leq(pre.pair_index(0, 2), pre.pair_index(0, 1)));

  DomainSample<double> single({0.25});
  auto tiny = induced_preorder(d1, single);
  CHECK(tiny.pair_count() == 1);
  CHECK(tiny.leq(0, 0));
}

TEST_CASE("preorder laws hold on samples") {
  auto d1 = abs_diff_measure();
  DomainSample<double> dom(make_real_grid(0.0, 1.0, 0.25));
  auto pre = induced_preorder(d1, dom);
  const std::size_t pairs = pre.pair_count();
  for (std::size_t p = 0; p < pairs; ++p) CHECK(pre.leq(p, p));
  for (std::size_t p = 0; p < pairs; ++p) {
    for (std::size_t q = 0; q < pairs; ++q) {
      for (std::size_t r = 0; r < pairs; ++r) {
        if (pre.leq(p, q) && pre.leq(q, r)) CHECK(pre.leq(p, r));
      }
    }
  }
}

TEST_CASE("preorder does not force pair equality") {
  auto constant = Measure<double>(MeasureKind::dissimilarity, Interval::unit(),
                                  [](double, double) { return 0.5; }, "const");
  DomainSample<double> dom({0.0, 1.0});
  auto pre = induced_preorder(constant, dom);
  std::size_t p = pre.pair_index(0, 1), q = pre.pair_index(1, 0);
  CHECK(p != q);
  CHECK(pre.leq(p, q));
  CHECK(pre.leq(q, p));
}

TEST_CASE("monotone rescaling induces the same preorder") {
  // |x-y| and (x-y)^2 order pairs identically on nonnegative values; check
  // every one of the 81 pair-versus-pair comparisons.
  auto plain = abs_diff_measure(2.0);
  auto squared = Measure<double>(MeasureKind::dissimilarity, Interval::closed(0.0, 4.0),
                                 [](double x, double y) { return (x - y) * (x - y); },
                                 "squared");
  DomainSample<double> dom({0.0, 1.0, 2.0});
  auto pre1 = induced_preorder(plain, dom);
  auto pre2 = induced_preorder(squared, dom);
  REQUIRE(pre1.pair_count() == 9);
  std::size_t compared = 0;
  for (std::size_t p = 0; p < 9; ++p) {
    for (std::size_t q = 0; q < 9; ++q) {
      CHECK(pre1.leq(p, q) == pre2.leq(p, q));
      ++compared;
    }
  }
  CHECK(compared == 81);
}

TEST_CASE("real grids follow the exact lo + k*step rule") {
  auto g = make_real_grid(0.0, 1.0, 0.05);
  CHECK(g.size() == 21);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == Catch::Approx(1.0));
  CHECK(g[7] == 7 * 0.05);

  auto ints = make_int_grid(-3, 3);
  CHECK(ints.size() == 7);
  CHECK_THROWS_AS(make_real_grid(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_real_grid(1.0, 0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(make_int_grid(2, 1), std::invalid_argument);
}
