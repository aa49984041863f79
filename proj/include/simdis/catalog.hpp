#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "simdis/measure.hpp"
#include "simdis/operators.hpp"
#include "simdis/scalar_map.hpp"
#include "simdis/transforms.hpp"

namespace simdis {

// A ready-made measure bundled with the operator it is documented to be
// transitive under (when one is known) and a short origin note. Whether the
// documented operator actually holds up is the verifier's business, not an
// assumption: two of the stock entries below are famous for failing theirs.
template <typename E>
struct CatalogEntry {
  Measure<E> measure;
  std::optional<TransitivityOperator> documented_operator;
  std::string provenance;
};

template <typename E>
CatalogEntry<E> make_entry(Measure<E> measure, std::optional<TransitivityOperator> op,
                           std::string provenance) {
  if (op && !op->domain().same_bounds(measure.codomain())) {
    throw std::invalid_argument("documented operator domain " + op->domain().str() +
                                " does not match codomain " + measure.codomain().str());
  }
  return {std::move(measure), std::move(op), std::move(provenance)};
}

namespace detail {

template <typename E>
double absdiff(const E& x, const E& y) {
  return std::fabs(static_cast<double>(x) - static_cast<double>(y));
}

inline void require_positive_alpha(double alpha) {
  if (alpha == 0.0) throw std::invalid_argument("alpha must be nonzero");
  if (alpha < 0.0) {
    // The family's unit transformation is not total on [0, 1] for negative
    // alpha (the power blows up at 1), so no honest measure can be built.
    throw std::invalid_argument("alpha must be positive");
  }
}

}  // namespace detail

// d1(x, y) = |x - y| on the unit interval, bounded-sum transitive.
template <typename E = double>
CatalogEntry<E> example1_d1() {
  Measure<E> m(MeasureKind::dissimilarity, Interval::unit(),
               [](const E& x, const E& y) { return detail::absdiff(x, y); }, "d1");
  return make_entry(std::move(m), builtin_operator("bounded_sum"),
                    "d1(x,y) = |x-y| on [0,1], documented with min(1, a+b)");
}

// d2(x, y) = min(x, y): not reflexive, and its documented operator min
// fails both the null-element axiom at 0 and the transitivity sweep. It is
// kept as the stock example of a documented claim the verifier refutes.
template <typename E = double>
CatalogEntry<E> example1_d2() {
  Measure<E> m(MeasureKind::dissimilarity, Interval::unit(),
               [](const E& x, const E& y) {
                 return std::min(static_cast<double>(x), static_cast<double>(y));
               },
               "d2");
  return make_entry(std::move(m), builtin_operator("min"),
                    "d2(x,y) = min(x,y) on [0,1], documented with min");
}

// s1(x, y) = (1 - |x - y|)^(1/alpha), the dual of d1 under the one-minus
// family; transitive under the matching Lukasiewicz-family operator.
template <typename E = double>
CatalogEntry<E> example1_s1(double alpha) {
  detail::require_positive_alpha(alpha);
  auto eval = [alpha](const E& x, const E& y) {
    double base = 1.0 - detail::absdiff(x, y);
    return alpha == 1.0 ? base : std::pow(base, 1.0 / alpha);
  };
  Measure<E> m(MeasureKind::similarity, Interval::unit(), eval,
               "s1:" + detail::format_real(alpha));
  return make_entry(std::move(m), builtin_operator("lukasiewicz_family", alpha),
                    "s1(x,y) = (1-|x-y|)^(1/alpha), dual of d1");
}

// s2(x, y) = max((1 - x)^(1/alpha), (1 - y)^(1/alpha)), the dual of d2.
// Documented with max, which the verifier refutes just as it refutes min
// for d2 (any element scoring the extremum against everything breaks both).
template <typename E = double>
CatalogEntry<E> example1_s2(double alpha) {
  detail::require_positive_alpha(alpha);
  auto eval = [alpha](const E& x, const E& y) {
    double gx = 1.0 - static_cast<double>(x);
    double gy = 1.0 - static_cast<double>(y);
    if (alpha != 1.0) {
      gx = std::pow(gx, 1.0 / alpha);
      gy = std::pow(gy, 1.0 / alpha);
    }
    return std::max(gx, gy);
  };
  Measure<E> m(MeasureKind::similarity, Interval::unit(), eval,
               "s2:" + detail::format_real(alpha));
  return make_entry(std::move(m), builtin_operator("max"),
                    "s2(x,y) = max((1-x)^(1/alpha), (1-y)^(1/alpha)), dual of d2");
}

// The two dual triples of the first worked example, linked by the
// one-minus family map oriented from the similarity scale to the
// dissimilarity scale.
template <typename E = double>
std::pair<DualTriple<E>, DualTriple<E>> example1_duals(double alpha) {
  detail::require_positive_alpha(alpha);
  ScalarMap link = one_minus_map(alpha).reversed();  // sim values -> dis values
  DualTriple<E> first{example1_s1<E>(alpha).measure, example1_d1<E>().measure, link};
  DualTriple<E> second{example1_s2<E>(alpha).measure, example1_d2<E>().measure, link};
  return {std::move(first), std::move(second)};
}

// Integer similarity s(x, y) = 1 - |x-y| / (|x-y| + 1): strongly reflexive
// and symmetric, values in (0, 1] with the infimum 0 never attained, hence
// no complement function. Transitive under max(a + b - 1, 0) because
// z / (z + 1) is subadditive.
template <typename E = long long>
CatalogEntry<E> example2_similarity() {
  auto eval = [](const E& x, const E& y) {
    double u = detail::absdiff(x, y);
    return 1.0 - u / (u + 1.0);
  };
  Measure<E> m(MeasureKind::similarity, Interval::upper_closed(0.0, 1.0), eval, "ex2.s");
  return make_entry(std::move(m), builtin_operator("lukasiewicz_family", 1.0),
                    "s(x,y) = 1 - |x-y|/(|x-y|+1) on integer pairs; strongly reflexive, "
                    "symmetric, lower bounded, not lower closed, no complement function");
}

// The equivalence chain d -> d' -> d'': an exponential dissimilarity, the
// plain metric it is equivalent to, and the squared metric. The links
// record which map carries one onto the next; each entry's documented
// operator is the conjugate of its neighbour's.
template <typename E = double>
struct Example3Chain {
  CatalogEntry<E> d;         // e^|x-y| - 1, with ab + a + b
  CatalogEntry<E> d_prime;   // |x - y|, with a + b
  CatalogEntry<E> d_second;  // (x - y)^2, with (sqrt a + sqrt b)^2
  ScalarMap shrink_link;     // ln(z+1): carries d onto d_prime
  ScalarMap square_link;     // z^2:     carries d_prime onto d_second
};

template <typename E = double>
Example3Chain<E> example3_chain() {
  Measure<E> d(MeasureKind::dissimilarity, Interval::nonnegative(),
               [](const E& x, const E& y) { return std::expm1(detail::absdiff(x, y)); },
               "ex3.d");
  Measure<E> d_prime(MeasureKind::dissimilarity, Interval::nonnegative(),
                     [](const E& x, const E& y) { return detail::absdiff(x, y); },
                     "ex3.dprime");
  Measure<E> d_second(MeasureKind::dissimilarity, Interval::nonnegative(),
                      [](const E& x, const E& y) {
                        double u = static_cast<double>(x) - static_cast<double>(y);
                        return u * u;
                      },
                      "ex3.dsecond");
  return Example3Chain<E>{
      make_entry(std::move(d), builtin_operator("product_shifted"),
                 "d(x,y) = e^|x-y| - 1, explog image of the metric"),
      make_entry(std::move(d_prime), builtin_operator("sum"),
                 "d'(x,y) = |x-y|, the standard metric"),
      make_entry(std::move(d_second), conjugate_operator(builtin_operator("sum"), power_map(2.0)),
                 "d''(x,y) = (x-y)^2, square image of the metric"),
      exp_shift_map().reversed(),
      power_map(2.0)};
}

}  // namespace simdis
