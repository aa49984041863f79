#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "simdis/measure.hpp"
#include "simdis/operators.hpp"
#include "simdis/scalar_map.hpp"

namespace simdis {

// Composes an increasing invertible map with a measure. The result keeps
// the kind, scores every pair through the map, and declares the image
// interval as its codomain. The induced preorder is unchanged, which is
// what makes the two measures equivalent.
template <typename E>
Measure<E> apply_equivalence(const Measure<E>& m, const ScalarMap& f) {
  if (!f.increasing()) {
    throw std::invalid_argument("equivalence needs an increasing map, got " + f.name());
  }
  if (!f.domain().superset_of(m.codomain())) {
    throw std::invalid_argument("map " + f.name() + " with domain " + f.domain().str() +
                                " cannot take measure codomain " + m.codomain().str());
  }
  return Measure<E>(m.kind(), f.map_interval(m.codomain()),
                    [f, m](const E& x, const E& y) { return f.forward(m(x, y)); },
                    f.name() + " o " + m.name());
}

namespace detail {

inline TransitivityOperator conjugated(const TransitivityOperator& op, const ScalarMap& f,
                                       OperatorSide side, const std::string& name) {
  if (!f.domain().superset_of(op.domain())) {
    throw std::invalid_argument("map " + f.name() + " with domain " + f.domain().str() +
                                " cannot take operator domain " + op.domain().str());
  }
  auto apply = [f, op](double a, double b) {
    return f.forward(op(f.inverse(a), f.inverse(b)));
  };
  return TransitivityOperator(f.map_interval(op.domain()), f.forward(op.null_element()),
                              side, apply, name);
}

}  // namespace detail

// Conjugation by an increasing map: the transformed measure of an
// equivalence is transitive under exactly this operator. Same side, image
// domain, image null element.
inline TransitivityOperator conjugate_operator(const TransitivityOperator& op,
                                               const ScalarMap& f) {
  if (!f.increasing()) {
    throw std::invalid_argument("operator conjugation needs an increasing map");
  }
  return detail::conjugated(op, f, op.side(), f.name() + "~" + op.name());
}

// Conjugation by a decreasing map, carrying an operator across the
// similarity/dissimilarity divide. The null element moves from one end of
// the interval to the other, so the side flips.
inline TransitivityOperator transfer_operator(const TransitivityOperator& op,
                                              const ScalarMap& f) {
  if (f.increasing()) {
    throw std::invalid_argument("operator transfer needs a decreasing map");
  }
  OperatorSide flipped = op.side() == OperatorSide::similarity
                             ? OperatorSide::dissimilarity
                             : OperatorSide::similarity;
  return detail::conjugated(op, f, flipped, f.name() + "~" + op.name());
}

// A similarity and a dissimilarity tied together by a decreasing map taking
// similarity values to dissimilarity values: dis == link(sim) pointwise,
// and sim == link^-1(dis).
template <typename E>
struct DualTriple {
  Measure<E> sim;
  Measure<E> dis;
  ScalarMap link;
};

// Builds the dual of a measure by scoring every pair through a decreasing
// map. The stored link is always oriented from the similarity side to the
// dissimilarity side, whichever kind came in.
template <typename E>
DualTriple<E> dualize_measure(const Measure<E>& m, const ScalarMap& f) {
  if (f.increasing()) {
    throw std::invalid_argument("duality needs a decreasing map, got " + f.name());
  }
  if (!f.domain().superset_of(m.codomain())) {
    throw std::invalid_argument("map " + f.name() + " with domain " + f.domain().str() +
                                " cannot take measure codomain " + m.codomain().str());
  }
  Measure<E> other(opposite(m.kind()), f.map_interval(m.codomain()),
                   [f, m](const E& x, const E& y) { return f.forward(m(x, y)); },
                   f.name() + " o " + m.name());
  if (m.kind() == MeasureKind::similarity) {
    return DualTriple<E>{m, std::move(other), f};
  }
  return DualTriple<E>{std::move(other), m, f.reversed()};
}

}  // namespace simdis
