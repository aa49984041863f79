#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simdis/interval.hpp"
#include "simdis/report.hpp"

namespace simdis {

// Which measure kind an operator serves. Similarity-side operators put the
// null element at the top of the interval, dissimilarity-side ones at the
// bottom.
enum class OperatorSide { similarity, dissimilarity };

// Binary operator bounding how far a score may drift across an intermediate
// element. The defining axioms (null element, monotonicity, symmetry,
// associativity) are not assumed here; check_operator_axioms probes them on
// a grid and reports honestly.
class TransitivityOperator {
 public:
  using apply_fn = std::function<double(double, double)>;

  TransitivityOperator(Interval domain, double null_element, OperatorSide side,
                       apply_fn apply, std::string name)
      : domain_(domain), null_element_(null_element), side_(side),
        apply_(std::move(apply)), name_(std::move(name)) {
    if (!apply_) throw std::invalid_argument("operator needs an apply function");
    if (!domain_.contains(null_element_)) {
      throw std::invalid_argument(name_ + ": null element outside domain");
    }
    double expected = side_ == OperatorSide::similarity ? domain_.hi() : domain_.lo();
    if (null_element_ != expected) {
      throw std::invalid_argument(name_ + ": null element must sit at the " +
                                  (side_ == OperatorSide::similarity ? "top" : "bottom") +
                                  " of the domain");
    }
  }

  double apply(double a, double b) const { return apply_(a, b); }
  double operator()(double a, double b) const { return apply_(a, b); }
  const Interval& domain() const { return domain_; }
  double null_element() const { return null_element_; }
  OperatorSide side() const { return side_; }
  const std::string& name() const { return name_; }

 private:
  Interval domain_;
  double null_element_;
  OperatorSide side_;
  apply_fn apply_;
  std::string name_;
};

// The stock operators. lukasiewicz_family requires alpha (nonzero); the
// others ignore it.
inline TransitivityOperator builtin_operator(const std::string& name,
                                             std::optional<double> alpha = std::nullopt) {
  if (name == "min") {
    return {Interval::unit(), 0.0, OperatorSide::dissimilarity,
            [](double a, double b) { return std::min(a, b); }, "min"};
  }
  if (name == "max") {
    return {Interval::unit(), 1.0, OperatorSide::similarity,
            [](double a, double b) { return std::max(a, b); }, "max"};
  }
  if (name == "bounded_sum") {
    return {Interval::unit(), 0.0, OperatorSide::dissimilarity,
            [](double a, double b) { return std::min(1.0, a + b); }, "bounded_sum"};
  }
  if (name == "sum") {
    return {Interval::nonnegative(), 0.0, OperatorSide::dissimilarity,
            [](double a, double b) { return a + b; }, "sum"};
  }
  if (name == "product_shifted") {
    return {Interval::nonnegative(), 0.0, OperatorSide::dissimilarity,
            [](double a, double b) { return a * b + a + b; }, "product_shifted"};
  }
  if (name == "product_on_1inf") {
    return {Interval::lower_closed(1.0, Interval::infinity()), 1.0,
            OperatorSide::dissimilarity, [](double a, double b) { return a * b; },
            "product_on_1inf"};
  }
  if (name == "lukasiewicz_family") {
    if (!alpha) throw std::invalid_argument("lukasiewicz_family needs alpha");
    double a = *alpha;
    if (a == 0.0) throw std::invalid_argument("lukasiewicz_family needs alpha != 0");
    auto apply = [a](double x, double y) {
      if (a == 1.0) return std::max(x + y - 1.0, 0.0);  // keep the degenerate case exact
      return std::pow(std::max(std::pow(x, a) + std::pow(y, a) - 1.0, 0.0), 1.0 / a);
    };
    return {Interval::unit(), 1.0, OperatorSide::similarity, apply,
            "lukasiewicz:" + detail::format_real(a)};
  }
  throw std::invalid_argument("unknown operator '" + name + "'");
}

// Evenly spaced probe grid over the operator's domain, truncating an
// unbounded top at lo + cap.
inline std::vector<double> default_operator_grid(const TransitivityOperator& op,
                                                 std::size_t points = 21, double cap = 10.0) {
  double lo = op.domain().lo();
  double hi = op.domain().hi_finite() ? op.domain().hi() : lo + cap;
  std::vector<double> g;
  g.reserve(points);
  for (std::size_t k = 0; k < points; ++k) {
    g.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1));
  }
  return g;
}

// Per-axiom verdicts plus a closure probe (results staying inside the
// domain). Axiom numbering follows the operator definition: null element,
// non-decreasing monotonicity, symmetry, associativity.
struct AxiomReport {
  PropertyReport null_element;
  PropertyReport monotonicity;
  PropertyReport symmetry;
  PropertyReport associativity;
  PropertyReport closure;

  bool axioms_pass() const {
    return null_element.holds && monotonicity.holds && symmetry.holds &&
           associativity.holds;
  }

  std::vector<const PropertyReport*> failing() const {
    std::vector<const PropertyReport*> out;
    for (const auto* r : {&null_element, &monotonicity, &symmetry, &associativity}) {
      if (!r->holds) out.push_back(r);
    }
    return out;
  }
};

inline AxiomReport check_operator_axioms(const TransitivityOperator& op,
                                         std::vector<double> grid,
                                         double tol = kDefaultTol) {
  for (double v : grid) {
    if (!op.domain().contains(v)) {
      throw std::invalid_argument("grid point " + detail::format_real(v) +
                                  " outside domain of " + op.name());
    }
  }
  if (std::find(grid.begin(), grid.end(), op.null_element()) == grid.end()) {
    grid.push_back(op.null_element());
  }
  const std::size_t n = grid.size();
  AxiomReport rep;
  for (auto* r : {&rep.null_element, &rep.monotonicity, &rep.symmetry, &rep.associativity,
                  &rep.closure}) {
    r->holds = true;
    r->tolerance = tol;
  }
  rep.null_element.property = "null_element";
  rep.monotonicity.property = "monotonicity";
  rep.symmetry.property = "symmetry";
  rep.associativity.property = "associativity";
  rep.closure.property = "closure";

  const double e = op.null_element();
  for (std::size_t i = 0; i < n; ++i) {
    double x = grid[i];
    double v = op(x, e);
    ++rep.null_element.checked_count;
    if (std::fabs(v - x) > tol) {
      rep.null_element.holds = false;
      detail::add_witness(rep.null_element,
                          {{detail::format_real(x), detail::format_real(e)}, {i}, v, x});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = op(grid[i], grid[j]);
      double w = op(grid[j], grid[i]);
      ++rep.symmetry.checked_count;
      if (std::fabs(v - w) > tol) {
        rep.symmetry.holds = false;
        detail::add_witness(rep.symmetry,
                            {{detail::format_real(grid[i]), detail::format_real(grid[j])},
                             {i, j}, v, w});
      }
      ++rep.closure.checked_count;
      if (!op.domain().contains_within(v, tol)) {
        rep.closure.holds = false;
        detail::add_witness(rep.closure,
                            {{detail::format_real(grid[i]), detail::format_real(grid[j])},
                             {i, j}, v, op.domain().lo()});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        double x = grid[i], y = grid[j], z = grid[k];
        ++rep.monotonicity.checked_count;
        if (y <= z && op(x, y) > op(x, z) + tol) {
          rep.monotonicity.holds = false;
          detail::add_witness(rep.monotonicity,
                              {{detail::format_real(x), detail::format_real(y),
                                detail::format_real(z)}, {i, j, k}, op(x, y), op(x, z)});
        }
        double left = op(x, op(y, z));
        double right = op(op(x, y), z);
        ++rep.associativity.checked_count;
        if (std::fabs(left - right) > tol) {
          rep.associativity.holds = false;
          detail::add_witness(rep.associativity,
                              {{detail::format_real(x), detail::format_real(y),
                                detail::format_real(z)}, {i, j, k}, left, right});
        }
      }
    }
  }
  return rep;
}

// Pointwise ordering verdict between two operators on a shared domain.
// "More restrictive" means op1 never exceeds op2 and falls strictly below
// it somewhere; transitivity under a more restrictive operator implies
// transitivity under the less restrictive one.
enum class Restrictiveness { more_restrictive, less_restrictive, equal, incomparable };

inline const char* restrictiveness_name(Restrictiveness r) {
  switch (r) {
    case Restrictiveness::more_restrictive: return "more_restrictive";
    case Restrictiveness::less_restrictive: return "less_restrictive";
    case Restrictiveness::equal: return "equal";
    case Restrictiveness::incomparable: return "incomparable";
  }
  return "?";
}

struct RestrictivenessResult {
  Restrictiveness verdict = Restrictiveness::equal;
  std::size_t checked_count = 0;
  // First pair where op1 falls strictly below op2, and vice versa.
  std::optional<Counterexample> op1_below;
  std::optional<Counterexample> op1_above;
};

inline RestrictivenessResult compare_restrictiveness(const TransitivityOperator& op1,
                                                     const TransitivityOperator& op2,
                                                     const std::vector<double>& grid,
                                                     double tol = kDefaultTol) {
  if (!op1.domain().same_bounds(op2.domain())) {
    throw std::invalid_argument("restrictiveness comparison needs matching domains: " +
                                op1.domain().str() + " vs " + op2.domain().str());
  }
  RestrictivenessResult res;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      double v1 = op1(grid[i], grid[j]);
      double v2 = op2(grid[i], grid[j]);
      ++res.checked_count;
      Counterexample w{{detail::format_real(grid[i]), detail::format_real(grid[j])},
                       {i, j}, v1, v2};
      if (v1 < v2 - tol && !res.op1_below) res.op1_below = w;
      if (v1 > v2 + tol && !res.op1_above) res.op1_above = w;
    }
  }
  if (res.op1_below && res.op1_above) res.verdict = Restrictiveness::incomparable;
  else if (res.op1_below) res.verdict = Restrictiveness::more_restrictive;
  else if (res.op1_above) res.verdict = Restrictiveness::less_restrictive;
  else res.verdict = Restrictiveness::equal;
  return res;
}

}  // namespace simdis
