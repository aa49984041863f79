#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simdis/measure.hpp"
#include "simdis/operators.hpp"
#include "simdis/report.hpp"

namespace simdis {

namespace detail {

// Precomputed value table; every sweep below reads from here so measures
// are evaluated once per ordered pair.
template <typename E>
std::vector<double> pair_table(const Measure<E>& m, const DomainSample<E>& dom) {
  const std::size_t n = dom.size();
  std::vector<double> t;
  t.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.push_back(m(dom[i], dom[j]));
  }
  return t;
}

inline PropertyReport fresh_report(std::string property, double tol) {
  PropertyReport r;
  r.property = std::move(property);
  r.holds = true;
  r.tolerance = tol;
  return r;
}

}  // namespace detail

// Diagonal pairs must score the perfect-match extremum.
template <typename E>
PropertyReport verify_reflexivity(const Measure<E>& m, const DomainSample<E>& dom,
                                  double tol = kDefaultTol) {
  auto r = detail::fresh_report("reflexivity", tol);
  const double target = m.diagonal_extremum();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    double v = m(dom[i], dom[i]);
    ++r.checked_count;
    if (std::fabs(v - target) > tol) {
      r.holds = false;
      detail::add_witness(r, {{dom.label(i), dom.label(i)}, {i, i}, v, target});
    }
  }
  return r;
}

// The extremum is hit on the diagonal and nowhere else. Off-diagonal values
// within tol of the extremum count as violations; float closeness must not
// masquerade as attainment.
template <typename E>
PropertyReport verify_strong_reflexivity(const Measure<E>& m, const DomainSample<E>& dom,
                                         double tol = kDefaultTol) {
  auto r = detail::fresh_report("strong_reflexivity", tol);
  const double target = m.diagonal_extremum();
  const std::size_t n = dom.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = m(dom[i], dom[j]);
      ++r.checked_count;
      bool ok = i == j ? std::fabs(v - target) <= tol : std::fabs(v - target) > tol;
      if (!ok) {
        r.holds = false;
        detail::add_witness(r, {{dom.label(i), dom.label(j)}, {i, j}, v, target});
      }
    }
  }
  return r;
}

template <typename E>
PropertyReport verify_symmetry(const Measure<E>& m, const DomainSample<E>& dom,
                               double tol = kDefaultTol) {
  auto r = detail::fresh_report("symmetry", tol);
  const std::size_t n = dom.size();
  auto table = detail::pair_table(m, dom);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.checked_count;
      double v = table[i * n + j], w = table[j * n + i];
      if (std::fabs(v - w) > tol) {
        r.holds = false;
        detail::add_witness(r, {{dom.label(i), dom.label(j)}, {i, j}, v, w});
      }
    }
  }
  return r;
}

struct BoundednessReports {
  PropertyReport boundedness;
  PropertyReport closedness;
};

// Boundedness: every sampled value sits inside the declared codomain (a
// sampled pass is evidence only, so the report is flagged semidecidable; a
// sampled excursion refutes outright). Closedness: the opposite extremum is
// attained by some sampled pair. Attainment settles it; non-attainment on a
// finite sample refutes nothing, so that verdict carries the semidecidable
// flag and the nearest-approach pair as its witness.
template <typename E>
BoundednessReports verify_boundedness_and_closedness(const Measure<E>& m,
                                                     const DomainSample<E>& dom,
                                                     double tol = kDefaultTol) {
  BoundednessReports out{detail::fresh_report("boundedness", tol),
                         detail::fresh_report("closedness", tol)};
  const std::size_t n = dom.size();
  const double opposite = m.opposite_extremum();
  bool attained = false;
  std::size_t best_i = 0, best_j = 0;
  double best_gap = Interval::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = m(dom[i], dom[j]);
      ++out.boundedness.checked_count;
      ++out.closedness.checked_count;
      if (!m.codomain().contains_within(v, tol)) {
        out.boundedness.holds = false;
        detail::add_witness(out.boundedness, {{dom.label(i), dom.label(j)}, {i, j}, v,
                                              v < m.codomain().lo() ? m.codomain().lo()
                                                                    : m.codomain().hi()});
      }
      double gap = std::fabs(v - opposite);
      if (gap < best_gap) {
        best_gap = gap;
        best_i = i;
        best_j = j;
      }
      if (gap <= tol) attained = true;
    }
  }
  if (out.boundedness.holds) out.boundedness.semidecidable = true;
  out.closedness.holds = attained;
  if (!attained) {
    out.closedness.semidecidable = true;
    out.closedness.note = std::isinf(opposite)
                              ? "codomain extremum is infinite; attainment impossible"
                              : "extremum not attained on this sample";
    detail::add_witness(out.closedness, {{dom.label(best_i), dom.label(best_j)},
                                         {best_i, best_j},
                                         m(dom[best_i], dom[best_j]), opposite});
  }
  return out;
}

// Per-element complement sets: which partners sit at the opposite extremum.
// Elements are identified by their sample index.
struct ComplementMap {
  std::vector<std::vector<std::size_t>> sets;  // indexed like the sample
  bool unitary = false;                        // every set a singleton

  std::vector<std::size_t> cardinalities() const {
    std::vector<std::size_t> c;
    c.reserve(sets.size());
    for (const auto& s : sets) c.push_back(s.size());
    return c;
  }
};

struct ComplementCheck {
  ComplementMap map;
  PropertyReport report;
};

// Complementarity asks all complement sets to have one common nonzero
// cardinality. The verdict is always flagged semidecidable: sampled sets
// are lower approximations of the true ones. When the measure is reflexive
// on the sample, an element inside its own complement set is flagged.
template <typename E>
ComplementCheck compute_complements(const Measure<E>& m, const DomainSample<E>& dom,
                                    double tol = kDefaultTol) {
  ComplementCheck out;
  out.report = detail::fresh_report("complementarity", tol);
  out.report.semidecidable = true;
  const std::size_t n = dom.size();
  const double opposite = m.opposite_extremum();
  out.map.sets.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++out.report.checked_count;
      if (std::fabs(m(dom[i], dom[j]) - opposite) <= tol) {
        out.map.sets[i].push_back(j);
      }
    }
  }
  auto cards = out.map.cardinalities();
  std::size_t reference = cards[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (cards[i] != reference || cards[i] == 0) {
      out.report.holds = false;
      detail::add_witness(out.report, {{dom.label(i)}, {i},
                                       static_cast<double>(cards[i]),
                                       static_cast<double>(reference)});
    }
  }
  out.map.unitary = out.report.holds && reference == 1;
  if (out.report.holds) {
    out.report.note = out.map.unitary ? "unitary complement" : "common cardinality " +
                                                                   std::to_string(reference);
  } else {
    out.report.note = "no complement function on this sample";
  }
  if (verify_reflexivity(m, dom, tol).holds) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : out.map.sets[i]) {
        if (i == j) {
          out.report.holds = false;
          out.report.note = "reflexive measure has an element in its own complement set";
          detail::add_witness(out.report, {{dom.label(i), dom.label(i)}, {i, i},
                                           m(dom[i], dom[i]), opposite});
        }
      }
    }
  }
  return out;
}

// The transitivity sweep: similarities must score every direct pair at
// least as high as the operator's bound through any intermediate,
// dissimilarities at most. All ordered triples (x, z, y) are enumerated in
// sample order, so the first witness is deterministic.
template <typename E>
PropertyReport verify_transitivity(const Measure<E>& m, const TransitivityOperator& op,
                                   const DomainSample<E>& dom, double tol = kDefaultTol) {
  if (!op.domain().superset_of(m.codomain())) {
    throw std::invalid_argument("operator " + op.name() + " on " + op.domain().str() +
                                " cannot bound measure with codomain " +
                                m.codomain().str());
  }
  auto r = detail::fresh_report("transitivity(" + op.name() + ")", tol);
  const std::size_t n = dom.size();
  auto table = detail::pair_table(m, dom);
  const bool sim = m.kind() == MeasureKind::similarity;
  for (std::size_t xi = 0; xi < n; ++xi) {
    for (std::size_t zi = 0; zi < n; ++zi) {
      for (std::size_t yi = 0; yi < n; ++yi) {
        double direct = table[xi * n + yi];
        double bound = op(table[xi * n + zi], table[zi * n + yi]);
        ++r.checked_count;
        bool ok = sim ? direct >= bound - tol : direct <= bound + tol;
        if (!ok) {
          r.holds = false;
          detail::add_witness(r, {{dom.label(xi), dom.label(zi), dom.label(yi)},
                                  {xi, zi, yi}, direct, bound});
        }
      }
    }
  }
  return r;
}

// Preorder agreement between two measures of the same kind: every
// comparison of pair scores must come out the same way. This is quartic in
// the sample size, hence the cap.
template <typename E>
PropertyReport verify_equivalence(const Measure<E>& m1, const Measure<E>& m2,
                                  const DomainSample<E>& dom, double tol = kDefaultTol,
                                  std::size_t sample_cap = 25) {
  if (m1.kind() != m2.kind()) {
    throw std::invalid_argument("equivalence compares measures of the same kind");
  }
  if (dom.size() > sample_cap) {
    throw std::invalid_argument("sample of " + std::to_string(dom.size()) +
                                " elements exceeds the quartic sweep cap of " +
                                std::to_string(sample_cap));
  }
  auto r = detail::fresh_report("equivalence(" + m1.name() + ", " + m2.name() + ")", tol);
  const std::size_t n = dom.size();
  auto t1 = detail::pair_table(m1, dom);
  auto t2 = detail::pair_table(m2, dom);
  const std::size_t pairs = n * n;
  for (std::size_t p = 0; p < pairs; ++p) {
    for (std::size_t q = 0; q < pairs; ++q) {
      ++r.checked_count;
      bool first = t1[p] <= t1[q] + tol;
      bool second = t2[p] <= t2[q] + tol;
      if (first != second) {
        r.holds = false;
        detail::add_witness(r, {{dom.label(p / n), dom.label(p % n),
                                 dom.label(q / n), dom.label(q % n)},
                                {p / n, p % n, q / n, q % n},
                                t1[p] - t1[q], t2[p] - t2[q]});
      }
    }
  }
  return r;
}

// Everything at once; the one-stop check behind the CLI.
struct FullReport {
  std::vector<PropertyReport> parts;

  // Success means no decisively failed check; verdicts that sampling cannot
  // settle (closedness, complementarity) report but do not gate.
  bool ok() const {
    for (const auto& r : parts) {
      if (r.decisive_failure()) return false;
    }
    return true;
  }

  const PropertyReport* find(const std::string& property) const {
    for (const auto& r : parts) {
      if (r.property.rfind(property, 0) == 0) return &r;
    }
    return nullptr;
  }
};

template <typename E>
FullReport full_report(const Measure<E>& m, const DomainSample<E>& dom,
                       const std::optional<TransitivityOperator>& op = std::nullopt,
                       double tol = kDefaultTol) {
  FullReport out;
  out.parts.push_back(verify_reflexivity(m, dom, tol));
  out.parts.push_back(verify_strong_reflexivity(m, dom, tol));
  out.parts.push_back(verify_symmetry(m, dom, tol));
  auto bounds = verify_boundedness_and_closedness(m, dom, tol);
  out.parts.push_back(std::move(bounds.boundedness));
  out.parts.push_back(std::move(bounds.closedness));
  out.parts.push_back(compute_complements(m, dom, tol).report);
  if (op) out.parts.push_back(verify_transitivity(m, *op, dom, tol));
  return out;
}

}  // namespace simdis
