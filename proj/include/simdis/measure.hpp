#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "simdis/interval.hpp"
#include "simdis/report.hpp"

namespace simdis {

enum class MeasureKind { similarity, dissimilarity };

inline const char* kind_name(MeasureKind k) {
  return k == MeasureKind::similarity ? "similarity" : "dissimilarity";
}

inline MeasureKind opposite(MeasureKind k) {
  return k == MeasureKind::similarity ? MeasureKind::dissimilarity
                                      : MeasureKind::similarity;
}

// A similarity or dissimilarity: a total pair scoring function together with
// its declared codomain interval. Similarities must be bounded above
// (their supremum is what a perfect match scores), dissimilarities below.
// Values are immutable once built and safe to evaluate concurrently.
template <typename E>
class Measure {
 public:
  using eval_fn = std::function<double(const E&, const E&)>;

  Measure(MeasureKind kind, Interval codomain, eval_fn eval, std::string name)
      : kind_(kind), codomain_(codomain), eval_(std::move(eval)), name_(std::move(name)) {
    if (!eval_) throw std::invalid_argument("measure needs an evaluation function");
    if (kind_ == MeasureKind::similarity && !codomain_.hi_finite()) {
      throw std::invalid_argument("similarity codomain must be bounded above");
    }
    if (kind_ == MeasureKind::dissimilarity && !codomain_.lo_finite()) {
      throw std::invalid_argument("dissimilarity codomain must be bounded below");
    }
  }

  MeasureKind kind() const { return kind_; }
  const Interval& codomain() const { return codomain_; }
  const std::string& name() const { return name_; }

  double operator()(const E& x, const E& y) const { return eval_(x, y); }

  // The value a perfect match scores: sup for similarities, inf for
  // dissimilarities. Reflexivity pins the diagonal to this value.
  double diagonal_extremum() const {
    return kind_ == MeasureKind::similarity ? codomain_.hi() : codomain_.lo();
  }

  // The other end of the codomain; closedness asks whether it is attained.
  double opposite_extremum() const {
    return kind_ == MeasureKind::similarity ? codomain_.lo() : codomain_.hi();
  }

 private:
  MeasureKind kind_;
  Interval codomain_;
  eval_fn eval_;
  std::string name_;
};

// Validating constructor. On top of the Measure invariants it applies the
// non-negativity convention: when the diagonal extremum is negative the
// whole measure is shifted up by its magnitude, and the shift is recorded
// in the name.
template <typename E>
Measure<E> make_measure(MeasureKind kind, Interval codomain,
                        typename Measure<E>::eval_fn eval, std::string name) {
  Measure<E> raw(kind, codomain, std::move(eval), name);
  double extremum = raw.diagonal_extremum();
  if (extremum >= 0.0) return raw;
  double shift = -extremum;
  std::ostringstream os;
  os << name << "+" << shift;
  return Measure<E>(kind, codomain.shifted(shift),
                    [raw, shift](const E& x, const E& y) { return raw(x, y) + shift; },
                    os.str());
}

namespace detail {

template <typename E>
std::string default_label(const E& e) {
  if constexpr (std::is_floating_point_v<E>) {
    return format_real(e);
  } else {
    std::ostringstream os;
    os << e;
    return os.str();
  }
}

}  // namespace detail

// Finite witness set over which brute-force verification runs. Element
// order is fixed at construction and determines sweep order, hence which
// counterexample is reported first. Duplicates under the declared equality
// are rejected.
template <typename E>
class DomainSample {
 public:
  using equality_fn = std::function<bool(const E&, const E&)>;
  using label_fn = std::function<std::string(const E&)>;

  explicit DomainSample(std::vector<E> elements,
                        equality_fn eq = std::equal_to<E>{},
                        label_fn label = &detail::default_label<E>)
      : elements_(std::move(elements)), eq_(std::move(eq)), label_(std::move(label)) {
    if (elements_.empty()) throw std::invalid_argument("empty domain sample");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = i + 1; j < elements_.size(); ++j) {
        if (eq_(elements_[i], elements_[j])) {
          throw std::invalid_argument("duplicate element in domain sample: " +
                                      label_(elements_[j]));
        }
      }
    }
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<E>& elements() const { return elements_; }
  const E& operator[](std::size_t i) const { return elements_[i]; }
  std::string label(std::size_t i) const { return label_(elements_[i]); }
  bool equal(const E& a, const E& b) const { return eq_(a, b); }

 private:
  std::vector<E> elements_;
  equality_fn eq_;
  label_fn label_;
};

// Preorder on ordered pairs induced by a measure: pair p precedes pair q
// when the measure scores p no higher than q. Pairs are indexed row-major
// over the sample. Two pairs may precede each other without being equal;
// that is what makes this a preorder rather than an order.
class PairPreorder {
 public:
  PairPreorder(std::size_t sample_size, std::vector<double> pair_values)
      : n_(sample_size), values_(std::move(pair_values)) {
    if (values_.size() != n_ * n_) {
      throw std::invalid_argument("pair value table has wrong size");
    }
  }

  std::size_t sample_size() const { return n_; }
  std::size_t pair_count() const { return values_.size(); }

  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * n_ + j; }
  std::pair<std::size_t, std::size_t> pair_at(std::size_t p) const {
    return {p / n_, p % n_};
  }

  double value(std::size_t p) const { return values_.at(p); }

  // p precedes q. A nonzero tol absorbs float noise in the comparison.
  bool leq(std::size_t p, std::size_t q, double tol = 0.0) const {
    return values_.at(p) <= values_.at(q) + tol;
  }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

template <typename E>
PairPreorder induced_preorder(const Measure<E>& m, const DomainSample<E>& dom) {
  const std::size_t n = dom.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      values.push_back(m(dom[i], dom[j]));
    }
  }
  return PairPreorder(n, std::move(values));
}

}  // namespace simdis
