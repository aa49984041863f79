#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace simdis {

// Real interval with independently open/closed ends. Ends may be infinite,
// in which case the corresponding flag must be open. Degenerate intervals
// (lo >= hi) are rejected: every codomain here must contain more than one
// value.
class Interval {
 public:
  Interval(double lo, double hi, bool lo_closed, bool hi_closed)
      : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (std::isnan(lo) || std::isnan(hi)) {
      throw std::invalid_argument("interval bound is NaN");
    }
    if (!(lo < hi)) {
      throw std::invalid_argument("degenerate interval: lo must be < hi");
    }
    if (std::isinf(lo) && lo_closed) {
      throw std::invalid_argument("interval closed at -inf");
    }
    if (std::isinf(hi) && hi_closed) {
      throw std::invalid_argument("interval closed at +inf");
    }
  }

  static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval lower_closed(double lo, double hi) { return {lo, hi, true, false}; }
  static Interval upper_closed(double lo, double hi) { return {lo, hi, false, true}; }
  static Interval nonnegative() { return lower_closed(0.0, infinity()); }
  static Interval unit() { return closed(0.0, 1.0); }
  static Interval real_line() { return open(-infinity(), infinity()); }

  static double infinity() { return std::numeric_limits<double>::infinity(); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  bool lo_finite() const { return std::isfinite(lo_); }
  bool hi_finite() const { return std::isfinite(hi_); }

  // Exact membership, honoring open/closed flags.
  bool contains(double v) const {
    if (v < lo_ || (v == lo_ && !lo_closed_)) return false;
    if (v > hi_ || (v == hi_ && !hi_closed_)) return false;
    return true;
  }

  // Membership with an absolute slack at both ends; ignores open flags.
  // Used for sampled boundedness checks where float noise at a boundary
  // must not count as an excursion.
  bool contains_within(double v, double tol) const {
    return v >= lo_ - tol && v <= hi_ + tol;
  }

  // True when every point of `other` belongs to this interval.
  bool superset_of(const Interval& other) const {
    bool lo_ok = lo_ < other.lo_ || (lo_ == other.lo_ && (lo_closed_ || !other.lo_closed_));
    bool hi_ok = hi_ > other.hi_ || (hi_ == other.hi_ && (hi_closed_ || !other.hi_closed_));
    return lo_ok && hi_ok;
  }

  // Bound equality irrespective of open/closed flags.
  bool same_bounds(const Interval& other) const {
    return lo_ == other.lo_ && hi_ == other.hi_;
  }

  bool operator==(const Interval& other) const {
    return lo_ == other.lo_ && hi_ == other.hi_ &&
           lo_closed_ == other.lo_closed_ && hi_closed_ == other.hi_closed_;
  }

  Interval shifted(double offset) const {
    return {lo_ + offset, hi_ + offset, lo_closed_, hi_closed_};
  }

  std::string str() const {
    std::ostringstream os;
    os << (lo_closed_ ? '[' : '(') << lo_ << ", " << hi_ << (hi_closed_ ? ']' : ')');
    return os.str();
  }

 private:
  double lo_, hi_;
  bool lo_closed_, hi_closed_;
};

}  // namespace simdis
