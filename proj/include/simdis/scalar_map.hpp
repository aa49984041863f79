#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simdis/interval.hpp"
#include "simdis/report.hpp"

namespace simdis {

enum class MapDirection { increasing, decreasing };

namespace detail {

// Evenly spaced validation grid over an interval, truncating unbounded ends
// at `span` away from the finite side (or symmetrically around zero).
inline std::vector<double> validation_grid(const Interval& iv, std::size_t points = 101,
                                           double span = 10.0) {
  double lo = iv.lo_finite() ? iv.lo() : (iv.hi_finite() ? iv.hi() - span : -span);
  double hi = iv.hi_finite() ? iv.hi() : lo + span;
  std::vector<double> g;
  g.reserve(points);
  for (std::size_t k = 0; k < points; ++k) {
    g.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1));
  }
  return g;
}

}  // namespace detail

// Strictly monotone invertible real map with declared domain and codomain.
// Covers equivalence functions (increasing), unit-interval transformations
// and general transformation functions (decreasing). Construction validates
// monotonicity and the inverse on a sampled grid; closed-form inverses are
// preferred, with a bisection fallback flagged as numeric.
class ScalarMap {
 public:
  using real_fn = std::function<double(double)>;

  ScalarMap(real_fn forward, real_fn inverse, Interval domain, Interval codomain,
            MapDirection direction, std::string name, bool numeric_inverse = false)
      : forward_(std::move(forward)), inverse_(std::move(inverse)), domain_(domain),
        codomain_(codomain), direction_(direction), name_(std::move(name)),
        numeric_inverse_(numeric_inverse) {
    if (!forward_ || !inverse_) throw std::invalid_argument("scalar map needs both directions");
    validate();
  }

  double forward(double z) const { return forward_(z); }
  double inverse(double y) const { return inverse_(y); }
  const Interval& domain() const { return domain_; }
  const Interval& codomain() const { return codomain_; }
  MapDirection direction() const { return direction_; }
  bool increasing() const { return direction_ == MapDirection::increasing; }
  const std::string& name() const { return name_; }
  bool has_numeric_inverse() const { return numeric_inverse_; }

  // Same bijection read the other way: forward and inverse swap roles, as do
  // domain and codomain. The monotonicity direction is unchanged.
  ScalarMap reversed() const {
    return ScalarMap(inverse_, forward_, codomain_, domain_, direction_,
                     name_ + "^-1", numeric_inverse_);
  }

  // Image of a subinterval of the domain under this map. Finite endpoints
  // are evaluated; an infinite endpoint must be the domain's own end, so its
  // image is the matching declared codomain end.
  Interval map_interval(const Interval& iv) const {
    if (!domain_.superset_of(iv)) {
      throw std::invalid_argument("interval " + iv.str() + " not inside domain of " + name_);
    }
    double img_lo = iv.lo_finite() ? forward_(iv.lo())
                                   : (increasing() ? codomain_.lo() : codomain_.hi());
    double img_hi = iv.hi_finite() ? forward_(iv.hi())
                                   : (increasing() ? codomain_.hi() : codomain_.lo());
    bool lo_cl = iv.lo_finite() && iv.lo_closed();
    bool hi_cl = iv.hi_finite() && iv.hi_closed();
    if (increasing()) return Interval(img_lo, img_hi, lo_cl, hi_cl);
    return Interval(img_hi, img_lo, hi_cl, lo_cl);
  }

 private:
  void validate(double tol = 1e-7) const {
    auto grid = detail::validation_grid(domain_);
    double prev = forward_(grid.front());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double y = forward_(grid[i]);
      if (!std::isfinite(y)) {
        throw std::invalid_argument(name_ + ": non-finite value at sampled point");
      }
      double back = inverse_(y);
      if (std::fabs(back - grid[i]) > 1e-6 * (1.0 + std::fabs(grid[i]))) {
        throw std::invalid_argument(name_ + ": inverse does not undo forward at sampled point");
      }
      if (i > 0) {
        bool ok = increasing() ? y >= prev - tol : y <= prev + tol;
        if (!ok) {
          throw std::invalid_argument(name_ + ": not monotone in the declared direction");
        }
        prev = y;
      }
    }
  }

  real_fn forward_, inverse_;
  Interval domain_, codomain_;
  MapDirection direction_;
  std::string name_;
  bool numeric_inverse_;
};

namespace detail {

// Bisection solve of forward(z) = y over the domain, expanding the bracket
// geometrically into unbounded ends. Resolution 1e-12 on z.
inline double bisect_inverse(const std::function<double(double)>& forward,
                             const Interval& domain, bool increasing, double y) {
  double lo = domain.lo_finite() ? domain.lo() : -1.0;
  double hi = domain.hi_finite() ? domain.hi() : 1.0;
  auto below = [&](double v) { return increasing ? v < y : v > y; };
  for (int i = 0; i < 200 && !domain.lo_finite() && !below(forward(lo)); ++i) lo = lo * 2 - 1;
  for (int i = 0; i < 200 && !domain.hi_finite() && below(forward(hi)); ++i) hi = hi * 2 + 1;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    double mid = 0.5 * (lo + hi);
    (below(forward(mid)) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Builds a map whose inverse is found numerically; flagged as such.
inline ScalarMap make_numeric_inverse_map(ScalarMap::real_fn forward, Interval domain,
                                          Interval codomain, MapDirection direction,
                                          std::string name) {
  bool inc = direction == MapDirection::increasing;
  auto inv = [forward, domain, inc](double y) {
    return detail::bisect_inverse(forward, domain, inc, y);
  };
  return ScalarMap(std::move(forward), inv, domain, codomain, direction, std::move(name),
                   /*numeric_inverse=*/true);
}

inline ScalarMap identity_map(Interval domain = Interval::unit()) {
  auto id = [](double z) { return z; };
  return ScalarMap(id, id, domain, domain, MapDirection::increasing, "id");
}

// z -> a*z + b; a must be nonzero, direction follows the sign of a.
inline ScalarMap linear_map(double a, double b) {
  if (a == 0.0) throw std::invalid_argument("linear map with zero slope is not invertible");
  auto fwd = [a, b](double z) { return a * z + b; };
  auto inv = [a, b](double y) { return (y - b) / a; };
  MapDirection dir = a > 0 ? MapDirection::increasing : MapDirection::decreasing;
  return ScalarMap(fwd, inv, Interval::real_line(), Interval::real_line(), dir,
                   "lin:" + detail::format_real(a) + ":" + detail::format_real(b));
}

// z -> z^a on [0, inf); a must be positive.
inline ScalarMap power_map(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("power map needs a positive exponent");
  auto fwd = [a](double z) { return a == 1.0 ? z : std::pow(z, a); };
  auto inv = [a](double y) { return a == 1.0 ? y : std::pow(y, 1.0 / a); };
  return ScalarMap(fwd, inv, Interval::nonnegative(), Interval::nonnegative(),
                   MapDirection::increasing, "pow:" + detail::format_real(a));
}

// z -> e^z - 1 on [0, inf), inverse ln(y + 1).
inline ScalarMap exp_shift_map() {
  auto fwd = [](double z) { return std::expm1(z); };
  auto inv = [](double y) { return std::log1p(y); };
  return ScalarMap(fwd, inv, Interval::nonnegative(), Interval::nonnegative(),
                   MapDirection::increasing, "explog");
}

// z -> ln z on [1, inf), inverse e^y. Turns products into sums.
inline ScalarMap log_map() {
  auto fwd = [](double z) { return std::log(z); };
  auto inv = [](double y) { return std::exp(y); };
  return ScalarMap(fwd, inv, Interval::lower_closed(1.0, Interval::infinity()),
                   Interval::nonnegative(), MapDirection::increasing, "log");
}

// z -> (1 - z)^(1/alpha), the decreasing unit-interval family. Involutive
// exactly at alpha = 1, where it reduces to 1 - z.
inline ScalarMap one_minus_map(double alpha) {
  if (alpha == 0.0) throw std::invalid_argument("one-minus family needs alpha != 0");
  if (alpha < 0.0) {
    // Negative alpha sends (1-z)^(1/alpha) to infinity as z -> 1, so there
    // is no total map on the closed unit interval to build.
    throw std::invalid_argument("one-minus family needs alpha > 0");
  }
  auto fwd = [alpha](double z) {
    return alpha == 1.0 ? 1.0 - z : std::pow(1.0 - z, 1.0 / alpha);
  };
  auto inv = [alpha](double y) {
    return alpha == 1.0 ? 1.0 - y : 1.0 - std::pow(y, alpha);
  };
  return ScalarMap(fwd, inv, Interval::unit(), Interval::unit(), MapDirection::decreasing,
                   "oneminus:" + detail::format_real(alpha));
}

// z -> z / (z + k) on [0, inf) onto [0, 1); k > 0. Subadditive, which is
// what lets it carry a metric to a bounded metric.
inline ScalarMap ratio_map(double k) {
  if (!(k > 0.0)) throw std::invalid_argument("ratio map needs k > 0");
  auto fwd = [k](double z) { return z / (z + k); };
  auto inv = [k](double y) { return k * y / (1.0 - y); };
  return ScalarMap(fwd, inv, Interval::nonnegative(), Interval::lower_closed(0.0, 1.0),
                   MapDirection::increasing, "ratk:" + detail::format_real(k));
}

// Spec-string parser used by the CLI: lin:a:b, pow:a, explog, log,
// oneminus:alpha, ratk:k, id.
inline ScalarMap parse_scalar_map(const std::string& spec) {
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      auto pos = s.find(':', start);
      parts.push_back(s.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return parts;
  };
  auto num = [&spec](const std::string& tok) {
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + tok + "' in map spec '" + spec + "'");
    }
  };
  auto parts = split(spec);
  const std::string& head = parts[0];
  if (head == "id" && parts.size() == 1) return identity_map();
  if (head == "lin" && parts.size() == 3) return linear_map(num(parts[1]), num(parts[2]));
  if (head == "pow" && parts.size() == 2) return power_map(num(parts[1]));
  if (head == "explog" && parts.size() == 1) return exp_shift_map();
  if (head == "log" && parts.size() == 1) return log_map();
  if (head == "oneminus" && parts.size() == 2) return one_minus_map(num(parts[1]));
  if (head == "ratk" && parts.size() == 2) return ratio_map(num(parts[1]));
  throw std::invalid_argument("unknown scalar map spec '" + spec + "'");
}

// Validates a decreasing unit-interval bijection: endpoints swap (n(0) = 1,
// n(1) = 0 within tol) and the sampled values decrease. The inverse is
// bisected numerically unless one is supplied.
inline ScalarMap make_unit_transformation(ScalarMap::real_fn forward,
                                          ScalarMap::real_fn inverse = nullptr,
                                          double tol = kDefaultTol,
                                          std::string name = "unit-transform") {
  if (std::fabs(forward(0.0) - 1.0) > tol || std::fabs(forward(1.0) - 0.0) > tol) {
    throw std::invalid_argument(name + ": endpoints must map 0 -> 1 and 1 -> 0");
  }
  auto grid = detail::validation_grid(Interval::unit());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (forward(grid[i]) > forward(grid[i - 1]) + tol) {
      throw std::invalid_argument(name + ": not decreasing on the unit interval");
    }
  }
  if (inverse) {
    return ScalarMap(std::move(forward), std::move(inverse), Interval::unit(),
                     Interval::unit(), MapDirection::decreasing, std::move(name));
  }
  return make_numeric_inverse_map(std::move(forward), Interval::unit(), Interval::unit(),
                                  MapDirection::decreasing, std::move(name));
}

struct InvolutionCheck {
  bool involutive = false;
  double witness = 0.0;   // first grid point where n(n(z)) strays from z
  double error = 0.0;
};

// A unit transformation is involutive when it is its own inverse.
inline InvolutionCheck is_involutive(const ScalarMap& n, const std::vector<double>& grid,
                                     double tol = kDefaultTol) {
  for (double z : grid) {
    double round_trip = n.forward(n.forward(z));
    if (std::fabs(round_trip - z) > tol) {
      return {false, z, std::fabs(round_trip - z)};
    }
  }
  return {true, 0.0, 0.0};
}

// General transformation between measure scales, assembled as
// outer o n o inner: `inner` carries the source scale onto the unit
// interval, `n` flips it there, `outer` carries it onto the target scale.
// Both carriers must be increasing; the composite is decreasing.
inline ScalarMap make_general_transformation(const ScalarMap& outer, const ScalarMap& n,
                                             const ScalarMap& inner) {
  if (!inner.increasing() || !outer.increasing()) {
    throw std::invalid_argument("transformation carriers must be increasing");
  }
  if (n.direction() != MapDirection::decreasing) {
    throw std::invalid_argument("the middle map must be a decreasing unit transformation");
  }
  if (!n.domain().superset_of(inner.codomain())) {
    throw std::invalid_argument("seam mismatch: inner codomain " + inner.codomain().str() +
                                " does not fit " + n.domain().str());
  }
  if (!outer.domain().superset_of(n.codomain())) {
    throw std::invalid_argument("seam mismatch: unit-transform codomain does not fit " +
                                outer.domain().str());
  }
  Interval image = outer.map_interval(n.map_interval(inner.map_interval(inner.domain())));
  auto fwd = [outer, n, inner](double z) {
    return outer.forward(n.forward(inner.forward(z)));
  };
  auto inv = [outer, n, inner](double y) {
    return inner.inverse(n.inverse(outer.inverse(y)));
  };
  bool numeric = outer.has_numeric_inverse() || n.has_numeric_inverse() ||
                 inner.has_numeric_inverse();
  return ScalarMap(fwd, inv, inner.domain(), image, MapDirection::decreasing,
                   outer.name() + "." + n.name() + "." + inner.name(), numeric);
}

}  // namespace simdis
