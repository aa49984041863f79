#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "simdis/measure.hpp"

namespace simdis {

// Domain grid grammar: real:<lo>:<hi>:<step>, int:<lo>:<hi>,
// trees:<maxHeight>.
struct GridSpec {
  enum class Kind { real, integer, trees };
  Kind kind = Kind::real;
  double lo = 0.0, hi = 0.0, step = 0.0;
  long long ilo = 0, ihi = 0;
  int max_height = 0;
};

// Real grids are exactly lo + k*step for k = 0 .. floor((hi-lo)/step),
// evaluated in that order; no endpoint snapping.
inline std::vector<double> make_real_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("real grid needs step > 0");
  if (!(hi > lo)) throw std::invalid_argument("real grid needs hi > lo");
  auto k_max = static_cast<long long>(std::floor((hi - lo) / step));
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(k_max) + 1);
  for (long long k = 0; k <= k_max; ++k) {
    g.push_back(lo + static_cast<double>(k) * step);
  }
  return g;
}

inline std::vector<long long> make_int_grid(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("integer grid needs lo <= hi");
  std::vector<long long> g;
  g.reserve(static_cast<std::size_t>(hi - lo) + 1);
  for (long long v = lo; v <= hi; ++v) g.push_back(v);
  return g;
}

inline GridSpec parse_grid_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = spec.find(':', start);
    parts.push_back(spec.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  auto real_tok = [&spec](const std::string& tok) {
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + tok + "' in grid spec '" + spec + "'");
    }
  };
  auto int_tok = [&spec](const std::string& tok) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + tok + "' in grid spec '" + spec + "'");
    }
  };
  GridSpec g;
  if (parts[0] == "real" && parts.size() == 4) {
    g.kind = GridSpec::Kind::real;
    g.lo = real_tok(parts[1]);
    g.hi = real_tok(parts[2]);
    g.step = real_tok(parts[3]);
    if (!(g.step > 0.0) || !(g.hi > g.lo)) {
      throw std::invalid_argument("real grid needs lo < hi and step > 0: '" + spec + "'");
    }
    return g;
  }
  if (parts[0] == "int" && parts.size() == 3) {
    g.kind = GridSpec::Kind::integer;
    g.ilo = int_tok(parts[1]);
    g.ihi = int_tok(parts[2]);
    if (g.ilo > g.ihi) throw std::invalid_argument("integer grid needs lo <= hi: '" + spec + "'");
    return g;
  }
  if (parts[0] == "trees" && parts.size() == 2) {
    g.kind = GridSpec::Kind::trees;
    g.max_height = static_cast<int>(int_tok(parts[1]));
    if (g.max_height < 0) throw std::invalid_argument("tree grid needs height >= 0");
    return g;
  }
  throw std::invalid_argument("unknown grid spec '" + spec + "'");
}

// The CLI runs all numeric measures over doubles; integer grids become
// integral-valued real samples.
inline DomainSample<double> numeric_sample(const GridSpec& g) {
  if (g.kind == GridSpec::Kind::real) {
    return DomainSample<double>(make_real_grid(g.lo, g.hi, g.step));
  }
  if (g.kind == GridSpec::Kind::integer) {
    std::vector<double> vals;
    auto ints = make_int_grid(g.ilo, g.ihi);
    vals.reserve(ints.size());
    for (long long v : ints) vals.push_back(static_cast<double>(v));
    return DomainSample<double>(std::move(vals));
  }
  throw std::invalid_argument("tree grid where a numeric grid is required");
}

}  // namespace simdis
