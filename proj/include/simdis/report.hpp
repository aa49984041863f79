#pragma once

#include <cstddef>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace simdis {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kCounterexampleCap = 10;

// One witness tuple of a failed (or nearly-decided) check. `inputs` holds
// printable element labels in the order the property quantifies them;
// `indices` holds the matching positions in the domain sample so tests can
// re-evaluate the witness independently.
struct Counterexample {
  std::vector<std::string> inputs;
  std::vector<std::size_t> indices;
  double lhs = 0.0;
  double rhs = 0.0;

  bool operator==(const Counterexample& o) const {
    return inputs == o.inputs && lhs == o.lhs && rhs == o.rhs;
  }
};

// Outcome of one brute-force property sweep. `checked_count` is the exact
// number of tuples examined (sweeps never stop early; only the witness list
// is capped). `semidecidable` marks verdicts that finite sampling cannot
// settle over an infinite domain, e.g. closedness non-attainment.
struct PropertyReport {
  std::string property;
  bool holds = false;
  std::size_t checked_count = 0;
  std::vector<Counterexample> counterexamples;
  double tolerance = kDefaultTol;
  bool semidecidable = false;
  std::string note;

  // A failed check only gates success when sampling actually decides it.
  bool decisive_failure() const { return !holds && !semidecidable; }

  bool operator==(const PropertyReport& o) const {
    return property == o.property && holds == o.holds &&
           checked_count == o.checked_count && counterexamples == o.counterexamples &&
           tolerance == o.tolerance && semidecidable == o.semidecidable && note == o.note;
  }
};

inline std::string to_text(const PropertyReport& r) {
  std::ostringstream os;
  os << r.property << ": " << (r.holds ? "holds" : "FAILS")
     << (r.semidecidable ? " (semidecidable)" : "")
     << "  [checked " << r.checked_count << ", tol " << r.tolerance << "]";
  if (!r.note.empty()) os << "  -- " << r.note;
  for (const auto& c : r.counterexamples) {
    os << "\n    witness (";
    for (std::size_t i = 0; i < c.inputs.size(); ++i) {
      if (i) os << ", ";
      os << c.inputs[i];
    }
    os << "): lhs=" << c.lhs << " rhs=" << c.rhs;
  }
  return os.str();
}

namespace detail {

// Pushes a witness unless the cap is already reached. The sweep keeps
// counting either way.
inline void add_witness(PropertyReport& r, Counterexample c,
                        std::size_t cap = kCounterexampleCap) {
  if (r.counterexamples.size() < cap) r.counterexamples.push_back(std::move(c));
}

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace detail
}  // namespace simdis
