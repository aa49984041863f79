#pragma once

#include <json.hpp>

#include "simdis/report.hpp"
#include "simdis/verifier.hpp"

namespace simdis {

// JSON shape of a counterexample: {inputs, lhs, rhs}. Indices are carried
// too so a parsed report reproduces the in-memory one exactly.
inline void to_json(nlohmann::json& j, const Counterexample& c) {
  j = nlohmann::json{{"inputs", c.inputs}, {"indices", c.indices},
                     {"lhs", c.lhs}, {"rhs", c.rhs}};
}

inline void from_json(const nlohmann::json& j, Counterexample& c) {
  j.at("inputs").get_to(c.inputs);
  j.at("indices").get_to(c.indices);
  j.at("lhs").get_to(c.lhs);
  j.at("rhs").get_to(c.rhs);
}

inline void to_json(nlohmann::json& j, const PropertyReport& r) {
  j = nlohmann::json{{"property", r.property},
                     {"holds", r.holds},
                     {"checked", r.checked_count},
                     {"tolerance", r.tolerance},
                     {"semidecidable", r.semidecidable},
                     {"counterexamples", r.counterexamples}};
  if (!r.note.empty()) j["note"] = r.note;
}

inline void from_json(const nlohmann::json& j, PropertyReport& r) {
  j.at("property").get_to(r.property);
  j.at("holds").get_to(r.holds);
  j.at("checked").get_to(r.checked_count);
  j.at("tolerance").get_to(r.tolerance);
  j.at("semidecidable").get_to(r.semidecidable);
  j.at("counterexamples").get_to(r.counterexamples);
  r.note = j.value("note", "");
}

inline void to_json(nlohmann::json& j, const FullReport& r) {
  j = nlohmann::json{{"reports", r.parts}, {"ok", r.ok()}};
}

inline void from_json(const nlohmann::json& j, FullReport& r) {
  j.at("reports").get_to(r.parts);
}

}  // namespace simdis
