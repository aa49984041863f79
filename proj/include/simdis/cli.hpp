#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "simdis/catalog.hpp"
#include "simdis/grid.hpp"
#include "simdis/operators.hpp"
#include "simdis/report_json.hpp"
#include "simdis/scalar_map.hpp"
#include "simdis/transforms.hpp"
#include "simdis/treedis.hpp"
#include "simdis/verifier.hpp"

namespace simdis::cli {

// Exit codes form the CI contract: 0 all checked properties hold, 1 a
// violation was found, 2 the request itself was unusable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string measure;
  std::string domain;
  std::string op;          // operator spec; empty = use the catalog's
  std::string transform;   // decreasing map spec (dualize)
  std::string equiv;       // increasing map spec (equivalence)
  std::string properties;  // comma-separated subset; empty = all
  double tol = kDefaultTol;
  std::string format = "text";  // text | json
  int max_height = 3;
  std::size_t cap_triples = 2'000'000;
  std::size_t cap_grid = 10'000;

  bool json() const { return format == "json"; }

  void check() const {
    if (format != "text" && format != "json") {
      throw std::invalid_argument("format must be text or json");
    }
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
    if (cap_triples == 0 || cap_grid == 0) {
      throw std::invalid_argument("caps must be positive");
    }
  }
};

// Operator spec strings: min, max, bsum, sum, prodshift, prod1inf,
// luk:<alpha>, plus sqrtsq (the root-of-squares operator on [0, inf)).
inline TransitivityOperator parse_operator_spec(const std::string& spec) {
  if (spec == "min") return builtin_operator("min");
  if (spec == "max") return builtin_operator("max");
  if (spec == "bsum") return builtin_operator("bounded_sum");
  if (spec == "sum") return builtin_operator("sum");
  if (spec == "prodshift") return builtin_operator("product_shifted");
  if (spec == "prod1inf") return builtin_operator("product_on_1inf");
  if (spec.rfind("luk:", 0) == 0) {
    try {
      return builtin_operator("lukasiewicz_family", std::stod(spec.substr(4)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad alpha in operator spec '" + spec + "'");
    }
  }
  if (spec == "sqrtsq") {
    return TransitivityOperator(Interval::nonnegative(), 0.0, OperatorSide::dissimilarity,
                                [](double a, double b) { return std::hypot(a, b); },
                                "sqrtsq");
  }
  throw std::invalid_argument("unknown operator spec '" + spec + "'");
}

inline CatalogEntry<double> numeric_catalog_entry(const std::string& name) {
  if (name == "ex1.d1") return example1_d1();
  if (name == "ex1.d2") return example1_d2();
  if (name.rfind("ex1.s1:", 0) == 0) return example1_s1(std::stod(name.substr(7)));
  if (name.rfind("ex1.s2:", 0) == 0) return example1_s2(std::stod(name.substr(7)));
  if (name == "ex2.s") return example2_similarity<double>();
  if (name == "ex3.d") return example3_chain().d;
  if (name == "ex3.dprime") return example3_chain().d_prime;
  if (name == "ex3.dsecond") return example3_chain().d_second;
  throw std::invalid_argument("unknown measure '" + name + "' for a numeric domain");
}

// Built directly rather than through make_entry: the capped codomain is a
// strict subinterval of the product operator's domain, which is fine for
// verification but not the bound-for-bound match the catalog entries keep.
inline CatalogEntry<BinaryTree> tree_catalog_entry(const std::string& name, int height_cap) {
  if (name == "tree.d") {
    return {tree_dissimilarity_measure(height_cap), builtin_operator("product_on_1inf"),
            "structural tree dissimilarity, capped at height " + std::to_string(height_cap)};
  }
  if (name == "tree.dlog") {
    return {apply_equivalence(tree_dissimilarity_measure(), log_map()),
            builtin_operator("sum"), "log-metricized tree dissimilarity"};
  }
  throw std::invalid_argument("unknown measure '" + name + "' for a tree domain");
}

namespace detail_cli {

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto pos = s.find(',', start);
    auto tok = s.substr(start, pos - start);
    if (!tok.empty()) out.push_back(tok);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename E>
void print_measure_header(std::ostream& out, const Measure<E>& m, std::size_t n) {
  out << "measure: " << m.name() << "  (" << kind_name(m.kind()) << " on "
      << m.codomain().str() << ")\n"
      << "domain:  " << n << " elements\n";
}

// The verify pipeline once measure, entry operator and sample are known.
template <typename E>
int run_verify_on(CatalogEntry<E> entry, const DomainSample<E>& sample,
                  const RunConfig& cfg, std::ostream& out) {
  Measure<E> m = entry.measure;
  std::optional<TransitivityOperator> op = entry.documented_operator;
  if (!cfg.equiv.empty()) {
    ScalarMap f = parse_scalar_map(cfg.equiv);
    m = apply_equivalence(m, f);
    if (op) op = conjugate_operator(*op, f);
  }
  if (!cfg.transform.empty()) {
    ScalarMap f = parse_scalar_map(cfg.transform);
    auto triple = dualize_measure(m, f);
    Measure<E> dual = m.kind() == MeasureKind::similarity ? triple.dis : triple.sim;
    m = dual;
    if (op) op = transfer_operator(*op, f);
  }
  if (!cfg.op.empty()) op = parse_operator_spec(cfg.op);

  auto wanted = split_commas(cfg.properties);
  auto selected = [&wanted](const std::string& name) {
    if (wanted.empty()) return true;
    for (const auto& w : wanted) {
      if (w == name) return true;
    }
    return false;
  };
  for (const auto& w : wanted) {
    static const std::vector<std::string> known{
        "reflexivity", "strong_reflexivity", "symmetry", "boundedness",
        "closedness", "complementarity", "transitivity"};
    if (std::find(known.begin(), known.end(), w) == known.end()) {
      throw std::invalid_argument("unknown property '" + w + "'");
    }
  }
  bool explicit_transitivity =
      std::find(wanted.begin(), wanted.end(), "transitivity") != wanted.end();
  if (explicit_transitivity && !op) {
    throw std::invalid_argument("transitivity requested but no operator given");
  }
  bool run_transitivity = selected("transitivity") && op.has_value();
  if (run_transitivity) {
    std::size_t n = sample.size();
    if (n * n * n > cfg.cap_triples) {
      throw std::invalid_argument("transitivity sweep of " + std::to_string(n * n * n) +
                                  " triples exceeds --cap-triples " +
                                  std::to_string(cfg.cap_triples));
    }
  }

  FullReport report;
  if (selected("reflexivity")) report.parts.push_back(verify_reflexivity(m, sample, cfg.tol));
  if (selected("strong_reflexivity")) {
    report.parts.push_back(verify_strong_reflexivity(m, sample, cfg.tol));
  }
  if (selected("symmetry")) report.parts.push_back(verify_symmetry(m, sample, cfg.tol));
  if (selected("boundedness") || selected("closedness")) {
    auto bounds = verify_boundedness_and_closedness(m, sample, cfg.tol);
    if (selected("boundedness")) report.parts.push_back(std::move(bounds.boundedness));
    if (selected("closedness")) report.parts.push_back(std::move(bounds.closedness));
  }
  if (selected("complementarity")) {
    report.parts.push_back(compute_complements(m, sample, cfg.tol).report);
  }
  if (run_transitivity) {
    report.parts.push_back(verify_transitivity(m, *op, sample, cfg.tol));
  }

  if (cfg.json()) {
    nlohmann::json j = report;
    j["measure"] = m.name();
    j["codomain"] = m.codomain().str();
    j["domain_size"] = sample.size();
    if (op) j["operator"] = op->name();
    out << j.dump(2) << "\n";
  } else {
    print_measure_header(out, m, sample.size());
    if (op) out << "operator: " << op->name() << " on " << op->domain().str() << "\n";
    for (const auto& r : report.parts) out << to_text(r) << "\n";
    out << "RESULT: " << (report.ok() ? "ok" : "violations found") << "\n";
  }
  return report.ok() ? kExitOk : kExitViolation;
}

template <typename E>
int run_dualize_on(CatalogEntry<E> entry, const DomainSample<E>& sample,
                   const RunConfig& cfg, std::ostream& out) {
  if (cfg.transform.empty()) {
    throw std::invalid_argument("dualize needs --transform with a decreasing map");
  }
  ScalarMap f = parse_scalar_map(cfg.transform);
  auto triple = dualize_measure(entry.measure, f);
  const Measure<E>& dual =
      entry.measure.kind() == MeasureKind::similarity ? triple.dis : triple.sim;

  std::optional<TransitivityOperator> dual_op;
  if (entry.documented_operator) {
    dual_op = transfer_operator(*entry.documented_operator, f);
  }
  std::optional<PropertyReport> dual_check;
  if (dual_op) dual_check = verify_transitivity(dual, *dual_op, sample, cfg.tol);

  const std::size_t n = sample.size();
  const std::size_t row_cap = 20;

  if (cfg.json()) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rows.size() >= 400) break;
        rows.push_back({{"x", sample.label(i)},
                        {"y", sample.label(j)},
                        {"value", entry.measure(sample[i], sample[j])},
                        {"dual", dual(sample[i], sample[j])}});
      }
    }
    nlohmann::json j{{"measure", entry.measure.name()},
                     {"dual", dual.name()},
                     {"dual_codomain", dual.codomain().str()},
                     {"link", triple.link.name()},
                     {"values", rows}};
    if (dual_op) {
      j["dual_operator"] = dual_op->name();
      nlohmann::json table = nlohmann::json::array();
      auto grid = default_operator_grid(*dual_op, 5);
      for (double a : grid) {
        for (double b : grid) {
          table.push_back({{"a", a}, {"b", b}, {"value", (*dual_op)(a, b)}});
        }
      }
      j["dual_operator_table"] = table;
    }
    if (dual_check) j["dual_transitivity"] = *dual_check;
    out << j.dump(2) << "\n";
  } else {
    out << "dual of " << entry.measure.name() << " under " << f.name() << ":\n"
        << "  " << dual.name() << "  (" << kind_name(dual.kind()) << " on "
        << dual.codomain().str() << ")\n"
        << "  triple link " << triple.link.name() << " maps similarity values to "
        << "dissimilarity values\n";
    out << "sampled values (x, y, " << entry.measure.name() << ", dual):\n";
    std::size_t shown = 0;
    for (std::size_t i = 0; i < n && shown < row_cap; ++i) {
      for (std::size_t j = 0; j < n && shown < row_cap; ++j, ++shown) {
        out << "  " << sample.label(i) << "\t" << sample.label(j) << "\t"
            << entry.measure(sample[i], sample[j]) << "\t" << dual(sample[i], sample[j])
            << "\n";
      }
    }
    if (n * n > row_cap) out << "  ... (" << n * n << " pairs total)\n";
    if (dual_op) {
      out << "transferred operator " << dual_op->name() << " on "
          << dual_op->domain().str() << ", null element " << dual_op->null_element()
          << ":\n";
      auto grid = default_operator_grid(*dual_op, 5);
      out << "      ";
      for (double b : grid) out << std::setw(10) << b;
      out << "\n";
      for (double a : grid) {
        out << "  " << std::setw(4) << a;
        for (double b : grid) out << std::setw(10) << (*dual_op)(a, b);
        out << "\n";
      }
    }
    if (dual_check) out << to_text(*dual_check) << "\n";
  }
  return dual_check && !dual_check->holds ? kExitViolation : kExitOk;
}

}  // namespace detail_cli

// verify: run the property suite for a measure over a domain grid.
inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.check();
    auto grid = parse_grid_spec(cfg.domain);
    if (grid.kind == GridSpec::Kind::trees) {
      auto sample = tree_sample(grid.max_height);
      if (sample.size() > cfg.cap_grid) {
        throw std::invalid_argument("tree sample exceeds --cap-grid");
      }
      return detail_cli::run_verify_on(tree_catalog_entry(cfg.measure, grid.max_height),
                                       sample, cfg, out);
    }
    auto sample = numeric_sample(grid);
    if (sample.size() > cfg.cap_grid) {
      throw std::invalid_argument("grid of " + std::to_string(sample.size()) +
                                  " points exceeds --cap-grid " +
                                  std::to_string(cfg.cap_grid));
    }
    return detail_cli::run_verify_on(numeric_catalog_entry(cfg.measure), sample, cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// dualize: build the dual triple, transfer the documented operator, verify
// the dual against it.
inline int cmd_dualize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.check();
    auto grid = parse_grid_spec(cfg.domain);
    if (grid.kind == GridSpec::Kind::trees) {
      auto sample = tree_sample(grid.max_height);
      return detail_cli::run_dualize_on(tree_catalog_entry(cfg.measure, grid.max_height),
                                        sample, cfg, out);
    }
    auto sample = numeric_sample(grid);
    if (sample.size() > cfg.cap_grid) {
      throw std::invalid_argument("grid exceeds --cap-grid");
    }
    return detail_cli::run_dualize_on(numeric_catalog_entry(cfg.measure), sample, cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// tree code: print the decimal code and the bit string of one tree.
inline int cmd_tree_code(const std::string& notation, const RunConfig& cfg,
                         std::ostream& out, std::ostream& err) {
  try {
    auto t = parse_tree(notation);
    auto code = encode(t);
    if (cfg.json()) {
      out << nlohmann::json{{"tree", format_tree(t)},
                            {"code", code.value},
                            {"bits", code.bit_string()},
                            {"height", code.height_used}}
                 .dump(2)
          << "\n";
    } else {
      out << code.value;
      if (code.height_used > 0) out << " " << code.bit_string();
      out << "\n";
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline int cmd_tree_dissim(const std::string& a, const std::string& b,
                           const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto ta = parse_tree(a);
    auto tb = parse_tree(b);
    auto exact = tree_dissimilarity_exact(ta, tb);
    if (cfg.json()) {
      out << nlohmann::json{{"a", format_tree(ta)},
                            {"b", format_tree(tb)},
                            {"value", boost::rational_cast<double>(exact)},
                            {"numerator", exact.numerator()},
                            {"denominator", exact.denominator()}}
                 .dump(2)
          << "\n";
    } else {
      out << boost::rational_cast<double>(exact);
      if (exact.denominator() != 1) {
        out << "  (" << exact.numerator() << "/" << exact.denominator() << ")";
      }
      out << "\n";
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline int cmd_tree_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.check();
    auto report = verify_product_transitivity(cfg.max_height, cfg.cap_triples);
    auto dmax = d_max_with_cap(cfg.max_height);
    if (cfg.json()) {
      nlohmann::json j{{"max_height", cfg.max_height},
                       {"trees", enumerate_trees(cfg.max_height).size()},
                       {"product_transitivity", report},
                       {"dmax_series_bound", dmax.series_bound},
                       {"dmax_enumerated", dmax.enumerated_max},
                       {"dmax_bound_matches", dmax.bound_matches}};
      out << j.dump(2) << "\n";
    } else {
      out << "trees of height <= " << cfg.max_height << ": "
          << enumerate_trees(cfg.max_height).size() << "\n"
          << to_text(report) << "\n"
          << "d_max: series bound " << dmax.series_bound << ", enumerated "
          << dmax.enumerated_max
          << (dmax.bound_matches ? "" : "  (bound does not match enumeration)") << "\n";
    }
    return report.holds ? kExitOk : kExitViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline int cmd_tree_metricize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.check();
    auto res = metricize(cfg.max_height, cfg.tol);
    auto sample = tree_sample(cfg.max_height);
    const std::size_t n = sample.size();
    if (cfg.json()) {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (rows.size() >= 400) break;
          rows.push_back({{"a", sample.label(i)},
                          {"b", sample.label(j)},
                          {"value", res.metric(sample[i], sample[j])}});
        }
      }
      nlohmann::json j{{"metric", res.metric.name()},
                       {"operator", res.op.name()},
                       {"values", rows},
                       {"strong_reflexivity", res.strong_reflexivity},
                       {"symmetry", res.symmetry},
                       {"triangle", res.triangle}};
      out << j.dump(2) << "\n";
    } else {
      out << "metric: " << res.metric.name() << " on " << res.metric.codomain().str()
          << ", operator " << res.op.name() << "\n";
      std::size_t shown = 0;
      for (std::size_t i = 0; i < n && shown < 20; ++i) {
        for (std::size_t j = 0; j < n && shown < 20; ++j, ++shown) {
          out << "  " << sample.label(i) << "\t" << sample.label(j) << "\t"
              << res.metric(sample[i], sample[j]) << "\n";
        }
      }
      if (n * n > 20) out << "  ... (" << n * n << " pairs total)\n";
      out << to_text(res.strong_reflexivity) << "\n"
          << to_text(res.symmetry) << "\n"
          << to_text(res.triangle) << "\n";
    }
    bool ok = res.strong_reflexivity.holds && res.symmetry.holds && res.triangle.holds;
    return ok ? kExitOk : kExitViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace simdis::cli
