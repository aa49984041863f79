// Command-line front door: pick a catalog measure, a domain grid, an
// operator and optional transforms, run the verifier, print the report.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "simdis/cli.hpp"

namespace {

void add_common_flags(CLI::App* app, simdis::cli::RunConfig& cfg) {
  app->add_option("--tol", cfg.tol, "absolute comparison tolerance")
      ->capture_default_str();
  app->add_option("--format", cfg.format, "output format: text or json")
      ->capture_default_str();
  app->add_option("--cap-triples", cfg.cap_triples,
                  "refuse transitivity sweeps beyond this many triples")
      ->capture_default_str();
  app->add_option("--cap-grid", cfg.cap_grid, "refuse domain grids beyond this many points")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"similarity/dissimilarity measure toolkit"};
  app.require_subcommand(1);

  simdis::cli::RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "check the defining properties over a grid");
  verify->add_option("--measure", cfg.measure, "catalog measure, e.g. ex1.d1 or ex2.s")
      ->required();
  verify->add_option("--domain", cfg.domain,
                     "grid spec: real:<lo>:<hi>:<step>, int:<lo>:<hi>, trees:<maxHeight>")
      ->required();
  verify->add_option("--op", cfg.op,
                     "operator spec: min, max, bsum, sum, prodshift, prod1inf, "
                     "luk:<alpha>, sqrtsq (default: the catalog's operator)");
  verify->add_option("--equiv", cfg.equiv,
                     "increasing map applied before checking (conjugates the operator)");
  verify->add_option("--transform", cfg.transform,
                     "decreasing map: verify the dual measure instead");
  verify->add_option("--properties", cfg.properties,
                     "comma list: reflexivity,strong_reflexivity,symmetry,boundedness,"
                     "closedness,complementarity,transitivity (default: all)");
  add_common_flags(verify, cfg);

  auto* dualize = app.add_subcommand("dualize", "build and check the dual triple");
  dualize->add_option("--measure", cfg.measure, "catalog measure")->required();
  dualize->add_option("--domain", cfg.domain, "grid spec for the value table")->required();
  dualize->add_option("--transform", cfg.transform, "decreasing map spec")->required();
  add_common_flags(dualize, cfg);

  auto* tree = app.add_subcommand("tree", "structural binary tree dissimilarity");
  tree->require_subcommand(1);
  std::string tree_a, tree_b;

  auto* tcode = tree->add_subcommand("code", "print the code of a tree, e.g. ((##)#)");
  tcode->add_option("tree", tree_a, "tree notation: # empty, (<left><right>) node")
      ->required();
  add_common_flags(tcode, cfg);

  auto* tdis = tree->add_subcommand("dissim", "dissimilarity of two trees");
  tdis->add_option("a", tree_a, "first tree")->required();
  tdis->add_option("b", tree_b, "second tree")->required();
  add_common_flags(tdis, cfg);

  auto* tverify = tree->add_subcommand("verify", "exhaustive product-transitivity check");
  tverify->add_option("--max-height", cfg.max_height, "height bound for the enumeration")
      ->capture_default_str();
  add_common_flags(tverify, cfg);

  auto* tmetric = tree->add_subcommand("metricize", "log-metricized tree dissimilarity");
  tmetric->add_option("--max-height", cfg.max_height, "height bound for the checks")
      ->capture_default_str();
  add_common_flags(tmetric, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return simdis::cli::kExitUsage;
  }

  if (verify->parsed()) return simdis::cli::cmd_verify(cfg, std::cout, std::cerr);
  if (dualize->parsed()) return simdis::cli::cmd_dualize(cfg, std::cout, std::cerr);
  if (tcode->parsed()) return simdis::cli::cmd_tree_code(tree_a, cfg, std::cout, std::cerr);
  if (tdis->parsed()) {
    return simdis::cli::cmd_tree_dissim(tree_a, tree_b, cfg, std::cout, std::cerr);
  }
  if (tverify->parsed()) return simdis::cli::cmd_tree_verify(cfg, std::cout, std::cerr);
  if (tmetric->parsed()) return simdis::cli::cmd_tree_metricize(cfg, std::cout, std::cerr);
  return simdis::cli::kExitUsage;
}
