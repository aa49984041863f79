// Enumerates small tree shapes, checks the product inequality exactly, and
// shows the log-metricized distance satisfying the triangle inequality.

#include <iostream>

#include "simdis/simdis.hpp"

int main() {
  using namespace simdis;

  for (const auto& t : enumerate_trees(2)) {
    auto code = encode(t);
    std::cout << format_tree(t) << "  code " << code.value;
    if (code.height_used > 0) std::cout << "  bits " << code.bit_string();
    std::cout << "\n";
  }

  auto product = verify_product_transitivity(3);
  std::cout << to_text(product) << "\n";

  auto metric = metricize(3);
  std::cout << "after log: " << metric.metric.name() << "\n"
            << to_text(metric.triangle) << "\n";

  auto dmax = d_max_with_cap(2);
  std::cout << "height-2 cap: series bound " << dmax.series_bound << " vs enumerated "
            << dmax.enumerated_max << "\n";
  return 0;
}
