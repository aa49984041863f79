#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "simdis/interval.hpp"
#include "simdis/measure.hpp"
#include "simdis/operators.hpp"
#include "simdis/report.hpp"
#include "simdis/scalar_map.hpp"
#include "simdis/transforms.hpp"
#include "simdis/verifier.hpp"

namespace simdis {

// Structural binary tree: either empty or a node with two subtrees.
// Immutable and cheap to copy; subtrees are shared. Only the shape matters,
// nodes carry no payload.
class BinaryTree {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    NodePtr left, right;
    int height;
  };

 public:
  BinaryTree() = default;  // the empty tree

  static BinaryTree node(BinaryTree left, BinaryTree right) {
    int h = 1 + std::max(left.height(), right.height());
    return BinaryTree(
        std::make_shared<const Node>(Node{std::move(left.root_), std::move(right.root_), h}));
  }

  static BinaryTree leaf() { return node({}, {}); }

  bool is_empty() const { return root_ == nullptr; }
  int height() const { return root_ ? root_->height : 0; }

  BinaryTree left() const { return BinaryTree(root_->left); }
  BinaryTree right() const { return BinaryTree(root_->right); }

  bool operator==(const BinaryTree& o) const { return equal(root_, o.root_); }
  bool operator!=(const BinaryTree& o) const { return !(*this == o); }

 private:
  explicit BinaryTree(NodePtr root) : root_(std::move(root)) {}

  static bool equal(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->height != b->height) return false;
    return equal(a->left, b->left) && equal(a->right, b->right);
  }

  NodePtr root_;
};

// Text notation: '#' is the empty tree, '(<left><right>)' a node.
inline std::string format_tree(const BinaryTree& t) {
  if (t.is_empty()) return "#";
  return "(" + format_tree(t.left()) + format_tree(t.right()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const BinaryTree& t) {
  return os << format_tree(t);
}

namespace detail {

inline BinaryTree parse_tree_at(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("tree notation ends early: " + s);
  char c = s[pos];
  if (c == '#') {
    ++pos;
    return BinaryTree();
  }
  if (c == '(') {
    ++pos;
    BinaryTree left = parse_tree_at(s, pos);
    BinaryTree right = parse_tree_at(s, pos);
    if (pos >= s.size() || s[pos] != ')') {
      throw std::invalid_argument("expected ')' at position " + std::to_string(pos) +
                                  " in '" + s + "'");
    }
    ++pos;
    return BinaryTree::node(std::move(left), std::move(right));
  }
  throw std::invalid_argument("unexpected '" + std::string(1, c) + "' at position " +
                              std::to_string(pos) + " in '" + s + "'");
}

}  // namespace detail

inline BinaryTree parse_tree(const std::string& s) {
  std::size_t pos = 0;
  BinaryTree t = detail::parse_tree_at(s, pos);
  if (pos != s.size()) {
    throw std::invalid_argument("trailing input at position " + std::to_string(pos) +
                                " in '" + s + "'");
  }
  return t;
}

// Natural-number code of a tree shape. One bit per position of the complete
// tree of the same height, 2^h - 1 bits total: levels deepest first, left
// to right within a level, first bit most significant. The root is the last
// bit, so every non-empty tree has an odd code; the empty tree codes to 0.
struct TreeCode {
  std::uint64_t value = 0;
  int height_used = 0;

  std::string bit_string() const {
    if (height_used == 0) return "";
    int bits = (1 << height_used) - 1;
    std::string s(static_cast<std::size_t>(bits), '0');
    for (int w = 0; w < bits; ++w) {
      if (value >> w & 1u) s[static_cast<std::size_t>(bits - 1 - w)] = '1';
    }
    return s;
  }
};

namespace detail {

inline void collect_bits(const BinaryTree& t, int level, std::uint64_t pos,
                         std::uint64_t& value) {
  if (t.is_empty()) return;
  // Node at (level, pos) owns the bit of weight 2^level - 2 - pos: each
  // level sits above all deeper ones, leftmost position on top.
  value |= std::uint64_t{1} << ((std::uint64_t{1} << level) - 2 - pos);
  collect_bits(t.left(), level + 1, 2 * pos, value);
  collect_bits(t.right(), level + 1, 2 * pos + 1, value);
}

}  // namespace detail

inline TreeCode encode(const BinaryTree& t) {
  int h = t.height();
  if (h > 6) {
    throw std::invalid_argument("tree of height " + std::to_string(h) +
                                " does not fit a 64-bit code");
  }
  TreeCode code{0, h};
  detail::collect_bits(t, 1, 0, code.value);
  return code;
}

// All tree shapes of height <= max_height, sorted by code (which also sorts
// by height, since deeper trees always carry higher bits).
inline std::vector<BinaryTree> enumerate_trees(int max_height) {
  if (max_height < 0 || max_height > 5) {
    throw std::invalid_argument("tree enumeration supports heights 0..5");
  }
  std::vector<BinaryTree> trees{BinaryTree()};
  for (int h = 1; h <= max_height; ++h) {
    std::vector<BinaryTree> next{BinaryTree()};
    next.reserve(trees.size() * trees.size() + 1);
    for (const auto& l : trees) {
      for (const auto& r : trees) next.push_back(BinaryTree::node(l, r));
    }
    trees = std::move(next);
  }
  std::sort(trees.begin(), trees.end(), [](const BinaryTree& a, const BinaryTree& b) {
    return encode(a).value < encode(b).value;
  });
  return trees;
}

using TreeRatio = boost::rational<long long>;

// The structural dissimilarity, exact: the larger-over-smaller code ratio
// for two non-empty trees, 1 for two empty trees, and the plain code when
// exactly one side is empty. Always >= 1; equals 1 exactly on equal shapes.
inline TreeRatio tree_dissimilarity_exact(const BinaryTree& a, const BinaryTree& b) {
  const bool ae = a.is_empty(), be = b.is_empty();
  if (ae && be) return TreeRatio(1);
  const auto ca = static_cast<long long>(encode(a).value);
  const auto cb = static_cast<long long>(encode(b).value);
  if (ae) return TreeRatio(cb);
  if (be) return TreeRatio(ca);
  return ca >= cb ? TreeRatio(ca, cb) : TreeRatio(cb, ca);
}

inline double tree_dissimilarity(const BinaryTree& a, const BinaryTree& b) {
  return boost::rational_cast<double>(tree_dissimilarity_exact(a, b));
}

inline DomainSample<BinaryTree> tree_sample(int max_height) {
  if (max_height > 4) {
    throw std::invalid_argument("tree samples support heights 0..4");
  }
  return DomainSample<BinaryTree>(
      enumerate_trees(max_height),
      [](const BinaryTree& a, const BinaryTree& b) { return a == b; },
      [](const BinaryTree& t) { return format_tree(t); });
}

// Exact maximum of the dissimilarity over all pairs of height <= max_height.
inline TreeRatio enumerated_tree_dmax(int max_height) {
  if (max_height > 4) {
    throw std::invalid_argument("pair enumeration supports heights 0..4");
  }
  auto trees = enumerate_trees(max_height);
  // The extremes are the empty tree against the largest code, but sweep all
  // pairs anyway; this doubles as the oracle for the capped codomain.
  TreeRatio best(1);
  for (const auto& a : trees) {
    for (const auto& b : trees) best = std::max(best, tree_dissimilarity_exact(a, b));
  }
  return best;
}

// The measure view of the tree dissimilarity. Uncapped it lives on
// [1, inf); with a height cap the codomain closes at the enumerated maximum
// and closedness becomes attainable.
inline Measure<BinaryTree> tree_dissimilarity_measure(std::optional<int> height_cap = {}) {
  Interval codomain = height_cap
      ? Interval::closed(1.0, boost::rational_cast<double>(enumerated_tree_dmax(*height_cap)))
      : Interval::lower_closed(1.0, Interval::infinity());
  return Measure<BinaryTree>(MeasureKind::dissimilarity, codomain, &tree_dissimilarity,
                             "tree.d");
}

// Exhaustive exact check of d(A,B) <= d(A,C) * d(C,B) over every ordered
// triple of trees up to the height bound. Rational arithmetic throughout:
// no tolerance, no float noise.
inline PropertyReport verify_product_transitivity(int max_height,
                                                  std::size_t cap_triples = 2'000'000) {
  if (max_height < 1) throw std::invalid_argument("need max_height >= 1");
  auto trees = enumerate_trees(max_height);
  const std::size_t n = trees.size();
  if (n * n * n > cap_triples) {
    throw std::invalid_argument("exhaustive sweep of " + std::to_string(n * n * n) +
                                " triples exceeds the cap of " + std::to_string(cap_triples));
  }
  std::vector<TreeRatio> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = tree_dissimilarity_exact(trees[i], trees[j]);
    }
  }
  PropertyReport r;
  r.property = "product_transitivity";
  r.holds = true;
  r.tolerance = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t b = 0; b < n; ++b) {
        ++r.checked_count;
        const TreeRatio& direct = table[a * n + b];
        TreeRatio bound = table[a * n + c] * table[c * n + b];
        if (direct > bound) {
          r.holds = false;
          detail::add_witness(r, {{format_tree(trees[a]), format_tree(trees[c]),
                                   format_tree(trees[b])},
                                  {a, c, b},
                                  boost::rational_cast<double>(direct),
                                  boost::rational_cast<double>(bound)});
        }
      }
    }
  }
  return r;
}

// Log-metricization: composing the tree dissimilarity with log turns the
// product bound into the triangle inequality, giving a genuine metric over
// tree shapes.
struct TreeMetricizeResult {
  Measure<BinaryTree> metric;
  TransitivityOperator op;  // plain sum; the conjugate of the product operator
  PropertyReport strong_reflexivity;
  PropertyReport symmetry;
  PropertyReport triangle;
};

inline TreeMetricizeResult metricize(int max_height, double tol = kDefaultTol) {
  if (max_height < 1) throw std::invalid_argument("need max_height >= 1");
  Measure<BinaryTree> metric =
      apply_equivalence(tree_dissimilarity_measure(), log_map());
  TransitivityOperator op = builtin_operator("sum");
  auto sample = tree_sample(max_height);
  return TreeMetricizeResult{metric, op,
                             verify_strong_reflexivity(metric, sample, tol),
                             verify_symmetry(metric, sample, tol),
                             verify_transitivity(metric, op, sample, tol)};
}

// The closed-form geometric-series bound for the capped maximum versus the
// enumerated truth. They disagree: the series overshoots what 2^H - 1 bits
// can code, so the report carries both and a flag.
struct TreeDmaxReport {
  unsigned long long series_bound = 0;  // sum of 2^i for i = 0 .. 2^H - 1
  double enumerated_max = 0.0;
  bool bound_matches = false;
};

inline TreeDmaxReport d_max_with_cap(int height_cap) {
  if (height_cap < 1 || height_cap > 4) {
    throw std::invalid_argument("height cap must be in 1..4");
  }
  TreeDmaxReport rep;
  unsigned exponent = 1u << height_cap;  // 2^H, at most 16 here
  rep.series_bound = (1ull << exponent) - 1;
  rep.enumerated_max = boost::rational_cast<double>(enumerated_tree_dmax(height_cap));
  rep.bound_matches = rep.series_bound == static_cast<unsigned long long>(rep.enumerated_max);
  return rep;
}

}  // namespace simdis
