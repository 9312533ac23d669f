#pragma once

// Branching vectors and branching numbers for the search-tree analysis of
// the branching algorithm.

#include <vector>

namespace lpvc {

/// Edge labels of a search-tree node, kept in the order they were produced.
struct BranchingVector {
  std::vector<int> labels;

  friend bool operator==(const BranchingVector&, const BranchingVector&) = default;
};

/// Largest real root of 1 - sum_i x^(-a_i). `residual` is the value of that
/// polynomial at `value`; `width` is the final bisection bracket width.
struct BranchingNumber {
  double value = 1.0;
  double residual = 0.0;
  double width = 0.0;
};

/// Throws std::invalid_argument for fewer than two labels or a label below 1.
[[nodiscard]] BranchingNumber branching_number(const BranchingVector& v);

/// 1 - sum_i x^(-a_i).
[[nodiscard]] double characteristic(const BranchingVector& v, double x);

/// s ones followed by (l-1-s)^2 twos. Throws std::invalid_argument unless
/// l is in 4..7 and 1 <= s <= l-2.
[[nodiscard]] BranchingVector vector_vs(int l, int s);

/// Leaf depths of the tree in which every node at weighted depth below
/// `depth_bound` branches with vector_vs(l, 1). Leaves are listed depth-first,
/// children in vector order. Throws std::invalid_argument for l outside 4..7
/// or depth_bound < 1.
[[nodiscard]] BranchingVector worst_top_tree_leaf_depths(int l, int depth_bound);

struct RuleVectors {
  BranchingVector b1;
  BranchingVector b2;
  BranchingVector b3;
};

/// Worst-case combined vectors for the three branching rules.
[[nodiscard]] RuleVectors rule_vectors(int l);

/// Largest branching number over the rule vectors and every V_s.
[[nodiscard]] BranchingNumber overall_bound(int l);

/// Multiset equality (order-insensitive).
[[nodiscard]] bool same_multiset(const BranchingVector& a, const BranchingVector& b);

}  // namespace lpvc
