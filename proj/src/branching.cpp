#include "lpvc/branching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lpvc {

namespace {

void check_l(int l) {
  if (l < 4 || l > 7) throw std::invalid_argument("l must be in 4..7, got " + std::to_string(l));
}

void expand(int depth, int bound, const BranchingVector& step, std::vector<int>& leaves) {
  if (depth >= bound) {
    leaves.push_back(depth);
    return;
  }
  for (int a : step.labels) expand(depth + a, bound, step, leaves);
}

}  // namespace

double characteristic(const BranchingVector& v, double x) {
  double sum = 0.0;
  for (int a : v.labels) sum += std::pow(x, -a);
  return 1.0 - sum;
}

BranchingNumber branching_number(const BranchingVector& v) {
  if (v.labels.size() < 2) throw std::invalid_argument("a branching vector needs at least two entries");
  if (std::any_of(v.labels.begin(), v.labels.end(), [](int a) { return a < 1; })) {
    throw std::invalid_argument("branching vector entries must be positive");
  }
  // The characteristic function increases on x > 0, is negative at 1 and
  // non-negative at t = |v| because each term is at most 1/t there.
  double lo = 1.0;
  double hi = static_cast<double>(v.labels.size());
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (characteristic(v, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  BranchingNumber out;
  out.value = hi;
  out.residual = characteristic(v, hi);
  out.width = hi - lo;
  return out;
}

BranchingVector vector_vs(int l, int s) {
  check_l(l);
  if (s < 1 || s > l - 2) throw std::invalid_argument("s must be in 1..l-2, got " + std::to_string(s));
  BranchingVector v;
  v.labels.assign(static_cast<std::size_t>(s), 1);
  v.labels.insert(v.labels.end(), static_cast<std::size_t>((l - 1 - s) * (l - 1 - s)), 2);
  return v;
}

BranchingVector worst_top_tree_leaf_depths(int l, int depth_bound) {
  check_l(l);
  if (depth_bound < 1) throw std::invalid_argument("depth bound must be positive");
  const auto step = vector_vs(l, 1);
  BranchingVector out;
  for (int a : step.labels) expand(a, depth_bound, step, out.labels);
  return out;
}

RuleVectors rule_vectors(int l) {
  RuleVectors r;
  r.b1 = vector_vs(l, 1);

  r.b3.labels.push_back(1);
  const auto deep = worst_top_tree_leaf_depths(l, 3);
  r.b3.labels.insert(r.b3.labels.end(), deep.labels.begin(), deep.labels.end());

  r.b2.labels.push_back(2);
  r.b2.labels.insert(r.b2.labels.end(), static_cast<std::size_t>((l - 2) * (l - 2)), 3);
  const auto shallow = worst_top_tree_leaf_depths(l, 2);
  r.b2.labels.insert(r.b2.labels.end(), shallow.labels.begin(), shallow.labels.end());
  return r;
}

BranchingNumber overall_bound(int l) {
  const auto r = rule_vectors(l);
  auto best = branching_number(r.b1);
  auto consider = [&](const BranchingVector& v) {
    const auto b = branching_number(v);
    if (b.value > best.value) best = b;
  };
  consider(r.b2);
  consider(r.b3);
  for (int s = 1; s <= l - 2; ++s) consider(vector_vs(l, s));
  return best;
}

bool same_multiset(const BranchingVector& a, const BranchingVector& b) {
  auto x = a.labels;
  auto y = b.labels;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace lpvc
