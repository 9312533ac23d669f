#pragma once

// Instance suites and the cross-checking harness. Pass/fail decisions come
// only from the brute-force oracle and verify_cover, never from solver internals.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpvc/graph.hpp"
#include "lpvc/solver.hpp"

namespace lpvc {

inline constexpr int kExhaustiveMaxVertices = 7;

/// Calls visit for each of the 2^(n(n-1)/2) labeled graphs on 0..n-1. Edge
/// subsets are visited in increasing bitmask order over the pairs (i, j),
/// i < j, taken lexicographically. Throws ResourceLimit for n > 7.
void exhaustive_graphs(int n, const std::function<void(const Graph&)>& visit);

struct SuiteSpec {
  std::vector<int> l_values;
  /// All labeled graphs with at most this many vertices; negative for none.
  int exhaustive_max_n = -1;
  /// Random G(n, p) instances per l value.
  std::size_t random_count = 0;
  std::size_t n_min = 8;
  std::size_t n_max = 14;
  std::vector<double> densities{0.15, 0.3, 0.5};
  std::uint64_t seed = 1;
  /// Explicit instances checked for every l value.
  std::vector<Graph> instances;

  bool check_paper = true;
  bool check_baseline = true;
  bool check_certificates = true;
  bool check_tree_bound = true;
  bool check_beta = false;
  /// Family contract checks run for instances with at most this many vertices (0 disables).
  std::size_t family_max_vertices = 0;

  Mutation mutation = Mutation::None;
};

enum class CheckKind { Decision, Certificate, TreeBound, Beta, Family };

struct CheckFailure {
  CheckKind kind = CheckKind::Decision;
  /// EDGELIST text of the instance.
  std::string instance;
  int k = 0;
  int l = 0;
  std::string what;
};

struct CrossCheckReport {
  std::size_t instances = 0;
  std::size_t decision_checks = 0;
  std::size_t certificate_checks = 0;
  std::size_t tree_bound_checks = 0;
  std::size_t beta_checks = 0;
  std::size_t family_checks = 0;
  /// Largest leaves / c(l)^k seen over all paper-algorithm solves.
  double worst_tree_ratio = 0.0;
  std::vector<CheckFailure> failures;

  [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
  void merge(const CrossCheckReport& other);
};

/// The G(n, p) instances a suite generates for one l value, in order.
[[nodiscard]] std::vector<Graph> random_instances(const SuiteSpec& spec, int l);

/// All checks enabled in the suite on one instance and one l value.
[[nodiscard]] CrossCheckReport check_instance(const Graph& g, int l, const SuiteSpec& spec);

[[nodiscard]] CrossCheckReport cross_check(const SuiteSpec& spec);

/// Multi-line human-readable failure dump.
[[nodiscard]] std::string describe(const CheckFailure& f);

}  // namespace lpvc
