#pragma once

// Queries about v-paths: l-vertex paths that pass through a fixed vertex v.

#include <optional>
#include <utility>
#include <vector>

#include "lpvc/graph.hpp"

namespace lpvc {

/// Minimum v-hitting set size, bucketed the way the branching rules need it.
enum class BetaClass { NoVPaths, One, Two, ThreePlus };

[[nodiscard]] const char* to_string(BetaClass c) noexcept;

struct VPathReport {
  BetaClass beta_class = BetaClass::NoVPaths;
  /// Lexicographically smallest minimum v-hitting set, present for One and Two.
  std::optional<VertexSet> witness;
};

/// Every v-path once, oriented with the smaller endpoint label first.
[[nodiscard]] std::vector<Path> enumerate_v_paths(const Graph& g, VertexId v, int l);

[[nodiscard]] bool has_v_path(const Graph& g, VertexId v, int l);

/// First pair of v-paths with different vertex sets that share a vertex
/// besides v. "First" means the second path is the earliest one in
/// enumeration order that completes a pair, and the first path is the
/// earliest partner for it.
[[nodiscard]] std::optional<std::pair<Path, Path>> find_intersecting_pair(const Graph& g, VertexId v, int l);

/// A v-path written x'_1..x'_p, v, x_1..x_{l-1-p} with the smallest possible
/// offset p of v from the nearer end; nullopt when there is no v-path.
[[nodiscard]] std::optional<Path> canonical_v_path(const Graph& g, VertexId v, int l);

/// Offset of v from the front of `path`. Throws ContractViolation if absent.
[[nodiscard]] int offset_of(const Path& path, VertexId v);

/// True iff X is inside C_v \ {v} and meets every v-path.
/// Throws std::invalid_argument if X contains v.
[[nodiscard]] bool is_v_hitting_set(const Graph& g, VertexId v, int l, const VertexSet& x);

[[nodiscard]] VPathReport classify_beta(const Graph& g, VertexId v, int l);

}  // namespace lpvc
