#pragma once

// Brute-force ground truth for small graphs. Deliberately naive: every
// answer comes from plain subset enumeration and exhaustive path search
// over bitmasks, sharing no code with the solvers it is used to check.

#include <cstdint>
#include <optional>
#include <vector>

#include "lpvc/graph.hpp"

namespace lpvc {

inline constexpr std::size_t kOracleMaxVertices = 18;

struct OracleResult {
  int optimum = 0;
  VertexSet one_witness;
  /// Filled only when requested.
  std::optional<std::vector<VertexSet>> all_minimum_witnesses;
};

/// Bitmask copy of a graph with at most 32 vertices; bit i is the i-th smallest label.
class SmallGraph {
 public:
  using Bits = std::uint32_t;

  /// Throws ResourceLimit if g has more than `max_vertices` vertices (at most 32).
  explicit SmallGraph(const Graph& g, std::size_t max_vertices = kOracleMaxVertices);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(labels_.size()); }
  [[nodiscard]] Bits all() const noexcept;
  [[nodiscard]] Bits bits_of(const VertexSet& s) const;
  [[nodiscard]] VertexSet set_of(Bits b) const;
  [[nodiscard]] int bit_of(VertexId v) const;

  /// Some simple path with exactly l vertices inside `alive`.
  [[nodiscard]] bool has_l_path(Bits alive, int l) const;
  /// Some simple path with exactly l vertices inside `alive` that visits bit `v`.
  [[nodiscard]] bool has_l_path_through(Bits alive, int v, int l) const;
  /// Vertices reachable from bit v inside `alive` (including v).
  [[nodiscard]] Bits component(Bits alive, int v) const;

 private:
  bool grow(Bits alive, Bits visited, int last, int remaining, int through) const;

  std::vector<VertexId> labels_;
  std::vector<Bits> adj_;
};

/// Minimum l-path vertex cover by cardinality-lexicographic subset enumeration.
/// Throws ResourceLimit above kOracleMaxVertices vertices.
[[nodiscard]] OracleResult brute_min_cover(const Graph& g, int l, bool all_witnesses = false);

/// Minimum v-hitting set (beta) by subset enumeration over C_v \ {v}.
/// Throws ResourceLimit above kOracleMaxVertices vertices.
[[nodiscard]] OracleResult brute_min_v_hitting(const Graph& g, VertexId v, int l, bool all_witnesses = false);

}  // namespace lpvc
