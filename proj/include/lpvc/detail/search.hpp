#pragma once

// Index-level path search shared by the graph, v-path and solver modules.
// A Mask marks vertices (by index) that a search must not enter; searches
// temporarily set entries for the vertices on the current path and restore
// them before returning.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "lpvc/graph.hpp"

namespace lpvc::detail {

using Index = std::uint32_t;
using Mask = std::vector<std::uint8_t>;
using IndexPath = std::vector<Index>;

[[nodiscard]] inline Mask empty_mask(const Graph& g) { return Mask(g.order(), 0); }

/// Mask with the given labels blocked; unknown labels throw std::invalid_argument.
[[nodiscard]] Mask mask_of(const Graph& g, std::span<const VertexId> blocked);

/// Calls visit(path) for `path` and every extension of it with at most
/// max_vertices vertices. Returns false once visit returns false.
template <class Visit>
bool extend_paths(const Graph& g, IndexPath& path, Mask& used, int max_vertices, Visit& visit) {
  if (!visit(static_cast<const IndexPath&>(path))) return false;
  if (static_cast<int>(path.size()) >= max_vertices) return true;
  for (Index w : g.adj(path.back())) {
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    const bool go_on = extend_paths(g, path, used, max_vertices, visit);
    path.pop_back();
    used[w] = 0;
    if (!go_on) return false;
  }
  return true;
}

/// True if `path` extends to exactly `target` vertices; on success the
/// extended path is left in `path` (and its vertices stay marked in `used`).
bool reach_length(const Graph& g, IndexPath& path, Mask& used, int target);

/// min(cap, longest extension of `path` measured in vertices).
int longest_extension(const Graph& g, IndexPath& path, Mask& used, int cap);

std::optional<IndexPath> find_l_path(const Graph& g, int l, Mask& used);

bool has_v_path(const Graph& g, Index v, int l, Mask& used);

/// Streams every l-vertex path through v exactly once, oriented so that the
/// first endpoint has the smaller label. Paths are produced grouped by the
/// length of the shorter arm (0 first), depth-first with ascending labels
/// inside each group. visit returns false to stop.
template <class Visit>
bool for_each_v_path(const Graph& g, Index v, int l, Mask& used, Visit&& visit) {
  if (used[v]) return true;
  used[v] = 1;
  IndexPath left{v};
  IndexPath right{v};
  IndexPath seq;
  seq.reserve(static_cast<std::size_t>(l));
  bool go_on = true;

  for (int a = 0; go_on && 2 * a <= l - 1; ++a) {
    const int b = l - 1 - a;
    auto on_right = [&](const IndexPath& r) {
      if (static_cast<int>(r.size()) != b + 1) return true;
      seq.assign(left.rbegin(), left.rend());
      seq.insert(seq.end(), r.begin() + 1, r.end());
      if (g.label(seq.front()) > g.label(seq.back())) {
        if (a == b) return true;  // reported in the other orientation
        std::reverse(seq.begin(), seq.end());
      }
      return visit(static_cast<const IndexPath&>(seq));
    };
    auto on_left = [&](const IndexPath& lp) {
      if (static_cast<int>(lp.size()) != a + 1) return true;
      left = lp;
      right.assign(1, v);
      return extend_paths(g, right, used, b + 1, on_right);
    };
    IndexPath start{v};
    go_on = extend_paths(g, start, used, a + 1, on_left);
  }
  used[v] = 0;
  return go_on;
}

}  // namespace lpvc::detail
