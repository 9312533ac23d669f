#pragma once

// Path search over an adjacency matrix, written separately from the library's
// search routines so tests can check them against it.

#include <algorithm>
#include <functional>
#include <vector>

#include "lpvc/graph.hpp"

namespace testsupport {

using lpvc::Graph;
using lpvc::Path;
using lpvc::VertexId;

struct Matrix {
  std::vector<VertexId> labels;
  std::vector<std::vector<bool>> adj;
};

inline Matrix matrix_of(const Graph& g) {
  Matrix m;
  m.labels.assign(g.vertices().begin(), g.vertices().end());
  const auto n = m.labels.size();
  m.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.adj[i][j] = i != j && g.adjacent(m.labels[i], m.labels[j]);
  }
  return m;
}

// Every simple path with exactly l vertices, in both orientations.
inline std::vector<Path> all_l_paths(const Graph& g, int l) {
  const auto m = matrix_of(g);
  const auto n = m.labels.size();
  std::vector<Path> out;
  std::vector<std::size_t> cur;
  std::vector<bool> on(n, false);
  std::function<void()> grow = [&] {
    if (static_cast<int>(cur.size()) == l) {
      Path p;
      for (auto i : cur) p.push_back(m.labels[i]);
      out.push_back(p);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (on[j] || (!cur.empty() && !m.adj[cur.back()][j])) continue;
      on[j] = true;
      cur.push_back(j);
      grow();
      cur.pop_back();
      on[j] = false;
    }
  };
  grow();
  return out;
}

inline bool contains(const Path& p, VertexId v) { return std::find(p.begin(), p.end(), v) != p.end(); }

// v-paths with one orientation kept (smaller first endpoint).
inline std::vector<Path> naive_v_paths(const Graph& g, VertexId v, int l) {
  std::vector<Path> out;
  for (auto& p : all_l_paths(g, l)) {
    if (contains(p, v) && (l == 1 || p.front() < p.back())) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool naive_has_l_path(const Graph& g, int l) { return !all_l_paths(g, l).empty(); }

inline bool survives(const Path& p, const std::vector<VertexId>& removed) {
  return std::none_of(p.begin(), p.end(), [&](VertexId u) { return contains(removed, u); });
}

}  // namespace testsupport
