#include "lpvc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lpvc/oracle.hpp"

namespace lpvc {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t int_draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % span;
}

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit_draw(rng) < p) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  auto g = path_graph(n);
  g.add_edge(0, static_cast<VertexId>(n - 1));
  return g;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
  }
  return Graph::from_edges(n, edges);
}

Graph spider_graph(std::size_t legs, std::size_t leg_length) {
  std::vector<Edge> edges;
  VertexId next = 1;
  for (std::size_t leg = 0; leg < legs; ++leg) {
    VertexId prev = 0;
    for (std::size_t i = 0; i < leg_length; ++i, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return Graph::from_edges(1 + legs * leg_length, edges);
}

Graph planted_graph(std::size_t n, int l, int opt, std::uint64_t seed) {
  if (l < 2 || l > 7) throw GenerationError("l must be in 2..7");
  if (opt < 0 || static_cast<std::size_t>(opt) * static_cast<std::size_t>(l) > n) {
    throw GenerationError("cannot plant " + std::to_string(opt) + " disjoint " + std::to_string(l) + "-paths in " +
                          std::to_string(n) + " vertices");
  }
  if (n > kOracleMaxVertices) throw GenerationError("planted instances are limited to the oracle size");

  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[int_draw(rng, 0, i - 1)]);

  Graph g(n);
  for (int p = 0; p < opt; ++p) {
    for (int i = 1; i < l; ++i) g.add_edge(perm[p * l + i - 1], perm[p * l + i]);
  }

  std::vector<Edge> candidates;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) candidates.emplace_back(i, j);
    }
  }
  for (std::size_t i = candidates.size(); i > 1; --i) std::swap(candidates[i - 1], candidates[int_draw(rng, 0, i - 1)]);

  const std::size_t attempts = std::min(candidates.size(), 2 * n);
  for (std::size_t i = 0; i < attempts; ++i) {
    auto trial = g;
    trial.add_edge(candidates[i].first, candidates[i].second);
    if (brute_min_cover(trial, l).optimum == opt) g = std::move(trial);
  }
  if (brute_min_cover(g, l).optimum != opt) throw GenerationError("planted optimum check failed");
  return g;
}

}  // namespace lpvc
