#include <algorithm>
#include <queue>
#include <set>

#include "doctest.h"
#include "lpvc/generators.hpp"
#include "lpvc/graph.hpp"
#include "support.hpp"

using namespace lpvc;

namespace {

Graph two_edges() { return Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}); }

}  // namespace

TEST_CASE("construction rejects non-simple input") {
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{0, 2}}), std::invalid_argument);
  const std::vector<VertexId> labels{3, 10};
  CHECK_THROWS_AS(Graph::from_edges(labels, std::vector<Edge>{{3, 4}}), std::invalid_argument);

  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)g.index_of(9), std::invalid_argument);
  g.add_vertex(1);
  CHECK(g.order() == 3);
  CHECK(g.size() == 1);
}

TEST_CASE("labels survive construction and queries") {
  const std::vector<VertexId> labels{7, 2, 40};
  const auto g = Graph::from_edges(labels, std::vector<Edge>{{40, 2}, {7, 2}});
  CHECK(std::vector<VertexId>(g.vertices().begin(), g.vertices().end()) == std::vector<VertexId>{2, 7, 40});
  CHECK(g.edges() == std::vector<Edge>{{2, 7}, {2, 40}});
  CHECK(g.degree(2) == 2);
  CHECK(g.neighbors(2) == VertexSet{7, 40});
  CHECK(g.max_label() == 40);
  CHECK_FALSE(Graph().max_label().has_value());
  CHECK(g.adjacent(40, 2));
  CHECK_FALSE(g.adjacent(7, 40));
}

TEST_CASE("induced_delete examples") {
  const auto tri = complete_graph(3);
  const auto e = induced_delete(tri, VertexSet{2});
  CHECK(e.order() == 2);
  CHECK(e.edges() == std::vector<Edge>{{0, 1}});

  const auto p4 = path_graph(4);
  CHECK(induced_delete(p4, VertexSet{}) == p4);

  const auto cut = induced_delete(p4, VertexSet{1});
  CHECK(std::vector<VertexId>(cut.vertices().begin(), cut.vertices().end()) == std::vector<VertexId>{0, 2, 3});
  CHECK(cut.edges() == std::vector<Edge>{{2, 3}});

  CHECK_THROWS_AS(induced_delete(p4, VertexSet{9}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(p4, VertexSet{9}), std::invalid_argument);
}

TEST_CASE("component examples") {
  CHECK(component_of(two_edges(), 0) == VertexSet{0, 1});
  CHECK(component_of(path_graph(5), 3) == VertexSet{0, 1, 2, 3, 4});
  CHECK(component_of(Graph(3), 1) == VertexSet{1});
  CHECK_THROWS_AS(component_of(path_graph(2), 5), std::invalid_argument);

  CHECK(components(Graph()).empty());
  CHECK(components(two_edges()) == std::vector<VertexSet>{{0, 1}, {2, 3}});
  CHECK(components(path_graph(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
}

TEST_CASE("enumerate_paths_from examples") {
  CHECK(paths_from(path_graph(3), 0, 3) == std::vector<Path>{{0}, {0, 1}, {0, 1, 2}});
  CHECK(paths_from(complete_graph(3), 0, 2) == std::vector<Path>{{0}, {0, 1}, {0, 2}});
  CHECK(paths_from(Graph(1), 0, 7) == std::vector<Path>{{0}});

  int seen = 0;
  const bool finished = enumerate_paths_from(complete_graph(4), 0, 4, [&](const Path&) { return ++seen < 3; });
  CHECK_FALSE(finished);
  CHECK(seen == 3);
}

TEST_CASE("find_l_path examples") {
  CHECK(find_l_path(path_graph(5), 5) == Path{0, 1, 2, 3, 4});
  CHECK_FALSE(find_l_path(path_graph(4), 5).has_value());
  const auto k7 = find_l_path(complete_graph(7), 7);
  REQUIRE(k7.has_value());
  CHECK(k7->size() == 7);
  CHECK(testsupport::naive_has_l_path(complete_graph(7), 7));
}

TEST_CASE("longest_path_from examples") {
  CHECK(longest_path_from(Graph(1), 0, 8) == 1);
  CHECK(longest_path_from(path_graph(5), 0, 8) == 5);
  CHECK(longest_path_from(spider_graph(3, 1), 0, 8) == 2);
  CHECK(longest_path_from(path_graph(10), 0, 4) == 4);
}

TEST_CASE("vertex set helpers") {
  CHECK(make_vertex_set({3, 1, 3, 2}) == VertexSet{1, 2, 3});
  CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
  CHECK(set_intersection({1, 3}, {2, 3}) == VertexSet{3});
  CHECK(set_difference({1, 2, 3}, {2}) == VertexSet{1, 3});
  CHECK(set_contains({1, 5}, 5));
  CHECK(is_subset({1, 5}, {1, 2, 5}));
  CHECK_FALSE(is_subset({1, 6}, {1, 2, 5}));
}

TEST_CASE("property: deletion keeps exactly the surviving edges") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = gnp_graph(9, 0.4, seed);
    const VertexSet s{seed % 9, (seed * 5 + 2) % 9};
    const auto h = induced_delete(g, make_vertex_set(s));
    std::vector<Edge> expected;
    for (auto e : g.edges()) {
      if (!set_contains(make_vertex_set(s), e.first) && !set_contains(make_vertex_set(s), e.second)) expected.push_back(e);
    }
    CHECK(h.edges() == expected);
    CHECK(h.order() + make_vertex_set(s).size() == g.order());
    for (auto v : make_vertex_set(s)) CHECK_FALSE(h.contains(v));
  }
}

TEST_CASE("property: components form a partition into maximal connected sets") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = gnp_graph(12, 0.12, seed);
    std::set<VertexId> all;
    for (const auto& c : components(g)) {
      // BFS from the first vertex reaches exactly c.
      std::set<VertexId> seen{c.front()};
      std::queue<VertexId> q;
      q.push(c.front());
      while (!q.empty()) {
        const auto u = q.front();
        q.pop();
        for (auto w : g.neighbors(u)) {
          if (seen.insert(w).second) q.push(w);
        }
      }
      CHECK(VertexSet(seen.begin(), seen.end()) == c);
      for (auto u : c) CHECK(all.insert(u).second);
    }
    CHECK(all.size() == g.order());
  }
}

TEST_CASE("property: path streams are simple, adjacent and duplicate-free") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gnp_graph(8, 0.45, seed);
    const auto ps = paths_from(g, 0, 5);
    std::set<Path> unique(ps.begin(), ps.end());
    CHECK(unique.size() == ps.size());
    for (const auto& p : ps) {
      CHECK(p.front() == 0);
      CHECK(make_vertex_set(p).size() == p.size());
      for (std::size_t i = 1; i < p.size(); ++i) CHECK(g.adjacent(p[i - 1], p[i]));
    }
    // Count agrees with the matrix search for every length.
    for (int len = 1; len <= 5; ++len) {
      const auto naive = testsupport::all_l_paths(g, len);
      const auto from0 = std::count_if(naive.begin(), naive.end(), [](const Path& p) { return p.front() == 0; });
      const auto mine = std::count_if(ps.begin(), ps.end(), [&](const Path& p) { return static_cast<int>(p.size()) == len; });
      CHECK(from0 == mine);
    }
  }
}

TEST_CASE("property: find_l_path agrees with exhaustive search") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = gnp_graph(4 + seed % 7, 0.1 + 0.05 * static_cast<double>(seed % 6), seed);
    for (int l = 2; l <= 7; ++l) {
      const auto found = find_l_path(g, l);
      CHECK(found.has_value() == testsupport::naive_has_l_path(g, l));
      if (found) {
        CHECK(static_cast<int>(found->size()) == l);
        for (std::size_t i = 1; i < found->size(); ++i) CHECK(g.adjacent((*found)[i - 1], (*found)[i]));
      }
    }
  }
}

TEST_CASE("property: longest_path_from matches the matrix search") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = gnp_graph(8, 0.3, seed);
    for (auto v : g.vertices()) {
      int best = 1;
      for (int len = 2; len <= 8; ++len) {
        for (const auto& p : testsupport::all_l_paths(g, len)) {
          if (p.front() == v) best = std::max(best, len);
        }
      }
      CHECK(longest_path_from(g, v, 8) == best);
      CHECK(longest_path_from(g, v, 3) == std::min(best, 3));
    }
  }
}
