#include "doctest.h"
#include "lpvc/generators.hpp"
#include "lpvc/oracle.hpp"
#include "support.hpp"

using namespace lpvc;

namespace {

bool naive_cover(const Graph& g, const VertexSet& s, int l) {
  for (const auto& p : testsupport::all_l_paths(g, l)) {
    if (testsupport::survives(p, s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("brute_min_cover examples") {
  const auto none = brute_min_cover(path_graph(4), 5);
  CHECK(none.optimum == 0);
  CHECK(none.one_witness.empty());

  CHECK(brute_min_cover(path_graph(10), 5).optimum == 2);
  CHECK(brute_min_cover(complete_graph(7), 7).optimum == 1);
  CHECK(brute_min_cover(Graph(), 3).optimum == 0);
}

TEST_CASE("brute_min_v_hitting examples") {
  CHECK(brute_min_v_hitting(path_graph(3), 0, 5).optimum == 0);
  CHECK(brute_min_v_hitting(path_graph(5), 0, 5).optimum == 1);
  CHECK(brute_min_v_hitting(spider_graph(2, 4), 0, 5).optimum == 2);
}

TEST_CASE("closed forms on paths, cycles and cliques") {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (int l = 2; l <= 7; ++l) {
      CHECK(brute_min_cover(path_graph(n), l).optimum == static_cast<int>(n) / l);
      if (n >= 3) {
        CHECK(brute_min_cover(cycle_graph(n), l).optimum ==
              (static_cast<int>(n) < l ? 0 : (static_cast<int>(n) + l - 1) / l));
      }
      if (n <= 10) CHECK(brute_min_cover(complete_graph(n), l).optimum == std::max(0, static_cast<int>(n) - l + 1));
    }
  }
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(brute_min_cover(Graph(19), 3), ResourceLimit);
  CHECK_THROWS_AS(brute_min_v_hitting(Graph(19), 0, 3), ResourceLimit);
  CHECK_THROWS_AS(SmallGraph(Graph(20), 19), ResourceLimit);
  CHECK_NOTHROW(SmallGraph(Graph(20), 32));
  CHECK_THROWS_AS(SmallGraph(Graph(33), 40), ResourceLimit);
  CHECK_NOTHROW(brute_min_cover(Graph(18), 3));
}

TEST_CASE("SmallGraph path and component queries") {
  const std::vector<VertexId> labels{4, 9, 12, 30};
  const auto g = Graph::from_edges(labels, std::vector<Edge>{{4, 9}, {9, 12}});
  const SmallGraph sg(g);
  CHECK(sg.order() == 4);
  CHECK(sg.bit_of(12) == 2);
  CHECK(sg.set_of(sg.bits_of({4, 30})) == VertexSet{4, 30});
  CHECK(sg.has_l_path(sg.all(), 3));
  CHECK_FALSE(sg.has_l_path(sg.all(), 4));
  CHECK(sg.has_l_path_through(sg.all(), sg.bit_of(4), 3));
  CHECK_FALSE(sg.has_l_path_through(sg.all(), sg.bit_of(30), 2));
  CHECK(sg.set_of(sg.component(sg.all(), sg.bit_of(9))) == VertexSet{4, 9, 12});
}

TEST_CASE("property: witnesses verify and are minimal") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = gnp_graph(6 + seed % 4, 0.35, seed);
    for (int l = 2; l <= 6; ++l) {
      const auto r = brute_min_cover(g, l, true);
      CHECK(static_cast<int>(r.one_witness.size()) == r.optimum);
      CHECK(naive_cover(g, r.one_witness, l));
      for (std::size_t i = 0; i < r.one_witness.size(); ++i) {
        auto smaller = r.one_witness;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK_FALSE(naive_cover(g, smaller, l));
      }
      REQUIRE(r.all_minimum_witnesses.has_value());
      CHECK(r.all_minimum_witnesses->front() == r.one_witness);
      for (const auto& w : *r.all_minimum_witnesses) CHECK(naive_cover(g, w, l));
    }
  }
}
