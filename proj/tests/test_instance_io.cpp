#include <string>

#include "doctest.h"
#include "lpvc/generators.hpp"
#include "lpvc/instance_io.hpp"

using namespace lpvc;

namespace {

template <typename E>
std::size_t error_line(std::string_view text, InstanceFormat f) {
  try {
    (void)parse_instance(text, f);
  } catch (const E& e) {
    return e.line();
  }
  FAIL("no error raised");
  return 999;
}

}  // namespace

TEST_CASE("edgelist parsing examples") {
  const auto g = parse_instance("5 4\n0 1\n1 2\n2 3\n3 4\n", InstanceFormat::EdgeList);
  CHECK(g == path_graph(5));
  CHECK(parse_instance("3 0\n", InstanceFormat::EdgeList) == Graph(3));
  CHECK(parse_instance("\n3 1\n\n  0\t2 \r\n", InstanceFormat::EdgeList).adjacent(0, 2));
}

TEST_CASE("edgelist errors carry line numbers") {
  CHECK(error_line<ValidationError>("2 1\n0 0\n", InstanceFormat::EdgeList) == 2);
  CHECK(error_line<ValidationError>("3 2\n0 1\n1 0\n", InstanceFormat::EdgeList) == 3);
  CHECK(error_line<ValidationError>("3 1\n0 3\n", InstanceFormat::EdgeList) == 2);
  CHECK(error_line<ParseError>("3 1\n0 x\n", InstanceFormat::EdgeList) == 2);
  CHECK(error_line<ParseError>("3 1\n0 1 2\n", InstanceFormat::EdgeList) == 2);
  CHECK(error_line<ParseError>("3 1\n0 1\n1 2\n", InstanceFormat::EdgeList) == 3);
  CHECK(error_line<ParseError>("3 2\n0 1\n", InstanceFormat::EdgeList) == 0);
  CHECK(error_line<ParseError>("", InstanceFormat::EdgeList) == 0);
  CHECK(error_line<ParseError>("-3 0\n", InstanceFormat::EdgeList) == 1);
}

TEST_CASE("dimacs parsing") {
  const auto g = parse_instance("c path\np edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n", InstanceFormat::Dimacs);
  CHECK(g == path_graph(5));
  CHECK(error_line<ParseError>("e 1 2\np edge 2 1\n", InstanceFormat::Dimacs) == 1);
  CHECK(error_line<ValidationError>("p edge 2 1\ne 0 1\n", InstanceFormat::Dimacs) == 2);
  CHECK(error_line<ValidationError>("p edge 2 1\ne 1 1\n", InstanceFormat::Dimacs) == 2);
  CHECK(error_line<ParseError>("p edge 2 0\nx 1 2\n", InstanceFormat::Dimacs) == 2);
  CHECK(error_line<ParseError>("p edge 2 0\np edge 2 0\n", InstanceFormat::Dimacs) == 2);
  CHECK(error_line<ParseError>("c only comments\n", InstanceFormat::Dimacs) == 0);
}

TEST_CASE("format detection") {
  CHECK(detect_format("c hi\np edge 1 0\n") == InstanceFormat::Dimacs);
  CHECK(detect_format("\n\np edge 1 0\n") == InstanceFormat::Dimacs);
  CHECK(detect_format("1 0\n") == InstanceFormat::EdgeList);
  CHECK(detect_format("") == InstanceFormat::EdgeList);
  CHECK(parse_instance("p edge 3 1\ne 1 3\n").adjacent(0, 2));
}

TEST_CASE("writers") {
  CHECK(emit_edgelist(path_graph(3)) == "3 2\n0 1\n1 2\n");
  CHECK(emit_dimacs(path_graph(3)) == "p edge 3 2\ne 1 2\ne 2 3\n");
  const std::vector<VertexId> labels{0, 2};
  const auto gap = Graph::from_edges(labels, std::vector<Edge>{{0, 2}});
  CHECK_THROWS_AS((void)emit_edgelist(gap), std::invalid_argument);
  CHECK_THROWS_AS((void)emit_dimacs(gap), std::invalid_argument);
}

TEST_CASE("property: both formats round-trip") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = gnp_graph(seed % 17, 0.3, seed);
    for (auto f : {InstanceFormat::EdgeList, InstanceFormat::Dimacs}) {
      const auto text = emit_instance(g, f);
      CHECK(parse_instance(text, f) == g);
      CHECK(parse_instance(text) == g);
      CHECK(emit_instance(parse_instance(text, f), f) == text);
    }
  }
}
