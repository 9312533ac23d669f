#include <set>

#include "doctest.h"
#include "lpvc/instance_io.hpp"
#include "lpvc/oracle.hpp"
#include "lpvc/testkit.hpp"

using namespace lpvc;

TEST_CASE("exhaustive enumeration counts and order") {
  for (int n : {0, 1, 2, 3, 4}) {
    std::size_t count = 0;
    std::set<std::string> distinct;
    exhaustive_graphs(n, [&](const Graph& g) {
      ++count;
      CHECK(g.order() == static_cast<std::size_t>(n));
      distinct.insert(emit_edgelist(g));
    });
    const std::size_t expected = std::size_t{1} << (n * (n - 1) / 2);
    CHECK(count == expected);
    CHECK(distinct.size() == expected);
  }
  std::vector<Graph> three;
  exhaustive_graphs(3, [&](const Graph& g) { three.push_back(g); });
  CHECK(three[0].size() == 0);
  CHECK(three[1].edges() == std::vector<Edge>{{0, 1}});
  CHECK(three[2].edges() == std::vector<Edge>{{0, 2}});
  CHECK(three[7].size() == 3);
  CHECK_THROWS_AS(exhaustive_graphs(8, [](const Graph&) {}), ResourceLimit);
}

TEST_CASE("cross_check is clean on small exhaustive suites") {
  SuiteSpec spec;
  spec.l_values = {4, 5};
  spec.exhaustive_max_n = 5;
  spec.check_beta = true;
  spec.family_max_vertices = 5;
  const auto report = cross_check(spec);
  for (const auto& f : report.failures) INFO(describe(f));
  CHECK(report.ok());
  CHECK(report.instances == 2 * (1 + 1 + 2 + 8 + 64 + 1024));
  CHECK(report.decision_checks > 0);
  CHECK(report.certificate_checks > 0);
  CHECK(report.beta_checks > 0);
  CHECK(report.family_checks > 0);
  CHECK(report.worst_tree_ratio <= 1.0);
}

TEST_CASE("cross_check catches both mutations") {
  for (auto m : {Mutation::FreeComponentDeletion, Mutation::SkipPivotBranch}) {
    SuiteSpec spec;
    spec.l_values = {5};
    spec.random_count = 60;
    spec.n_min = 8;
    spec.n_max = 12;
    spec.check_baseline = false;
    spec.mutation = m;
    const auto report = cross_check(spec);
    CHECK_FALSE(report.ok());
    bool decision = false;
    for (const auto& f : report.failures) decision = decision || f.kind == CheckKind::Decision;
    CHECK(decision);
  }
}

TEST_CASE("empty and explicit suites") {
  const auto none = cross_check(SuiteSpec{});
  CHECK(none.ok());
  CHECK(none.instances == 0);

  SuiteSpec spec;
  spec.l_values = {4, 6};
  spec.instances = {Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})};
  const auto r = cross_check(spec);
  CHECK(r.ok());
  CHECK(r.instances == 2);
}

TEST_CASE("random suites are deterministic") {
  SuiteSpec spec;
  spec.random_count = 20;
  spec.seed = 99;
  const auto a = random_instances(spec, 5);
  CHECK(a == random_instances(spec, 5));
  CHECK(a != random_instances(spec, 6));
  for (const auto& g : a) {
    CHECK(g.order() >= spec.n_min);
    CHECK(g.order() <= spec.n_max);
  }
  spec.seed = 100;
  CHECK(a != random_instances(spec, 5));
}

TEST_CASE("failure descriptions name the instance") {
  CheckFailure f{CheckKind::Decision, "2 1\n0 1\n", 1, 5, "paper algorithm answered no"};
  const auto text = describe(f);
  CHECK(text.find("l=5 k=1") != std::string::npos);
  CHECK(text.find("2 1\n0 1\n") != std::string::npos);
}
