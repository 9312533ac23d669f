#include "lpvc/testkit.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "lpvc/branching.hpp"
#include "lpvc/family.hpp"
#include "lpvc/generators.hpp"
#include "lpvc/instance_io.hpp"
#include "lpvc/oracle.hpp"
#include "lpvc/vpath.hpp"

namespace lpvc {

namespace {

std::string fires_summary(const SearchStats& s) {
  std::ostringstream out;
  out << "nodes=" << s.nodes_total << " leaves=" << s.leaves;
  for (auto r : kAllRules) {
    if (s.fires(r)) out << ' ' << rule_name(r) << '=' << s.fires(r);
  }
  return out.str();
}

std::string dump(const Graph& g) {
  try {
    return emit_edgelist(g);
  } catch (const std::invalid_argument&) {
    std::ostringstream out;
    out << "vertices:";
    for (auto v : g.vertices()) out << ' ' << v;
    out << "\nedges:";
    for (const auto& [a, b] : g.edges()) out << ' ' << a << '-' << b;
    out << '\n';
    return out.str();
  }
}

int beta_bucket(int beta) { return std::min(beta, 3); }

int beta_bucket(BetaClass c) {
  switch (c) {
    case BetaClass::NoVPaths: return 0;
    case BetaClass::One: return 1;
    case BetaClass::Two: return 2;
    case BetaClass::ThreePlus: return 3;
  }
  return -1;
}

}  // namespace

void exhaustive_graphs(int n, const std::function<void(const Graph&)>& visit) {
  if (n > kExhaustiveMaxVertices) throw ResourceLimit("exhaustive enumeration is limited to 7 vertices");
  if (n < 0) return;
  std::vector<Edge> pairs;
  for (VertexId i = 0; i < static_cast<VertexId>(n); ++i) {
    for (VertexId j = i + 1; j < static_cast<VertexId>(n); ++j) pairs.emplace_back(i, j);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1U) edges.push_back(pairs[b]);
    }
    visit(Graph::from_edges(static_cast<std::size_t>(n), edges));
  }
}

void CrossCheckReport::merge(const CrossCheckReport& other) {
  instances += other.instances;
  decision_checks += other.decision_checks;
  certificate_checks += other.certificate_checks;
  tree_bound_checks += other.tree_bound_checks;
  beta_checks += other.beta_checks;
  family_checks += other.family_checks;
  worst_tree_ratio = std::max(worst_tree_ratio, other.worst_tree_ratio);
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::vector<Graph> random_instances(const SuiteSpec& spec, int l) {
  std::mt19937_64 rng(spec.seed * 1000003ULL + static_cast<std::uint64_t>(l));
  std::vector<Graph> out;
  out.reserve(spec.random_count);
  for (std::size_t i = 0; i < spec.random_count; ++i) {
    const auto n = static_cast<std::size_t>(int_draw(rng, spec.n_min, spec.n_max));
    const double p = spec.densities[i % spec.densities.size()];
    out.push_back(gnp_graph(n, p, rng()));
  }
  return out;
}

CrossCheckReport check_instance(const Graph& g, int l, const SuiteSpec& spec) {
  CrossCheckReport report;
  report.instances = 1;
  auto fail = [&](CheckKind kind, int k, std::string what) {
    report.failures.push_back({kind, dump(g), k, l, std::move(what)});
  };

  const auto oracle = brute_min_cover(g, l);
  const bool paper_applies = spec.check_paper && l >= 4 && l <= 7;
  const double base = paper_applies ? overall_bound(l).value : 0.0;

  for (int k = 0; k <= oracle.optimum + 1; ++k) {
    const bool expected = oracle.optimum <= k;
    if (spec.check_baseline) {
      ++report.decision_checks;
      const auto r = lpvc_baseline(g, k, l);
      if (r.yes != expected) fail(CheckKind::Decision, k, "baseline answered " + std::string(r.yes ? "yes" : "no"));
    }
    if (!paper_applies) continue;

    SolveOptions opts;
    opts.mutation = spec.mutation;
    opts.certificate = spec.check_certificates && k == oracle.optimum;
    SolveResult r;
    try {
      r = lpvc_paper(g, k, l, opts);
    } catch (const std::exception& e) {
      fail(CheckKind::Decision, k, std::string("paper algorithm threw: ") + e.what());
      continue;
    }
    ++report.decision_checks;
    if (r.yes != expected) {
      fail(CheckKind::Decision, k,
           "paper algorithm answered " + std::string(r.yes ? "yes" : "no") + " [" + fires_summary(r.stats) + "]");
    }
    if (opts.certificate && r.yes) {
      ++report.certificate_checks;
      if (!r.certificate) {
        fail(CheckKind::Certificate, k, "missing certificate");
      } else if (static_cast<int>(r.certificate->size()) > k || !verify_cover(g, *r.certificate, l)) {
        fail(CheckKind::Certificate, k, "certificate does not verify");
      }
    }
    if (spec.check_tree_bound) {
      ++report.tree_bound_checks;
      const double bound = std::pow(base, k);
      report.worst_tree_ratio = std::max(report.worst_tree_ratio, static_cast<double>(r.stats.leaves) / bound);
      if (static_cast<double>(r.stats.leaves) > bound * (1.0 + 1e-12)) {
        fail(CheckKind::TreeBound, k,
             "search tree has " + std::to_string(r.stats.leaves) + " leaves, bound " + std::to_string(bound) + " [" +
                 fires_summary(r.stats) + "]");
      }
    }
  }

  if (spec.check_beta) {
    for (auto v : g.vertices()) {
      ++report.beta_checks;
      const auto fast = classify_beta(g, v, l);
      const auto slow = brute_min_v_hitting(g, v, l);
      if (beta_bucket(fast.beta_class) != beta_bucket(slow.optimum)) {
        fail(CheckKind::Beta, -1, "beta class mismatch at vertex " + std::to_string(v));
      } else if (fast.witness && !is_v_hitting_set(g, v, l, *fast.witness)) {
        fail(CheckKind::Beta, -1, "beta witness does not hit all v-paths at vertex " + std::to_string(v));
      }
    }
  }

  if (l >= 4 && l <= 7 && spec.family_max_vertices > 0 && g.order() <= spec.family_max_vertices) {
    for (auto v : g.vertices()) {
      const bool single = !find_intersecting_pair(g, v, l).has_value();
      for (int k = 0; k <= oracle.optimum + 1; ++k) {
        ++report.family_checks;
        const auto fam = falg(g, v, k, l);
        if (!verify_family_contract(g, v, k, l, fam)) {
          fail(CheckKind::Family, k, "family contract fails at vertex " + std::to_string(v));
        }
        if (single && fam.size() > 1) {
          fail(CheckKind::Family, k, "family without intersecting v-paths has " + std::to_string(fam.size()) + " members");
        }
      }
    }
  }
  return report;
}

CrossCheckReport cross_check(const SuiteSpec& spec) {
  CrossCheckReport report;
  for (int l : spec.l_values) {
    for (int n = 0; n <= spec.exhaustive_max_n; ++n) {
      exhaustive_graphs(n, [&](const Graph& g) { report.merge(check_instance(g, l, spec)); });
    }
    for (const auto& g : random_instances(spec, l)) report.merge(check_instance(g, l, spec));
    for (const auto& g : spec.instances) report.merge(check_instance(g, l, spec));
  }
  return report;
}

std::string describe(const CheckFailure& f) {
  std::ostringstream out;
  out << "l=" << f.l << " k=" << f.k << ": " << f.what << "\n" << f.instance;
  return out.str();
}

}  // namespace lpvc
