#include "lpvc/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lpvc/detail/search.hpp"
#include "lpvc/family.hpp"
#include "lpvc/vpath.hpp"

namespace lpvc {

namespace {

void check_paper_l(int l) {
  if (l < 4 || l > 7) throw std::invalid_argument("the branching algorithm supports l in 4..7, got " + std::to_string(l));
}

void check_baseline_l(int l) {
  if (l < 2 || l > 7) throw std::invalid_argument("l must be in 2..7, got " + std::to_string(l));
}

// Longest path from the pendant side must stay below l once R5 has failed,
// so any cap of at least l suffices.
constexpr int kPendantCap = 8;

bool has_l_path_within(const Graph& g, const VertexSet& part, int l) {
  detail::Mask blocked(g.order(), 1);
  for (auto u : part) blocked[g.index_of(u)] = 0;
  return detail::find_l_path(g, l, blocked).has_value();
}

NodeStep step_at(const Graph& g, int k, int l, Mutation mutation) {
  NodeStep step;
  if (k < 0) {
    step.rule = Rule::R1;
    return step;
  }
  if (g.empty()) {
    step.rule = Rule::R2;
    return step;
  }

  auto used = detail::empty_mask(g);
  for (detail::Index i = 0; i < g.order(); ++i) {
    if (!detail::has_v_path(g, i, l, used)) {
      step.rule = Rule::R3;
      step.pivot = g.label(i);
      step.next = induced_delete(g, VertexSet{g.label(i)});
      step.next_k = k;
      return step;
    }
  }

  const auto comps = components(g);
  for (const auto& comp : comps) {
    for (auto v : comp) {
      detail::Mask blocked(g.order(), 1);
      for (auto u : comp) blocked[g.index_of(u)] = 0;
      blocked[g.index_of(v)] = 1;
      if (!detail::find_l_path(g, l, blocked)) {
        step.rule = Rule::R4;
        step.pivot = v;
        step.next = induced_delete(g, comp);
        step.next_k = mutation == Mutation::FreeComponentDeletion ? k : k - 1;
        return step;
      }
    }
  }

  detail::Index best = 0;
  for (detail::Index i = 1; i < g.order(); ++i) {
    if (g.adj(i).size() > g.adj(best).size()) best = i;
  }
  const VertexId v = g.label(best);
  step.pivot = v;

  const auto report = classify_beta(g, v, l);
  switch (report.beta_class) {
    case BetaClass::NoVPaths:
      throw std::logic_error("pivot without v-paths after vertex reductions");
    case BetaClass::One:
      step.rule = Rule::B1;
      return step;
    case BetaClass::ThreePlus:
      step.rule = Rule::B3;
      return step;
    case BetaClass::Two:
      break;
  }

  auto around = component_of(g, v);
  around.erase(std::find(around.begin(), around.end(), v));
  const auto parts = components(induced_subgraph(g, around));
  auto part_of = [&](VertexId w) -> const VertexSet& {
    for (const auto& p : parts) {
      if (set_contains(p, w)) return p;
    }
    throw std::logic_error("hitting vertex outside C_v");
  };
  const auto& w = *report.witness;
  const bool long1 = has_l_path_within(g, part_of(w[0]), l);
  const bool long2 = has_l_path_within(g, part_of(w[1]), l);
  if (long1 || long2) {
    step.rule = Rule::B2;
    step.hitter = long1 ? w[0] : w[1];
    return step;
  }

  const VertexSet* c0 = nullptr;
  for (const auto& p : parts) {
    if (!has_l_path_within(g, p, l)) continue;
    if (c0) throw std::logic_error("more than one component of G_v - v holds an l-path");
    c0 = &p;
  }
  if (!c0) throw std::logic_error("no component of G_v - v holds an l-path");

  auto blocked = detail::mask_of(g, *c0);
  if (detail::has_v_path(g, best, l, blocked)) {
    step.rule = Rule::R5;
    step.next = induced_delete(g, VertexSet{v});
    step.next_k = k - 1;
    return step;
  }
  step.rule = Rule::R5b;
  step.next = pendant_rewrite(g, v, *c0);
  step.next_k = k;
  return step;
}

class PaperSearch {
 public:
  PaperSearch(int l, Mutation mutation, SearchStats& stats) : l_(l), mutation_(mutation), stats_(stats) {}

  bool solve(const Graph& g, int k, std::uint32_t depth) {
    ++stats_.nodes_total;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    auto step = step_at(g, k, l_, mutation_);
    stats_.fire(step.rule);
    switch (step.rule) {
      case Rule::R1:
        ++stats_.leaves;
        return false;
      case Rule::R2:
        ++stats_.leaves;
        return true;
      case Rule::R3:
      case Rule::R4:
      case Rule::R5:
      case Rule::R5b:
        return solve(*step.next, step.next_k, depth + 1);
      default:
        break;
    }

    const VertexId v = *step.pivot;
    bool yes = false;
    std::uint64_t children = 0;
    auto branch = [&](const VertexSet& removed) {
      ++children;
      return solve(induced_delete(g, removed), k - static_cast<int>(removed.size()), depth + 1);
    };

    if (step.rule == Rule::B3 && mutation_ != Mutation::SkipPivotBranch) {
      yes = branch(VertexSet{v});
    }
    if (!yes) {
      for (const auto& a : falg(g, v, k, l_, &stats_)) {
        if ((yes = branch(a))) break;
      }
    }
    if (!yes && step.rule == Rule::B2) {
      const VertexSet pivot{v};
      const auto without = induced_delete(g, pivot);
      for (const auto& s : falg(without, *step.hitter, k - 1, l_, &stats_)) {
        if ((yes = branch(set_union(s, pivot)))) break;
      }
    }
    if (children == 0) ++stats_.leaves;
    return yes;
  }

 private:
  int l_;
  Mutation mutation_;
  SearchStats& stats_;
};

class BaselineSearch {
 public:
  BaselineSearch(const Graph& g, int l, SearchStats& stats) : g_(g), l_(l), stats_(stats), removed_(g.order(), 0) {}

  bool solve(int k, std::uint32_t depth) {
    ++stats_.nodes_total;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (k < 0) {
      ++stats_.leaves;
      return false;
    }
    const auto path = detail::find_l_path(g_, l_, removed_);
    if (!path) {
      ++stats_.leaves;
      return true;
    }
    for (auto i : *path) {
      removed_[i] = 1;
      const bool yes = solve(k - 1, depth + 1);
      removed_[i] = 0;
      if (yes) return true;
    }
    return false;
  }

 private:
  const Graph& g_;
  int l_;
  SearchStats& stats_;
  detail::Mask removed_;
};

}  // namespace

Graph pendant_rewrite(const Graph& g, VertexId v, const VertexSet& c0) {
  const auto cv = component_of(g, v);
  const auto keep_side = set_difference(cv, c0);
  const int longest = longest_path_from(induced_subgraph(g, keep_side), v, kPendantCap);
  const auto side = set_difference(keep_side, VertexSet{v});

  Graph out = induced_delete(g, side);
  VertexId next = *g.max_label() + 1;
  VertexId prev = v;
  for (int i = 0; i < longest - 1; ++i, ++next) {
    out.add_vertex(next);
    out.add_edge(prev, next);
    prev = next;
  }
  return out;
}

NodeStep first_step(const Graph& g, int k, int l) {
  check_paper_l(l);
  return step_at(g, k, l, Mutation::None);
}

SolveResult lpvc_paper(const Graph& g, int k, int l, const SolveOptions& opts) {
  check_paper_l(l);
  SolveResult result;
  PaperSearch search(l, opts.mutation, result.stats);
  result.yes = search.solve(g, k, 0);
  if (result.yes && opts.certificate) {
    const int ll = l;
    const auto mutation = opts.mutation;
    result.certificate = extract_certificate(g, k, l, [ll, mutation](const Graph& h, int kk) {
      SearchStats scratch;
      PaperSearch inner(ll, mutation, scratch);
      return inner.solve(h, kk, 0);
    });
  }
  return result;
}

SolveResult lpvc_baseline(const Graph& g, int k, int l, const SolveOptions& opts) {
  check_baseline_l(l);
  SolveResult result;
  BaselineSearch search(g, l, result.stats);
  result.yes = search.solve(k, 0);
  if (result.yes && opts.certificate) result.certificate = extract_certificate(g, k, l, decider(Algorithm::Baseline, l));
  return result;
}

bool verify_cover(const Graph& g, const VertexSet& s, int l) {
  auto blocked = detail::mask_of(g, s);
  return !detail::find_l_path(g, l, blocked).has_value();
}

DecisionProcedure decider(Algorithm algo, int l) {
  if (algo == Algorithm::Paper) {
    check_paper_l(l);
    return [l](const Graph& h, int k) { return lpvc_paper(h, k, l).yes; };
  }
  check_baseline_l(l);
  return [l](const Graph& h, int k) { return lpvc_baseline(h, k, l).yes; };
}

std::optional<VertexSet> extract_certificate(const Graph& g, int k, int l, const DecisionProcedure& decide) {
  if (!decide(g, k)) return std::nullopt;
  VertexSet cover;
  Graph current = g;
  int budget = k;
  while (auto path = find_l_path(current, l)) {
    // Some vertex of any l-path lies in every cover, so one of these succeeds.
    bool committed = false;
    for (auto x : make_vertex_set(*path)) {
      auto next = induced_delete(current, VertexSet{x});
      if (decide(next, budget - 1)) {
        cover.push_back(x);
        current = std::move(next);
        --budget;
        committed = true;
        break;
      }
    }
    if (!committed) throw std::logic_error("decision procedure is not self-consistent");
  }
  return make_vertex_set(std::move(cover));
}

}  // namespace lpvc
