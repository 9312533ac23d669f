#include "lpvc/family.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "lpvc/detail/search.hpp"
#include "lpvc/oracle.hpp"
#include "lpvc/stats.hpp"
#include "lpvc/vpath.hpp"

namespace lpvc {

namespace {

void check_l(int l) {
  if (l < 4 || l > 7) throw std::invalid_argument("family construction needs l in 4..7, got " + std::to_string(l));
}

void fire(SearchStats* stats, Rule r) {
  if (stats) stats->fire(r);
}

// Alpha for a path already known to be canonical.
int alpha_unchecked(const Graph& g, const Path& path, const VertexSet& x, int l) {
  const VertexId far_end = path[static_cast<std::size_t>(l - 1)];
  const VertexId before = path[static_cast<std::size_t>(l - 2)];
  if (set_contains(x, far_end)) return 0;
  if (set_contains(x, before)) return 1;
  auto used = detail::mask_of(g, x);
  detail::IndexPath stub{g.index_of(far_end), g.index_of(before)};
  for (auto i : stub) used[i] = 1;
  return detail::longest_extension(g, stub, used, l);
}

// For each y in `pool`, the members of `pool` that lie on every l-path through y.
std::vector<VertexSet> dominators(const Graph& g, const VertexSet& pool, int l) {
  std::vector<VertexSet> out;
  out.reserve(pool.size());
  auto used = detail::empty_mask(g);
  for (auto y : pool) {
    VertexSet common = pool;
    detail::for_each_v_path(g, g.index_of(y), l, used, [&](const detail::IndexPath& q) {
      VertexSet on_q;
      for (auto i : q) on_q.push_back(g.label(i));
      common = set_intersection(common, make_vertex_set(std::move(on_q)));
      return common.size() > 1;
    });
    out.push_back(std::move(common));
  }
  return out;
}

Family structured_unchecked(const Graph& g, VertexId v, int k, int l) {
  if (k < 1) return {};
  const auto path = *canonical_v_path(g, v, l);
  VertexSet pool = make_vertex_set(path);
  pool.erase(std::find(pool.begin(), pool.end(), v));
  const auto dom = dominators(g, pool, l);
  auto dominates = [&](std::size_t x, std::size_t y) { return set_contains(dom[y], pool[x]); };

  std::vector<std::size_t> order(pool.size());
  std::vector<int> alphas(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    order[i] = i;
    alphas[i] = alpha_unchecked(g, path, VertexSet{pool[i]}, l);
  }
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return alphas[a] < alphas[b]; });

  // One representative, best alpha first, per maximal dominance class.
  Family out;
  std::vector<bool> covered(pool.size(), false);
  for (auto x : order) {
    bool maximal = true;
    for (std::size_t z = 0; z < pool.size() && maximal; ++z) {
      if (dominates(z, x) && !dominates(x, z)) maximal = false;
    }
    if (!maximal || covered[x]) continue;
    out.insert(VertexSet{pool[x]});
    for (std::size_t y = 0; y < pool.size(); ++y) {
      if (dominates(x, y)) covered[y] = true;
    }
  }
  return out;
}

Family falg_rec(const Graph& g, VertexId v, int k, int l, SearchStats* stats) {
  if (k < 0) {
    fire(stats, Rule::FR1);
    return {};
  }
  if (!has_v_path(g, v, l)) {
    fire(stats, Rule::FR2);
    return Family({VertexSet{}});
  }
  const auto pair = find_intersecting_pair(g, v, l);
  if (!pair) {
    fire(stats, Rule::FR3);
    return structured_unchecked(g, v, k, l);
  }
  fire(stats, Rule::FB1);

  const auto first = make_vertex_set(pair->first);
  const auto second = make_vertex_set(pair->second);
  const VertexSet just_v{v};
  Family out;
  for (auto a : set_difference(set_intersection(first, second), just_v)) {
    const VertexSet removed{a};
    for (const auto& x : falg_rec(induced_delete(g, removed), v, k - 1, l, stats)) {
      out.insert(set_union(x, removed));
    }
  }
  const auto only_first = set_difference(first, set_union(second, just_v));
  const auto only_second = set_difference(second, set_union(first, just_v));
  for (auto a : only_first) {
    for (auto b : only_second) {
      const auto removed = make_vertex_set({a, b});
      for (const auto& x : falg_rec(induced_delete(g, removed), v, k - 2, l, stats)) {
        out.insert(set_union(x, removed));
      }
    }
  }
  return out;
}

}  // namespace

Family::Family(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
  for (auto& s : sets_) s = make_vertex_set(std::move(s));
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

void Family::insert(VertexSet s) {
  s = make_vertex_set(std::move(s));
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) sets_.insert(it, std::move(s));
}

Family falg(const Graph& g, VertexId v, int k, int l, SearchStats* stats) {
  check_l(l);
  (void)g.index_of(v);
  return falg_rec(g, v, k, l, stats);
}

Family structured_family(const Graph& g, VertexId v, int k, int l) {
  check_l(l);
  if (!has_v_path(g, v, l)) throw ContractViolation("structured_family needs at least one v-path");
  if (find_intersecting_pair(g, v, l)) throw ContractViolation("structured_family needs pairwise non-intersecting v-paths");
  return structured_unchecked(g, v, k, l);
}

bool is_canonical_v_path(const Graph& g, VertexId v, const Path& path, int l) {
  if (static_cast<int>(path.size()) != l) return false;
  const auto vs = make_vertex_set(path);
  if (vs.size() != path.size()) return false;
  for (auto u : path) {
    if (!g.contains(u)) return false;
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.adjacent(path[i - 1], path[i])) return false;
  }
  if (!set_contains(vs, v)) return false;
  const int p = offset_of(path, v);
  if (p > (l - 1) / 2) return false;
  // Every ordering of V(P) that forms a path is a v-path of G[V(P)].
  const auto host = induced_subgraph(g, vs);
  for (const auto& other : enumerate_v_paths(host, v, l)) {
    const int pos = offset_of(other, v);
    if (std::min(pos, l - 1 - pos) < p) return false;
  }
  return true;
}

int alpha(const Graph& g, VertexId v, const Path& canonical, const VertexSet& x, int l) {
  check_l(l);
  if (!is_canonical_v_path(g, v, canonical, l)) throw ContractViolation("alpha needs a canonical v-path");
  if (!is_v_hitting_set(g, v, l, x)) throw ContractViolation("alpha needs a v-hitting set");
  return alpha_unchecked(g, canonical, x, l);
}

bool verify_family_contract(const Graph& g, VertexId v, int k, int l, const Family& f) {
  if (g.order() > kFamilyCheckMaxVertices) {
    throw ResourceLimit("family check is limited to " + std::to_string(kFamilyCheckMaxVertices) + " vertices");
  }
  const SmallGraph sg(g, kFamilyCheckMaxVertices);
  using Bits = SmallGraph::Bits;
  const Bits everything = sg.all();
  const int vb = sg.bit_of(v);
  const Bits v_bit = Bits{1} << vb;
  const Bits comp = sg.component(everything, vb);

  std::vector<Bits> members;
  for (const auto& a : f) {
    if (static_cast<int>(a.size()) > k) return false;
    for (auto u : a) {
      if (!g.contains(u)) return false;
    }
    const Bits bits = sg.bits_of(a);
    if ((bits & v_bit) || (bits & ~comp)) return false;
    if (sg.has_l_path_through(everything & ~bits, vb, l)) return false;
    members.push_back(bits);
  }

  if (k < 0) return true;
  bool any_cover = false;
  for (Bits s = 0; s <= everything; ++s) {
    if (std::popcount(s) > k) continue;
    if (sg.has_l_path(everything & ~s, l)) continue;
    any_cover = true;
    if (s & v_bit) return true;
    for (Bits a : members) {
      if ((a & s) == a) return true;
    }
    if (s == everything) break;
  }
  return !any_cover;
}

int far_end_attachment_violations(const Graph& g, VertexId v, const Path& canonical, int l) {
  const auto on_path = make_vertex_set(canonical);
  const VertexId far_end = canonical.back();
  const int p = offset_of(canonical, v);
  const VertexId x1 = canonical[static_cast<std::size_t>(p + 1)];
  const auto g_v = induced_subgraph(g, component_of(g, v));
  const auto rest = induced_delete(g_v, on_path);

  int violations = 0;
  for (const auto& comp : components(rest)) {
    const auto sub = induced_subgraph(rest, comp);
    if (!has_l_path(sub, l)) continue;
    VertexSet attached;
    for (auto x : on_path) {
      if (x == far_end) continue;
      for (auto y : g.neighbors(x)) {
        if (set_contains(comp, y)) {
          attached.push_back(x);
          break;
        }
      }
    }
    if (attached.empty()) continue;
    if (l <= 6 || attached != VertexSet{x1}) {
      ++violations;
      continue;
    }
    VertexSet into;
    for (auto y : g.neighbors(x1)) {
      if (set_contains(comp, y)) into.push_back(y);
    }
    if (into.size() != 1 || has_l_path(induced_delete(sub, into), l)) ++violations;
  }
  return violations;
}

}  // namespace lpvc
