#include "lpvc/oracle.hpp"

#include <bit>
#include <string>

namespace lpvc {

namespace {

using Bits = SmallGraph::Bits;

// Calls test(mask) for every subset of `pool` with exactly `size` bits, in
// lexicographic order of the sorted bit positions. Stops when test returns true.
template <class Test>
bool for_each_subset(const std::vector<int>& pool, int size, Test&& test) {
  const int n = static_cast<int>(pool.size());
  if (size > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Bits mask = 0;
    for (int i : idx) mask |= Bits{1} << pool[i];
    if (test(mask)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class Feasible>
OracleResult minimum_subset(const SmallGraph& sg, const std::vector<int>& pool, bool all, Feasible&& feasible) {
  OracleResult out;
  for (int size = 0; size <= static_cast<int>(pool.size()); ++size) {
    std::vector<VertexSet> found;
    for_each_subset(pool, size, [&](Bits m) {
      if (!feasible(m)) return false;
      found.push_back(sg.set_of(m));
      return !all;
    });
    if (!found.empty()) {
      out.optimum = size;
      out.one_witness = found.front();
      if (all) out.all_minimum_witnesses = std::move(found);
      return out;
    }
  }
  // Unreachable: the whole pool is always feasible.
  throw std::logic_error("no feasible subset");
}

}  // namespace

SmallGraph::SmallGraph(const Graph& g, std::size_t max_vertices) {
  if (g.order() > max_vertices || g.order() > 32) {
    throw ResourceLimit("instance has " + std::to_string(g.order()) + " vertices; limit is " +
                        std::to_string(std::min<std::size_t>(max_vertices, 32)));
  }
  labels_.assign(g.vertices().begin(), g.vertices().end());
  adj_.assign(labels_.size(), 0);
  for (const auto& [u, v] : g.edges()) {
    const int a = bit_of(u);
    const int b = bit_of(v);
    adj_[a] |= Bits{1} << b;
    adj_[b] |= Bits{1} << a;
  }
}

Bits SmallGraph::all() const noexcept {
  return labels_.size() == 32 ? ~Bits{0} : (Bits{1} << labels_.size()) - 1;
}

int SmallGraph::bit_of(VertexId v) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == v) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

Bits SmallGraph::bits_of(const VertexSet& s) const {
  Bits b = 0;
  for (auto v : s) b |= Bits{1} << bit_of(v);
  return b;
}

VertexSet SmallGraph::set_of(Bits b) const {
  VertexSet out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (b & (Bits{1} << i)) out.push_back(labels_[i]);
  }
  return out;
}

bool SmallGraph::grow(Bits alive, Bits visited, int last, int remaining, int through) const {
  if (remaining == 0) return through < 0 || (visited >> through & 1U);
  Bits next = adj_[last] & alive & ~visited;
  while (next) {
    const int w = std::countr_zero(next);
    next &= next - 1;
    if (grow(alive, visited | (Bits{1} << w), w, remaining - 1, through)) return true;
  }
  return false;
}

bool SmallGraph::has_l_path(Bits alive, int l) const {
  for (int s = 0; s < order(); ++s) {
    if (!(alive >> s & 1U)) continue;
    if (grow(alive, Bits{1} << s, s, l - 1, -1)) return true;
  }
  return false;
}

bool SmallGraph::has_l_path_through(Bits alive, int v, int l) const {
  if (!(alive >> v & 1U)) return false;
  for (int s = 0; s < order(); ++s) {
    if (!(alive >> s & 1U)) continue;
    if (grow(alive, Bits{1} << s, s, l - 1, v)) return true;
  }
  return false;
}

Bits SmallGraph::component(Bits alive, int v) const {
  Bits seen = Bits{1} << v;
  Bits frontier = seen;
  while (frontier) {
    const int u = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Bits fresh = adj_[u] & alive & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

OracleResult brute_min_cover(const Graph& g, int l, bool all_witnesses) {
  const SmallGraph sg(g);
  std::vector<int> pool;
  for (int i = 0; i < sg.order(); ++i) pool.push_back(i);
  const Bits everything = sg.all();
  return minimum_subset(sg, pool, all_witnesses,
                        [&](Bits removed) { return !sg.has_l_path(everything & ~removed, l); });
}

OracleResult brute_min_v_hitting(const Graph& g, VertexId v, int l, bool all_witnesses) {
  const SmallGraph sg(g);
  const int vb = sg.bit_of(v);
  const Bits everything = sg.all();
  const Bits comp = sg.component(everything, vb);
  std::vector<int> pool;
  for (int i = 0; i < sg.order(); ++i) {
    if (i != vb && (comp >> i & 1U)) pool.push_back(i);
  }
  return minimum_subset(sg, pool, all_witnesses,
                        [&](Bits removed) { return !sg.has_l_path_through(everything & ~removed, vb, l); });
}

}  // namespace lpvc
