#include "lpvc/graph.hpp"

#include <algorithm>
#include <string>

#include "lpvc/detail/search.hpp"

namespace lpvc {

namespace {

[[noreturn]] void unknown_vertex(VertexId v) {
  throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

// Graph restricted to the vertices whose mask entry is zero.
Graph keep_unmasked(const Graph& g, const detail::Mask& removed) {
  std::vector<VertexId> kept;
  kept.reserve(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (!removed[i]) kept.push_back(g.label(i));
  }
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (removed[i]) continue;
    for (std::uint32_t j : g.adj(i)) {
      if (j > i && !removed[j]) edges.emplace_back(g.label(i), g.label(j));
    }
  }
  return Graph::from_edges(kept, edges);
}

}  // namespace

Graph::Graph(std::size_t n) : labels_(n), adj_(n) {
  for (std::size_t i = 0; i < n; ++i) labels_[i] = static_cast<VertexId>(i);
}

Graph Graph::from_edges(std::span<const VertexId> vertices, std::span<const Edge> edges) {
  Graph g;
  g.labels_.assign(vertices.begin(), vertices.end());
  std::sort(g.labels_.begin(), g.labels_.end());
  if (std::adjacent_find(g.labels_.begin(), g.labels_.end()) != g.labels_.end()) {
    throw std::invalid_argument("duplicate vertex label");
  }
  g.adj_.assign(g.labels_.size(), {});
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    const auto iu = g.index_of(u);
    const auto iv = g.index_of(v);
    g.adj_[iu].push_back(iv);
    g.adj_[iv].push_back(iu);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<VertexId> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<VertexId>(i);
  return from_edges(vs, edges);
}

void Graph::add_vertex(VertexId v) {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it != labels_.end() && *it == v) return;
  const auto pos = static_cast<std::uint32_t>(it - labels_.begin());
  labels_.insert(it, v);
  adj_.insert(adj_.begin() + pos, std::vector<std::uint32_t>{});
  if (pos + 1 == labels_.size()) return;
  for (auto& nbrs : adj_) {
    for (auto& w : nbrs) {
      if (w >= pos) ++w;
    }
  }
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  const auto iu = index_of(u);
  const auto iv = index_of(v);
  auto& nu = adj_[iu];
  auto it = std::lower_bound(nu.begin(), nu.end(), iv);
  if (it != nu.end() && *it == iv) {
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  nu.insert(it, iv);
  auto& nv = adj_[iv];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), iu), iu);
  ++edge_count_;
}

bool Graph::contains(VertexId v) const noexcept { return find_index(v).has_value(); }

std::optional<std::uint32_t> Graph::find_index(VertexId v) const noexcept {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) return std::nullopt;
  return static_cast<std::uint32_t>(it - labels_.begin());
}

std::uint32_t Graph::index_of(VertexId v) const {
  if (auto i = find_index(v)) return *i;
  unknown_vertex(v);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nu = adj_[index_of(u)];
  return std::binary_search(nu.begin(), nu.end(), index_of(v));
}

std::size_t Graph::degree(VertexId v) const { return adj_[index_of(v)].size(); }

VertexSet Graph::neighbors(VertexId v) const {
  VertexSet out;
  for (auto w : adj_[index_of(v)]) out.push_back(labels_[w]);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::uint32_t i = 0; i < order(); ++i) {
    for (auto j : adj_[i]) {
      if (j > i) out.emplace_back(labels_[i], labels_[j]);
    }
  }
  return out;
}

std::optional<VertexId> Graph::max_label() const noexcept {
  if (labels_.empty()) return std::nullopt;
  return labels_.back();
}

Graph induced_delete(const Graph& g, std::span<const VertexId> s) {
  return keep_unmasked(g, detail::mask_of(g, s));
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> s) {
  detail::Mask removed(g.order(), 1);
  for (auto v : s) removed[g.index_of(v)] = 0;
  return keep_unmasked(g, removed);
}

VertexSet component_of(const Graph& g, VertexId v) {
  const auto start = g.index_of(v);
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<std::uint32_t> stack{start};
  seen[start] = 1;
  VertexSet out;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    out.push_back(g.label(i));
    for (auto w : g.adj(i)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<std::uint8_t> assigned(g.order(), 0);
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    auto comp = component_of(g, g.label(i));
    for (auto v : comp) assigned[g.index_of(v)] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

bool enumerate_paths_from(const Graph& g, VertexId start, int max_vertices, const PathVisitor& visit) {
  auto used = detail::empty_mask(g);
  const auto s = g.index_of(start);
  if (max_vertices < 1) return true;
  used[s] = 1;
  detail::IndexPath path{s};
  Path labelled;
  auto emit = [&](const detail::IndexPath& p) {
    labelled.clear();
    for (auto i : p) labelled.push_back(g.label(i));
    return visit(labelled);
  };
  return detail::extend_paths(g, path, used, max_vertices, emit);
}

std::vector<Path> paths_from(const Graph& g, VertexId start, int max_vertices) {
  std::vector<Path> out;
  enumerate_paths_from(g, start, max_vertices, [&](const Path& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::optional<Path> find_l_path(const Graph& g, int l) {
  auto used = detail::empty_mask(g);
  auto found = detail::find_l_path(g, l, used);
  if (!found) return std::nullopt;
  Path out;
  for (auto i : *found) out.push_back(g.label(i));
  return out;
}

int longest_path_from(const Graph& g, VertexId v, int cap) {
  auto used = detail::empty_mask(g);
  const auto s = g.index_of(v);
  used[s] = 1;
  detail::IndexPath path{s};
  return detail::longest_extension(g, path, used, cap);
}

VertexSet make_vertex_set(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

namespace detail {

Mask mask_of(const Graph& g, std::span<const VertexId> blocked) {
  Mask m(g.order(), 0);
  for (auto v : blocked) m[g.index_of(v)] = 1;
  return m;
}

bool reach_length(const Graph& g, IndexPath& path, Mask& used, int target) {
  if (static_cast<int>(path.size()) >= target) return true;
  for (Index w : g.adj(path.back())) {
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    if (reach_length(g, path, used, target)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

int longest_extension(const Graph& g, IndexPath& path, Mask& used, int cap) {
  int best = std::min(static_cast<int>(path.size()), cap);
  if (best >= cap) return best;
  for (Index w : g.adj(path.back())) {
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    best = std::max(best, longest_extension(g, path, used, cap));
    path.pop_back();
    used[w] = 0;
    if (best >= cap) break;
  }
  return best;
}

std::optional<IndexPath> find_l_path(const Graph& g, int l, Mask& used) {
  if (l < 1) return IndexPath{};
  for (Index s = 0; s < g.order(); ++s) {
    if (used[s]) continue;
    used[s] = 1;
    IndexPath path{s};
    const bool found = reach_length(g, path, used, l);
    for (auto i : path) used[i] = 0;
    if (found) return path;
  }
  return std::nullopt;
}

bool has_v_path(const Graph& g, Index v, int l, Mask& used) {
  if (used[v]) return false;
  used[v] = 1;
  bool found = false;
  // Shorter arm first; the longer arm must then reach l-1-a further vertices.
  for (int a = 0; !found && 2 * a <= l - 1; ++a) {
    IndexPath left{v};
    auto on_left = [&](const IndexPath& lp) {
      if (static_cast<int>(lp.size()) != a + 1) return true;
      IndexPath right{v};
      if (reach_length(g, right, used, l - a)) {
        for (std::size_t i = 1; i < right.size(); ++i) used[right[i]] = 0;
        found = true;
        return false;
      }
      return true;
    };
    extend_paths(g, left, used, a + 1, on_left);
  }
  used[v] = 0;
  return found;
}

}  // namespace detail

}  // namespace lpvc
