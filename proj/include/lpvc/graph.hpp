#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpvc {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<VertexId>;

/// Ordered sequence of distinct vertex labels, consecutive entries adjacent.
using Path = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

/// Raised when an operation's documented precondition does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an exhaustive routine is asked to handle an instance beyond its size guard.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph over stable vertex labels.
///
/// Vertices are kept sorted by label and addressed internally by their
/// position in that order (the "index"). Neighbor lists hold indices and
/// are sorted, so iteration order over neighbors is ascending by label.
/// Deletion produces a new graph that keeps the surviving labels.
class Graph {
 public:
  Graph() = default;

  /// Graph on labels 0..n-1 with no edges.
  explicit Graph(std::size_t n);

  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// endpoints that are not listed in `vertices`.
  static Graph from_edges(std::span<const VertexId> vertices, std::span<const Edge> edges);

  /// Graph on labels 0..n-1.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// No-op if the label already exists.
  void add_vertex(VertexId v);
  /// Throws std::invalid_argument for self-loops, duplicates or unknown endpoints.
  void add_edge(VertexId u, VertexId v);

  [[nodiscard]] std::size_t order() const noexcept { return labels_.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }
  [[nodiscard]] bool empty() const noexcept { return labels_.empty(); }

  [[nodiscard]] std::span<const VertexId> vertices() const noexcept { return labels_; }
  [[nodiscard]] bool contains(VertexId v) const noexcept;
  [[nodiscard]] bool adjacent(VertexId u, VertexId v) const;
  [[nodiscard]] std::size_t degree(VertexId v) const;
  [[nodiscard]] VertexSet neighbors(VertexId v) const;
  /// Edges as (smaller, larger) label pairs in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;
  /// Largest label, or nullopt for the empty graph.
  [[nodiscard]] std::optional<VertexId> max_label() const noexcept;

  // Index-level access used by the search routines.
  [[nodiscard]] std::optional<std::uint32_t> find_index(VertexId v) const noexcept;
  /// Throws std::invalid_argument for unknown labels.
  [[nodiscard]] std::uint32_t index_of(VertexId v) const;
  [[nodiscard]] VertexId label(std::uint32_t i) const noexcept { return labels_[i]; }
  [[nodiscard]] std::span<const std::uint32_t> adj(std::uint32_t i) const noexcept { return adj_[i]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexId> labels_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::size_t edge_count_ = 0;
};

/// G - S. Throws std::invalid_argument if S names an unknown vertex.
[[nodiscard]] Graph induced_delete(const Graph& g, std::span<const VertexId> s);

/// G[S]. Throws std::invalid_argument if S names an unknown vertex.
[[nodiscard]] Graph induced_subgraph(const Graph& g, std::span<const VertexId> s);

/// Connected component containing v. Throws std::invalid_argument for unknown v.
[[nodiscard]] VertexSet component_of(const Graph& g, VertexId v);

/// Partition into connected components, ordered by smallest label.
[[nodiscard]] std::vector<VertexSet> components(const Graph& g);

/// Callback for path streams; return false to stop the enumeration.
using PathVisitor = std::function<bool(const Path&)>;

/// Streams every simple path that starts at `start` and has at most
/// `max_vertices` vertices, in depth-first order with neighbors visited by
/// ascending label. Returns false if the visitor stopped the stream.
bool enumerate_paths_from(const Graph& g, VertexId start, int max_vertices, const PathVisitor& visit);

/// Collecting form of enumerate_paths_from.
[[nodiscard]] std::vector<Path> paths_from(const Graph& g, VertexId start, int max_vertices);

/// First simple path with exactly l vertices, scanning starts by ascending label.
[[nodiscard]] std::optional<Path> find_l_path(const Graph& g, int l);

[[nodiscard]] inline bool has_l_path(const Graph& g, int l) { return find_l_path(g, l).has_value(); }

/// min(cap, vertex count of the longest simple path starting at v).
[[nodiscard]] int longest_path_from(const Graph& g, VertexId v, int cap);

/// Sorted, deduplicated copy.
[[nodiscard]] VertexSet make_vertex_set(std::vector<VertexId> v);

[[nodiscard]] VertexSet set_union(const VertexSet& a, const VertexSet& b);
[[nodiscard]] VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
[[nodiscard]] VertexSet set_difference(const VertexSet& a, const VertexSet& b);
[[nodiscard]] bool set_contains(const VertexSet& s, VertexId v);
[[nodiscard]] bool is_subset(const VertexSet& sub, const VertexSet& super);

}  // namespace lpvc
