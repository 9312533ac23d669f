#pragma once

// Construction of v,k-families: collections of v-hitting sets, each of size
// at most k, such that a yes-instance always has a small cover that either
// contains v or contains one of the sets entirely.

#include <vector>

#include "lpvc/graph.hpp"

namespace lpvc {

struct SearchStats;

/// Deduplicated collection of vertex sets in lexicographic order.
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<VertexSet> sets);

  void insert(VertexSet s);

  [[nodiscard]] const std::vector<VertexSet>& sets() const noexcept { return sets_; }
  [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
  [[nodiscard]] bool empty() const noexcept { return sets_.empty(); }
  [[nodiscard]] auto begin() const noexcept { return sets_.begin(); }
  [[nodiscard]] auto end() const noexcept { return sets_.end(); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  std::vector<VertexSet> sets_;
};

/// Recursive family construction. Rule firings (FR1, FR2, FR3, FB1) are
/// tallied into `stats` when it is non-null.
/// Throws std::invalid_argument for l outside 4..7 or unknown v.
[[nodiscard]] Family falg(const Graph& g, VertexId v, int k, int l, SearchStats* stats = nullptr);

/// Family for a graph whose v-paths pairwise do not intersect. All v-paths
/// then share one vertex set, so every vertex y of the canonical path other
/// than v is a v-hitting set on its own. Vertex x dominates y when every
/// l-path through y contains x. The family holds one singleton per maximal
/// dominance class, the lowest-alpha member of the class (ties by label).
/// That is a single set unless no vertex dominates all the others. Empty for k < 1.
/// Throws ContractViolation if an intersecting pair exists or there is no v-path.
[[nodiscard]] Family structured_family(const Graph& g, VertexId v, int k, int l);

/// Capped length (in vertices, at most l) of the longest path in G - X that
/// starts with the last two vertices of the canonical path, walked backwards.
/// 0 if the last vertex is in X, 1 if only the one before it is.
/// Throws ContractViolation if `canonical` is not a canonical v-path of g.
[[nodiscard]] int alpha(const Graph& g, VertexId v, const Path& canonical, const VertexSet& x, int l);

/// True iff `canonical` is a v-path of g whose offset p of v is as small as
/// any path on the same vertex set allows, with p <= (l-1)/2.
[[nodiscard]] bool is_canonical_v_path(const Graph& g, VertexId v, const Path& path, int l);

/// Exhaustive check of both family conditions. For test use on small graphs.
/// Throws ResourceLimit above kFamilyCheckMaxVertices vertices.
[[nodiscard]] bool verify_family_contract(const Graph& g, VertexId v, int k, int l, const Family& f);

inline constexpr std::size_t kFamilyCheckMaxVertices = 16;

/// Number of components of G_v - V(P) with an l-path that attach to some
/// vertex of P other than its far end and violate the single-attachment
/// shape (the attachment is x_1 through exactly one vertex y lying on every
/// l-path of the component). Diagnostic only; the construction does not rely on it.
[[nodiscard]] int far_end_attachment_violations(const Graph& g, VertexId v, const Path& canonical, int l);

}  // namespace lpvc
