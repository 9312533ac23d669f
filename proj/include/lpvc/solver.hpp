#pragma once

#include <functional>
#include <optional>

#include "lpvc/graph.hpp"
#include "lpvc/stats.hpp"

namespace lpvc {

enum class Algorithm { Paper, Baseline };

struct SolveResult {
  bool yes = false;
  /// Present only when requested and the answer is yes.
  std::optional<VertexSet> certificate;
  SearchStats stats;
};

/// Deliberate faults for checking that the cross-check harness notices them.
enum class Mutation {
  None,
  /// The component-deletion reduction forgets to charge for the deleted vertex.
  FreeComponentDeletion,
  /// B3 forgets the branch that puts the pivot into the cover.
  SkipPivotBranch,
};

struct SolveOptions {
  bool certificate = false;
  Mutation mutation = Mutation::None;
};

/// Branching algorithm with reduction rules R1-R5b and branching rules
/// B1-B3 on top of v,k-families. Throws std::invalid_argument for l outside 4..7.
[[nodiscard]] SolveResult lpvc_paper(const Graph& g, int k, int l, const SolveOptions& opts = {});

/// Generic branching on the vertices of an l-path. Accepts l in 2..7.
[[nodiscard]] SolveResult lpvc_baseline(const Graph& g, int k, int l, const SolveOptions& opts = {});

/// True iff G - S has no l-path. Throws std::invalid_argument for unknown vertices.
[[nodiscard]] bool verify_cover(const Graph& g, const VertexSet& s, int l);

using DecisionProcedure = std::function<bool(const Graph&, int k)>;

[[nodiscard]] DecisionProcedure decider(Algorithm algo, int l);

/// Cover of size at most k built by self-reduction with `decide`, or nullopt
/// if `decide` rejects (g, k).
[[nodiscard]] std::optional<VertexSet> extract_certificate(const Graph& g, int k, int l, const DecisionProcedure& decide);

/// Graph produced by the R5b rewrite at pivot v: C_v \ (C0 + v) is replaced
/// by a pendant path hanging off v with one vertex fewer than the longest
/// path from v in G_v - C0. Fresh labels start above g's largest label.
[[nodiscard]] Graph pendant_rewrite(const Graph& g, VertexId v, const VertexSet& c0);

/// The rule the branching algorithm applies at the root of (g, k).
/// For single-child reductions (R3, R4, R5, R5b) `next` holds the reduced
/// instance; for branching rules `pivot` is the chosen vertex and, under B2,
/// `hitter` is the vertex w_i whose family is built in G - pivot.
struct NodeStep {
  Rule rule = Rule::R1;
  std::optional<VertexId> pivot;
  std::optional<VertexId> hitter;
  std::optional<Graph> next;
  int next_k = 0;
};

/// Throws std::invalid_argument for l outside 4..7.
[[nodiscard]] NodeStep first_step(const Graph& g, int k, int l);

}  // namespace lpvc
