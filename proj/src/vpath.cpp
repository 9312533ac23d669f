#include "lpvc/vpath.hpp"

#include <algorithm>

#include "lpvc/detail/search.hpp"

namespace lpvc {

namespace {

Path to_labels(const Graph& g, const detail::IndexPath& p) {
  Path out;
  out.reserve(p.size());
  for (auto i : p) out.push_back(g.label(i));
  return out;
}

// Sorted index set of a path, for vertex-set comparisons.
detail::IndexPath sorted_copy(const detail::IndexPath& p) {
  auto s = p;
  std::sort(s.begin(), s.end());
  return s;
}

std::size_t common_count(const detail::IndexPath& a, const detail::IndexPath& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

const char* to_string(BetaClass c) noexcept {
  switch (c) {
    case BetaClass::NoVPaths: return "NO_VPATHS";
    case BetaClass::One: return "ONE";
    case BetaClass::Two: return "TWO";
    case BetaClass::ThreePlus: return "THREE_PLUS";
  }
  return "?";
}

std::vector<Path> enumerate_v_paths(const Graph& g, VertexId v, int l) {
  std::vector<Path> out;
  auto used = detail::empty_mask(g);
  detail::for_each_v_path(g, g.index_of(v), l, used, [&](const detail::IndexPath& p) {
    out.push_back(to_labels(g, p));
    return true;
  });
  return out;
}

bool has_v_path(const Graph& g, VertexId v, int l) {
  auto used = detail::empty_mask(g);
  return detail::has_v_path(g, g.index_of(v), l, used);
}

std::optional<std::pair<Path, Path>> find_intersecting_pair(const Graph& g, VertexId v, int l) {
  struct Seen {
    detail::IndexPath vertex_set;
    detail::IndexPath path;
  };
  std::vector<Seen> seen;
  std::optional<std::pair<Path, Path>> result;
  auto used = detail::empty_mask(g);
  detail::for_each_v_path(g, g.index_of(v), l, used, [&](const detail::IndexPath& p) {
    auto vs = sorted_copy(p);
    bool known = false;
    for (const auto& s : seen) {
      if (s.vertex_set == vs) {
        known = true;
        continue;
      }
      // v itself is always shared.
      if (common_count(s.vertex_set, vs) >= 2) {
        result.emplace(to_labels(g, s.path), to_labels(g, p));
        return false;
      }
    }
    if (!known) seen.push_back({std::move(vs), p});
    return true;
  });
  return result;
}

int offset_of(const Path& path, VertexId v) {
  auto it = std::find(path.begin(), path.end(), v);
  if (it == path.end()) throw ContractViolation("vertex is not on the path");
  return static_cast<int>(it - path.begin());
}

std::optional<Path> canonical_v_path(const Graph& g, VertexId v, int l) {
  std::optional<Path> best;
  int best_p = l;
  auto used = detail::empty_mask(g);
  const auto vi = g.index_of(v);
  detail::for_each_v_path(g, vi, l, used, [&](const detail::IndexPath& p) {
    const int pos = static_cast<int>(std::find(p.begin(), p.end(), vi) - p.begin());
    const int off = std::min(pos, l - 1 - pos);
    if (off < best_p) {
      best_p = off;
      best = to_labels(g, p);
      if (pos != off) std::reverse(best->begin(), best->end());
    }
    return best_p > 0;
  });
  return best;
}

bool is_v_hitting_set(const Graph& g, VertexId v, int l, const VertexSet& x) {
  if (set_contains(x, v)) throw std::invalid_argument("a v-hitting set cannot contain v");
  const auto comp = component_of(g, v);
  if (!is_subset(x, comp)) return false;
  auto used = detail::mask_of(g, x);
  return !detail::has_v_path(g, g.index_of(v), l, used);
}

VPathReport classify_beta(const Graph& g, VertexId v, int l) {
  const auto vi = g.index_of(v);
  auto used = detail::empty_mask(g);
  if (!detail::has_v_path(g, vi, l, used)) return {BetaClass::NoVPaths, std::nullopt};

  VertexSet candidates = component_of(g, v);
  candidates.erase(std::find(candidates.begin(), candidates.end(), v));

  for (auto w : candidates) {
    const auto wi = g.index_of(w);
    used[wi] = 1;
    const bool hit = !detail::has_v_path(g, vi, l, used);
    used[wi] = 0;
    if (hit) return {BetaClass::One, VertexSet{w}};
  }

  // No singleton works, so in a hitting pair {w1, w2} the vertex w2 must lie
  // on every v-path of G - w1; it suffices to try the vertices of one such path.
  for (auto w1 : candidates) {
    const auto i1 = g.index_of(w1);
    used[i1] = 1;
    std::optional<detail::IndexPath> witness_path;
    detail::for_each_v_path(g, vi, l, used, [&](const detail::IndexPath& p) {
      witness_path = p;
      return false;
    });
    VertexSet partners;
    for (auto i : *witness_path) {
      const auto w = g.label(i);
      if (w > w1 && i != vi) partners.push_back(w);
    }
    std::sort(partners.begin(), partners.end());
    for (auto w2 : partners) {
      const auto i2 = g.index_of(w2);
      used[i2] = 1;
      const bool hit = !detail::has_v_path(g, vi, l, used);
      used[i2] = 0;
      if (hit) return {BetaClass::Two, VertexSet{w1, w2}};
    }
    used[i1] = 0;
  }
  return {BetaClass::ThreePlus, std::nullopt};
}

}  // namespace lpvc
