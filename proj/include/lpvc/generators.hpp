#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "lpvc/graph.hpp"

namespace lpvc {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform double in [0, 1) from the top 53 bits of one engine draw; unlike
/// std::uniform_real_distribution this is identical across standard libraries.
[[nodiscard]] double unit_draw(std::mt19937_64& rng);

/// Uniform integer in [lo, hi] by rejection sampling on raw engine output.
[[nodiscard]] std::uint64_t int_draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// G(n, p): pairs (i, j), i < j, visited lexicographically, each kept with probability p.
[[nodiscard]] Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);

[[nodiscard]] Graph path_graph(std::size_t n);

/// Throws std::invalid_argument for n < 3.
[[nodiscard]] Graph cycle_graph(std::size_t n);

[[nodiscard]] Graph complete_graph(std::size_t n);

/// Center 0 with `legs` paths of `leg_length` vertices each.
[[nodiscard]] Graph spider_graph(std::size_t legs, std::size_t leg_length);

/// Graph on n vertices whose minimum l-path vertex cover has exactly `opt`
/// vertices: `opt` disjoint l-paths plus random extra edges, each kept only
/// if the brute-force optimum stays at `opt`. Labels are shuffled.
/// Throws GenerationError if opt * l > n, n exceeds the oracle limit, or l is outside 2..7.
[[nodiscard]] Graph planted_graph(std::size_t n, int l, int opt, std::uint64_t seed);

}  // namespace lpvc
