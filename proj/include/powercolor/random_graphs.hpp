#ifndef POWERCOLOR_RANDOM_GRAPHS_HPP
#define POWERCOLOR_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>

#include "powercolor/graph.hpp"

namespace powercolor {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Uniform draw in [0, m) using raw engine output, so sequences do not
/// depend on the standard library's distribution implementations.
std::uint32_t draw(std::mt19937& rng, std::uint32_t m);

/// Random graph on n vertices: every pair independently with probability p.
Graph random_graph(int n, double edge_prob, std::mt19937& rng);

/// Random connected graph with min_n..max_n vertices: a random attachment
/// tree plus independent extra edges.
Graph random_connected_graph(int min_n, int max_n, double extra_edge_prob, std::mt19937& rng);

}  // namespace powercolor

#endif
