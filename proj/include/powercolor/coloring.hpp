#ifndef POWERCOLOR_COLORING_HPP
#define POWERCOLOR_COLORING_HPP

#include <vector>

#include "powercolor/graph.hpp"

namespace powercolor {

/// Exact chromatic number via branch and bound: exact-clique lower bound,
/// saturation-greedy upper bound, then per-target backtracking with
/// saturation-degree branching. Throws BudgetExceededError when the graph
/// exceeds `budget` vertices.
int chromatic_exact(const Graph& g, int budget = 30);

/// Decides whether g admits a proper coloring with at most t colors.
bool k_colorable(const Graph& g, int t);

/// DSATUR greedy coloring (saturation-first vertex order).
std::vector<int> dsatur_coloring(const Graph& g);

}  // namespace powercolor

#endif
