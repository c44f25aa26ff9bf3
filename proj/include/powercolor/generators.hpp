#ifndef POWERCOLOR_GENERATORS_HPP
#define POWERCOLOR_GENERATORS_HPP

#include <vector>

#include "powercolor/graph.hpp"

namespace powercolor {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}: vertex 0 is the center
Graph petersen_graph();

/// Complete multipartite graph with the given part sizes; vertices are laid
/// out part-major, so part boundaries are cumulative sums of `sizes`.
Graph complete_multipartite(const std::vector<int>& sizes);

/// Complete r-partite graph with every part of size s.
Graph multipartite(int r, int s);

Graph complete_bipartite(int a, int b);

}  // namespace powercolor

#endif
