#include "powercolor/random_graphs.hpp"

namespace powercolor {

std::uint32_t draw(std::mt19937& rng, std::uint32_t m) { return rng() % m; }

namespace {
bool coin(std::mt19937& rng, double p) {
    return rng() < p * 4294967296.0;  // 2^32
}
}  // namespace

Graph random_graph(int n, double edge_prob, std::mt19937& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, edge_prob)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int min_n, int max_n, double extra_edge_prob, std::mt19937& rng) {
    const int n = min_n + static_cast<int>(draw(rng, static_cast<std::uint32_t>(
                                                         max_n - min_n + 1)));
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(draw(rng, v)), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && coin(rng, extra_edge_prob)) g.add_edge(u, v);
    return g;
}

}  // namespace powercolor
