#include "powercolor/generators.hpp"

namespace powercolor {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);      // outer cycle
        g.add_edge(v, v + 5);            // spokes
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    }
    return g;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) n += s;
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (size_t p = 0; p < sizes.size(); ++p)
        for (int i = 0; i < sizes[p]; ++i) part_of[v++] = static_cast<int>(p);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w]) g.add_edge(u, w);
    return g;
}

Graph multipartite(int r, int s) {
    return complete_multipartite(std::vector<int>(r, s));
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

}  // namespace powercolor
