#include "powercolor/coloring.hpp"

#include <algorithm>

namespace powercolor {

namespace {

// Uncolored vertex with the most distinct neighbor colors; ties broken by
// degree, then by id so the search is deterministic.
int select_saturated(const Graph& g, const std::vector<int>& color) {
    const int n = g.vertex_count();
    int best = -1, best_sat = -1, best_deg = -1;
    std::vector<char> seen(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        if (color[v] != -1) continue;
        int sat = 0;
        for (int u : g.neighbors(v)) {
            int c = color[u];
            if (c >= 0 && !seen[c]) {
                seen[c] = 1;
                ++sat;
            }
        }
        for (int u : g.neighbors(v))
            if (color[u] >= 0) seen[color[u]] = 0;
        if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
            best = v;
            best_sat = sat;
            best_deg = g.degree(v);
        }
    }
    return best;
}

bool color_feasible(const Graph& g, int v, int c, const std::vector<int>& color) {
    for (int u : g.neighbors(v))
        if (color[u] == c) return false;
    return true;
}

// Backtracking k-colorability. New colors are introduced in index order (at
// most one fresh color per node), which removes color-permutation symmetry.
bool extend_coloring(const Graph& g, int t, std::vector<int>& color, int used) {
    int v = select_saturated(g, color);
    if (v == -1) return true;
    int limit = std::min(t - 1, used);
    for (int c = 0; c <= limit; ++c) {
        if (!color_feasible(g, v, c, color)) continue;
        color[v] = c;
        if (extend_coloring(g, t, color, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

bool k_colorable(const Graph& g, int t) {
    if (t < 1) return g.vertex_count() == 0;
    std::vector<int> color(g.vertex_count(), -1);
    return extend_coloring(g, t, color, 0);
}

std::vector<int> dsatur_coloring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int step = 0; step < n; ++step) {
        int v = select_saturated(g, color);
        int c = 0;
        while (!color_feasible(g, v, c, color)) ++c;
        color[v] = c;
    }
    return color;
}

int chromatic_exact(const Graph& g, int budget) {
    const int n = g.vertex_count();
    if (n > budget)
        throw BudgetExceededError("exact chromatic number limited to " +
                                  std::to_string(budget) + " vertices, graph has " +
                                  std::to_string(n));
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    int lower = exact_clique(g, std::max(budget, 64));
    std::vector<int> greedy = dsatur_coloring(g);
    int upper = color_count(greedy);
    for (int t = lower; t < upper; ++t)
        if (k_colorable(g, t)) return t;
    return upper;
}

}  // namespace powercolor
