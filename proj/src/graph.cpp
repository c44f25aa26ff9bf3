#include "powercolor/graph.hpp"

#include <algorithm>

#include "powercolor/parallel.hpp"

namespace powercolor {

bool Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("edge endpoint out of range");
    if (u == v) throw Error("loops are not allowed");
    if (row_[u][v]) return false;
    row_[u][v] = true;
    row_[v][u] = true;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
    return true;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced_prefix(int m) const {
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v : adj_[u])
            if (u < v && v < m) g.add_edge(u, v);
    return g;
}

std::vector<int> DistanceMatrix::ball(int v, int r) const {
    std::vector<int> out;
    const auto& d = rows_[v];
    for (int u = 0; u < size(); ++u)
        if (d[u] != unreachable && d[u] <= r) out.push_back(u);
    return out;
}

int DistanceMatrix::ball_size(int v, int r) const {
    int count = 0;
    const auto& d = rows_[v];
    for (int u = 0; u < size(); ++u)
        if (d[u] != unreachable && d[u] <= r) ++count;
    return count;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    return bfs_distances_bounded(g, source, g.vertex_count());
}

std::vector<int> bfs_distances_bounded(const Graph& g, int source, int max_depth) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[source] = 0;
    std::vector<int> frontier{source}, next;
    int depth = 0;
    while (!frontier.empty() && depth < max_depth) {
        ++depth;
        next.clear();
        for (int u : frontier) {
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = depth;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

DistanceMatrix bfs_all_pairs(const Graph& g, int threads) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> rows(n);
    parallel_over(n, threads, [&](int v) { rows[v] = bfs_distances(g, v); });
    return DistanceMatrix(std::move(rows));
}

Graph power(const Graph& g, int k, int threads) {
    if (k < 1) throw Error("power parameter must be >= 1");
    const int n = g.vertex_count();
    std::vector<std::vector<int>> reach(n);
    parallel_over(n, threads, [&](int v) {
        std::vector<int> dist = bfs_distances_bounded(g, v, k);
        for (int u = v + 1; u < n; ++u)
            if (dist[u] >= 1) reach[v].push_back(u);
    });
    Graph p(n);
    for (int v = 0; v < n; ++v)
        for (int u : reach[v]) p.add_edge(v, u);
    return p;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<int> dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == -1; });
}

DegeneracyResult degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    DegeneracyResult result;
    result.order.reserve(n);
    std::vector<int> deg(n);
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    // Bucket queue over current degrees.
    std::vector<std::vector<int>> bucket(max_deg + 1);
    for (int v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
    std::vector<bool> removed(n, false);
    int floor = 0;
    for (int step = 0; step < n; ++step) {
        while (floor <= max_deg && bucket[floor].empty()) ++floor;
        int probe = floor;
        int v = -1;
        while (true) {
            auto& b = bucket[probe];
            while (!b.empty() && (removed[b.back()] || deg[b.back()] != probe)) b.pop_back();
            if (!b.empty()) {
                v = b.back();
                b.pop_back();
                break;
            }
            ++probe;
        }
        floor = std::min(floor, probe);
        removed[v] = true;
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, deg[v]);
        for (int u : g.neighbors(v)) {
            if (!removed[u]) {
                --deg[u];
                bucket[deg[u]].push_back(u);
                floor = std::min(floor, deg[u]);
            }
        }
    }
    return result;
}

std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<char> used(n + 1, 0);
    for (int v : order) {
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used[color[u]] = 0;
    }
    return color;
}

int color_count(const std::vector<int>& colors) {
    int max_color = -1;
    for (int c : colors) max_color = std::max(max_color, c);
    return max_color + 1;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

namespace {

void check_clique_or_throw(const Graph& g, const std::vector<int>& vertices) {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j]))
                throw HintNotCliqueError(vertices[i], vertices[j]);
}

std::vector<int> greedy_clique_from(const Graph& g, int seed) {
    std::vector<int> clique{seed};
    for (int v : g.neighbors(seed)) {
        bool ok = true;
        for (int u : clique)
            if (u != seed && !g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

}  // namespace

std::vector<int> clique_lower(const Graph& g, const std::vector<int>& hint, const Graph* base,
                              int base_radius) {
    std::vector<int> best;
    if (!hint.empty()) {
        check_clique_or_throw(g, hint);
        best = hint;
        std::sort(best.begin(), best.end());
    }
    for (int seed = 0; seed < g.vertex_count(); ++seed) {
        std::vector<int> candidate = greedy_clique_from(g, seed);
        if (candidate.size() > best.size() && is_clique(g, candidate)) best = candidate;
    }
    if (base != nullptr && base->vertex_count() == g.vertex_count()) {
        for (int v = 0; v < base->vertex_count(); ++v) {
            std::vector<int> dist = bfs_distances_bounded(*base, v, base_radius);
            std::vector<int> ball;
            for (int u = 0; u < base->vertex_count(); ++u)
                if (dist[u] >= 0) ball.push_back(u);
            if (ball.size() > best.size() && is_clique(g, ball)) best = ball;
        }
    }
    // Output contract: pairwise adjacent, always re-checked.
    check_clique_or_throw(g, best);
    return best;
}

namespace {

// Tomita-style branch and bound. Candidates are ordered by a greedy coloring
// of the induced subgraph; a branch is cut when |R| + color(v) cannot beat
// the incumbent.
struct MaxCliqueSearch {
    const Graph& g;
    std::vector<int> best;
    std::vector<int> current;

    void expand(std::vector<int>& candidates) {
        if (candidates.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        const int m = static_cast<int>(candidates.size());
        std::vector<int> color(m);
        std::vector<std::vector<int>> classes;
        for (int i = 0; i < m; ++i) {
            int v = candidates[i];
            size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (g.has_edge(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            color[i] = static_cast<int>(c) + 1;
        }
        // Re-order candidates by color ascending (stable on input order).
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return color[a] < color[b]; });
        std::vector<int> ordered(m), ordered_color(m);
        for (int i = 0; i < m; ++i) {
            ordered[i] = candidates[idx[i]];
            ordered_color[i] = color[idx[i]];
        }
        for (int i = m - 1; i >= 0; --i) {
            if (current.size() + ordered_color[i] <= best.size()) return;
            int v = ordered[i];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.has_edge(ordered[j], v)) next.push_back(ordered[j]);
            current.push_back(v);
            expand(next);
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<int> exact_clique_set(const Graph& g, int limit) {
    if (g.vertex_count() > limit)
        throw BudgetExceededError("exact clique limited to " + std::to_string(limit) +
                                  " vertices, graph has " + std::to_string(g.vertex_count()));
    if (g.vertex_count() == 0) return {};
    MaxCliqueSearch search{g, clique_lower(g), {}};
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    search.expand(all);
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

int exact_clique(const Graph& g, int limit) {
    return static_cast<int>(exact_clique_set(g, limit).size());
}

}  // namespace powercolor
