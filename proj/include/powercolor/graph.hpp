#ifndef POWERCOLOR_GRAPH_HPP
#define POWERCOLOR_GRAPH_HPP

#include <utility>
#include <vector>

#include "powercolor/errors.hpp"

namespace powercolor {

/// Undirected simple graph. Neighbor lists are kept sorted ascending and a
/// packed adjacency-matrix row per vertex gives O(1) edge tests; the two
/// stay in sync by construction.
class Graph {
public:
    Graph() : n_(0), m_(0) {}
    explicit Graph(int n) : n_(n), m_(0), adj_(n), row_(n, std::vector<bool>(n, false)) {}

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    /// Adds the edge uv. Loops are rejected; re-adding an existing edge is a
    /// no-op. Returns true when the edge is new.
    bool add_edge(int u, int v);

    bool has_edge(int u, int v) const { return row_[u][v]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Induced subgraph on vertices 0..m-1, keeping vertex ids.
    Graph induced_prefix(int m) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_;
    long long m_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<bool>> row_;
};

/// Exact shortest-path distances from every source. Unreachable pairs hold
/// the explicit sentinel `unreachable`; no arithmetic is done on it.
class DistanceMatrix {
public:
    static constexpr int unreachable = -1;

    DistanceMatrix() = default;
    explicit DistanceMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

    int size() const { return static_cast<int>(rows_.size()); }
    int at(int u, int v) const { return rows_[u][v]; }
    bool is_reachable(int u, int v) const { return rows_[u][v] != unreachable; }
    const std::vector<int>& row(int u) const { return rows_[u]; }

    /// Vertices at distance <= r from v (always contains v for r >= 0).
    std::vector<int> ball(int v, int r) const;
    int ball_size(int v, int r) const;

private:
    std::vector<std::vector<int>> rows_;
};

/// Single-source BFS; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

/// BFS truncated at depth max_depth; vertices further away stay -1.
std::vector<int> bfs_distances_bounded(const Graph& g, int source, int max_depth);

/// One BFS per source, optionally fanned out over `threads` workers; rows
/// are written per source, so the result is identical for any thread count.
DistanceMatrix bfs_all_pairs(const Graph& g, int threads = 1);

/// k-th power: same vertices, edge uv iff 1 <= d_g(u,v) <= k. Computed by
/// depth-k truncated BFS per source so the full distance matrix is never
/// materialized.
Graph power(const Graph& g, int k, int threads = 1);

bool is_connected(const Graph& g);

struct DegeneracyResult {
    std::vector<int> order;  // removal order (min-degree peeling)
    int degeneracy = 0;      // max degree at removal time
};

DegeneracyResult degeneracy_order(const Graph& g);

/// First-fit coloring along `order`; returns one color id per vertex.
std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order);

int color_count(const std::vector<int>& colors);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

bool is_clique(const Graph& g, const std::vector<int>& vertices);

/// Verified clique lower bound: the best of a pairwise-checked caller hint,
/// a greedy extension from every seed vertex, and (when `base` with
/// `base_radius` is supplied and g = base^k with 2*base_radius <= k) the best
/// ball of radius base_radius in the base graph. The returned set is always
/// re-checked for pairwise adjacency. Throws HintNotCliqueError if the hint
/// fails the check.
std::vector<int> clique_lower(const Graph& g, const std::vector<int>& hint = {},
                              const Graph* base = nullptr, int base_radius = 0);

/// Exact maximum clique via branch and bound with a greedy-coloring bound.
/// Throws BudgetExceededError when the graph exceeds `limit` vertices.
std::vector<int> exact_clique_set(const Graph& g, int limit = 64);
int exact_clique(const Graph& g, int limit = 64);

}  // namespace powercolor

#endif
