#include "powercolor/construction.hpp"

#include <algorithm>

namespace powercolor {

IncidenceGraph build_H(const AffinePlane& plane) {
    const int n = plane.order();
    IncidenceGraph H{plane, Graph(2 * n * n)};
    for (int cls = 1; cls <= n; ++cls)
        for (int idx = 0; idx < n; ++idx)
            for (int p : plane.line(cls, idx)) H.graph.add_edge(p, H.line_vertex(cls, idx));
    return H;
}

long long expected_vertex_count(int n, int k) {
    return static_cast<long long>(n) * n * n * k + n;
}

long long expected_part_count(int n, int k) {
    return static_cast<long long>(k) * n * n + 1;
}

long long expected_edge_count(int n, int k) {
    // n^2*k edges on paths toward class-1 lines, k surviving edges on each of
    // the n^3-n^2 other paths, plus one clique on n vertices per deleted line.
    long long nn = static_cast<long long>(n);
    return nn * nn * nn * k + nn * nn * (nn - 1) * (nn - 1) / 2;
}

ConstructionGraph build_G(const IncidenceGraph& H, int k) {
    if (k < 2) throw InvalidKError(k);
    const int n = H.n();
    const AffinePlane& plane = H.plane;
    const int num_points = n * n;
    const int final_vertices = static_cast<int>(expected_vertex_count(n, k));
    const int temp_base = final_vertices;  // deleted line vertices live past the end
    const int total = final_vertices + n * (n - 1);

    // Interior vertices per path: k-1 toward class-1 lines, k otherwise.
    auto interiors = [&](int cls) { return cls == 1 ? k - 1 : k; };

    // Id of the first interior vertex of the path from the t-th point of
    // line (cls, idx).
    std::vector<long long> class_offset(n + 2, 0);
    class_offset[1] = num_points + n;
    for (int cls = 1; cls <= n; ++cls)
        class_offset[cls + 1] =
            class_offset[cls] + static_cast<long long>(n) * n * interiors(cls);
    auto path_base = [&](int cls, int idx, int t) {
        return static_cast<int>(class_offset[cls] +
                                (static_cast<long long>(idx) * n + t) * interiors(cls));
    };

    Graph work(total);
    std::vector<VertexLabel> labels(final_vertices);
    for (int p = 0; p < num_points; ++p) labels[p] = {VertexKind::Point, p, -1, 0};
    for (int j = 0; j < n; ++j)
        labels[num_points + j] = {VertexKind::Line, -1, plane.line_id(1, j), k};

    for (int cls = 1; cls <= n; ++cls) {
        const int m_max = interiors(cls);
        for (int idx = 0; idx < n; ++idx) {
            const Line& line = plane.line(cls, idx);
            const int line_end = cls == 1 ? num_points + idx
                                          : temp_base + (cls - 2) * n + idx;
            for (int t = 0; t < n; ++t) {
                const int p = line[t];
                int prev = p;
                const int base = path_base(cls, idx, t);
                for (int m = 1; m <= m_max; ++m) {
                    const int v = base + (m - 1);
                    labels[v] = {VertexKind::Subdiv, p, plane.line_id(cls, idx), m};
                    work.add_edge(prev, v);
                    prev = v;
                }
                work.add_edge(prev, line_end);
            }
        }
    }

    // Clique replacement: make each deleted line's neighborhood a clique,
    // then drop the line vertices (they occupy the trailing id block).
    for (int v = temp_base; v < total; ++v) {
        const std::vector<int>& nb = work.neighbors(v);
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) work.add_edge(nb[a], nb[b]);
    }

    ConstructionGraph G;
    G.n = n;
    G.k = k;
    G.graph = work.induced_prefix(final_vertices);
    G.labels = std::move(labels);

    // Position of each point within each class's line through it.
    // in_class[cls][p] = (line index, position of p on that line).
    std::vector<std::vector<std::pair<int, int>>> in_class(
        n + 1, std::vector<std::pair<int, int>>(num_points, {-1, -1}));
    for (int cls = 1; cls <= n; ++cls)
        for (int idx = 0; idx < n; ++idx) {
            const Line& line = plane.line(cls, idx);
            for (int t = 0; t < n; ++t) in_class[cls][line[t]] = {idx, t};
        }

    for (int i = 0; i < n; ++i) {
        Part part;
        part.tag = "a" + std::to_string(i + 1);
        for (int y = 0; y < n; ++y) part.vertices.push_back(i * n + y);
        G.parts.push_back(std::move(part));
    }
    {
        Part part;
        part.tag = "L1";
        for (int j = 0; j < n; ++j) part.vertices.push_back(num_points + j);
        G.parts.push_back(std::move(part));
    }
    for (int i = 0; i < n; ++i) {
        for (int cls = 1; cls <= n; ++cls) {
            for (int m = 1; m <= interiors(cls); ++m) {
                Part part;
                part.tag = "V" + std::to_string(i + 1) + "." + std::to_string(cls) + "." +
                           std::to_string(m);
                for (int y = 0; y < n; ++y) {
                    const int p = i * n + y;
                    auto [idx, t] = in_class[cls][p];
                    part.vertices.push_back(path_base(cls, idx, t) + (m - 1));
                }
                std::sort(part.vertices.begin(), part.vertices.end());
                G.parts.push_back(std::move(part));
            }
        }
    }

    // Self-checks: the partition must cover every vertex exactly once with
    // k*n^2+1 parts of size n.
    if (static_cast<long long>(G.parts.size()) != expected_part_count(n, k))
        throw Error("internal: unexpected part count");
    G.part_of.assign(final_vertices, -1);
    for (size_t pi = 0; pi < G.parts.size(); ++pi) {
        if (static_cast<int>(G.parts[pi].vertices.size()) != n)
            throw Error("internal: part size mismatch");
        for (int v : G.parts[pi].vertices) {
            if (G.part_of[v] != -1) throw Error("internal: vertex in two parts");
            G.part_of[v] = static_cast<int>(pi);
        }
    }
    for (int v = 0; v < final_vertices; ++v)
        if (G.part_of[v] == -1) throw Error("internal: vertex missing from partition");

    return G;
}

ConstructionGraph assemble_construction(Graph graph, std::vector<Part> parts,
                                        std::vector<VertexLabel> labels, int k) {
    if (k < 2) throw InvalidKError(k);
    const int n_vertices = graph.vertex_count();
    if (!labels.empty() && static_cast<int>(labels.size()) != n_vertices)
        throw ParseError("label file covers " + std::to_string(labels.size()) +
                         " vertices, graph has " + std::to_string(n_vertices));
    ConstructionGraph G;
    G.k = k;
    G.n = parts.empty() ? 0 : static_cast<int>(parts[0].vertices.size());
    G.part_of.assign(n_vertices, -1);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        for (int v : parts[pi].vertices) {
            if (v < 0 || v >= n_vertices)
                throw ParseError("part " + parts[pi].tag + " names vertex " +
                                 std::to_string(v + 1) + " outside the graph");
            if (G.part_of[v] != -1)
                throw ParseError("vertex " + std::to_string(v + 1) + " appears in two parts");
            G.part_of[v] = static_cast<int>(pi);
        }
    }
    G.graph = std::move(graph);
    G.labels = std::move(labels);
    G.parts = std::move(parts);
    return G;
}

ConstructionGraph build_construction(int q, int k) {
    auto pe = prime_power_decomposition(q);
    if (!pe) throw Error(std::to_string(q) + " is not a prime power");
    FiniteField field(pe->first, pe->second);
    AffinePlane plane = plane_build(field);
    return build_G(build_H(plane), k);
}

Graph base_family_graph(const ConstructionGraph& G) { return power(G.graph, 4); }

}  // namespace powercolor
