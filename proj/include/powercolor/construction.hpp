#ifndef POWERCOLOR_CONSTRUCTION_HPP
#define POWERCOLOR_CONSTRUCTION_HPP

#include <string>
#include <vector>

#include "powercolor/affine_plane.hpp"
#include "powercolor/graph.hpp"

namespace powercolor {

/// Bipartite point-line incidence graph on the plane minus its vertical
/// class: one side is the q^2 points, the other the q^2 lines of classes
/// 1..q, with an edge whenever the point lies on the line. Vertex ids:
/// points keep their plane index; line (cls, idx) with cls >= 1 becomes
/// q^2 + (cls-1)*q + idx.
struct IncidenceGraph {
    AffinePlane plane;
    Graph graph;

    int n() const { return plane.order(); }
    int num_points() const { return n() * n(); }
    int line_vertex(int cls, int idx) const { return num_points() + (cls - 1) * n() + idx; }
    /// Which vertical line (part a_i, 0-based) a point belongs to.
    int point_part(int point) const { return point / n(); }
};

IncidenceGraph build_H(const AffinePlane& plane);

enum class VertexKind { Point, Line, Subdiv };

/// Identity of a vertex of the subdivided graph: its level along the
/// subdivision path, the point the path starts at and the line it heads to.
/// Point vertices have level 0 and no line; the surviving line vertices
/// (class 1) have level k and no point.
struct VertexLabel {
    VertexKind kind;
    int point;  // plane point index, or -1
    int line;   // global plane line id (cls*q + idx), or -1
    int level;
};

struct Part {
    std::string tag;  // "a<i>", "L1", or "V<i>.<j>.<m>" (i, j, m 1-based)
    std::vector<int> vertices;
};

/// The subdivided-and-collapsed graph together with its vertex labels and
/// the canonical partition of the vertex set into k*n^2+1 parts of size n.
struct ConstructionGraph {
    int n = 0;
    int k = 0;
    Graph graph;
    std::vector<VertexLabel> labels;
    std::vector<Part> parts;
    std::vector<int> part_of;  // vertex -> index into parts

    int level(int v) const { return labels[v].level; }
};

/// Subdivides every incidence edge into a path (length k toward class-1
/// lines, length k+1 otherwise), then for every line vertex of classes 2..n
/// turns its neighborhood into a clique and deletes it. Vertex ids are
/// assigned points first (plane order), then the class-1 lines, then
/// subdivision vertices ordered by (line class, line index, point index,
/// level). Throws InvalidKError for k < 2.
ConstructionGraph build_G(const IncidenceGraph& H, int k);

/// Convenience: plane + incidence + subdivision for GF(q), q = p^e.
ConstructionGraph build_construction(int q, int k);

/// Reassembles a ConstructionGraph from parsed files. Labels may be empty
/// (checks that need levels will refuse to run). Only structural sanity is
/// enforced here: out-of-range or doubly-assigned vertices raise ParseError,
/// content-level violations are left for the verifiers to report. n is taken
/// from the first part's size.
ConstructionGraph assemble_construction(Graph graph, std::vector<Part> parts,
                                        std::vector<VertexLabel> labels, int k);

/// The 4th power of the construction graph; its k-th powers realize the
/// 4k-th powers of the construction.
Graph base_family_graph(const ConstructionGraph& G);

/// Count identities that hold for every built instance.
long long expected_vertex_count(int n, int k);  // n^3*k + n
long long expected_part_count(int n, int k);    // k*n^2 + 1
long long expected_edge_count(int n, int k);    // n^3*k + n^2*(n-1)^2/2

}  // namespace powercolor

#endif
