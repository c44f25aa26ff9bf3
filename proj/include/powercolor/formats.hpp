#ifndef POWERCOLOR_FORMATS_HPP
#define POWERCOLOR_FORMATS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "powercolor/affine_plane.hpp"
#include "powercolor/construction.hpp"
#include "powercolor/graph.hpp"

namespace powercolor {

// All on-disk ids are 1-based (vertex ids, list colors); plane point and
// line indices inside label and plane-dump files are 0-based canonical
// indices. Writers are canonical: re-serializing a parsed file reproduces
// it byte for byte.

/// Graph file: `p edge <nV> <nE>` header then one `e <u> <v>` line per edge,
/// u < v, sorted. Comment lines starting with `c` are accepted when reading.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

/// Partition file: `part <tag> : <v1> <v2> ...`.
void write_parts(std::ostream& out, const std::vector<Part>& parts);
std::vector<Part> read_parts(std::istream& in);

/// Label file: `v <id> point|line|sub <point> <line> <level>`, with `-` for
/// fields that do not apply.
void write_labels(std::ostream& out, const std::vector<VertexLabel>& labels);
std::vector<VertexLabel> read_labels(std::istream& in);

/// Plane dump: `line <class> <index-in-class> : <point-indices...>`, 0-based.
void write_plane_dump(std::ostream& out, const AffinePlane& plane);

/// List-assignment file: `L <v> : <c1> <c2> ...`.
void write_lists(std::ostream& out, const std::vector<std::vector<int>>& lists);
std::vector<std::vector<int>> read_lists(std::istream& in);

// Path convenience wrappers; throw ParseError on IO failure.
void write_graph_file(const std::string& path, const Graph& g);
Graph read_graph_file(const std::string& path);
void write_parts_file(const std::string& path, const std::vector<Part>& parts);
std::vector<Part> read_parts_file(const std::string& path);
void write_labels_file(const std::string& path, const std::vector<VertexLabel>& labels);
std::vector<VertexLabel> read_labels_file(const std::string& path);
void write_lists_file(const std::string& path, const std::vector<std::vector<int>>& lists);
std::vector<std::vector<int>> read_lists_file(const std::string& path);

}  // namespace powercolor

#endif
