#include "powercolor/formats.hpp"

#include <fstream>
#include <sstream>

namespace powercolor {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, const std::string& what) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected " + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("expected " + what + ", got '" + tok + "'");
    return value;
}

// 1-based on disk, 0-based in memory.
int parse_vertex(const std::string& tok, int n) {
    int v = parse_int(tok, "vertex id");
    if (v < 1 || v > n) throw ParseError("vertex id " + tok + " out of range 1.." +
                                         std::to_string(n));
    return v - 1;
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1, seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (n != -1) throw ParseError("duplicate graph header");
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError("bad graph header: " + line);
            n = parse_int(tokens[2], "vertex count");
            m = parse_int(tokens[3], "edge count");
            if (n < 0) throw ParseError("negative vertex count");
            g = Graph(n);
        } else if (tokens[0] == "e") {
            if (n == -1) throw ParseError("edge before graph header");
            if (tokens.size() != 3) throw ParseError("bad edge line: " + line);
            int u = parse_vertex(tokens[1], n);
            int v = parse_vertex(tokens[2], n);
            if (u == v) throw ParseError("loop at vertex " + tokens[1]);
            if (!g.add_edge(u, v)) throw ParseError("duplicate edge " + tokens[1] + " " +
                                                    tokens[2]);
            ++seen;
        } else {
            throw ParseError("unrecognized line: " + line);
        }
    }
    if (n == -1) throw ParseError("missing graph header");
    if (seen != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
    return g;
}

void write_parts(std::ostream& out, const std::vector<Part>& parts) {
    for (const auto& part : parts) {
        out << "part " << part.tag << " :";
        for (int v : part.vertices) out << " " << v + 1;
        out << "\n";
    }
}

std::vector<Part> read_parts(std::istream& in) {
    std::vector<Part> parts;
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] != "part" || tokens.size() < 3 || tokens[2] != ":")
            throw ParseError("bad part line: " + line);
        Part part;
        part.tag = tokens[1];
        for (size_t i = 3; i < tokens.size(); ++i) {
            int v = parse_int(tokens[i], "vertex id");
            if (v < 1) throw ParseError("vertex id must be positive: " + tokens[i]);
            part.vertices.push_back(v - 1);
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

namespace {

std::string opt_field(int value) { return value < 0 ? "-" : std::to_string(value); }

int parse_opt_field(const std::string& tok, const std::string& what) {
    if (tok == "-") return -1;
    int v = parse_int(tok, what);
    if (v < 0) throw ParseError(what + " must be non-negative");
    return v;
}

}  // namespace

void write_labels(std::ostream& out, const std::vector<VertexLabel>& labels) {
    for (size_t v = 0; v < labels.size(); ++v) {
        const VertexLabel& l = labels[v];
        const char* kind = l.kind == VertexKind::Point  ? "point"
                           : l.kind == VertexKind::Line ? "line"
                                                        : "sub";
        out << "v " << v + 1 << " " << kind << " " << opt_field(l.point) << " "
            << opt_field(l.line) << " " << l.level << "\n";
    }
}

std::vector<VertexLabel> read_labels(std::istream& in) {
    std::vector<VertexLabel> labels;
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] != "v" || tokens.size() != 6) throw ParseError("bad label line: " + line);
        int id = parse_int(tokens[1], "vertex id");
        if (id != static_cast<int>(labels.size()) + 1)
            throw ParseError("label ids must be consecutive from 1, got " + tokens[1]);
        VertexLabel l{};
        if (tokens[2] == "point")
            l.kind = VertexKind::Point;
        else if (tokens[2] == "line")
            l.kind = VertexKind::Line;
        else if (tokens[2] == "sub")
            l.kind = VertexKind::Subdiv;
        else
            throw ParseError("bad vertex kind: " + tokens[2]);
        l.point = parse_opt_field(tokens[3], "point index");
        l.line = parse_opt_field(tokens[4], "line index");
        l.level = parse_int(tokens[5], "level");
        labels.push_back(l);
    }
    return labels;
}

void write_plane_dump(std::ostream& out, const AffinePlane& plane) {
    for (size_t cls = 0; cls < plane.classes.size(); ++cls) {
        for (size_t idx = 0; idx < plane.classes[cls].size(); ++idx) {
            out << "line " << cls << " " << idx << " :";
            for (int p : plane.classes[cls][idx]) out << " " << p;
            out << "\n";
        }
    }
}

void write_lists(std::ostream& out, const std::vector<std::vector<int>>& lists) {
    for (size_t v = 0; v < lists.size(); ++v) {
        out << "L " << v + 1 << " :";
        for (int c : lists[v]) out << " " << c + 1;
        out << "\n";
    }
}

std::vector<std::vector<int>> read_lists(std::istream& in) {
    std::vector<std::vector<int>> lists;
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] != "L" || tokens.size() < 3 || tokens[2] != ":")
            throw ParseError("bad list line: " + line);
        int id = parse_int(tokens[1], "vertex id");
        if (id != static_cast<int>(lists.size()) + 1)
            throw ParseError("list ids must be consecutive from 1, got " + tokens[1]);
        std::vector<int> colors;
        for (size_t i = 3; i < tokens.size(); ++i) {
            int c = parse_int(tokens[i], "color id");
            if (c < 1) throw ParseError("color ids are 1-based: " + tokens[i]);
            colors.push_back(c - 1);
        }
        lists.push_back(std::move(colors));
    }
    return lists;
}

namespace {

template <typename WriteFn>
void write_file(const std::string& path, WriteFn fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    fn(out);
    if (!out) throw ParseError("write failed: " + path);
}

template <typename ReadFn>
auto read_file(const std::string& path, ReadFn fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return fn(in);
}

}  // namespace

void write_graph_file(const std::string& path, const Graph& g) {
    write_file(path, [&](std::ostream& out) { write_graph(out, g); });
}

Graph read_graph_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_graph(in); });
}

void write_parts_file(const std::string& path, const std::vector<Part>& parts) {
    write_file(path, [&](std::ostream& out) { write_parts(out, parts); });
}

std::vector<Part> read_parts_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_parts(in); });
}

void write_labels_file(const std::string& path, const std::vector<VertexLabel>& labels) {
    write_file(path, [&](std::ostream& out) { write_labels(out, labels); });
}

std::vector<VertexLabel> read_labels_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_labels(in); });
}

void write_lists_file(const std::string& path, const std::vector<std::vector<int>>& lists) {
    write_file(path, [&](std::ostream& out) { write_lists(out, lists); });
}

std::vector<std::vector<int>> read_lists_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_lists(in); });
}

}  // namespace powercolor
