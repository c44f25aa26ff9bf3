#include "powercolor/affine_plane.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace powercolor {

AffinePlane plane_build(const FiniteField& field) {
    const int q = field.order();
    if (q > 46340) throw SizeExceededError("plane order too large for point indexing");

    AffinePlane plane{field, {}, {}};
    plane.points.reserve(static_cast<size_t>(q) * q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) plane.points.emplace_back(x, y);

    const FiniteField& f = plane.field;

    // Class 0: vertical lines x = c.
    std::vector<Line> vertical;
    for (int c = 0; c < q; ++c) {
        Line line;
        line.reserve(q);
        for (int y = 0; y < q; ++y) line.push_back(plane.point_index(c, y));
        std::sort(line.begin(), line.end());
        vertical.push_back(std::move(line));
    }
    plane.classes.push_back(std::move(vertical));

    // One class per slope m, lines y = m*x + b.
    for (int m = 0; m < q; ++m) {
        std::vector<Line> cls;
        for (int b = 0; b < q; ++b) {
            Line line;
            line.reserve(q);
            for (int x = 0; x < q; ++x) {
                int y = f.add(f.mul(m, x), b);
                line.push_back(plane.point_index(x, y));
            }
            std::sort(line.begin(), line.end());
            cls.push_back(std::move(line));
        }
        plane.classes.push_back(std::move(cls));
    }
    return plane;
}

namespace {

bool line_contains(const Line& line, int p) {
    return std::binary_search(line.begin(), line.end(), p);
}

int intersection_size(const Line& a, const Line& b) {
    int count = 0;
    auto it = a.begin();
    for (int p : b) {
        it = std::lower_bound(it, a.end(), p);
        if (it == a.end()) break;
        if (*it == p) ++count;
    }
    return count;
}

std::string line_name(int cls, int idx) {
    std::ostringstream s;
    s << "line " << cls << "." << idx;
    return s.str();
}

}  // namespace

VerificationReport plane_check(const AffinePlane& plane) {
    const auto start = std::chrono::steady_clock::now();
    const int q = plane.order();
    const int num_points = static_cast<int>(plane.points.size());

    VerificationReport report;
    report.claim = "plane-axioms";
    report.params = "q=" + std::to_string(q);

    // Flatten lines with their (class, index) names for witness messages.
    std::vector<const Line*> lines;
    std::vector<std::pair<int, int>> names;
    for (size_t c = 0; c < plane.classes.size(); ++c)
        for (size_t i = 0; i < plane.classes[c].size(); ++i) {
            lines.push_back(&plane.classes[c][i]);
            names.emplace_back(static_cast<int>(c), static_cast<int>(i));
        }

    auto& size_item = report.add_item("every line has exactly q points");
    for (size_t l = 0; l < lines.size(); ++l) {
        if (static_cast<int>(lines[l]->size()) != q) {
            report.fail(size_item, line_name(names[l].first, names[l].second) + " has " +
                                       std::to_string(lines[l]->size()) + " points");
        }
    }

    auto& pair_item = report.add_item("every point pair lies on exactly one line");
    for (int p = 0; p < num_points; ++p) {
        for (int r = p + 1; r < num_points; ++r) {
            int count = 0;
            for (const Line* line : lines)
                if (line_contains(*line, p) && line_contains(*line, r)) ++count;
            if (count != 1) {
                report.fail(pair_item, "points " + std::to_string(p) + " " + std::to_string(r) +
                                           " lie on " + std::to_string(count) + " lines");
            }
        }
    }

    auto& parallel_item = report.add_item("lines in the same class are disjoint");
    auto& crossing_item = report.add_item("lines in different classes meet exactly once");
    for (size_t a = 0; a < lines.size(); ++a) {
        for (size_t b = a + 1; b < lines.size(); ++b) {
            int common = intersection_size(*lines[a], *lines[b]);
            std::string pair_name = line_name(names[a].first, names[a].second) + " and " +
                                    line_name(names[b].first, names[b].second);
            if (names[a].first == names[b].first) {
                if (common != 0)
                    report.fail(parallel_item,
                                pair_name + " share " + std::to_string(common) + " points");
            } else if (common != 1) {
                report.fail(crossing_item,
                            pair_name + " share " + std::to_string(common) + " points");
            }
        }
    }

    auto& shape_item = report.add_item("q+1 classes of q lines each");
    if (static_cast<int>(plane.classes.size()) != q + 1) {
        report.fail(shape_item,
                    "expected " + std::to_string(q + 1) + " classes, found " +
                        std::to_string(plane.classes.size()));
    } else {
        for (size_t c = 0; c < plane.classes.size(); ++c) {
            if (static_cast<int>(plane.classes[c].size()) != q)
                report.fail(shape_item, "class " + std::to_string(c) + " has " +
                                            std::to_string(plane.classes[c].size()) + " lines");
        }
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

}  // namespace powercolor
