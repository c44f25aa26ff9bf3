#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "powercolor/affine_plane.hpp"
#include "powercolor/formats.hpp"

using namespace powercolor;

namespace {

AffinePlane plane_of_order(int q) {
    auto pe = prime_power_decomposition(q);
    REQUIRE(pe.has_value());
    return plane_build(field_new(pe->first, pe->second));
}

}  // namespace

TEST_CASE("plane shapes: q^2 points, q^2+q lines, q+1 classes of q") {
    for (int q : {2, 3, 4, 5}) {
        CAPTURE(q);
        AffinePlane plane = plane_of_order(q);
        CHECK(static_cast<int>(plane.points.size()) == q * q);
        CHECK(static_cast<int>(plane.classes.size()) == q + 1);
        int lines = 0;
        for (const auto& cls : plane.classes) {
            CHECK(static_cast<int>(cls.size()) == q);
            lines += static_cast<int>(cls.size());
        }
        CHECK(lines == q * q + q);
    }
}

TEST_CASE("plane axioms pass for q in {2,3,4,5,7,8,9}") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        VerificationReport report = plane_check(plane_of_order(q));
        CHECK(report.passed());
        CHECK(report.items.size() == 5);
    }
}

TEST_CASE("a mutated plane fails the right axiom with a witness") {
    AffinePlane plane = plane_of_order(3);

    SUBCASE("deleting a point from a line breaks the line-size axiom") {
        plane.classes[1][0].pop_back();
        VerificationReport report = plane_check(plane);
        CHECK(!report.passed());
        REQUIRE(!report.items[0].pass);  // line size axiom
        CHECK(report.items[0].witnesses[0].find("line 1.0") != std::string::npos);
    }

    SUBCASE("duplicating a line breaks disjointness within a class") {
        plane.classes[2][0] = plane.classes[2][1];
        VerificationReport report = plane_check(plane);
        CHECK(!report.passed());
        bool parallel_failed = false;
        for (const auto& item : report.items)
            if (item.name.find("same class") != std::string::npos && !item.pass)
                parallel_failed = true;
        CHECK(parallel_failed);
    }
}

TEST_CASE("through every point pass exactly q+1 lines, one per class") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        AffinePlane plane = plane_of_order(q);
        for (int p = 0; p < q * q; ++p) {
            int total = 0;
            for (const auto& cls : plane.classes) {
                int in_class = 0;
                for (const auto& line : cls)
                    if (std::binary_search(line.begin(), line.end(), p)) ++in_class;
                CHECK(in_class == 1);
                total += in_class;
            }
            CHECK(total == q + 1);
        }
    }
}

TEST_CASE("two non-vertical classes encode a latin square") {
    // Rows = lines of one class, columns = lines of another; the symbol of a
    // cell is the vertical line through the unique common point. Each symbol
    // appears once per row and once per column.
    for (int q : {3, 4, 5}) {
        CAPTURE(q);
        AffinePlane plane = plane_of_order(q);
        for (int ci = 1; ci <= q; ++ci) {
            for (int cj = 1; cj <= q; ++cj) {
                if (ci == cj) continue;
                std::vector<std::vector<int>> square(q, std::vector<int>(q, -1));
                for (int r = 0; r < q; ++r) {
                    for (int c = 0; c < q; ++c) {
                        std::vector<int> common;
                        std::set_intersection(plane.line(ci, r).begin(),
                                              plane.line(ci, r).end(),
                                              plane.line(cj, c).begin(),
                                              plane.line(cj, c).end(),
                                              std::back_inserter(common));
                        REQUIRE(common.size() == 1);
                        square[r][c] = common[0] / q;  // vertical-line index
                    }
                }
                for (int r = 0; r < q; ++r) {
                    std::set<int> row(square[r].begin(), square[r].end());
                    CHECK(static_cast<int>(row.size()) == q);
                }
                for (int c = 0; c < q; ++c) {
                    std::set<int> col;
                    for (int r = 0; r < q; ++r) col.insert(square[r][c]);
                    CHECK(static_cast<int>(col.size()) == q);
                }
            }
        }
    }
}

TEST_CASE("plane dump format is deterministic") {
    AffinePlane plane = plane_of_order(2);
    std::ostringstream out;
    write_plane_dump(out, plane);
    CHECK(out.str() ==
          "line 0 0 : 0 1\n"
          "line 0 1 : 2 3\n"
          "line 1 0 : 0 2\n"
          "line 1 1 : 1 3\n"
          "line 2 0 : 0 3\n"
          "line 2 1 : 1 2\n");
}
