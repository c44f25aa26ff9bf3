#ifndef POWERCOLOR_AFFINE_PLANE_HPP
#define POWERCOLOR_AFFINE_PLANE_HPP

#include <vector>

#include "powercolor/finite_field.hpp"
#include "powercolor/report.hpp"

namespace powercolor {

/// A line is the sorted set of indices of the points it contains.
using Line = std::vector<int>;

/// The affine plane AG(2, q) over GF(q): q^2 points, q^2+q lines arranged in
/// q+1 parallel classes of q lines each.
///
/// Point with coordinates (x, y) has index x*q + y. Class 0 is the vertical
/// class (lines x = c, one per c, in canonical index order of c); class 1+s
/// holds the lines y = m*x + b for the slope m with canonical index s, one
/// line per intercept b, in canonical index order of b. In particular class 1
/// is the slope-zero class. Global line id = class * q + index_in_class.
struct AffinePlane {
    FiniteField field;
    std::vector<std::pair<int, int>> points;  // (x index, y index), |points| = q^2
    std::vector<std::vector<Line>> classes;   // q+1 classes of q lines

    int order() const { return field.order(); }
    int point_index(int x, int y) const { return x * field.order() + y; }
    int num_lines() const { return field.order() * (field.order() + 1); }
    const Line& line(int cls, int idx) const { return classes[cls][idx]; }
    int line_id(int cls, int idx) const { return cls * field.order() + idx; }
};

/// Builds AG(2, q) deterministically from the field.
AffinePlane plane_build(const FiniteField& field);

/// Exhaustively verifies the plane axioms:
///   - every line has exactly q points,
///   - every pair of points lies on exactly one line,
///   - lines in the same parallel class are disjoint,
///   - lines in different classes meet in exactly one point,
///   - q+1 classes of q lines each.
/// Failures carry a witness naming the offending line(s) or point pair.
VerificationReport plane_check(const AffinePlane& plane);

}  // namespace powercolor

#endif
