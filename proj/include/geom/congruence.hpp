#pragma once

#include "geom/quadratic.hpp"
#include "geom/space.hpp"

#include <array>

namespace geom {

// Exact carrier making segment congruence decidable over Q^3.
struct SquaredLength {
    Rational value;  // >= 0; zero only for degenerate segments
};

SquaredLength squared_length(const Segment& s);
Rational dist2(const Point& a, const Point& b);

bool seg_congruent(const Segment& s1, const Segment& s2);
bool seg_less(const Segment& s1, const Segment& s2);

// Exact angle shape: the cosine as a quadratic value, with degenerate
// flags. Congruent angles have equal shapes.
struct AngleShape {
    QuadraticValue cos;
    bool straight = false;
};

enum class AngleClass { Acute, Right, Obtuse, Straight };

AngleShape angle_shape(const Angle& a);
AngleShape angle_shape(const Point& a, const Point& o, const Point& b);
bool angle_congruent(const Angle& a1, const Angle& a2);
bool angle_less(const Angle& a1, const Angle& a2);
bool shape_congruent(const AngleShape& a, const AngleShape& b);
bool shape_less(const AngleShape& a, const AngleShape& b);
AngleClass classify(const AngleShape& s);

// A13 lay-off: the unique point D on the ray with [origin D] ~ s.
// Exact when the required parameter is a perfect rational square;
// otherwise a certified approximation with | |origin D'| - |s| | < 2^-m.
struct LayOff {
    Point point;
    bool exact = true;
    unsigned defect_order = 0;  // meaningful when !exact
};
LayOff lay_off(const Segment& s, const Ray& r, unsigned m);

struct TriangleCorrespondence {
    bool matched = false;
    int perm[3] = {0, 1, 2};  // vertex i of t1 corresponds to vertex perm[i] of t2
};
using Triangle = std::array<Point, 3>;
TriangleCorrespondence triangle_congruence(const Triangle& t1, const Triangle& t2);

struct TriangleOrderReport {
    bool external_angle = false;      // internal < non-adjacent external
    bool side_angle_order = false;    // bigger side opposite bigger angle
    bool triangle_inequality = false; // two sides exceed the third
    bool two_acute = false;           // at least two acute angles
    bool all() const {
        return external_angle && side_angle_order && triangle_inequality && two_acute;
    }
};
TriangleOrderReport triangle_order_checks(const Triangle& t);

// certified strict comparison of |AB| + |BC| vs |AC| per the
// squared-form certificate: exact-equality pre-test, then a dyadic
// enclosure of the cross term at order 64, escalating if undecided
int sum_vs_third_certificate(const Rational& ab2, const Rational& bc2, const Rational& ac2);

// the plane of all points equidistant from a and b
Plane perpendicular_bisector_plane(const Point& a, const Point& b);

}  // namespace geom
