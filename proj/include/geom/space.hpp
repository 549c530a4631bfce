#pragma once

#include "geom/rational.hpp"

#include <optional>
#include <vector>

namespace geom {

struct Vec3 {
    Rational x, y, z;

    Vec3() : x(0), y(0), z(0) {}
    Vec3(Rational px, Rational py, Rational pz)
        : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}

    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }
};

using Point = Vec3;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(const Rational& k, const Vec3& v);
Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
Rational norm2(const Vec3& v);
// lexicographic (x, y, z) order, used for canonical tie-breaking
bool lex_less(const Vec3& a, const Vec3& b);
std::string vec_str(const Vec3& v);  // "(p/q, p/q, p/q)"

// primitive integer vector, first nonzero component positive
Vec3 canonical_direction(const Vec3& v);

// Line in canonical form: primitive integer direction and the foot of
// the perpendicular from the origin as base, so equal point sets have
// equal fields.
struct Line {
    Point base;
    Vec3 dir;

    bool operator==(const Line& o) const { return base == o.base && dir == o.dir; }
    bool operator!=(const Line& o) const { return !(*this == o); }
};

struct Plane {
    Point base;
    Vec3 normal;

    bool operator==(const Plane& o) const { return base == o.base && normal == o.normal; }
    bool operator!=(const Plane& o) const { return !(*this == o); }
};

struct Segment {
    Point a, b;  // [AB] = [BA]; non-degenerate segments have a != b
};

struct Ray {
    Point origin;
    Point through;  // origin != through
};

// Proper angle: two rays from a common vertex not on one line.
// Straight angles carry an explicit flag; the plain three-point
// notation is ambiguous for them, the flag removes the ambiguity.
struct Angle {
    Point vertex;
    Ray side1;
    Ray side2;
    bool straight = false;
};

Line line_through(const Point& a, const Point& b);           // a != b
Plane plane_through(const Point& a, const Point& b, const Point& c);  // non-collinear
Line make_line(const Point& base, const Vec3& dir);          // canonicalizes
Plane make_plane(const Point& base, const Vec3& normal);     // canonicalizes
Ray make_ray(const Point& origin, const Point& through);
Angle make_angle(const Point& a, const Point& o, const Point& b);  // rejects zero angles

bool on_line(const Point& p, const Line& l);
bool on_plane(const Point& p, const Plane& pl);
bool line_in_plane(const Line& l, const Plane& pl);
bool on_ray(const Point& p, const Ray& r);
bool on_segment(const Point& p, const Segment& s);   // closed
bool in_open_segment(const Point& p, const Segment& s);
bool collinear(const Point& a, const Point& b, const Point& c);
std::string line_str(const Line& l);
std::string plane_str(const Plane& p);

// (A |> B <| C): B interior to [AC]; false on any degenerate input
bool between(const Point& a, const Point& b, const Point& c);

// sign of the exact linear functional; context plane must carry p and l
int side_of_line(const Point& p, const Line& l, const Plane& context);
int side_of_plane(const Point& p, const Plane& pl);

// exact line/segment crossing; nullopt when none or not transversal
std::optional<Point> line_segment_crossing(const Line& l, const Segment& s);

struct PaschWitness {
    enum class Side { AC, BC } side;
    Point crossing;
};
// Pasch witness: l crosses (AB) at an interior point; returns the one
// other side it hits (never both, never neither)
PaschWitness pasch_witness(const Point& a, const Point& b, const Point& c, const Line& l);

// the monotonic enumeration whose first point is
// lexicographically smaller than its last; needs >= 3 distinct
// collinear points
std::vector<Point> monotonic_order(std::vector<Point> points);
// internal building block, accepts any count >= 1
std::vector<Point> monotonic_order_loose(std::vector<Point> points);

// chord test for ray-in-angle membership, cross-checked against the
// half-plane test
bool ray_in_angle(const Ray& r, const Angle& ang);

bool parallel_lines(const Line& a, const Line& b);
bool parallel_line_plane(const Line& a, const Plane& p);
bool parallel_planes(const Plane& a, const Plane& b);
bool lines_coplanar(const Line& a, const Line& b);
std::optional<Point> line_intersection(const Line& a, const Line& b);

// A20: the unique line through p parallel to l (p may lie on l)
Line parallel_through(const Point& p, const Line& l);
Plane parallel_plane_through(const Point& p, const Plane& pl);

bool perpendicular_lines(const Line& a, const Line& b);
bool perpendicular_line_plane(const Line& a, const Plane& p);
bool perpendicular_planes(const Plane& a, const Plane& b);

}  // namespace geom
