#include "geom/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace geom {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
Vec3 operator*(const Rational& k, const Vec3& v) { return {k * v.x, k * v.y, k * v.z}; }

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

Rational norm2(const Vec3& v) { return dot(v, v); }

bool lex_less(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

std::string vec_str(const Vec3& v) {
    return "(" + rat_str(v.x) + ", " + rat_str(v.y) + ", " + rat_str(v.z) + ")";
}

Vec3 canonical_direction(const Vec3& v) {
    if (is_zero(v)) throw std::invalid_argument("canonical_direction: zero vector");
    Int l = boost::multiprecision::lcm(boost::multiprecision::lcm(den(v.x), den(v.y)), den(v.z));
    Int nx = num(v.x) * (l / den(v.x));
    Int ny = num(v.y) * (l / den(v.y));
    Int nz = num(v.z) * (l / den(v.z));
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(nx), abs(ny)), abs(nz));
    nx /= g; ny /= g; nz /= g;
    Int lead = nx != 0 ? nx : (ny != 0 ? ny : nz);
    if (lead < 0) { nx = -nx; ny = -ny; nz = -nz; }
    return {Rational(nx), Rational(ny), Rational(nz)};
}

Line make_line(const Point& base, const Vec3& dir) {
    Vec3 d = canonical_direction(dir);
    // base: foot of the perpendicular from the origin
    Rational t = dot(base, d) / dot(d, d);
    return Line{base - t * d, d};
}

Plane make_plane(const Point& base, const Vec3& normal) {
    Vec3 n = canonical_direction(normal);
    Rational t = dot(base, n) / dot(n, n);
    return Plane{t * n, n};
}

Line line_through(const Point& a, const Point& b) {
    if (a == b) throw std::invalid_argument("line_through: coincident points");
    return make_line(a, b - a);
}

Plane plane_through(const Point& a, const Point& b, const Point& c) {
    Vec3 n = cross(b - a, c - a);
    if (is_zero(n)) throw std::invalid_argument("plane_through: collinear points");
    return make_plane(a, n);
}

Ray make_ray(const Point& origin, const Point& through) {
    if (origin == through) throw std::invalid_argument("make_ray: degenerate ray");
    return Ray{origin, through};
}

Angle make_angle(const Point& a, const Point& o, const Point& b) {
    if (a == o || b == o) throw std::invalid_argument("make_angle: side point equals vertex");
    Vec3 u = a - o, v = b - o;
    Angle ang;
    ang.vertex = o;
    ang.side1 = Ray{o, a};
    ang.side2 = Ray{o, b};
    if (is_zero(cross(u, v))) {
        if (dot(u, v) > 0) throw std::invalid_argument("make_angle: zero angle");
        ang.straight = true;
    }
    return ang;
}

bool on_line(const Point& p, const Line& l) { return is_zero(cross(p - l.base, l.dir)); }

bool on_plane(const Point& p, const Plane& pl) { return dot(p - pl.base, pl.normal) == 0; }

bool line_in_plane(const Line& l, const Plane& pl) {
    return on_plane(l.base, pl) && dot(l.dir, pl.normal) == 0;
}

bool on_ray(const Point& p, const Ray& r) {
    Vec3 d = r.through - r.origin;
    if (!is_zero(cross(p - r.origin, d))) return false;
    return dot(p - r.origin, d) >= 0;
}

bool collinear(const Point& a, const Point& b, const Point& c) {
    return is_zero(cross(b - a, c - a));
}

bool on_segment(const Point& p, const Segment& s) {
    if (p == s.a || p == s.b) return true;
    return between(s.a, p, s.b);
}

bool in_open_segment(const Point& p, const Segment& s) { return between(s.a, p, s.b); }

bool between(const Point& a, const Point& b, const Point& c) {
    if (a == b || b == c || a == c) return false;
    if (!collinear(a, b, c)) return false;
    Vec3 d = c - a;
    Rational t = dot(b - a, d) / dot(d, d);
    return 0 < t && t < 1;
}

int side_of_plane(const Point& p, const Plane& pl) { return sgn(dot(p - pl.base, pl.normal)); }

int side_of_line(const Point& p, const Line& l, const Plane& context) {
    if (!on_plane(p, context)) throw std::invalid_argument("side_of_line: point off context plane");
    if (!line_in_plane(l, context))
        throw std::invalid_argument("side_of_line: line off context plane");
    return sgn(dot(cross(l.dir, p - l.base), context.normal));
}

std::optional<Point> line_segment_crossing(const Line& l, const Segment& s) {
    // X = s.a + t (s.b - s.a) lies on l iff (X - base) x dir = 0
    Vec3 w = s.b - s.a;
    Vec3 v0 = cross(s.a - l.base, l.dir);
    Vec3 v1 = cross(w, l.dir);
    if (is_zero(v1)) return std::nullopt;  // segment parallel to (or on) the line
    Rational t;
    if (v1.x != 0) t = -v0.x / v1.x;
    else if (v1.y != 0) t = -v0.y / v1.y;
    else t = -v0.z / v1.z;
    if (!is_zero(v0 + t * v1)) return std::nullopt;  // skew
    if (!(0 < t && t < 1)) return std::nullopt;      // not an interior point
    return s.a + t * w;
}

PaschWitness pasch_witness(const Point& a, const Point& b, const Point& c, const Line& l) {
    if (collinear(a, b, c)) throw std::invalid_argument("pasch_witness: collinear triangle");
    Plane pl = plane_through(a, b, c);
    if (!line_in_plane(l, pl)) throw std::invalid_argument("pasch_witness: line off the plane");
    if (on_line(a, l) || on_line(b, l) || on_line(c, l))
        throw std::invalid_argument("pasch_witness: line passes through a vertex");
    if (!line_segment_crossing(l, Segment{a, b}))
        throw std::invalid_argument("pasch_witness: line misses the open side (AB)");
    auto ac = line_segment_crossing(l, Segment{a, c});
    auto bc = line_segment_crossing(l, Segment{b, c});
    // exactness: the line hits exactly one of the two remaining sides
    if (ac.has_value() == bc.has_value())
        throw std::logic_error("pasch_witness: Pasch exactness violated");
    if (ac) return PaschWitness{PaschWitness::Side::AC, *ac};
    return PaschWitness{PaschWitness::Side::BC, *bc};
}

std::vector<Point> monotonic_order_loose(std::vector<Point> points) {
    if (points.size() <= 1) return points;
    Point base = points[0];
    Vec3 d;
    bool have_dir = false;
    for (size_t i = 1; i < points.size(); ++i) {
        if (points[i] != base) {
            d = canonical_direction(points[i] - base);
            have_dir = true;
            break;
        }
    }
    if (!have_dir) throw std::invalid_argument("monotonic_order: all points coincide");
    for (const auto& p : points)
        if (!is_zero(cross(p - base, d)))
            throw std::invalid_argument("monotonic_order: points not collinear");
    std::sort(points.begin(), points.end(), [&](const Point& p, const Point& q) {
        return dot(p - base, d) < dot(q - base, d);
    });
    for (size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i] == points[i + 1])
            throw std::invalid_argument("monotonic_order: duplicate points");
    if (lex_less(points.back(), points.front())) std::reverse(points.begin(), points.end());
    return points;
}

std::vector<Point> monotonic_order(std::vector<Point> points) {
    if (points.size() < 3) throw std::invalid_argument("monotonic_order: needs at least 3 points");
    return monotonic_order_loose(std::move(points));
}

bool ray_in_angle(const Ray& r, const Angle& ang) {
    if (ang.straight) throw std::invalid_argument("ray_in_angle: straight angle has no chord test");
    if (r.origin != ang.vertex) throw std::invalid_argument("ray_in_angle: origin mismatch");
    const Point& o = ang.vertex;
    Vec3 u = ang.side1.through - o;
    Vec3 v = ang.side2.through - o;
    Vec3 w = r.through - o;
    Vec3 n = cross(u, v);  // nonzero for proper angles
    if (dot(w, n) != 0) throw std::invalid_argument("ray_in_angle: ray out of the angle's plane");

    // half-plane membership: w strictly on the v-side of line(o,u) and
    // strictly on the u-side of line(o,v)
    bool half_plane = sgn(dot(cross(u, w), n)) == sgn(dot(cross(u, v), n)) &&
                      sgn(dot(cross(v, w), n)) == sgn(dot(cross(v, u), n));

    // chord test: the ray meets the open chord (A B)
    bool chord = false;
    Segment chordseg{ang.side1.through, ang.side2.through};
    Vec3 seg = chordseg.b - chordseg.a;
    Vec3 v0 = cross(chordseg.a - o, w);
    Vec3 v1 = cross(seg, w);
    if (!is_zero(v1)) {
        Rational t;
        if (v1.x != 0) t = -v0.x / v1.x;
        else if (v1.y != 0) t = -v0.y / v1.y;
        else t = -v0.z / v1.z;
        if (is_zero(v0 + t * v1) && 0 < t && t < 1) {
            Point x = chordseg.a + t * seg;
            chord = dot(x - o, w) > 0;  // on the ray, not its opposite
        }
    }
    if (chord != half_plane) throw std::logic_error("ray_in_angle: dual methods disagree");
    return chord;
}

bool lines_coplanar(const Line& a, const Line& b) {
    // determinant test on (dir_a, dir_b, base_b - base_a)
    return dot(cross(a.dir, b.dir), b.base - a.base) == 0;
}

std::optional<Point> line_intersection(const Line& a, const Line& b) {
    if (a == b) return std::nullopt;  // whole-line intersection, no single point
    if (!lines_coplanar(a, b)) return std::nullopt;
    Vec3 v1 = cross(a.dir, b.dir);
    if (is_zero(v1)) return std::nullopt;  // parallel
    // solve a.base + t a.dir on b: ((a.base + t a.dir) - b.base) x b.dir = 0
    Vec3 v0 = cross(a.base - b.base, b.dir);
    Vec3 vt = cross(a.dir, b.dir);
    Rational t;
    if (vt.x != 0) t = -v0.x / vt.x;
    else if (vt.y != 0) t = -v0.y / vt.y;
    else t = -v0.z / vt.z;
    Point p = a.base + t * a.dir;
    if (!on_line(p, b)) return std::nullopt;
    return p;
}

bool parallel_lines(const Line& a, const Line& b) {
    // definitional route: same line, or coplanar with empty intersection
    bool defn = (a == b) || (lines_coplanar(a, b) && !line_intersection(a, b).has_value());
    // analytic route: proportional directions (canonical forms equal)
    bool analytic = a.dir == b.dir;
    if (defn != analytic) throw std::logic_error("parallel_lines: dual routes disagree");
    return analytic;
}

bool parallel_line_plane(const Line& a, const Plane& p) {
    bool analytic = dot(a.dir, p.normal) == 0;
    // definitional route: contained, or the crossing equation (base + t dir - p.base).n = 0
    // has no solution in t
    Rational c1 = dot(a.dir, p.normal);
    // c1 != 0: exactly one crossing point; c1 == 0: contained or disjoint
    bool defn = (c1 == 0);
    if (defn != analytic) throw std::logic_error("parallel_line_plane: dual routes disagree");
    return analytic;
}

bool parallel_planes(const Plane& a, const Plane& b) {
    bool analytic = a.normal == b.normal;
    // definitional route: coincide, or no common points (non-proportional
    // normals force a common line)
    bool defn;
    if (!is_zero(cross(a.normal, b.normal))) defn = false;
    else defn = (a == b) || !on_plane(b.base, a);
    if (defn != analytic) throw std::logic_error("parallel_planes: dual routes disagree");
    return analytic;
}

Line parallel_through(const Point& p, const Line& l) { return make_line(p, l.dir); }

Plane parallel_plane_through(const Point& p, const Plane& pl) { return make_plane(p, pl.normal); }

bool perpendicular_lines(const Line& a, const Line& b) { return dot(a.dir, b.dir) == 0; }

bool perpendicular_line_plane(const Line& a, const Plane& p) {
    return is_zero(cross(a.dir, p.normal));
}

bool perpendicular_planes(const Plane& a, const Plane& b) { return dot(a.normal, b.normal) == 0; }

std::string line_str(const Line& l) { return "line(" + vec_str(l.base) + "; " + vec_str(l.dir) + ")"; }

std::string plane_str(const Plane& p) {
    return "plane(" + vec_str(p.base) + "; " + vec_str(p.normal) + ")";
}

}  // namespace geom
