#pragma once

#include "geom/congruence.hpp"
#include "geom/enclose.hpp"
#include "geom/transforms.hpp"

namespace geom {

inline constexpr unsigned kDefaultOrder = 53;

// Cartesian coordinate system on a line: origin O and unit point E.
struct LineFrame {
    Point origin;
    Point unit;  // origin != unit

    Line line() const { return line_through(origin, unit); }
};

LineFrame make_frame(const Point& o, const Point& e);

enum class QuantityKind { Length, Angle };

// A measured quantity: the exact value (rational or quadratic) where
// one exists, a certified dyadic enclosure at the working order, and
// an exact-pi tag for straight angles.
struct Measurement {
    QuantityKind kind = QuantityKind::Length;
    QuadraticValue exact;     // meaningful when has_exact
    bool has_exact = true;
    bool is_pi = false;       // straight angle: the exact value is pi itself
    DyadicInterval enclosure;
    unsigned order = kDefaultOrder;
};

// signed coordinate of X in the frame; X must lie on the frame's line
Measurement coordinate(const Point& x, const LineFrame& frame, unsigned m = kDefaultOrder);
Rational coordinate_exact(const Point& x, const LineFrame& frame);

// |PQ| / |OE| as an exact quadratic value plus its enclosure
Measurement length(const Point& p, const Point& q, const LineFrame& frame,
                   unsigned m = kDefaultOrder);
QuadraticValue length_exact(const Point& p, const Point& q, const LineFrame& frame);

// radian measure: straight angles yield the exact pi tag, others an
// arccos enclosure of the exact cosine
Measurement angle_measure(const Angle& a, unsigned m = kDefaultOrder);
Measurement angle_measure(const Point& a, const Point& o, const Point& b,
                          unsigned m = kDefaultOrder);

// the independent dyadic gauge: the count of 2^-m-fold bisected unit
// copies that fit into [PQ], found by exact comparisons only
Int gauge_count(const Point& p, const Point& q, const LineFrame& frame, unsigned m);

struct FreeVector {
    Vec3 components;

    bool operator==(const FreeVector& o) const { return components == o.components; }
    bool operator!=(const FreeVector& o) const { return !(*this == o); }
};

FreeVector vec(const Point& a, const Point& b);
FreeVector vec_add(const FreeVector& u, const FreeVector& v);
FreeVector vec_scale(const Rational& k, const FreeVector& u);

// codirectedness of directed segments: monotonic-enumeration signs on
// one line, the non-crossing-connectors test on parallel lines; both
// must agree with the analytic positive-scalar criterion
bool codirected(const Segment& u_rep, const Segment& v_rep);

Isometry translation_of_vector(const FreeVector& u);
FreeVector vector_of_translation(const Isometry& f);  // requires a translation

}  // namespace geom
