#include "geom/measure.hpp"

#include <stdexcept>

namespace geom {

LineFrame make_frame(const Point& o, const Point& e) {
    if (o == e) throw std::invalid_argument("make_frame: origin equals unit point");
    return LineFrame{o, e};
}

Rational coordinate_exact(const Point& x, const LineFrame& frame) {
    Vec3 e = frame.unit - frame.origin;
    if (!is_zero(cross(x - frame.origin, e)))
        throw std::invalid_argument("coordinate: point off the frame's line");
    return dot(x - frame.origin, e) / norm2(e);
}

Measurement coordinate(const Point& x, const LineFrame& frame, unsigned m) {
    Rational xi = coordinate_exact(x, frame);
    Measurement out;
    out.kind = QuantityKind::Length;
    out.exact = qv(xi);
    out.has_exact = true;
    out.enclosure = dyadic_approx(xi, m);
    out.order = m;
    return out;
}

QuadraticValue length_exact(const Point& p, const Point& q, const LineFrame& frame) {
    if (p == q) throw std::invalid_argument("length: degenerate segment");
    Rational ratio2 = dist2(p, q) / dist2(frame.origin, frame.unit);
    return qv_sqrt(ratio2);
}

Measurement length(const Point& p, const Point& q, const LineFrame& frame, unsigned m) {
    QuadraticValue xi = length_exact(p, q, frame);
    Measurement out;
    out.kind = QuantityKind::Length;
    out.exact = xi;
    out.has_exact = true;
    out.enclosure = sqrt_enclose(xi.radicand == 0 ? xi.base * xi.base : xi.radicand, m);
    out.order = m;
    return out;
}

Measurement angle_measure(const Angle& a, unsigned m) {
    AngleShape shape = angle_shape(a);
    Measurement out;
    out.kind = QuantityKind::Angle;
    out.exact = shape.cos;  // the exact cosine rides along with the enclosure
    out.has_exact = true;
    out.order = m;
    if (shape.straight) {
        out.is_pi = true;
        out.enclosure = pi_enclose(m);
        return out;
    }
    out.enclosure = arccos_enclose(shape.cos, m);
    return out;
}

Measurement angle_measure(const Point& a, const Point& o, const Point& b, unsigned m) {
    return angle_measure(make_angle(a, o, b), m);
}

Int gauge_count(const Point& p, const Point& q, const LineFrame& frame, unsigned m) {
    // largest k with k * (|OE| / 2^m) <= |PQ|, by exact comparisons only
    Rational pq2 = dist2(p, q);
    Rational oe2 = dist2(frame.origin, frame.unit);
    Rational bound = pow2_rat(2 * static_cast<int>(m)) * pq2 / oe2;  // (2^m |PQ|/|OE|)^2
    Int lo = 0, hi = 1;
    while (Rational(hi) * Rational(hi) <= bound) hi <<= 1;
    while (lo < hi - 1) {
        Int mid = (lo + hi) / 2;
        if (Rational(mid) * Rational(mid) <= bound) lo = mid;
        else hi = mid;
    }
    return lo;
}

FreeVector vec(const Point& a, const Point& b) { return FreeVector{b - a}; }

FreeVector vec_add(const FreeVector& u, const FreeVector& v) {
    return FreeVector{u.components + v.components};
}

FreeVector vec_scale(const Rational& k, const FreeVector& u) {
    return FreeVector{k * u.components};
}

namespace {

// closed-segment intersection, exact
bool segments_intersect(const Segment& s1, const Segment& s2) {
    Vec3 d1 = s1.b - s1.a, d2 = s2.b - s2.a, w = s2.a - s1.a;
    Vec3 n = cross(d1, d2);
    if (!is_zero(n)) {
        if (dot(n, w) != 0) return false;  // skew
        Rational nn = norm2(n);
        Rational t1 = dot(cross(w, d2), n) / nn;
        Rational t2 = dot(cross(w, d1), n) / nn;
        return 0 <= t1 && t1 <= 1 && 0 <= t2 && t2 <= 1;
    }
    // parallel directions
    if (!is_zero(cross(w, d1))) return false;  // distinct parallel lines
    // collinear: overlap of parameter ranges along d1
    Rational len = norm2(d1);
    Rational ta = 0, tb = 1;
    Rational tc = dot(s2.a - s1.a, d1) / len;
    Rational td = dot(s2.b - s1.a, d1) / len;
    if (tc > td) std::swap(tc, td);
    return !(td < ta || tb < tc);
}

}  // namespace

bool codirected(const Segment& u_rep, const Segment& v_rep) {
    if (u_rep.a == u_rep.b || v_rep.a == v_rep.b)
        throw std::invalid_argument("codirected: degenerate representative");
    Vec3 u = u_rep.b - u_rep.a, v = v_rep.b - v_rep.a;
    bool analytic = is_zero(cross(u, v)) && dot(u, v) > 0;

    bool geometric;
    Line lu = line_through(u_rep.a, u_rep.b);
    if (on_line(v_rep.a, lu) && on_line(v_rep.b, lu)) {
        // one line: enumeration signs over a monotonic ordering of the
        // deduplicated endpoint labels
        std::vector<Point> pts = {u_rep.a, u_rep.b, v_rep.a, v_rep.b};
        std::vector<Point> uniq;
        for (const auto& p : pts) {
            bool seen = false;
            for (const auto& q : uniq) seen = seen || (q == p);
            if (!seen) uniq.push_back(p);
        }
        std::vector<Point> ord = monotonic_order_loose(uniq);
        auto pos = [&ord](const Point& p) {
            for (size_t i = 0; i < ord.size(); ++i)
                if (ord[i] == p) return static_cast<int>(i);
            throw std::logic_error("codirected: point lost in enumeration");
        };
        int si = pos(u_rep.b) - pos(u_rep.a);
        int sj = pos(v_rep.b) - pos(v_rep.a);
        geometric = (si > 0) == (sj > 0);
    } else if (is_zero(cross(u, v))) {
        // parallel lines: the ending connector [BD]
        // must not cross the starting connector [AC]
        geometric = !segments_intersect(Segment{u_rep.b, v_rep.b}, Segment{u_rep.a, v_rep.a});
    } else {
        geometric = false;  // not collinear as vectors
    }
    if (geometric != analytic) throw std::logic_error("codirected: dual methods disagree");
    return analytic;
}

Isometry translation_of_vector(const FreeVector& u) { return translation(u.components); }

FreeVector vector_of_translation(const Isometry& f) {
    if (!is_translation(f))
        throw std::invalid_argument("vector_of_translation: linear part is not the identity");
    return FreeVector{f.translation()};
}

}  // namespace geom
