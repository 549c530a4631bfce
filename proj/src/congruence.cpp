#include "geom/congruence.hpp"

#include "geom/enclose.hpp"

#include <algorithm>
#include <stdexcept>

namespace geom {

Rational dist2(const Point& a, const Point& b) { return norm2(b - a); }

SquaredLength squared_length(const Segment& s) {
    Rational v = dist2(s.a, s.b);
    if (v == 0) throw std::invalid_argument("squared_length: degenerate segment");
    return SquaredLength{v};
}

bool seg_congruent(const Segment& s1, const Segment& s2) {
    return squared_length(s1).value == squared_length(s2).value;
}

bool seg_less(const Segment& s1, const Segment& s2) {
    return squared_length(s1).value < squared_length(s2).value;
}

AngleShape angle_shape(const Point& a, const Point& o, const Point& b) {
    if (a == o || b == o) throw std::invalid_argument("angle_shape: side point equals vertex");
    Vec3 u = a - o, v = b - o;
    if (is_zero(cross(u, v))) {
        if (dot(u, v) > 0) throw std::invalid_argument("angle_shape: zero angle");
        return AngleShape{qv(Rational(-1)), true};
    }
    Rational d = dot(u, v);
    if (d == 0) return AngleShape{qv(Rational(0)), false};
    Rational c2 = d * d / (norm2(u) * norm2(v));
    return AngleShape{QuadraticValue(0, c2, d > 0 ? 1 : -1), false};
}

AngleShape angle_shape(const Angle& a) {
    if (a.straight) return AngleShape{qv(Rational(-1)), true};
    return angle_shape(a.side1.through, a.vertex, a.side2.through);
}

bool shape_congruent(const AngleShape& a, const AngleShape& b) {
    return a.straight == b.straight && qv_compare(a.cos, b.cos) == 0;
}

bool shape_less(const AngleShape& a, const AngleShape& b) {
    // cosine is strictly decreasing on (0, pi]
    return qv_compare(a.cos, b.cos) > 0;
}

bool angle_congruent(const Angle& a1, const Angle& a2) {
    return shape_congruent(angle_shape(a1), angle_shape(a2));
}

bool angle_less(const Angle& a1, const Angle& a2) {
    return shape_less(angle_shape(a1), angle_shape(a2));
}

AngleClass classify(const AngleShape& s) {
    if (s.straight) return AngleClass::Straight;
    int sign = qv_sign(s.cos);
    if (sign > 0) return AngleClass::Acute;
    if (sign == 0) return AngleClass::Right;
    return AngleClass::Obtuse;
}

LayOff lay_off(const Segment& s, const Ray& r, unsigned m) {
    Rational s2 = squared_length(s).value;
    Vec3 u = r.through - r.origin;
    Rational t2 = s2 / norm2(u);
    if (auto t = rat_sqrt_exact(t2)) {
        return LayOff{r.origin + *t * u, true, 0};
    }
    // guard bits so that |t' - t| * |u| < 2^-m
    unsigned guard = 1;
    Int ubound = isqrt(rat_ceil(norm2(u))) + 1;
    while ((Int(1) << guard) < ubound) ++guard;
    DyadicInterval iv = sqrt_enclose(t2, m + guard + 1);
    Rational t_hat = dyadic_rat(iv.lo);
    return LayOff{r.origin + t_hat * u, false, m};
}

TriangleCorrespondence triangle_congruence(const Triangle& t1, const Triangle& t2) {
    if (collinear(t1[0], t1[1], t1[2]) || collinear(t2[0], t2[1], t2[2]))
        throw std::invalid_argument("triangle_congruence: degenerate triangle");
    int perm[3] = {0, 1, 2};
    std::sort(perm, perm + 3);
    do {
        bool sides = true;
        for (int i = 0; i < 3 && sides; ++i)
            for (int j = i + 1; j < 3 && sides; ++j)
                if (dist2(t1[i], t1[j]) != dist2(t2[perm[i]], t2[perm[j]])) sides = false;
        if (!sides) continue;
        // SSS shortcut: three matched sides must force the angle matches
        for (int i = 0; i < 3; ++i) {
            AngleShape a1 = angle_shape(t1[(i + 2) % 3], t1[i], t1[(i + 1) % 3]);
            AngleShape a2 = angle_shape(t2[perm[(i + 2) % 3]], t2[perm[i]], t2[perm[(i + 1) % 3]]);
            if (!shape_congruent(a1, a2))
                throw std::logic_error("triangle_congruence: SSS shortcut disagrees with angles");
        }
        TriangleCorrespondence out;
        out.matched = true;
        out.perm[0] = perm[0];
        out.perm[1] = perm[1];
        out.perm[2] = perm[2];
        return out;
    } while (std::next_permutation(perm, perm + 3));
    return TriangleCorrespondence{false, {0, 1, 2}};
}

int sum_vs_third_certificate(const Rational& ab2, const Rational& bc2, const Rational& ac2) {
    // sign of (|AB| + |BC|)^2 - |AC|^2 = (ab2 + bc2 - ac2) + 2*sqrt(ab2*bc2)
    Rational lin = ab2 + bc2 - ac2;
    Rational cross2 = ab2 * bc2;
    // exact-equality pre-test
    if (auto root = rat_sqrt_exact(cross2)) {
        return sgn(lin + 2 * *root);
    }
    for (unsigned order = 64;; order *= 2) {
        DyadicInterval iv = sqrt_enclose(cross2, order);
        Rational lo = lin + 2 * dyadic_rat(iv.lo);
        Rational hi = lin + 2 * dyadic_rat(iv.hi);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (order > 4096)
            throw std::runtime_error("sum_vs_third_certificate: failed to separate");
    }
}

Plane perpendicular_bisector_plane(const Point& a, const Point& b) {
    if (a == b) throw std::invalid_argument("perpendicular_bisector_plane: coincident points");
    return make_plane(a + rat(1, 2) * (b - a), b - a);
}

TriangleOrderReport triangle_order_checks(const Triangle& t) {
    if (collinear(t[0], t[1], t[2]))
        throw std::invalid_argument("triangle_order_checks: degenerate triangle");
    TriangleOrderReport rep;
    AngleShape shape[3];
    Rational opp2[3];  // squared length of the side opposite vertex i
    for (int i = 0; i < 3; ++i) {
        shape[i] = angle_shape(t[(i + 2) % 3], t[i], t[(i + 1) % 3]);
        opp2[i] = dist2(t[(i + 1) % 3], t[(i + 2) % 3]);
    }
    // each internal angle is smaller than each non-adjacent external angle
    rep.external_angle = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            AngleShape ext{qv_negate(shape[j].cos), false};
            if (!shape_less(shape[i], ext)) rep.external_angle = false;
        }
    // a bigger side is opposite a bigger angle, and conversely
    rep.side_angle_order = true;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int side_cmp = sgn(opp2[i] - opp2[j]);
            int angle_cmp = qv_compare(shape[j].cos, shape[i].cos);  // bigger angle = smaller cos
            if (side_cmp != angle_cmp) rep.side_angle_order = false;
        }
    // strict triangle inequality on all three sides
    rep.triangle_inequality = sum_vs_third_certificate(opp2[0], opp2[1], opp2[2]) > 0 &&
                              sum_vs_third_certificate(opp2[1], opp2[2], opp2[0]) > 0 &&
                              sum_vs_third_certificate(opp2[2], opp2[0], opp2[1]) > 0;
    // at least two acute angles
    int acute = 0;
    for (int i = 0; i < 3; ++i)
        if (classify(shape[i]) == AngleClass::Acute) ++acute;
    rep.two_acute = acute >= 2;
    return rep;
}

}  // namespace geom
