#include "geom/props.hpp"

#include "geom/congruence.hpp"
#include "geom/measure.hpp"
#include "geom/space.hpp"
#include "geom/transforms.hpp"

namespace geom {

namespace {

using Rng = std::mt19937_64;

Rational rr(Rng& g, long maxn = 20, long maxd = 12) {
    std::uniform_int_distribution<long> n(-maxn, maxn);
    std::uniform_int_distribution<long> d(1, maxd);
    return Rational(n(g), d(g));
}

Rational rr_nonzero(Rng& g, long maxn = 20, long maxd = 12) {
    for (;;) {
        Rational r = rr(g, maxn, maxd);
        if (r != 0) return r;
    }
}

Point rp(Rng& g) { return {rr(g), rr(g), rr(g)}; }

Vec3 rdir(Rng& g) {
    for (;;) {
        Vec3 v = rp(g);
        if (!is_zero(v)) return v;
    }
}

// a 2D direction of exactly rational norm (Pythagorean), embedded in
// the plane orthogonal to the z axis
Vec3 pythagorean_dir(Rng& g) {
    std::uniform_int_distribution<long> d(1, 6);
    long m = d(g), n = d(g);
    if (m == n) ++m;
    long a = m * m - n * n, b = 2 * m * n;
    if (g() % 2) a = -a;
    if (g() % 2) b = -b;
    return {Rational(a), Rational(b), 0};
}

Plane rplane(Rng& g) { return make_plane(rp(g), rdir(g)); }

Isometry rword(Rng& g, int max_len = 4) {
    std::vector<Plane> w;
    int len = static_cast<int>(g() % (max_len + 1));
    for (int i = 0; i < len; ++i) w.push_back(rplane(g));
    return Isometry::from_word(std::move(w));
}

struct CollinearTriple {
    Point a, b, c;
    Rational t1, t2;  // parameters of b, c along the direction (a at 0)
};

CollinearTriple rcollinear(Rng& g) {
    CollinearTriple out;
    out.a = rp(g);
    Vec3 d = rdir(g);
    do { out.t1 = rr(g); } while (out.t1 == 0);
    do { out.t2 = rr(g); } while (out.t2 == 0 || out.t2 == out.t1);
    out.b = out.a + out.t1 * d;
    out.c = out.a + out.t2 * d;
    return out;
}

struct TriangleGen {
    Point a, b, c;
};

TriangleGen rtriangle(Rng& g) {
    for (;;) {
        TriangleGen t{rp(g), rp(g), rp(g)};
        if (!collinear(t.a, t.b, t.c)) return t;
    }
}

// ---- order group ----------------------------------------------------

bool prop_a9_symmetry(Rng& g) {
    CollinearTriple t = rcollinear(g);
    return between(t.a, t.b, t.c) == between(t.c, t.b, t.a);
}

bool prop_a10_extension(Rng& g) {
    Point a = rp(g);
    Vec3 d = rdir(g);
    Point b = a + rr_nonzero(g) * d;
    Point c = b + (b - a);
    return between(a, b, c);
}

bool prop_a11_exactly_one(Rng& g) {
    CollinearTriple t = rcollinear(g);
    int cnt = (between(t.a, t.b, t.c) ? 1 : 0) + (between(t.b, t.c, t.a) ? 1 : 0) +
              (between(t.c, t.a, t.b) ? 1 : 0);
    return cnt == 1;  // the strengthened form: exactly one, not at most one
}

bool prop_a12_pasch(Rng& g) {
    TriangleGen t = rtriangle(g);
    std::uniform_int_distribution<long> cut(1, 7);
    Rational s(cut(g), 8);
    Point mid = t.a + s * (t.b - t.a);
    // a line in the plane through mid, generically avoiding the vertices
    Vec3 d = (t.c - mid) + rr(g) * (t.b - t.a);
    if (is_zero(d)) return true;  // skip degenerate draw
    Line l = make_line(mid, d);
    if (on_line(t.a, l) || on_line(t.b, l) || on_line(t.c, l)) return true;
    if (!line_segment_crossing(l, Segment{t.a, t.b})) return true;
    // pasch_witness throws if zero or two sides are hit
    try {
        pasch_witness(t.a, t.b, t.c, l);
    } catch (const std::logic_error&) {
        return false;
    }
    return true;
}

bool prop_th21_exterior(Rng& g) {
    Point a = rp(g);
    Vec3 d = rdir(g);
    Point b = a + rr_nonzero(g) * d;
    if (a == b) return true;
    Point c = b + (b - a);
    return !on_segment(c, Segment{a, b});
}

bool prop_th22_two_exterior(Rng& g) {
    Point a = rp(g);
    Vec3 d = rdir(g);
    Point b = a + rr_nonzero(g) * d;
    Point c1 = b + (b - a);
    Point c2 = a + (a - b);
    return c1 != c2 && !on_segment(c1, Segment{a, b}) && !on_segment(c2, Segment{a, b});
}

bool prop_th23_interior(Rng& g) {
    Point a = rp(g);
    Point b = a + rr_nonzero(g) * rdir(g);
    Point m = a + rat(1, 2) * (b - a);
    return between(a, m, b);
}

bool prop_th31_33_segment_algebra(Rng& g) {
    Point a = rp(g);
    Vec3 d = rdir(g);
    Rational t1 = rat_abs(rr_nonzero(g)), t2 = rat_abs(rr_nonzero(g));
    Point b = a + t1 * d, c = a + (t1 + t2) * d;
    if (!between(a, b, c)) return false;
    Segment ab{a, b}, bc{b, c}, ac{a, c};
    std::uniform_int_distribution<long> num(0, 16);
    for (int i = 0; i < 8; ++i) {
        Rational t = (t1 + t2) * Rational(num(g), 16);
        Point x = a + t * d;
        bool in_ab = on_segment(x, ab), in_bc = on_segment(x, bc), in_ac = on_segment(x, ac);
        if ((in_ab || in_bc) != in_ac) return false;       // containment + union
        if (in_ab && in_bc && x != b) return false;        // intersection is {B}
    }
    return true;
}

bool prop_th41_42_enumeration(Rng& g) {
    Point a = rp(g);
    Vec3 d = rdir(g);
    std::vector<Point> pts;
    std::vector<Rational> params;
    int n = 3 + static_cast<int>(g() % 4);
    while (static_cast<int>(params.size()) < n) {
        Rational t = rr(g);
        bool dup = false;
        for (const auto& s : params) dup = dup || (s == t);
        if (!dup) params.push_back(t);
    }
    for (const auto& t : params) pts.push_back(a + t * d);
    auto ord = monotonic_order(pts);
    for (size_t i = 1; i + 1 < ord.size(); ++i)
        if (!between(ord[i - 1], ord[i], ord[i + 1])) return false;
    // insertion step: extend by a fresh point and re-enumerate
    Rational extra;
    for (;;) {
        extra = rr(g);
        bool dup = false;
        for (const auto& s : params) dup = dup || (s == extra);
        if (!dup) break;
    }
    pts.push_back(a + extra * d);
    auto ord2 = monotonic_order(pts);
    for (size_t i = 1; i + 1 < ord2.size(); ++i)
        if (!between(ord2[i - 1], ord2[i], ord2[i + 1])) return false;
    return ord2.size() == ord.size() + 1;
}

bool prop_th43_precedence(Rng& g) {
    CollinearTriple t = rcollinear(g);
    // precedence = parameter order; between iff strictly inside
    bool b1 = between(t.a, t.b, t.c);
    bool oracle = (0 < t.t1 && t.t1 < t.t2) || (t.t2 < t.t1 && t.t1 < 0);
    return b1 == oracle;
}

bool prop_partition_line(Rng& g) {
    // a point O splits a line into two open rays and itself
    Point o = rp(g);
    Vec3 d = rdir(g);
    Point x = o + rr(g) * d;
    Point plus = o + d;
    bool on_pos = on_ray(x, Ray{o, plus}) && x != o;
    bool on_neg = on_ray(x, Ray{o, o - d}) && x != o;
    bool is_o = x == o;
    return (on_pos ? 1 : 0) + (on_neg ? 1 : 0) + (is_o ? 1 : 0) == 1;
}

bool prop_partition_plane(Rng& g) {
    // half-plane partition with the segment-crossing characterization of same-sidedness
    Plane ctx = make_plane({0, 0, 0}, {0, 0, 1});
    Line l = make_line({rr(g), rr(g), 0}, {rr_nonzero(g), rr(g), 0});
    Point p{rr(g), rr(g), 0}, q{rr(g), rr(g), 0};
    int sp = side_of_line(p, l, ctx), sq = side_of_line(q, l, ctx);
    if (sp == 0 || sq == 0 || p == q) return true;
    bool crosses = line_segment_crossing(l, Segment{p, q}).has_value();
    return (sp == sq) == !crosses;
}

bool prop_partition_space(Rng& g) {
    Plane pl = rplane(g);
    Point p = rp(g), q = rp(g);
    int sp = side_of_plane(p, pl), sq = side_of_plane(q, pl);
    if (sp == 0 || sq == 0 || p == q) return true;
    // same side iff the connecting segment misses the plane
    Vec3 w = q - p;
    Rational c1 = dot(w, pl.normal);
    bool crosses = false;
    if (c1 != 0) {
        Rational t = dot(pl.base - p, pl.normal) / c1;
        crosses = 0 < t && t < 1;
    }
    return (sp == sq) == !crosses;
}

// ---- congruence group ------------------------------------------------

bool prop_a13_layoff_unique(Rng& g) {
    // exact instances: segment congruent to t * |dir| laid on the ray
    Point o = rp(g);
    Vec3 d = rdir(g);
    Rational t = rat_abs(rr_nonzero(g));
    Point far1 = o + t * d;
    Segment s{o, far1};
    Ray r{rp(g), Point{}};
    r.through = r.origin + d;  // same direction: ratio of norms is t^2
    LayOff l1 = lay_off(s, r, 20);
    if (!l1.exact) return false;
    // a congruent representative elsewhere lays off to the same point
    Point shift = rp(g);
    Segment s2{o + shift, far1 + shift};
    LayOff l2 = lay_off(s2, r, 20);
    return l2.exact && l2.point == l1.point && dist2(r.origin, l1.point) == dist2(s.a, s.b);
}

bool prop_a15_additivity(Rng& g) {
    Point a = rp(g), k = rp(g);
    Vec3 u = rdir(g);
    Vec3 v{u.y, u.z, u.x};
    Rational t1 = rat_abs(rr_nonzero(g)), t2 = rat_abs(rr_nonzero(g));
    Point b = a + t1 * u, c = a + (t1 + t2) * u;
    Point l = k + t1 * v, m = k + (t1 + t2) * v;
    return seg_congruent(Segment{a, c}, Segment{k, m});
}

bool prop_a16_unique(Rng& g) {
    Rational x1 = rr(g), x2 = rr(g);
    Rational y1 = rat_abs(rr_nonzero(g)), y2 = rat_abs(rr_nonzero(g));
    Point o{0, 0, 0};
    AngleShape s1 = angle_shape({1, 0, 0}, o, {x1, y1, 0});
    AngleShape s2 = angle_shape({1, 0, 0}, o, {x2, y2, 0});
    if (!shape_congruent(s1, s2)) return true;
    return canonical_direction({x1, y1, 0}) == canonical_direction({x2, y2, 0});
}

Point scramble(const Point& p, unsigned mode, const Vec3& shift) {
    Point q = p;
    switch (mode % 6) {
        case 0: break;
        case 1: q = {p.y, p.z, p.x}; break;
        case 2: q = {p.z, p.x, p.y}; break;
        case 3: q = {-p.x, p.y, p.z}; break;
        case 4: q = {p.y, -p.x, p.z}; break;
        case 5: q = {-p.z, p.y, -p.x}; break;
    }
    return q + shift;
}

bool prop_a17_sas(Rng& g) {
    TriangleGen t = rtriangle(g);
    unsigned mode = static_cast<unsigned>(g() % 6);
    Vec3 shift = rp(g) - Point{0, 0, 0};
    Point ta = scramble(t.a, mode, shift), tb = scramble(t.b, mode, shift),
          tc = scramble(t.c, mode, shift);
    return shape_congruent(angle_shape(t.a, t.b, t.c), angle_shape(ta, tb, tc)) &&
           shape_congruent(angle_shape(t.a, t.c, t.b), angle_shape(ta, tc, tb));
}

bool prop_sas_asa_sss(Rng& g) {
    TriangleGen t = rtriangle(g);
    Isometry f = rword(g);
    Triangle t1{t.a, t.b, t.c};
    Triangle t2{f.apply(t.a), f.apply(t.b), f.apply(t.c)};
    auto corr = triangle_congruence(t1, t2);
    if (!corr.matched) return false;
    // ASA premises under the identity correspondence
    bool asa = seg_congruent(Segment{t1[0], t1[1]}, Segment{t2[0], t2[1]}) &&
               shape_congruent(angle_shape(t1[1], t1[0], t1[2]), angle_shape(t2[1], t2[0], t2[2])) &&
               shape_congruent(angle_shape(t1[0], t1[1], t1[2]), angle_shape(t2[0], t2[1], t2[2]));
    return asa;
}

bool prop_right_angles_congruent(Rng& g) {
    Vec3 u = rdir(g), w = rdir(g);
    Vec3 v = cross(u, w);
    if (is_zero(v)) return true;
    Vec3 u2 = rdir(g), w2 = rdir(g);
    Vec3 v2 = cross(u2, w2);
    if (is_zero(v2)) return true;
    Point o1 = rp(g), o2 = rp(g);
    AngleShape s1 = angle_shape(o1 + u, o1, o1 + v);
    AngleShape s2 = angle_shape(o2 + u2, o2, o2 + v2);
    return classify(s1) == AngleClass::Right && classify(s2) == AngleClass::Right &&
           shape_congruent(s1, s2);
}

bool prop_seg_comparison_laws(Rng& g) {
    Point a = rp(g), b = rp(g), c = rp(g), d = rp(g), e = rp(g), f = rp(g);
    if (a == b || c == d || e == f) return true;
    Segment s1{a, b}, s2{c, d}, s3{e, f};
    bool l12 = seg_less(s1, s2), l21 = seg_less(s2, s1), c12 = seg_congruent(s1, s2);
    if (l12 && (c12 || l21)) return false;
    if (!(l12 || l21 || c12)) return false;
    if (l12 && seg_less(s2, s3) && !seg_less(s1, s3)) return false;
    return true;
}

bool prop_angle_comparison_laws(Rng& g) {
    Point o = rp(g);
    Point pts[4] = {rp(g), rp(g), rp(g), rp(g)};
    for (const auto& p : pts)
        if (p == o) return true;
    AngleShape s1, s2;
    try {
        s1 = angle_shape(pts[0], o, pts[1]);
        s2 = angle_shape(pts[2], o, pts[3]);
    } catch (const std::invalid_argument&) {
        return true;
    }
    bool l12 = shape_less(s1, s2), l21 = shape_less(s2, s1), cc = shape_congruent(s1, s2);
    return (l12 ? !(l21 || cc) : true) && (l12 || l21 || cc);
}

bool prop_interior_smaller(Rng& g) {
    Point a = rp(g);
    Vec3 d = rdir(g);
    Point b = a + d;
    std::uniform_int_distribution<long> num(1, 63);
    Rational t1(num(g), 64), t2(num(g), 64);
    if (t1 == t2) return true;
    return seg_less(Segment{a + t1 * d, a + t2 * d}, Segment{a, b});
}

bool prop_triangle_order(Rng& g) {
    TriangleGen t = rtriangle(g);
    return triangle_order_checks(Triangle{t.a, t.b, t.c}).all();
}

bool prop_isosceles(Rng& g) {
    Rational half = rat_abs(rr_nonzero(g));
    Rational y = rr(g), z = rr(g);
    if (y == 0 && z == 0) return true;
    Point a{-half, 0, 0}, b{half, 0, 0}, apex{0, y, z};
    return shape_congruent(angle_shape(apex, a, b), angle_shape(apex, b, a));
}

// ---- transforms group -------------------------------------------------

bool prop_word_affine_coherence(Rng& g) {
    Isometry f = rword(g, 5);
    for (int i = 0; i < 5; ++i) {
        Point p = rp(g);
        if (!(f.apply(p) == f.apply_word(p))) return false;
    }
    return true;
}

bool prop_reflection_involution(Rng& g) {
    Plane p = rplane(g);
    return compose(reflect_plane(p), reflect_plane(p)).is_identity();
}

bool prop_rotation_calculus(Rng& g) {
    Point base = rp(g);
    Line axis = make_line(base, {0, 0, 1});
    Point h = base + pythagorean_dir(g);
    Point k = base + pythagorean_dir(g);
    Point l = base + pythagorean_dir(g);
    Isometry t_hk = rotation(axis, h, k);
    Isometry t_kl = rotation(axis, k, l);
    Isometry t_hl = rotation(axis, h, l);
    if (!(compose(t_kl, t_hk) == t_hl)) return false;
    // commutation with a reflection through the axis (second calculus law)
    Plane m = make_plane(base, cross(Vec3{0, 0, 1}, pythagorean_dir(g)));
    Isometry zm = reflect_plane(m);
    Isometry t_kh = rotation(axis, k, h);
    if (!(compose(t_hk, zm) == compose(zm, t_kh))) return false;
    // third law: the reflection is an involution
    if (!compose(zm, zm).is_identity()) return false;
    // fourth law: z_a o z_b = theta_{h, z_a(h)} for planes through the axis
    Plane beta = make_plane(base, cross(Vec3{0, 0, 1}, h - base));
    Isometry za_zb = compose(zm, reflect_plane(beta));
    Point image = zm.apply_word(h);
    Vec3 vi = image - project_line(image, axis);
    if (is_zero(vi)) return false;
    if (!(za_zb == rotation(axis, h, image))) return false;
    // same-axis rotations commute
    return compose(t_hk, t_kl) == compose(t_kl, t_hk);
}

bool prop_rotation_composition(Rng& g) {
    // rotations about intersecting axes compose to a rotation
    Point o = rp(g);
    Line a1 = make_line(o, {0, 0, 1});
    Line a2 = make_line(o, {1, 0, 0});
    Vec3 d1 = pythagorean_dir(g);
    Vec3 d2 = pythagorean_dir(g);
    Isometry r1 = rotation(a1, o + d1, o + Vec3{-d1.y, d1.x, 0});  // quarter turn
    Isometry r2 = rotation(a2, o + Vec3{0, d2.x, d2.y}, o + Vec3{0, -d2.y, d2.x});
    Isometry c = compose(r2, r1);
    if (mat_det(c.linear()) != 1) return false;
    if (c.is_identity()) return true;
    auto fl = fixed_line_of(c);
    if (!fl) return false;
    Point probe = rp(g);
    bool fixed = c.apply(probe) == probe;
    return fixed == on_line(probe, *fl);
}

bool prop_parity_xor(Rng& g) {
    Isometry f = rword(g), h = rword(g);
    Parity pf = parity(f), ph = parity(h), pc = parity(compose(f, h));
    return (pc == Parity::Even) == ((pf == Parity::Even) == (ph == Parity::Even));
}

bool prop_translation_group(Rng& g) {
    Vec3 u = rp(g) - Point{0, 0, 0}, v = rp(g) - Point{0, 0, 0};
    Isometry tu = translation(u), tv = translation(v);
    if (!(compose(tu, tv) == translation(u + v))) return false;      // closure
    if (!(compose(tu, tv) == compose(tv, tu))) return false;         // commutativity
    // constant displacement field
    Point x = rp(g), y = rp(g);
    if (!(tu.apply(x) - x == tu.apply(y) - y)) return false;
    // a composition with a stable point is the identity
    if (!compose(tu, translation(-u)).is_identity()) return false;
    // same for three translations
    if (!compose(compose(tu, tv), translation(-(u + v))).is_identity()) return false;
    // nonzero translations have no stable points
    if (!is_zero(u) && has_fixed_point(tu)) return false;
    return true;
}

bool prop_group_laws(Rng& g) {
    Isometry f = rword(g), h = rword(g), k = rword(g);
    return compose(f, inverse(f)).is_identity() &&
           compose(compose(f, h), k) == compose(f, compose(h, k)) &&
           compose(f, Isometry()) == f;
}

bool prop_conjugation(Rng& g) {
    Isometry f = rword(g);
    Plane beta = rplane(g);
    if (!(conjugate(f, reflect_plane(beta)) == reflect_plane(f.apply(beta)))) return false;
    Vec3 c = rp(g) - Point{0, 0, 0};
    return conjugate(f, translation(c)) == translation(f.apply_vector(c));
}

bool prop_rotation_fixed_set(Rng& g) {
    Point base = rp(g);
    Line axis = make_line(base, rdir(g));
    Vec3 u = rdir(g);
    Vec3 perp = cross(axis.dir, u);
    if (is_zero(perp)) return true;
    Isometry rot = rotation(axis, base + perp, base - perp);  // half turn, always exact
    if (rot.is_identity()) return true;
    auto fl = fixed_line_of(rot);
    return fl.has_value() && *fl == axis;
}

bool prop_isometry_invariance(Rng& g) {
    Isometry f = rword(g);
    CollinearTriple t = rcollinear(g);
    if (between(t.a, t.b, t.c) && !between(f.apply(t.a), f.apply(t.b), f.apply(t.c)))
        return false;
    TriangleGen tri = rtriangle(g);
    if (collinear(f.apply(tri.a), f.apply(tri.b), f.apply(tri.c))) return false;
    return dist2(tri.a, tri.b) == dist2(f.apply(tri.a), f.apply(tri.b));
}

bool prop_perp_bisector(Rng& g) {
    Point a = rp(g), b = rp(g);
    if (a == b) return true;
    Plane pbp = perpendicular_bisector_plane(a, b);
    Point m = rp(g);
    return (dist2(a, m) == dist2(b, m)) == on_plane(m, pbp);
}

bool prop_extension_conditions(Rng& g) {
    // the affine form is the canonical line-to-plane-to-space extension;
    // projections commute with the motion
    Isometry f = rword(g);
    Line a = make_line(rp(g), rdir(g));
    Point x = rp(g);
    Point foot = project_line(x, a);
    if (!(f.apply(foot) == project_line(f.apply(x), f.apply(a)))) return false;
    return dist2(x, foot) == dist2(f.apply(x), f.apply(foot));
}

// ---- vectors group ----------------------------------------------------

bool prop_vector_laws(Rng& g) {
    FreeVector a{rp(g)}, b{rp(g)}, c{rp(g)};
    Rational k = rr(g), q = rr(g);
    return vec_add(a, b) == vec_add(b, a) &&
           vec_add(vec_add(a, b), c) == vec_add(a, vec_add(b, c)) &&
           vec_add(a, FreeVector{{0, 0, 0}}) == a &&
           vec_add(a, vec_scale(-1, a)) == FreeVector{{0, 0, 0}} &&
           vec_scale(k, vec_add(a, b)) == vec_add(vec_scale(k, a), vec_scale(k, b)) &&
           vec_scale(k + q, a) == vec_add(vec_scale(k, a), vec_scale(q, a)) &&
           vec_scale(k * q, a) == vec_scale(k, vec_scale(q, a)) && vec_scale(1, a) == a;
}

bool prop_triangle_parallelogram_rules(Rng& g) {
    Point a = rp(g), b = rp(g), d = rp(g), c = rp(g);
    if (!(vec_add(vec(a, b), vec(b, d)) == vec(a, d))) return false;
    Point dd = b + (c - a);
    return vec_add(vec(a, b), vec(a, c)) == vec(a, dd);
}

bool prop_translation_bijection(Rng& g) {
    FreeVector u{rp(g)};
    Isometry f = translation_of_vector(u);
    if (!(vector_of_translation(f) == u)) return false;
    Point a = rp(g), c = rp(g);
    Point b_ = a + u.components;
    Point d = translation_of_vector(vec(a, b_)).apply(c);
    return vec(a, b_) == vec(c, d);
}

bool prop_codirected_dual(Rng& g) {
    Point a = rp(g);
    Vec3 d = rdir(g);
    Rational t1 = rr_nonzero(g), t2 = rr_nonzero(g);
    if (g() % 2 == 0) {
        Point c = a + rr(g) * d;
        return codirected(Segment{a, a + t1 * d}, Segment{c, c + t2 * d}) ==
               ((t1 > 0) == (t2 > 0));
    }
    Point c = rp(g);
    if (on_line(c, make_line(a, d))) return true;
    return codirected(Segment{a, a + t1 * d}, Segment{c, c + t2 * d}) == ((t1 > 0) == (t2 > 0));
}

// ---- similarity group ---------------------------------------------------

bool prop_homothety_scaling(Rng& g) {
    Point o = rp(g);
    Rational k = rr_nonzero(g);
    Similarity h = homothety(o, k);
    Point x = rp(g), y = rp(g), z = rp(g);
    if (!(dist2(sim_apply(h, x), sim_apply(h, y)) == k * k * dist2(x, y))) return false;
    if (collinear(x, y, z) || x == y || y == z) return true;
    return shape_congruent(angle_shape(x, y, z),
                           angle_shape(sim_apply(h, x), sim_apply(h, y), sim_apply(h, z)));
}

bool prop_homothety_inversion(Rng& g) {
    Point o = rp(g);
    Similarity h = homothety(o, -1);
    Isometry io = inversion(o);
    Point x = rp(g);
    return sim_apply(h, x) == io.apply(x);
}

bool prop_homothety_factors(Rng& g) {
    Point o = rp(g);
    Rational p = rr_nonzero(g), q = rr_nonzero(g);
    Similarity hp = homothety(o, p), hq = homothety(o, q);
    Point probe = rp(g);
    return sim_apply(sim_compose(hp, hq), probe) == sim_apply(homothety(o, p * q), probe);
}

bool prop_similarity_criteria(Rng& g) {
    TriangleGen t = rtriangle(g);
    Rational k = rr_nonzero(g);
    Similarity s{rp(g), k, translation(rp(g) - Point{0, 0, 0})};
    Point ta = sim_apply(s, t.a), tb = sim_apply(s, t.b), tc = sim_apply(s, t.c);
    Rational k2 = k * k;
    return dist2(ta, tb) == k2 * dist2(t.a, t.b) && dist2(ta, tc) == k2 * dist2(t.a, t.c) &&
           dist2(tb, tc) == k2 * dist2(t.b, t.c) &&
           shape_congruent(angle_shape(t.b, t.a, t.c), angle_shape(tb, ta, tc));
}

}  // namespace

const std::vector<Property>& property_registry() {
    static const std::vector<Property> registry = {
        {"A9.symmetry", "order", prop_a9_symmetry},
        {"A10.extension", "order", prop_a10_extension},
        {"A11.exactly-one-between", "order", prop_a11_exactly_one},
        {"A12.pasch-exactness", "order", prop_a12_pasch},
        {"order.exterior-nonempty", "order", prop_th21_exterior},
        {"order.two-exterior-points", "order", prop_th22_two_exterior},
        {"order.interior-nonempty", "order", prop_th23_interior},
        {"order.segment-algebra", "order", prop_th31_33_segment_algebra},
        {"order.monotonic-enumeration", "order", prop_th41_42_enumeration},
        {"order.precedence-betweenness", "order", prop_th43_precedence},
        {"partition.line", "order", prop_partition_line},
        {"partition.plane", "order", prop_partition_plane},
        {"partition.space", "order", prop_partition_space},

        {"A13.layoff-unique", "congruence", prop_a13_layoff_unique},
        {"A15.additivity", "congruence", prop_a15_additivity},
        {"A16.angle-layoff-unique", "congruence", prop_a16_unique},
        {"A17.sas-angles", "congruence", prop_a17_sas},
        {"congruence.sas-asa-sss", "congruence", prop_sas_asa_sss},
        {"congruence.right-angles", "congruence", prop_right_angles_congruent},
        {"comparison.segment-laws", "congruence", prop_seg_comparison_laws},
        {"comparison.interior-smaller", "congruence", prop_interior_smaller},
        {"comparison.angle-laws", "congruence", prop_angle_comparison_laws},
        {"comparison.triangle-order", "congruence", prop_triangle_order},
        {"congruence.isosceles-base-angles", "congruence", prop_isosceles},

        {"word-affine.coherence", "transforms", prop_word_affine_coherence},
        {"reflection.involution", "transforms", prop_reflection_involution},
        {"rotation.calculus", "transforms", prop_rotation_calculus},
        {"rotation.composition-is-rotation", "transforms", prop_rotation_composition},
        {"parity.xor", "transforms", prop_parity_xor},
        {"translation.group-laws", "transforms", prop_translation_group},
        {"group.laws", "transforms", prop_group_laws},
        {"conjugation.structure", "transforms", prop_conjugation},
        {"rotation.fixed-set", "transforms", prop_rotation_fixed_set},
        {"motion.invariance", "transforms", prop_isometry_invariance},
        {"perpendicular-bisector.characterization", "transforms", prop_perp_bisector},
        {"motion.extension-conditions", "transforms", prop_extension_conditions},

        {"vector.space-laws", "vectors", prop_vector_laws},
        {"vector.addition-rules", "vectors", prop_triangle_parallelogram_rules},
        {"vector.translation-bijection", "vectors", prop_translation_bijection},
        {"vector.codirected-dual", "vectors", prop_codirected_dual},

        {"homothety.scaling-and-angles", "similarity", prop_homothety_scaling},
        {"homothety.minus-one-is-inversion", "similarity", prop_homothety_inversion},
        {"homothety.factor-product", "similarity", prop_homothety_factors},
        {"similarity.criteria", "similarity", prop_similarity_criteria},
    };
    return registry;
}

PropertyResult run_property(const Property& p, int cases, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (char c : p.id) h = h * 1099511628211ULL + static_cast<unsigned char>(c);
    std::mt19937_64 rng(h);
    PropertyResult res;
    res.id = p.id;
    res.group = p.group;
    res.cases = cases;
    for (int i = 0; i < cases; ++i)
        if (!p.once(rng)) ++res.failures;
    return res;
}

std::vector<PropertyResult> run_axiom_suite(int cases, std::uint64_t seed,
                                            const std::string& group) {
    std::vector<PropertyResult> out;
    for (const auto& p : property_registry()) {
        if (!group.empty() && p.group != group) continue;
        out.push_back(run_property(p, cases, seed));
    }
    return out;
}

}  // namespace geom
