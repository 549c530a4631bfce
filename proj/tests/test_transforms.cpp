#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geom/transforms.hpp"
#include "testutil.hpp"

using namespace geom;
using testutil::Rng;

static Point random_point(Rng& rng) {
    return {testutil::random_rational(rng), testutil::random_rational(rng),
            testutil::random_rational(rng)};
}

static Plane random_plane(Rng& rng) {
    for (;;) {
        Vec3 n = random_point(rng);
        if (!is_zero(n)) return make_plane(random_point(rng), n);
    }
}

static Isometry random_word(Rng& rng, int max_len = 4) {
    std::vector<Plane> w;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int i = 0; i < len; ++i) w.push_back(random_plane(rng));
    return Isometry::from_word(std::move(w));
}

TEST_CASE("plane reflection: coordinate example, involution, fixed set") {
    Plane z0 = make_plane({0, 0, 0}, {0, 0, 1});
    Isometry z = reflect_plane(z0);
    CHECK(z.apply({1, 2, 3}) == Point{1, 2, -3});
    // z o z == id with empty word normal form
    Isometry zz = compose(z, z);
    CHECK(zz.is_identity());
    CHECK(zz.word().empty());
    // fixed set is exactly the plane
    Rng rng(401);
    for (int i = 0; i < 200; ++i) {
        Point p = random_point(rng);
        bool fixed = z.apply(p) == p;
        CHECK(fixed == on_plane(p, z0));
    }
}

TEST_CASE("line reflection and inversion: examples and the composition identity") {
    Line xaxis = line_through({0, 0, 0}, {1, 0, 0});
    Isometry zx = reflect_line(xaxis);
    CHECK(zx.apply({1, 2, 3}) == Point{1, -2, -3});
    CHECK(parity(zx) == Parity::Even);

    Isometry io = inversion({0, 0, 0});
    CHECK(io.apply({1, 2, 3}) == Point{-1, -2, -3});
    Isometry i1 = inversion({1, 0, 0});
    CHECK(i1.apply({3, 1, 0}) == Point{-1, -1, 0});

    // z_a o z_alpha = z_alpha o z_a = i_O for a perpendicular
    // to alpha at O
    Line zaxis = line_through({0, 0, 0}, {0, 0, 1});
    Plane z0 = make_plane({0, 0, 0}, {0, 0, 1});
    Isometry za = reflect_line(zaxis), zpl = reflect_plane(z0);
    CHECK(compose(za, zpl) == io);
    CHECK(compose(zpl, za) == io);
}

TEST_CASE("rotation: quarter turn, identity case, exactness boundary") {
    Line zaxis = line_through({0, 0, 0}, {0, 0, 1});
    Isometry quarter = rotation(zaxis, {1, 0, 0}, {0, 1, 0});
    CHECK(quarter.apply({1, 0, 0}) == Point{0, 1, 0});
    CHECK(quarter.apply({0, 0, 7}) == Point{0, 0, 7});
    CHECK(parity(quarter) == Parity::Even);

    // theta_hh = id
    CHECK(rotation(zaxis, {2, 0, 0}, {5, 0, 0}).is_identity());
    // opposite half-planes: the turn by pi equals the line reflection
    CHECK(rotation(zaxis, {1, 0, 0}, {-3, 0, 0}) == reflect_line(zaxis));
    // on-axis point rejected
    CHECK_THROWS_AS(rotation(zaxis, {0, 0, 5}, {1, 0, 0}), std::invalid_argument);
    // irrational bisector reported
    CHECK_THROWS_AS(rotation(zaxis, {1, 0, 0}, {1, 1, 0}), std::domain_error);
}

TEST_CASE("rotation calculus on Pythagorean instances") {
    Line zaxis = line_through({0, 0, 0}, {0, 0, 1});
    // |u1| = 1, |u2| = 5, |u3| = 25: all pairwise ratios are perfect squares
    Point u1{1, 0, 0}, u2{3, 4, 0}, u3{-7, 24, 0};
    Isometry t12 = rotation(zaxis, u1, u2);
    Isometry t23 = rotation(zaxis, u2, u3);
    Isometry t13 = rotation(zaxis, u1, u3);
    // theta_kl o theta_hk = theta_hl
    CHECK(compose(t23, t12) == t13);
    // rotations about one axis commute
    CHECK(compose(t12, t23) == compose(t23, t12));
    // theta_hk o z_m = z_m o theta_kh for a plane m through the axis
    Plane m = make_plane({0, 0, 0}, {0, 1, 0});  // contains the z axis
    Isometry zm = reflect_plane(m);
    Isometry t21 = rotation(zaxis, u2, u1);
    CHECK(compose(t12, zm) == compose(zm, t21));
    // z_m o z_m = id
    CHECK(compose(zm, zm).is_identity());
    // z_m o z_n is a rotation about the intersection line
    Plane n = make_plane({0, 0, 0}, {1, 0, 0});
    Isometry rot = compose(zm, reflect_plane(n));
    CHECK(mat_det(rot.linear()) == 1);
    auto axis = fixed_line_of(rot);
    REQUIRE(axis.has_value());
    CHECK(*axis == zaxis);
}

TEST_CASE("rotation inverse and theta_hk(h) lands on k") {
    Line axis = make_line({1, 1, 0}, {0, 0, 1});
    Point h{1 + 1, 1, 0}, k{1 + 3, 1 + 4, 0};  // offsets (1,0), (3,4)/5 ... |ratio| = 5^2
    Isometry t = rotation(axis, h, k);
    // image of h lies on the ray from the axis through k
    Point img = t.apply(h);
    Vec3 foot = project_line(k, axis) - Point{0, 0, 0};
    Vec3 vk = k - project_line(k, axis);
    Vec3 vi = img - project_line(img, axis);
    CHECK(is_zero(cross(vk, vi)));
    CHECK(dot(vk, vi) > 0);
    CHECK(compose(t, rotation(axis, k, h)).is_identity());
    (void)foot;
}

TEST_CASE("translations: identity, examples, displacement characterization") {
    CHECK(translation({0, 0, 0}).is_identity());
    Isometry tr = translation({1, 2, 3});
    CHECK(tr.apply({0, 0, 0}) == Point{1, 2, 3});
    CHECK(is_translation(tr));
    CHECK(parity(tr) == Parity::Even);
    // every displacement vector equals the defining one
    Rng rng(402);
    for (int i = 0; i < 200; ++i) {
        Point x = random_point(rng), y = random_point(rng);
        CHECK(tr.apply(x) - x == Vec3{1, 2, 3});
        CHECK(tr.apply(x) - x == tr.apply(y) - y);
    }
    // a nonzero translation has no stable point
    CHECK(!has_fixed_point(tr));
    CHECK(has_fixed_point(Isometry()));
    // group law: composition adds vectors and commutes
    Isometry tr2 = translation({5, -1, 2});
    CHECK(compose(tr, tr2) == translation({6, 1, 5}));
    CHECK(compose(tr, tr2) == compose(tr2, tr));
    // a composition with a stable point is the identity
    CHECK(compose(tr, translation({-1, -2, -3})).is_identity());
}

TEST_CASE("compose/inverse group laws on random words") {
    Rng rng(403);
    for (int i = 0; i < 300; ++i) {
        Isometry f = random_word(rng), g = random_word(rng), h = random_word(rng);
        CHECK(compose(f, inverse(f)).is_identity());
        CHECK(compose(inverse(f), f).is_identity());
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        // parity XOR law
        Parity pf = parity(f), pg = parity(g);
        Parity pc = parity(compose(f, g));
        CHECK((pc == Parity::Even) == ((pf == Parity::Even) == (pg == Parity::Even)));
    }
}

TEST_CASE("word/affine coherence on random words and 100 sample points") {
    Rng rng(404);
    for (int i = 0; i < 30; ++i) {
        Isometry f = random_word(rng, 5);
        for (int j = 0; j < 100; ++j) {
            Point p = random_point(rng);
            CHECK(f.apply(p) == f.apply_word(p));
        }
    }
}

TEST_CASE("all plane angles of a dihedral angle are congruent") {
    Rng rng(413);
    for (int i = 0; i < 200; ++i) {
        // edge line c with two side directions u, v orthogonal to it
        Line edge = make_line(random_point(rng),
                              Vec3{1, testutil::random_rational(rng), testutil::random_rational(rng)});
        Vec3 w1 = random_point(rng) - Point{0, 0, 0}, w2 = random_point(rng) - Point{0, 0, 0};
        Vec3 u = cross(edge.dir, w1), v = cross(edge.dir, w2);
        if (is_zero(u) || is_zero(v) || is_zero(cross(u, v))) continue;
        // plane angles sampled at two different edge points
        Point p1 = edge.base, p2 = edge.base + edge.dir;
        CHECK(shape_congruent(angle_shape(p1 + u, p1, p1 + v), angle_shape(p2 + u, p2, p2 + v)));
    }
}

TEST_CASE("isometries preserve betweenness, collinearity, distance, angles") {
    Rng rng(405);
    for (int i = 0; i < 200; ++i) {
        Isometry f = random_word(rng);
        Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        CHECK(dist2(a, b) == dist2(f.apply(a), f.apply(b)));
        if (between(a, b, c))
            CHECK(between(f.apply(a), f.apply(b), f.apply(c)));
        if (!collinear(a, b, c)) {
            CHECK(!collinear(f.apply(a), f.apply(b), f.apply(c)));
            CHECK(shape_congruent(angle_shape(a, b, c),
                                  angle_shape(f.apply(a), f.apply(b), f.apply(c))));
        }
    }
}

TEST_CASE("composing rotations about intersecting axes gives a rotation") {
    Line zaxis = line_through({0, 0, 0}, {0, 0, 1});
    Line xaxis = line_through({0, 0, 0}, {1, 0, 0});
    Isometry r1 = rotation(zaxis, {1, 0, 0}, {0, 1, 0});
    Isometry r2 = rotation(xaxis, {0, 1, 0}, {0, 0, 1});
    Isometry c = compose(r2, r1);
    CHECK(mat_det(c.linear()) == 1);
    CHECK(!c.is_identity());
    auto axis = fixed_line_of(c);
    REQUIRE(axis.has_value());
    // the fixed line is exactly the set of stable points
    Rng rng(406);
    for (int i = 0; i < 100; ++i) {
        Point p = random_point(rng);
        CHECK((c.apply(p) == p) == on_line(p, *axis));
    }
}

TEST_CASE("stable points: a non-identity rotation fixes exactly its axis") {
    Line axis = make_line({2, 1, 0}, {0, 0, 1});
    Isometry rot = rotation(axis, {3, 1, 0}, {2, 2, 0});
    auto fl = fixed_line_of(rot);
    REQUIRE(fl.has_value());
    CHECK(*fl == axis);
}

TEST_CASE("decompose: translation, screw, mirror") {
    Point o{0, 0, 0};
    // pure translation: rotation part is the identity
    Decomposition d = decompose(translation({1, 2, 3}), o);
    CHECK(d.kind == RotationKind::Identity);
    CHECK(d.rotation_part.is_identity());
    CHECK(d.translation_part == translation({1, 2, 3}));

    // screw: quarter turn about z then translate along z
    Line zaxis = line_through({0, 0, 0}, {0, 0, 1});
    Isometry quarter = rotation(zaxis, {1, 0, 0}, {0, 1, 0});
    Isometry screw = compose(translation({0, 0, 5}), quarter);
    d = decompose(screw, o);
    CHECK(d.kind == RotationKind::Rotation);
    CHECK(d.translation_part == translation({0, 0, 5}));
    CHECK(d.rotation_part == quarter);
    REQUIRE(d.fixed_line.has_value());
    CHECK(*d.fixed_line == zaxis);
    // reassemble
    CHECK(compose(d.rotation_part, d.translation_part) == screw);

    // mirror in z=0: odd, plane recovered from the -1 eigenspace
    Plane z0 = make_plane({0, 0, 0}, {0, 0, 1});
    d = decompose(reflect_plane(z0), o);
    CHECK(d.kind == RotationKind::Reflection);
    REQUIRE(d.mirror.has_value());
    CHECK(*d.mirror == z0);

    // rotoreflection: mirror composed with a quarter turn about the normal
    Isometry rr = compose(reflect_plane(z0), quarter);
    d = decompose(rr, o);
    CHECK(d.kind == RotationKind::RotoReflection);
    REQUIRE(d.fixed_line.has_value());
    CHECK(*d.fixed_line == zaxis);

    // reassembly holds for random words at random base points
    Rng rng(407);
    for (int i = 0; i < 200; ++i) {
        Isometry f = random_word(rng);
        Point base = random_point(rng);
        Decomposition dd = decompose(f, base);
        CHECK(dd.rotation_part.apply(base) == base);
        CHECK(is_translation(dd.translation_part));
        CHECK(compose(dd.rotation_part, dd.translation_part) == f);
    }
}

TEST_CASE("conjugation maps reflections and translations structurally") {
    // conjugating a plane reflection by a translation moves the plane
    Plane z0 = make_plane({0, 0, 0}, {0, 0, 1});
    Isometry tz = translation({0, 0, 1});
    Isometry conj = conjugate(tz, reflect_plane(z0));
    Plane z1 = make_plane({0, 0, 1}, {0, 0, 1});
    CHECK(conj == reflect_plane(z1));

    // conjugating a translation by a rotation rotates its vector
    Line zaxis = line_through({0, 0, 0}, {0, 0, 1});
    Isometry quarter = rotation(zaxis, {1, 0, 0}, {0, 1, 0});
    Isometry moved = conjugate(quarter, translation({1, 0, 0}));
    CHECK(is_translation(moved));
    CHECK(moved == translation(quarter.apply_vector({1, 0, 0})));

    // conjugation by the identity is trivial; structural check on random data
    Rng rng(408);
    for (int i = 0; i < 100; ++i) {
        Isometry g = random_word(rng);
        CHECK(conjugate(Isometry(), g) == g);
        // f z_beta f^-1 = z_{f(beta)}
        Plane beta = random_plane(rng);
        Isometry f = random_word(rng);
        CHECK(conjugate(f, reflect_plane(beta)) == reflect_plane(f.apply(beta)));
        // f p_c f^-1 = p_{f(c)}
        Vec3 c = random_point(rng) - Point{0, 0, 0};
        CHECK(conjugate(f, translation(c)) == translation(f.apply_vector(c)));
    }
}

TEST_CASE("projections: examples, idempotence, betweenness, three perpendiculars") {
    Line xaxis = line_through({0, 0, 0}, {1, 0, 0});
    Plane z0 = make_plane({0, 0, 0}, {0, 0, 1});
    CHECK(project_line({1, 2, 3}, xaxis) == Point{1, 0, 0});
    CHECK(project_plane({1, 2, 3}, z0) == Point{1, 2, 0});

    Rng rng(409);
    for (int i = 0; i < 200; ++i) {
        Point p = random_point(rng);
        Line l = make_line(random_point(rng), random_point(rng) - Point{0, 0, 0} + Vec3{1, 0, 0});
        Point foot = project_line(p, l);
        CHECK(on_line(foot, l));
        CHECK(project_line(foot, l) == foot);            // idempotent
        CHECK(dot(p - foot, l.dir) == 0);                // perpendicular drop
        Plane pl = random_plane(rng);
        Point fp = project_plane(p, pl);
        CHECK(on_plane(fp, pl));
        CHECK(project_plane(fp, pl) == fp);
        CHECK(is_zero(cross(p - fp, pl.normal)));
    }

    // projection preserves betweenness on non-collapsing lines
    for (int i = 0; i < 200; ++i) {
        Point a = random_point(rng);
        Vec3 d;
        do { d = random_point(rng); } while (is_zero(d));
        Point b = a + testutil::random_nonzero_rational(rng) * d;
        Point c = b + (b - a);
        Line target = make_line(random_point(rng), {1, 1, 0});
        Point pa = project_line(a, target), pb = project_line(b, target),
              pc = project_line(c, target);
        if (pa == pb || pb == pc || pa == pc) continue;  // collapsing direction
        CHECK(between(pa, pb, pc));
    }

    // three perpendiculars: for c in the plane, b perp c iff proj(b) perp c
    for (int i = 0; i < 200; ++i) {
        Vec3 cdir{testutil::random_rational(rng), testutil::random_rational(rng), 0};
        if (is_zero(cdir)) continue;
        Vec3 bdir = random_point(rng) - Point{0, 0, 0};
        Vec3 proj{bdir.x, bdir.y, 0};  // projection of the direction onto z=0
        if (is_zero(proj)) continue;
        CHECK((dot(bdir, cdir) == 0) == (dot(proj, cdir) == 0));
    }
}

TEST_CASE("perpendicular bisector plane characterization") {
    Rng rng(410);
    for (int i = 0; i < 300; ++i) {
        Point a = random_point(rng), b = random_point(rng);
        if (a == b) continue;
        Plane pbp = perpendicular_bisector_plane(a, b);
        Point m = random_point(rng);
        CHECK((dist2(a, m) == dist2(b, m)) == on_plane(m, pbp));
    }
}

TEST_CASE("homothety: identity, inversion case, scaling laws") {
    Point o{0, 0, 0};
    // k = 1 is the identity
    Similarity h1 = homothety(o, 1);
    // k = -1 is the inversion i_O: affine agreement on a frame of points
    Similarity hm1 = homothety({1, 0, 0}, -1);
    Isometry io = inversion({1, 0, 0});
    for (Point p : {Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1},
                    Point{3, 1, 0}}) {
        CHECK(sim_apply(h1, p) == p);
        CHECK(sim_apply(hm1, p) == io.apply(p));
    }
    CHECK_THROWS(homothety(o, 0));

    Similarity h2 = homothety(o, 2);
    CHECK(sim_apply(h2, {1, 1, 0}) == Point{2, 2, 0});

    // squared lengths scale by k^2 exactly; angle shapes invariant
    Rng rng(411);
    for (int i = 0; i < 300; ++i) {
        Point center = random_point(rng);
        Rational k = testutil::random_nonzero_rational(rng);
        Similarity h = homothety(center, k);
        Point x = random_point(rng), y = random_point(rng), z = random_point(rng);
        CHECK(dist2(sim_apply(h, x), sim_apply(h, y)) == k * k * dist2(x, y));
        if (!collinear(x, y, z) && x != y && y != z) {
            CHECK(shape_congruent(angle_shape(x, y, z),
                                  angle_shape(sim_apply(h, x), sim_apply(h, y), sim_apply(h, z))));
            // lines map to parallel lines
            Line before = line_through(x, y);
            Line after = line_through(sim_apply(h, x), sim_apply(h, y));
            CHECK(parallel_lines(before, after));
        }
        // composition of homotheties about one center multiplies factors
        Rational p = testutil::random_nonzero_rational(rng),
                 q = testutil::random_nonzero_rational(rng);
        Similarity hp = homothety(center, p), hq = homothety(center, q);
        Similarity hpq = sim_compose(hp, hq);
        Point probe = random_point(rng);
        CHECK(sim_apply(hpq, probe) == sim_apply(homothety(center, p * q), probe));
    }
}

TEST_CASE("similarity criteria on constructed instances") {
    Rng rng(412);
    int cases = 0;
    while (cases < 200) {
        Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        if (collinear(a, b, c)) continue;
        ++cases;
        Rational k = testutil::random_nonzero_rational(rng);
        Similarity s{random_point(rng), k, translation(random_point(rng) - Point{0, 0, 0})};
        Point ta = sim_apply(s, a), tb = sim_apply(s, b), tc = sim_apply(s, c);
        // three-ratio criterion: all squared side ratios equal k^2
        Rational k2 = k * k;
        CHECK(dist2(ta, tb) == k2 * dist2(a, b));
        CHECK(dist2(ta, tc) == k2 * dist2(a, c));
        CHECK(dist2(tb, tc) == k2 * dist2(b, c));
        // two-ratio criterion: the included angle is preserved
        CHECK(shape_congruent(angle_shape(b, a, c), angle_shape(tb, ta, tc)));
        // angle invariance at every vertex
        CHECK(shape_congruent(angle_shape(a, b, c), angle_shape(ta, tb, tc)));
        CHECK(shape_congruent(angle_shape(a, c, b), angle_shape(ta, tc, tb)));
    }
}

TEST_CASE("isometry serialization carries word, matrix, translation") {
    Isometry tr = translation({1, 2, 3});
    std::string s = isometry_str(tr);
    CHECK(s.find("\"word\"") != std::string::npos);
    CHECK(s.find("\"matrix\"") != std::string::npos);
    CHECK(s.find("\"t\": [\"1\", \"2\", \"3\"]") != std::string::npos);
}

TEST_CASE("rotation_affine_approx: agrees with the exact group on rational angles") {
    Line zaxis = line_through({0, 0, 0}, {0, 0, 1});
    Isometry exact = rotation(zaxis, {1, 0, 0}, {0, 1, 0});
    auto [m, t] = rotation_affine_approx(zaxis, {1, 0, 0}, {0, 1, 0}, 24);
    Rational eps = pow2_rat(-24);
    for (int i = 0; i < 9; ++i) CHECK(rat_abs(m.a[i] - exact.linear().a[i]) <= eps);
    CHECK(rat_abs(t.x - exact.translation().x) <= eps);

    // an angle outside the exact group: 45 degrees about z
    auto [m45, t45] = rotation_affine_approx(zaxis, {1, 0, 0}, {1, 1, 0}, 24);
    (void)t45;
    // near-orthogonality: |M^T M - I| entries within a few ulps of 2^-24
    Mat3 mtm = mat_mul(mat_transpose(m45), m45);
    Mat3 id = Mat3::identity();
    for (int i = 0; i < 9; ++i) CHECK(rat_abs(mtm.a[i] - id.a[i]) <= 8 * eps);
    // the image of (1,0,0) points near the diagonal: x ~ y ~ cos(45)
    Vec3 img = mat_apply(m45, {1, 0, 0});
    CHECK(rat_abs(img.x - img.y) <= 4 * eps);
}
