#include "geom/transforms.hpp"

#include "geom/dyadic.hpp"

#include <stdexcept>

namespace geom {

Mat3 Mat3::identity() {
    Mat3 m;
    for (int i = 0; i < 9; ++i) m.a[i] = (i % 4 == 0) ? 1 : 0;
    return m;
}

bool Mat3::operator==(const Mat3& o) const {
    for (int i = 0; i < 9; ++i)
        if (a[i] != o.a[i]) return false;
    return true;
}

Mat3 mat_mul(const Mat3& x, const Mat3& y) {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Rational s = 0;
            for (int k = 0; k < 3; ++k) s += x.at(r, k) * y.at(k, c);
            m.at(r, c) = s;
        }
    return m;
}

Mat3 mat_transpose(const Mat3& x) {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = x.at(c, r);
    return m;
}

Vec3 mat_apply(const Mat3& x, const Vec3& v) {
    return {x.at(0, 0) * v.x + x.at(0, 1) * v.y + x.at(0, 2) * v.z,
            x.at(1, 0) * v.x + x.at(1, 1) * v.y + x.at(1, 2) * v.z,
            x.at(2, 0) * v.x + x.at(2, 1) * v.y + x.at(2, 2) * v.z};
}

Rational mat_det(const Mat3& x) {
    return x.at(0, 0) * (x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1)) -
           x.at(0, 1) * (x.at(1, 0) * x.at(2, 2) - x.at(1, 2) * x.at(2, 0)) +
           x.at(0, 2) * (x.at(1, 0) * x.at(2, 1) - x.at(1, 1) * x.at(2, 0));
}

namespace {

// affine form of the reflection in a plane
void reflection_affine(const Plane& p, Mat3* m, Vec3* t) {
    const Vec3& n = p.normal;
    Rational nn = norm2(n);
    Mat3 r = Mat3::identity();
    Rational two(2);
    Rational nv[3] = {n.x, n.y, n.z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) -= two * nv[i] * nv[j] / nn;
    *m = r;
    *t = (two * dot(p.base, n) / nn) * n;
}

struct LinSolve {
    bool consistent = false;
    Vec3 particular;           // one solution when consistent
    std::vector<Vec3> kernel;  // basis of the homogeneous solution space
};

// exact Gaussian elimination for A x = b over the rationals
LinSolve solve3(const Mat3& a, const Vec3& b) {
    Rational m[3][4] = {{a.at(0, 0), a.at(0, 1), a.at(0, 2), b.x},
                        {a.at(1, 0), a.at(1, 1), a.at(1, 2), b.y},
                        {a.at(2, 0), a.at(2, 1), a.at(2, 2), b.z}};
    int pivot_col[3] = {-1, -1, -1};
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int pr = -1;
        for (int r = row; r < 3; ++r)
            if (m[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        Rational piv = m[row][col];
        for (int c = col; c < 4; ++c) m[row][c] /= piv;
        for (int r = 0; r < 3; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col[row] = col;
        ++row;
    }
    LinSolve out;
    for (int r = row; r < 3; ++r)
        if (m[r][3] != 0) return out;  // inconsistent
    out.consistent = true;
    Rational x[3] = {0, 0, 0};
    for (int r = 0; r < row; ++r) x[pivot_col[r]] = m[r][3];
    out.particular = {x[0], x[1], x[2]};
    bool is_pivot[3] = {false, false, false};
    for (int r = 0; r < row; ++r) is_pivot[pivot_col[r]] = true;
    for (int free = 0; free < 3; ++free) {
        if (is_pivot[free]) continue;
        Rational k[3] = {0, 0, 0};
        k[free] = 1;
        for (int r = 0; r < row; ++r) k[pivot_col[r]] = -m[r][free];
        out.kernel.push_back({k[0], k[1], k[2]});
    }
    return out;
}

}  // namespace

Isometry::Isometry() : linear_(Mat3::identity()), translation_{0, 0, 0} {}

Isometry Isometry::from_word(std::vector<Plane> word) {
    // cancel adjacent equal reflections
    std::vector<Plane> reduced;
    for (auto& p : word) {
        if (!reduced.empty() && reduced.back() == p) reduced.pop_back();
        else reduced.push_back(p);
    }
    Isometry f;
    f.word_ = std::move(reduced);
    Mat3 m = Mat3::identity();
    Vec3 t{0, 0, 0};
    for (const auto& p : f.word_) {
        Mat3 rm;
        Vec3 rt;
        reflection_affine(p, &rm, &rt);
        m = mat_mul(rm, m);
        t = mat_apply(rm, t) + rt;
    }
    f.linear_ = m;
    f.translation_ = t;
    // invariants: exact orthogonality and det matching the word parity
    if (!(mat_mul(mat_transpose(m), m) == Mat3::identity()))
        throw std::logic_error("Isometry: linear part not orthogonal");
    Rational d = mat_det(m);
    if (d != (f.word_.size() % 2 == 0 ? 1 : -1))
        throw std::logic_error("Isometry: determinant does not match word parity");
    return f;
}

Point Isometry::apply(const Point& p) const { return mat_apply(linear_, p) + translation_; }

Point Isometry::apply_word(const Point& p) const {
    Point x = p;
    for (const auto& pl : word_) {
        Rational nn = norm2(pl.normal);
        x = x - (2 * dot(x - pl.base, pl.normal) / nn) * pl.normal;
    }
    return x;
}

Vec3 Isometry::apply_vector(const Vec3& v) const { return mat_apply(linear_, v); }

Line Isometry::apply(const Line& l) const { return make_line(apply(l.base), apply_vector(l.dir)); }

Plane Isometry::apply(const Plane& pl) const {
    return make_plane(apply(pl.base), apply_vector(pl.normal));
}

bool Isometry::is_identity() const {
    return linear_ == Mat3::identity() && is_zero(translation_);
}

Isometry reflect_plane(const Plane& p) { return Isometry::from_word({p}); }

Isometry reflect_line(const Line& a) {
    // two perpendicular planes through the line
    Vec3 d = a.dir;
    Vec3 probe = (is_zero(cross(d, Vec3{1, 0, 0}))) ? Vec3{0, 1, 0} : Vec3{1, 0, 0};
    Vec3 n1 = cross(d, probe);
    Vec3 n2 = cross(d, n1);
    return Isometry::from_word({make_plane(a.base, n1), make_plane(a.base, n2)});
}

Isometry inversion(const Point& o) {
    return Isometry::from_word({make_plane(o, Vec3{1, 0, 0}), make_plane(o, Vec3{0, 1, 0}),
                                make_plane(o, Vec3{0, 0, 1})});
}

Isometry rotation(const Line& axis, const Point& h, const Point& k) {
    Vec3 u = h - project_line(h, axis);
    Vec3 v = k - project_line(k, axis);
    if (is_zero(u) || is_zero(v))
        throw std::invalid_argument("rotation: half-plane point lies on the axis");
    if (is_zero(cross(u, v))) {
        if (dot(u, v) > 0) return Isometry();      // theta_hh = id
        return reflect_line(axis);                  // opposite half-planes: turn by pi
    }
    Rational ratio2 = norm2(v) / norm2(u);
    auto rho = rat_sqrt_exact(ratio2);
    if (!rho)
        throw std::domain_error(
            "rotation: dihedral bisector leaves Q^3 (|v|/|u| irrational); "
            "use Pythagorean half-plane points or the widened approximate form");
    Vec3 w = *rho * u + v;  // bisector direction between u and v
    Plane beta = make_plane(axis.base, cross(axis.dir, u));   // contains h's half-plane
    Plane alpha = make_plane(axis.base, cross(axis.dir, w));  // contains the bisector
    return compose(reflect_plane(alpha), reflect_plane(beta));
}

Isometry translation(const Vec3& v) {
    if (is_zero(v)) return Isometry();
    Plane p1 = make_plane(Point{0, 0, 0}, v);
    Plane p2 = make_plane(Point{0, 0, 0} + rat(1, 2) * v, v);
    Isometry f = Isometry::from_word({p1, p2});
    if (!(f.translation() == v) || !(f.linear() == Mat3::identity()))
        throw std::logic_error("translation: affine form mismatch");
    return f;
}

Isometry compose(const Isometry& f, const Isometry& g) {
    std::vector<Plane> word = g.word();
    word.insert(word.end(), f.word().begin(), f.word().end());
    return Isometry::from_word(std::move(word));
}

Isometry inverse(const Isometry& f) {
    std::vector<Plane> word(f.word().rbegin(), f.word().rend());
    return Isometry::from_word(std::move(word));
}

Parity parity(const Isometry& f) {
    Rational d = mat_det(f.linear());
    Parity by_det = d == 1 ? Parity::Even : Parity::Odd;
    Parity by_word = f.word().size() % 2 == 0 ? Parity::Even : Parity::Odd;
    if (by_det != by_word) throw std::logic_error("parity: word/determinant mismatch");
    return by_det;
}

bool is_translation(const Isometry& f) { return f.linear() == Mat3::identity(); }

bool has_fixed_point(const Isometry& f) {
    Mat3 a = f.linear();
    for (int i = 0; i < 3; ++i) a.at(i, i) -= 1;
    return solve3(a, -f.translation()).consistent;
}

std::optional<Line> fixed_line_of(const Isometry& f) {
    Mat3 a = f.linear();
    for (int i = 0; i < 3; ++i) a.at(i, i) -= 1;
    LinSolve s = solve3(a, -f.translation());
    if (!s.consistent || s.kernel.size() != 1) return std::nullopt;
    return make_line(s.particular, s.kernel[0]);
}

Decomposition decompose(const Isometry& f, const Point& o) {
    // f = g o p with g(o) = o and p a translation
    Vec3 v = mat_apply(mat_transpose(f.linear()), f.apply(o) - o);
    Isometry p = translation(v);
    Isometry g = compose(f, inverse(p));
    if (!(g.apply(o) == o)) throw std::logic_error("decompose: stable point lost");

    Decomposition out{g, p, RotationKind::Identity, std::nullopt, std::nullopt};
    if (g.is_identity()) return out;

    Rational d = mat_det(g.linear());
    if (d == 1) {
        out.kind = RotationKind::Rotation;
        out.fixed_line = fixed_line_of(g);
        if (!out.fixed_line) throw std::logic_error("decompose: rotation without an axis");
        return out;
    }
    // odd part: eigenvector of -1 exists
    Mat3 a = g.linear();
    for (int i = 0; i < 3; ++i) a.at(i, i) += 1;
    LinSolve s = solve3(a, Vec3{0, 0, 0});
    if (s.kernel.empty()) throw std::logic_error("decompose: odd motion without -1 eigenvector");
    Vec3 n = s.kernel[0];
    // pure reflection iff the +1 eigenspace is a plane
    Mat3 b = g.linear();
    for (int i = 0; i < 3; ++i) b.at(i, i) -= 1;
    LinSolve sp = solve3(b, Vec3{0, 0, 0});
    if (sp.kernel.size() == 2) {
        out.kind = RotationKind::Reflection;
        out.mirror = make_plane(o, n);
    } else {
        out.kind = RotationKind::RotoReflection;
        out.fixed_line = make_line(o, n);
        out.mirror = make_plane(o, n);
    }
    return out;
}

Isometry conjugate(const Isometry& f, const Isometry& g) {
    return compose(compose(f, g), inverse(f));
}

Point project_line(const Point& x, const Line& a) {
    Rational t = dot(x - a.base, a.dir) / norm2(a.dir);
    return a.base + t * a.dir;
}

Point project_plane(const Point& x, const Plane& p) {
    Rational t = dot(x - p.base, p.normal) / norm2(p.normal);
    return x - t * p.normal;
}

Similarity homothety(const Point& o, const Rational& k) {
    if (k == 0) throw std::invalid_argument("homothety: zero factor");
    return Similarity{o, k, Isometry()};
}

Similarity sim_from_isometry(const Isometry& f) { return Similarity{Point{0, 0, 0}, 1, f}; }

Point sim_apply(const Similarity& s, const Point& p) {
    Point y = s.tail.apply(p);
    return s.center + s.factor * (y - s.center);
}

std::string isometry_str(const Isometry& f) {
    std::string out = "{\"word\": [";
    for (size_t i = 0; i < f.word().size(); ++i) {
        if (i) out += ", ";
        out += "\"" + plane_str(f.word()[i]) + "\"";
    }
    out += "], \"matrix\": [";
    for (int r = 0; r < 3; ++r) {
        if (r) out += ", ";
        out += "[";
        for (int c = 0; c < 3; ++c) {
            if (c) out += ", ";
            out += "\"" + rat_str(f.linear().at(r, c)) + "\"";
        }
        out += "]";
    }
    const Vec3& t = f.translation();
    out += "], \"t\": [\"" + rat_str(t.x) + "\", \"" + rat_str(t.y) + "\", \"" + rat_str(t.z) +
           "\"]}";
    return out;
}

std::pair<Mat3, Vec3> rotation_affine_approx(const Line& axis, const Point& h, const Point& k,
                                             unsigned m) {
    Vec3 u = h - project_line(h, axis);
    Vec3 v = k - project_line(k, axis);
    if (is_zero(u) || is_zero(v))
        throw std::invalid_argument("rotation_affine_approx: half-plane point lies on the axis");
    unsigned g = m + 3;
    auto approx = [&](const QuadraticValue& q) {
        return dyadic_rat(dyadic_approx(q, g).lo);
    };
    // unit axis components, each |a_i| <= 1
    Rational dd = norm2(axis.dir);
    auto unit_comp = [&](const Rational& di) {
        if (di == 0) return Rational(0);
        return approx(QuadraticValue(0, di * di / dd, di > 0 ? 1 : -1));
    };
    Rational ax = unit_comp(axis.dir.x), ay = unit_comp(axis.dir.y), az = unit_comp(axis.dir.z);
    // cosine and signed sine of the turn from u to v
    Rational d = dot(u, v);
    Rational c2 = d * d / (norm2(u) * norm2(v));
    Rational c = d == 0 ? Rational(0) : approx(QuadraticValue(0, c2, d > 0 ? 1 : -1));
    int orient = sgn(dot(cross(u, v), axis.dir));
    Rational s = orient == 0 ? Rational(0)
                             : approx(QuadraticValue(0, 1 - c2, orient > 0 ? 1 : -1));
    // Rodrigues form R = c I + (1 - c) a a^T + s [a]x
    Mat3 r = Mat3::identity();
    Rational a[3] = {ax, ay, az};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational e = (i == j ? c : Rational(0)) + (1 - c) * a[i] * a[j];
            r.at(i, j) = e;
        }
    r.at(0, 1) -= s * az; r.at(0, 2) += s * ay;
    r.at(1, 0) += s * az; r.at(1, 2) -= s * ax;
    r.at(2, 0) -= s * ay; r.at(2, 1) += s * ax;
    Vec3 t = axis.base - mat_apply(r, axis.base);
    return {r, t};
}

Similarity sim_compose(const Similarity& f, const Similarity& g) {
    // f o g = h_{k1,O1} phi1 h_{k2,O2} phi2
    //       = h_{k1,O1} h_{k2,phi1(O2)} (phi1 phi2)
    const Rational& k1 = f.factor;
    const Rational& k2 = g.factor;
    Point a = f.center;
    Point b = f.tail.apply(g.center);
    Isometry phi = compose(f.tail, g.tail);
    Rational k = k1 * k2;
    if (k == 1) {
        // the homothety pair collapses to a translation
        Vec3 c = (1 - k1) * (a - b);
        return Similarity{a, 1, compose(translation(c), phi)};
    }
    Point center = (Rational(1) / (1 - k)) * ((1 - k1) * a + (k1 * (1 - k2)) * b);
    return Similarity{center, k, phi};
}

}  // namespace geom
