#pragma once

#include "geom/congruence.hpp"
#include "geom/space.hpp"

#include <optional>
#include <vector>

namespace geom {

// 3x3 rational matrix, row major
struct Mat3 {
    Rational a[9];

    static Mat3 identity();
    Rational& at(int r, int c) { return a[3 * r + c]; }
    const Rational& at(int r, int c) const { return a[3 * r + c]; }
    bool operator==(const Mat3& o) const;
};

Mat3 mat_mul(const Mat3& x, const Mat3& y);
Mat3 mat_transpose(const Mat3& x);
Vec3 mat_apply(const Mat3& x, const Vec3& v);
Rational mat_det(const Mat3& x);

// Every motion is a finite word of plane reflections together with its
// cached affine form X -> M X + t. The linear part is exactly
// orthogonal and det M = (-1)^(word length); the word and the affine
// form agree pointwise.
class Isometry {
  public:
    Isometry();  // identity

    static Isometry from_word(std::vector<Plane> word);

    const std::vector<Plane>& word() const { return word_; }
    const Mat3& linear() const { return linear_; }
    const Vec3& translation() const { return translation_; }

    Point apply(const Point& p) const;
    Point apply_word(const Point& p) const;  // fold the reflections; equals apply()
    Vec3 apply_vector(const Vec3& v) const;  // linear part only
    Line apply(const Line& l) const;
    Plane apply(const Plane& pl) const;

    bool operator==(const Isometry& o) const {
        return linear_ == o.linear_ && translation_ == o.translation_;
    }
    bool operator!=(const Isometry& o) const { return !(*this == o); }
    bool is_identity() const;

  private:
    std::vector<Plane> word_;
    Mat3 linear_;
    Vec3 translation_;
};

Isometry reflect_plane(const Plane& p);
Isometry reflect_line(const Line& a);
Isometry inversion(const Point& o);
// rotation about `axis` taking the half-plane through `h` to the one
// through `k` (both points off the axis); exact only when the dihedral
// bisector direction is rational, otherwise throws
Isometry rotation(const Line& axis, const Point& h, const Point& k);
Isometry translation(const Vec3& v);

Isometry compose(const Isometry& f, const Isometry& g);  // f after g
Isometry inverse(const Isometry& f);

enum class Parity { Even, Odd };
Parity parity(const Isometry& f);

// classification of the rotation-like factor of a motion
enum class RotationKind { Identity, Rotation, Reflection, RotoReflection };
struct Decomposition {
    Isometry rotation_part;   // g with g(O) = O
    Isometry translation_part;  // p, a pure translation; f = g o p
    RotationKind kind;
    std::optional<Line> fixed_line;    // axis when kind == Rotation/RotoReflection
    std::optional<Plane> mirror;       // plane when kind == Reflection
};
Decomposition decompose(const Isometry& f, const Point& o);

Isometry conjugate(const Isometry& f, const Isometry& g);  // f o g o f^-1

bool is_translation(const Isometry& f);
std::optional<Line> fixed_line_of(const Isometry& f);  // pointwise-fixed line, if any
bool has_fixed_point(const Isometry& f);

Point project_line(const Point& x, const Line& a);
Point project_plane(const Point& x, const Plane& p);

// Similarity f = h_{k,O} o tail with exact rational factor k != 0:
// squared lengths scale by k^2, angle shapes are invariant.
struct Similarity {
    Point center;
    Rational factor;
    Isometry tail;
};

Similarity homothety(const Point& o, const Rational& k);
Similarity sim_from_isometry(const Isometry& f);
Point sim_apply(const Similarity& s, const Point& p);
Similarity sim_compose(const Similarity& f, const Similarity& g);  // f after g

// report serialization: {"word": [...], "matrix": [[...]], "t": [...]}
// with rational entries as strings
std::string isometry_str(const Isometry& f);

// Widening escape hatch for rotations whose dihedral bisector leaves
// Q^3: a rational affine pair (M, t) with every entry within 2^-m of
// the exact rotation's. The result is deliberately NOT an Isometry --
// its linear part is only approximately orthogonal.
std::pair<Mat3, Vec3> rotation_affine_approx(const Line& axis, const Point& h, const Point& k,
                                             unsigned m);

}  // namespace geom
