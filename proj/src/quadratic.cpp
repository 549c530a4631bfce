#include "geom/quadratic.hpp"

#include <stdexcept>

namespace geom {

QuadraticValue::QuadraticValue(Rational b, Rational r, int s)
    : base(std::move(b)), radicand(std::move(r)), sign(s) {
    if (radicand < 0) throw std::invalid_argument("QuadraticValue: negative radicand");
    if (sign != 1 && sign != -1) throw std::invalid_argument("QuadraticValue: sign must be +-1");
    if (auto root = rat_sqrt_exact(radicand)) {
        base += (sign > 0 ? *root : Rational(-*root));
        radicand = 0;
        sign = 1;
    }
}

QuadraticValue qv(const Rational& r) { return QuadraticValue(r, 0, 1); }

QuadraticValue qv_sqrt(const Rational& r) {
    if (r < 0) throw std::invalid_argument("qv_sqrt: negative radicand");
    return QuadraticValue(0, r, 1);
}

// sign of a + s*sqrt(r), r >= 0
static int sign_single(const Rational& a, int s, const Rational& r) {
    if (r == 0) return sgn(a);
    if (s > 0) {
        if (a >= 0) return 1;
        return sgn(r - a * a);  // sqrt(r) vs |a|
    }
    // a - sqrt(r)
    if (a <= 0) return -1;
    return sgn(a * a - r);
}

// sign of A + s*sqrt(r) + t*sqrt(u); r, u >= 0, s,t in {+1,-1}
static int sign_pair(const Rational& A, int s, const Rational& r, int t, const Rational& u) {
    if (u == 0) return sign_single(A, s, r);
    if (r == 0) return sign_single(A, t, u);
    // L = A + s*sqrt(r), R = -t*sqrt(u); want sign(L - R)
    int sL = sign_single(A, s, r);
    int sR = -t;  // sign of -t*sqrt(u), u > 0
    if (sL != sR) {
        if (sL == 0) return -sR;
        if (sR == 0) return sL;
        return sL;  // opposite nonzero signs
    }
    if (sL == 0) return 0;  // both zero
    // same nonzero sign: compare squares. L^2 = (A^2 + r) + 2*A*s*sqrt(r), R^2 = u.
    Rational lin = 2 * A * Rational(s);
    Rational rational_part = A * A + r - u;
    int cmp_sq;
    if (lin == 0) {
        cmp_sq = sgn(rational_part);
    } else {
        int ls = lin > 0 ? 1 : -1;
        cmp_sq = sign_single(rational_part, ls, lin * lin * r);
    }
    return sL * cmp_sq;
}

int qv_sign(const QuadraticValue& q) { return sign_single(q.base, q.sign, q.radicand); }

int qv_compare(const QuadraticValue& a, const QuadraticValue& b) {
    // sign of (a.base - b.base) + a.sign*sqrt(a.radicand) - b.sign*sqrt(b.radicand)
    return sign_pair(a.base - b.base, a.sign, a.radicand, -b.sign, b.radicand);
}

int qv_compare(const QuadraticValue& a, const Rational& b) {
    return sign_single(a.base - b, a.sign, a.radicand);
}

bool operator==(const QuadraticValue& a, const QuadraticValue& b) {
    return a.base == b.base && a.radicand == b.radicand && a.sign == b.sign;
}
bool operator!=(const QuadraticValue& a, const QuadraticValue& b) { return !(a == b); }
bool operator<(const QuadraticValue& a, const QuadraticValue& b) { return qv_compare(a, b) < 0; }

QuadraticValue qv_negate(const QuadraticValue& q) {
    if (q.is_rational()) return qv(-q.base);
    return QuadraticValue(-q.base, q.radicand, -q.sign);
}

QuadraticValue qv_add(const QuadraticValue& q, const Rational& c) {
    return QuadraticValue(q.base + c, q.radicand, q.sign);
}

QuadraticValue qv_scale(const QuadraticValue& q, const Rational& c) {
    if (c == 0 || q.is_rational()) return qv(q.base * c);
    int s = c > 0 ? q.sign : -q.sign;
    return QuadraticValue(q.base * c, q.radicand * c * c, s);
}

QuadraticValue qv_mul_roots(const QuadraticValue& a, const QuadraticValue& b) {
    if (a.base != 0 || b.base != 0)
        throw std::invalid_argument("qv_mul_roots: operands must be pure square roots");
    return QuadraticValue(0, a.radicand * b.radicand, a.sign * b.sign);
}

Int qv_floor(const QuadraticValue& q) {
    if (q.is_rational()) return rat_floor(q.base);
    // bracket sqrt(radicand) = sqrt(p*d)/d with p/d canonical
    const Int& p = num(q.radicand);
    const Int& d = den(q.radicand);
    Int s = isqrt(p * d);
    Rational lo = rat(s, d), hi = rat(s + 1, d);  // lo <= sqrt(radicand) < hi
    Rational vlo, vhi;
    if (q.sign > 0) {
        vlo = q.base + lo;
        vhi = q.base + hi;
    } else {
        vlo = q.base - hi;
        vhi = q.base - lo;
    }
    Int k = rat_floor(vlo);
    Int khi = rat_floor(vhi);
    // tighten with exact comparisons; range is at most a few candidates wide
    while (k < khi && qv_compare(q, Rational(k + 1)) >= 0) ++k;
    return k;
}

std::string qv_str(const QuadraticValue& q) {
    if (q.is_rational()) return rat_str(q.base);
    std::string s;
    if (q.base != 0) s = rat_str(q.base) + (q.sign > 0 ? " + " : " - ");
    else if (q.sign < 0) s = "-";
    return s + "sqrt(" + rat_str(q.radicand) + ")";
}

}  // namespace geom
