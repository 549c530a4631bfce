#pragma once

#include "geom/rational.hpp"

namespace geom {

// Exact carrier for values of the form  base + sign * sqrt(radicand)
// with rational base and radicand >= 0. Lengths |PQ| and cosines of
// angles between rational directions live here. A perfect-square
// radicand folds into the base at construction, so the representation
// is canonical and equality is field equality.
struct QuadraticValue {
    Rational base;
    Rational radicand;  // >= 0; 0 means the value is rational
    int sign = 1;       // +1 or -1; fixed to +1 when radicand == 0

    QuadraticValue() = default;
    QuadraticValue(Rational b, Rational r, int s);

    bool is_rational() const { return radicand == 0; }
    // valid only when is_rational()
    const Rational& as_rational() const { return base; }
};

QuadraticValue qv(const Rational& r);
QuadraticValue qv_sqrt(const Rational& r);  // sqrt(r), r >= 0

// exact sign of base + sign*sqrt(radicand)
int qv_sign(const QuadraticValue& q);

// exact three-way comparison
int qv_compare(const QuadraticValue& a, const QuadraticValue& b);
int qv_compare(const QuadraticValue& a, const Rational& b);

bool operator==(const QuadraticValue& a, const QuadraticValue& b);
bool operator!=(const QuadraticValue& a, const QuadraticValue& b);
bool operator<(const QuadraticValue& a, const QuadraticValue& b);

QuadraticValue qv_negate(const QuadraticValue& q);
QuadraticValue qv_add(const QuadraticValue& q, const Rational& c);
QuadraticValue qv_scale(const QuadraticValue& q, const Rational& c);
// product of two pure square roots: sqrt(r) * sqrt(u) = sqrt(r*u);
// both operands must have base == 0
QuadraticValue qv_mul_roots(const QuadraticValue& a, const QuadraticValue& b);

// floor of the exact value
Int qv_floor(const QuadraticValue& q);

std::string qv_str(const QuadraticValue& q);

}  // namespace geom
