#pragma once

#include "geom/quadratic.hpp"
#include "geom/rational.hpp"

namespace geom {

// Binary-rational number k / 2^m. Canonical form has an odd mantissa
// or m == 0.
struct Dyadic {
    Int k;
    unsigned m = 0;
};

Dyadic dyadic(Int k, unsigned m);  // normalizes
Rational dyadic_rat(const Dyadic& d);
int dyadic_compare(const Dyadic& a, const Dyadic& b);
bool operator==(const Dyadic& a, const Dyadic& b);
bool operator<(const Dyadic& a, const Dyadic& b);
bool operator<=(const Dyadic& a, const Dyadic& b);
std::string dyadic_str(const Dyadic& d);  // "k/2^m"

// Certified enclosure [lo, hi] of an exact value at order m.
// Regular enclosures are half-open (lo <= value < hi) of width exactly
// 2^-m; exact values may be carried as degenerate intervals lo == hi.
struct DyadicInterval {
    Dyadic lo;
    Dyadic hi;
    unsigned m = 0;

    bool degenerate() const { return lo == hi; }
    Rational width() const { return dyadic_rat(hi) - dyadic_rat(lo); }
    bool contains(const Rational& x) const;
    bool contains(const QuadraticValue& x) const;
};

DyadicInterval interval_exact(const Dyadic& v, unsigned m);
std::string interval_str(const DyadicInterval& iv);

// Binary-rational approximations of order m: the unique k_m with
// k_m/2^m <= xi < (k_m+1)/2^m.
DyadicInterval dyadic_approx(const Rational& xi, unsigned m);
DyadicInterval dyadic_approx(const QuadraticValue& xi, unsigned m);

// Least n such that the order-(n+1) upper approximant of xi lies
// strictly below the order-(n+1) lower approximant of eta; once true
// the separation persists for every finer order. Requires xi < eta.
unsigned separate(const QuadraticValue& xi, const QuadraticValue& eta);
unsigned separate(const Rational& xi, const Rational& eta);

// interval addition used by the measurement additivity checks
DyadicInterval interval_add(const DyadicInterval& a, const DyadicInterval& b);

}  // namespace geom
