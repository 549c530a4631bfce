#pragma once

#include "geom/dyadic.hpp"

namespace geom {

// Certified interval of width <= 2^-m containing sqrt(r), r >= 0,
// computed by dyadic bisection with exact rational squaring as the
// comparison oracle. When sqrt(r) is itself a dyadic number the exact
// degenerate interval [sqrt(r), sqrt(r)] is returned.
DyadicInterval sqrt_enclose(const Rational& r, unsigned m);

// Certified interval of width <= 2^-m containing pi (Machin series
// with exact rational remainder bounds).
DyadicInterval pi_enclose(unsigned m);

// Rational enclosure of cos(x) with width <= 2^-m; x given exactly.
// Exposed for the test oracles; arccos_enclose builds on it.
struct RationalInterval {
    Rational lo, hi;
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};
RationalInterval cos_enclose(const Rational& x, unsigned m);
RationalInterval pi_enclose_rat(unsigned m);

// Certified interval of width <= 2^-m containing arccos(c) in [0, pi];
// requires -1 <= c <= 1 (exactly decidable). arccos(1) = 0 is returned
// as the exact degenerate interval; arccos(-1) = pi_enclose(m).
DyadicInterval arccos_enclose(const QuadraticValue& c, unsigned m);

}  // namespace geom
