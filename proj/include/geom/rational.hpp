#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace geom {

using Int = boost::multiprecision::cpp_int;

// Exact arbitrary-precision fraction, canonical form: gcd(|num|, den) = 1,
// den >= 1. cpp_rational maintains the canonical form on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat(Int n, Int d) { return Rational(std::move(n), std::move(d)); }
inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return Rational(n, d); }

inline int sgn(const Int& x) { return x.sign(); }
inline int sgn(const Rational& x) { return x.sign(); }

// floor(a/b) for b > 0
Int floor_div(const Int& a, const Int& b);

Int rat_floor(const Rational& r);
Int rat_ceil(const Rational& r);

Rational rat_abs(const Rational& r);

// 2^m as Int / Rational / 2^-m
Int pow2(unsigned m);
Rational pow2_rat(int m);

// integer square root (floor); requires n >= 0
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

// exact rational square root when it exists (r must be >= 0)
std::optional<Rational> rat_sqrt_exact(const Rational& r);

// "p/q" (plain "p" when q == 1)
std::string rat_str(const Rational& r);

// parses "p", "-p", "p/q"; rejects zero denominators
std::optional<Rational> rat_parse(const std::string& text);

}  // namespace geom
