#include "geom/rational.hpp"

#include <stdexcept>

namespace geom {

Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int rat_floor(const Rational& r) { return floor_div(num(r), den(r)); }

Int rat_ceil(const Rational& r) { return -rat_floor(-r); }

Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Int pow2(unsigned m) {
    Int one = 1;
    return one << m;
}

Rational pow2_rat(int m) {
    if (m >= 0) return Rational(pow2(static_cast<unsigned>(m)));
    return Rational(1, pow2(static_cast<unsigned>(-m)));
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

std::optional<Rational> rat_sqrt_exact(const Rational& r) {
    if (r < 0) return std::nullopt;
    Int np, dp;
    if (!is_perfect_square(num(r), &np)) return std::nullopt;
    if (!is_perfect_square(den(r), &dp)) return std::nullopt;
    return rat(np, dp);
}

std::string rat_str(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

std::optional<Rational> rat_parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(text);
            return Rational(n);
        }
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty()) return std::nullopt;
        Int n(ns), d(ds);
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace geom
