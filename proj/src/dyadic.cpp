#include "geom/dyadic.hpp"

#include <stdexcept>

namespace geom {

Dyadic dyadic(Int k, unsigned m) {
    while (m > 0 && k % 2 == 0) {
        k >>= 1;
        --m;
    }
    return Dyadic{std::move(k), m};
}

Rational dyadic_rat(const Dyadic& d) { return rat(d.k, pow2(d.m)); }

int dyadic_compare(const Dyadic& a, const Dyadic& b) {
    // a.k/2^am vs b.k/2^bm -> a.k*2^bm vs b.k*2^am
    Int lhs = a.k << b.m;
    Int rhs = b.k << a.m;
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

bool operator==(const Dyadic& a, const Dyadic& b) { return a.k == b.k && a.m == b.m; }
bool operator<(const Dyadic& a, const Dyadic& b) { return dyadic_compare(a, b) < 0; }
bool operator<=(const Dyadic& a, const Dyadic& b) { return dyadic_compare(a, b) <= 0; }

std::string dyadic_str(const Dyadic& d) {
    if (d.m == 0) return d.k.str();
    return d.k.str() + "/2^" + std::to_string(d.m);
}

bool DyadicInterval::contains(const Rational& x) const {
    return dyadic_rat(lo) <= x && x <= dyadic_rat(hi);
}

bool DyadicInterval::contains(const QuadraticValue& x) const {
    return qv_compare(x, dyadic_rat(lo)) >= 0 && qv_compare(x, dyadic_rat(hi)) <= 0;
}

DyadicInterval interval_exact(const Dyadic& v, unsigned m) { return DyadicInterval{v, v, m}; }

std::string interval_str(const DyadicInterval& iv) {
    return "[" + dyadic_str(iv.lo) + ", " + dyadic_str(iv.hi) + "]@" + std::to_string(iv.m);
}

DyadicInterval dyadic_approx(const Rational& xi, unsigned m) {
    Int km = floor_div(num(xi) << m, den(xi));
    return DyadicInterval{dyadic(km, m), dyadic(km + 1, m), m};
}

DyadicInterval dyadic_approx(const QuadraticValue& xi, unsigned m) {
    if (xi.is_rational()) return dyadic_approx(xi.as_rational(), m);
    QuadraticValue scaled = qv_scale(xi, Rational(pow2(m)));
    Int km = qv_floor(scaled);
    return DyadicInterval{dyadic(km, m), dyadic(km + 1, m), m};
}

unsigned separate(const QuadraticValue& xi, const QuadraticValue& eta) {
    if (qv_compare(xi, eta) >= 0) throw std::invalid_argument("separate: requires xi < eta");
    for (unsigned n = 0;; ++n) {
        DyadicInterval a = dyadic_approx(xi, n + 1);
        DyadicInterval b = dyadic_approx(eta, n + 1);
        if (a.hi < b.lo) return n;  // persists for all finer orders by nesting
    }
}

unsigned separate(const Rational& xi, const Rational& eta) { return separate(qv(xi), qv(eta)); }

DyadicInterval interval_add(const DyadicInterval& a, const DyadicInterval& b) {
    unsigned m = std::max(a.m, b.m);
    // add endpoints over the common denominator 2^M
    unsigned M = std::max(std::max(a.lo.m, a.hi.m), std::max(b.lo.m, b.hi.m));
    Int alo = a.lo.k << (M - a.lo.m), ahi = a.hi.k << (M - a.hi.m);
    Int blo = b.lo.k << (M - b.lo.m), bhi = b.hi.k << (M - b.hi.m);
    return DyadicInterval{dyadic(alo + blo, M), dyadic(ahi + bhi, M), m};
}

}  // namespace geom
