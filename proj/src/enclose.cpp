#include "geom/enclose.hpp"

#include <stdexcept>

namespace geom {

DyadicInterval sqrt_enclose(const Rational& r, unsigned m) {
    if (r < 0) throw std::invalid_argument("sqrt_enclose: negative radicand");
    if (r == 0) return interval_exact(Dyadic{0, 0}, m);
    if (auto root = rat_sqrt_exact(r)) {
        Int d = den(*root);
        // exact dyadic root -> degenerate interval
        if ((d & (d - 1)) == 0) {
            unsigned e = 0;
            while ((Int(1) << e) < d) ++e;
            return interval_exact(dyadic(num(*root), e), m);
        }
        return dyadic_approx(*root, m);
    }
    // dyadic bisection, exact rational squaring as the oracle
    Rational lo = 0, hi = 1;
    while (hi * hi <= r) hi *= 2;
    Rational target = pow2_rat(-static_cast<int>(m));
    while (hi - lo > target) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= r) lo = mid;
        else hi = mid;
    }
    // lo and hi are dyadic by construction (halvings of integers)
    auto to_dyadic = [](const Rational& v) {
        Int d = den(v);
        unsigned e = 0;
        while ((Int(1) << e) < d) ++e;
        return dyadic(num(v), e);
    };
    return DyadicInterval{to_dyadic(lo), to_dyadic(hi), m};
}

RationalInterval pi_enclose_rat(unsigned m) {
    // Machin: pi = 16*arctan(1/5) - 4*arctan(1/239), alternating series
    // with consecutive partial sums bracketing the limit.
    auto arctan_inv = [](long q, unsigned terms) {
        Rational s_even = 0, s_odd = 0, s = 0;
        Rational qq(q);
        Rational term = 1 / qq;
        for (unsigned k = 0; k < terms; ++k) {
            if (k % 2 == 0) s += term / Rational(2 * k + 1);
            else s -= term / Rational(2 * k + 1);
            if (k % 2 == 0) { s_even = s; } else { s_odd = s; }
            term /= qq * qq;
        }
        // terms is chosen even; after an even count the last added term was negative,
        // so s <= arctan < s + next positive term; bracket with consecutive partials.
        return std::pair<Rational, Rational>(s_odd, s_even);
    };
    Rational eps = pow2_rat(-static_cast<int>(m) - 3);
    unsigned n5 = 2, n239 = 2;
    while (true) {
        auto a5 = arctan_inv(5, n5);
        auto a239 = arctan_inv(239, n239);
        Rational lo = 16 * a5.first - 4 * a239.second;
        Rational hi = 16 * a5.second - 4 * a239.first;
        if (hi - lo <= eps) return RationalInterval{lo, hi};
        n5 += 2;
        n239 += 2;
    }
}

DyadicInterval pi_enclose(unsigned m) {
    RationalInterval iv = pi_enclose_rat(m + 3);
    unsigned g = m + 2;
    Int klo = floor_div(num(iv.lo) << g, den(iv.lo));
    Int khi = -floor_div(-(num(iv.hi) << g), den(iv.hi));  // ceil
    return DyadicInterval{dyadic(klo, g), dyadic(khi, g), m};
}

RationalInterval cos_enclose(const Rational& x, unsigned m) {
    // Taylor partial sums with the alternating-series remainder bound;
    // valid once the term magnitudes are decreasing past the cut.
    Rational x2 = x * x;
    Rational eps = pow2_rat(-static_cast<int>(m) - 1);
    Rational sum = 1, term = 1;
    unsigned k = 0;
    while (true) {
        // t_{k+1} = t_k * x^2 / ((2k+1)(2k+2))
        term = term * x2 / Rational((2 * k + 1) * (2 * k + 2));
        ++k;
        if (k % 2 == 1) sum -= term;
        else sum += term;
        Rational next = term * x2 / Rational((2 * k + 1) * (2 * k + 2));
        if (next <= eps && x2 <= Rational((2 * k + 1) * (2 * k + 2))) {
            return RationalInterval{sum - next, sum + next};
        }
    }
}

// sign of cos(x) - c, decided by refining the cosine enclosure
static int cos_compare(const Rational& x, const QuadraticValue& c) {
    for (unsigned prec = 8;; prec *= 2) {
        RationalInterval iv = cos_enclose(x, prec);
        if (qv_compare(c, iv.hi) > 0) return -1;
        if (qv_compare(c, iv.lo) < 0) return 1;
        if (prec > 4096)
            throw std::runtime_error("cos_compare: failed to separate (unexpected equality)");
    }
}

// is the dyadic value x certainly >= pi?  (x != pi always; escalate precision)
static bool at_least_pi(const Rational& x) {
    for (unsigned prec = 8;; prec *= 2) {
        RationalInterval pi = pi_enclose_rat(prec);
        if (x >= pi.hi) return true;
        if (x <= pi.lo) return false;
    }
}

DyadicInterval arccos_enclose(const QuadraticValue& c, unsigned m) {
    if (qv_compare(c, Rational(-1)) < 0 || qv_compare(c, Rational(1)) > 0)
        throw std::invalid_argument("arccos_enclose: cosine out of [-1, 1]");
    if (qv_compare(c, Rational(1)) == 0) return interval_exact(Dyadic{0, 0}, m);
    if (qv_compare(c, Rational(-1)) == 0) return pi_enclose(m);

    Rational lo = 0;
    Rational hi = rat(13, 4);  // > pi; arccos(c) in [lo, hi]
    Rational target = pow2_rat(-static_cast<int>(m));
    while (hi - lo > target) {
        Rational mid = (lo + hi) / 2;
        if (at_least_pi(mid)) {
            hi = mid;  // arccos(c) <= pi <= mid
        } else if (cos_compare(mid, c) > 0) {
            lo = mid;  // cos(mid) > c  =>  mid < arccos(c)
        } else {
            hi = mid;
        }
    }
    auto to_dyadic = [](const Rational& v) {
        Int d = den(v);
        unsigned e = 0;
        while ((Int(1) << e) < d) ++e;
        return dyadic(num(v), e);
    };
    return DyadicInterval{to_dyadic(lo), to_dyadic(hi), m};
}

}  // namespace geom
