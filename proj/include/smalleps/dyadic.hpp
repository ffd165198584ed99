#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "rational.hpp"

namespace smalleps {

struct eval_overflow : error {
    using error::error;
};

/// Closed rational interval certified to contain a real value.
struct Interval {
    Rational lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw error("Interval: lo > hi");
    }
    static Interval point(const Rational& v) { return Interval(v, v); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool strictly_positive() const { return lo > 0; }
    bool strictly_negative() const { return hi < 0; }
    Rational mag() const { return std::max(rabs(lo), rabs(hi)); }
};

inline Rational round_down(const Rational& x, int prec) {
    BigInt scaled = floor_div(num(x) << prec, den(x));
    return Rational(scaled, BigInt(1) << prec);
}
inline Rational round_up(const Rational& x, int prec) {
    BigInt scaled = -floor_div(-(num(x) << prec), den(x));
    return Rational(scaled, BigInt(1) << prec);
}

inline Interval outward(const Interval& a, int prec) {
    return Interval(round_down(a.lo, prec), round_up(a.hi, prec));
}

inline Interval iv_neg(const Interval& a) { return Interval(-a.hi, -a.lo); }

inline Interval iv_add(const Interval& a, const Interval& b, int prec) {
    return outward(Interval(a.lo + b.lo, a.hi + b.hi), prec);
}
inline Interval iv_sub(const Interval& a, const Interval& b, int prec) {
    return iv_add(a, iv_neg(b), prec);
}
inline Interval iv_mul(const Interval& a, const Interval& b, int prec) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return outward(Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                            std::max(std::max(p1, p2), std::max(p3, p4))),
                   prec);
}
inline Interval iv_scale(const Interval& a, const Rational& c, int prec) {
    return iv_mul(a, Interval::point(c), prec);
}
inline Interval iv_abs(const Interval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return iv_neg(a);
    return Interval(Rational(0), a.mag());
}
inline Interval iv_hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

/// exp with argument |w| <= 1/2 by Taylor series; absolute error bookkeeping
/// via per-step grid rounding.
namespace detail {

inline Interval exp_small(const Rational& w, int prec) {
    int wp = prec + 32;
    Rational sum(1), term(1), err(0);
    const Rational grid(Rational(1, BigInt(1) << wp));
    for (int n = 1; n <= 1000; ++n) {
        term = round_down(term * w / n, wp);
        err += grid;
        sum += term;
        if (rabs(term) < grid) {
            // remaining tail dominated by a geometric series with ratio <= 1/2
            err += 2 * grid;
            break;
        }
    }
    err = 2 * err + 4 * grid;  // cover error propagation through later terms
    return Interval(sum - err, sum + err);
}

}  // namespace detail

/// Certified enclosure of exp(w). Argument magnitude is capped: values like
/// exp(1/eps) on the deep grid are astronomically large and must be handled in
/// the log domain by callers.
inline Interval exp_enclosure(const Rational& w0, int prec) {
    if (w0 == 0) return Interval::point(Rational(1));
    if (rabs(w0) > 65536) throw eval_overflow("exp_enclosure: argument too large; use log-domain");
    Rational w = w0;
    int halvings = 0;
    while (rabs(w) > Rational(1, 2)) {
        w /= 2;
        ++halvings;
    }
    Interval r = detail::exp_small(w, prec + 2 * halvings + 8);
    for (int i = 0; i < halvings; ++i) {
        if (r.lo < 0) r.lo = 0;  // exp is positive; rounding may dip below
        r = outward(Interval(r.lo * r.lo, r.hi * r.hi), prec + 2 * (halvings - i) + 8);
    }
    return outward(r, prec);
}

namespace detail {

/// 2*atanh(z) = log((1+z)/(1-z)) for |z| <= 1/2, by series.
inline Interval atanh2(const Rational& z, int prec) {
    int wp = prec + 32;
    const Rational grid(Rational(1, BigInt(1) << wp));
    Rational z2 = z * z;
    Rational pw = z, sum(0), err(0);
    for (int k = 0; k <= 2000; ++k) {
        Rational t = round_down(pw / (2 * k + 1), wp);
        err += grid;
        sum += t;
        if (rabs(t) < grid) {
            err += 2 * grid;
            break;
        }
        pw = round_down(pw * z2, wp);
        err += grid;
    }
    sum *= 2;
    err = 2 * err + 4 * grid;
    return Interval(sum - err, sum + err);
}

inline Interval log2_enclosure(int prec) {
    static std::mutex mu;
    static std::map<int, Interval> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.lower_bound(prec);
    if (it != cache.end()) {
        if (it->first == prec) return it->second;
    }
    Interval v = atanh2(Rational(1, 3), prec);
    cache[prec] = v;
    return v;
}

}  // namespace detail

/// Certified enclosure of the natural log of a positive rational.
inline Interval log_enclosure(const Rational& x, int prec) {
    if (x <= 0) throw error("log_enclosure: nonpositive argument");
    Rational m = x;
    long e = 0;
    while (m > Rational(4, 3)) {
        m /= 2;
        ++e;
    }
    while (m < Rational(2, 3)) {
        m *= 2;
        --e;
    }
    int wp = prec + 16;
    Interval s = detail::atanh2(Rational((m - 1) / (m + 1)), wp);
    if (e != 0) {
        Interval l2 = detail::log2_enclosure(wp + 64);
        s = iv_add(s, iv_scale(l2, Rational(e), wp), wp);
    }
    return outward(s, prec);
}

/// log over an interval of positive rationals (monotone).
inline Interval log_enclosure(const Interval& x, int prec) {
    if (x.lo <= 0) throw error("log_enclosure: interval touches zero");
    return Interval(log_enclosure(x.lo, prec).lo, log_enclosure(x.hi, prec).hi);
}

inline Interval exp_enclosure(const Interval& w, int prec) {
    return Interval(exp_enclosure(w.lo, prec).lo, exp_enclosure(w.hi, prec).hi);
}

/// x^q for positive rational x and rational exponent; exact when q is an integer.
inline Interval pow_enclosure(const Rational& x, const Rational& q, int prec) {
    if (x <= 0) throw error("pow_enclosure: base must be positive");
    if (is_integer(q)) {
        long e = static_cast<long>(num(q));
        return Interval::point(rat_pow(x, e));
    }
    Interval lx = log_enclosure(x, prec + 32);
    Interval w = iv_scale(lx, q, prec + 32);
    return outward(exp_enclosure(w, prec + 8), prec);
}

inline Interval pow_enclosure(const Interval& x, const Rational& q, int prec) {
    Interval a = pow_enclosure(x.lo, q, prec);
    Interval b = pow_enclosure(x.hi, q, prec);
    return iv_hull(a, b);  // monotone either way
}

namespace detail {

inline Interval pi_enclosure(int prec) {
    static std::mutex mu;
    static std::map<int, Interval> cache;
    std::lock_guard<std::mutex> lk(mu);
    if (auto it = cache.find(prec); it != cache.end()) return it->second;
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    auto atan_small = [prec](const Rational& z) {
        int wp = prec + 32;
        const Rational grid(Rational(1, BigInt(1) << wp));
        Rational z2 = z * z, pw = z, sum(0), err(0);
        for (int k = 0; k <= 2000; ++k) {
            Rational t = round_down(pw / (2 * k + 1), wp);
            err += grid;
            if (k % 2 == 0) sum += t; else sum -= t;
            if (rabs(t) < grid) {
                err += 2 * grid;  // alternating: tail below first dropped term
                break;
            }
            pw = round_down(pw * z2, wp);
            err += grid;
        }
        return Interval(sum - err, sum + err);
    };
    Interval a = atan_small(Rational(1, 5)), b = atan_small(Rational(1, 239));
    Interval pi = iv_sub(iv_scale(a, Rational(16), prec + 16), iv_scale(b, Rational(4), prec + 16),
                         prec + 16);
    cache[prec] = pi;
    return pi;
}

/// sin on |t| <= 4 by Taylor with certified tail.
inline Interval sin_taylor(const Rational& t, int prec) {
    int wp = prec + 48;
    const Rational grid(Rational(1, BigInt(1) << wp));
    Rational t2 = t * t;
    Rational term = round_down(t, wp), sum(0), err(grid);
    for (int k = 0; k <= 400; ++k) {
        sum += term;
        Rational next = round_down(term * t2 / ((2 * k + 2) * (2 * k + 3)), wp);
        err += 2 * grid;
        if (rabs(next) < grid && t2 < Rational(4 * (k + 2) * (k + 2))) {
            err += 2 * rabs(next) + 2 * grid;
            break;
        }
        term = -next;
    }
    err = 4 * err + 4 * grid;  // early terms amplify rounding by up to t^2/6 < 2
    return Interval(sum - err, sum + err);
}

}  // namespace detail

/// Certified sin for arbitrary rational argument (range-reduced via pi).
inline Interval sin_enclosure(const Rational& t, int prec) {
    Rational at = rabs(t);
    int extra = 0;
    Rational p(1);
    while (p < at) {
        p *= 2;
        ++extra;
    }
    int wp = prec + extra + 64;
    Interval pi = detail::pi_enclosure(wp);
    Interval twopi = iv_scale(pi, Rational(2), wp);
    BigInt k = rfloor(Rational(t / twopi.mid() + Rational(1, 2)));
    Interval red = iv_sub(Interval::point(t), iv_scale(twopi, Rational(k), wp), wp);
    // red is within ~[-pi-w, pi+w]; Taylor handles |t| <= 4
    Interval s = detail::sin_taylor(red.mid(), wp);
    Rational slack = red.width() / 2;  // |sin| is 1-Lipschitz
    return outward(Interval(s.lo - slack, s.hi + slack), prec);
}

inline Interval cos_enclosure(const Rational& t, int prec) {
    int wp = prec + 64;
    Interval pi = detail::pi_enclosure(wp);
    Interval arg = iv_add(Interval::point(t), iv_scale(pi, Rational(1, 2), wp), wp);
    Interval a = sin_enclosure(arg.lo, wp), b = sin_enclosure(arg.hi, wp);
    Interval hull = iv_hull(a, b);
    Rational slack = arg.width();  // |sin| is 1-Lipschitz over the whole arg interval
    return outward(Interval(hull.lo - slack, hull.hi + slack), prec);
}

}  // namespace smalleps
