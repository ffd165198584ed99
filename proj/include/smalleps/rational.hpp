#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace smalleps {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error the library raises.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// Floor division for big integers (quotient rounded toward -inf).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rfloor(const Rational& q) { return floor_div(num(q), den(q)); }
inline BigInt rceil(const Rational& q) { return -floor_div(-num(q), den(q)); }

inline Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw error("rat_pow: zero base with negative exponent");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/// Integer n-th root by bisection; returns r with r^n <= a < (r+1)^n. Requires a >= 0, n >= 1.
inline BigInt iroot(const BigInt& a, unsigned n) {
    if (a < 0) throw error("iroot: negative radicand");
    if (a == 0 || a == 1 || n == 1) return a;
    BigInt lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, n) <= a) hi <<= 1;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, n) <= a) lo = mid; else hi = mid;
    }
    return lo;
}

/// Exact n-th root of a rational if one exists (used for rational powers of coefficients).
inline std::optional<Rational> exact_root(const Rational& q, unsigned n) {
    if (n == 0) throw error("exact_root: zeroth root");
    if (q == 0) return Rational(0);
    bool neg = q < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    BigInt an = neg ? BigInt(-num(q)) : num(q);
    BigInt ad = den(q);
    BigInt rn = iroot(an, n), rd = iroot(ad, n);
    if (boost::multiprecision::pow(rn, n) != an) return std::nullopt;
    if (boost::multiprecision::pow(rd, n) != ad) return std::nullopt;
    Rational r(rn, rd);
    return neg ? Rational(-r) : r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p", "p/q" with optional sign; rejects anything else.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = s[i] == '-'; ++i; }
    auto digits = [&](BigInt& out) -> bool {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        out = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            out = out * 10 + (s[i] - '0');
            ++i;
        }
        return true;
    };
    BigInt p, q = 1;
    if (!digits(p)) return std::nullopt;
    if (i < s.size() && s[i] == '/') {
        ++i;
        if (!digits(q) || q == 0) return std::nullopt;
    }
    if (i != s.size()) return std::nullopt;
    Rational r(p, q);
    return neg ? Rational(-r) : r;
}

}  // namespace smalleps
