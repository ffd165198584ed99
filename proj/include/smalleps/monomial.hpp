#pragma once

#include "rational.hpp"

namespace smalleps {

struct out_of_scale : error {
    using error::error;
};

/// One point of the asymptotic scale: exp(u * eps^-r) * eps^q * log(1/eps)^k.
/// Canonical: no exp factor is stored as u = 0, r = 1.
struct Monomial {
    Rational u;  ///< exp coefficient
    Rational r;  ///< exp rate, > 0
    Rational q;  ///< power of eps
    long k;      ///< power of log(1/eps), >= 0

    Monomial() : u(0), r(1), q(0), k(0) {}
    Monomial(Rational u_, Rational r_, Rational q_, long k_)
        : u(std::move(u_)), r(std::move(r_)), q(std::move(q_)), k(k_) {
        if (u == 0) r = 1;
        if (r <= 0) throw error("Monomial: exp rate must be positive");
        if (k < 0) throw error("Monomial: log power must be nonnegative");
    }

    static Monomial one() { return Monomial(); }
    static Monomial eps_pow(const Rational& q) { return Monomial(Rational(0), Rational(1), q, 0); }
    static Monomial log_pow(long k) { return Monomial(Rational(0), Rational(1), Rational(0), k); }
    static Monomial exp_part(const Rational& u, const Rational& r) {
        return Monomial(u, r, Rational(0), 0);
    }

    bool has_exp() const { return u != 0; }
    bool is_one() const { return u == 0 && q == 0 && k == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.u == b.u && a.r == b.r && a.q == b.q && a.k == b.k;
    }
};

enum class GrowthOrder { Dominates, SameMonomial, DominatedBy };

/// Total order on monomials by growth as eps -> 0+:
/// exp exponents compared by (rate, coefficient) dominance, then smaller eps
/// power dominates, then larger log power dominates.
inline GrowthOrder compare_growth(const Monomial& a, const Monomial& b) {
    // Sign of lim (a.u * eps^-a.r - b.u * eps^-b.r): decided by the
    // larger-rate nonzero side, or by coefficient difference at equal rates.
    int exp_cmp;
    if (a.u == 0 && b.u == 0) {
        exp_cmp = 0;
    } else if (b.u == 0) {
        exp_cmp = a.u > 0 ? 1 : -1;
    } else if (a.u == 0) {
        exp_cmp = b.u > 0 ? -1 : 1;
    } else if (a.r > b.r) {
        exp_cmp = a.u > 0 ? 1 : -1;
    } else if (a.r < b.r) {
        exp_cmp = b.u > 0 ? -1 : 1;
    } else {
        exp_cmp = a.u == b.u ? 0 : (a.u > b.u ? 1 : -1);
    }
    if (exp_cmp > 0) return GrowthOrder::Dominates;
    if (exp_cmp < 0) return GrowthOrder::DominatedBy;
    if (a.q != b.q) return a.q < b.q ? GrowthOrder::Dominates : GrowthOrder::DominatedBy;
    if (a.k != b.k) return a.k > b.k ? GrowthOrder::Dominates : GrowthOrder::DominatedBy;
    return GrowthOrder::SameMonomial;
}

/// Product of scale points; leaves the scale when two distinct exp rates with
/// nonzero coefficients meet (exp(eps^-1) * exp(eps^-1/2) has no single-rate form).
inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Rational u, r;
    if (a.u == 0) {
        u = b.u;
        r = b.r;
    } else if (b.u == 0) {
        u = a.u;
        r = a.r;
    } else if (a.r == b.r) {
        u = a.u + b.u;
        r = a.r;
    } else {
        throw out_of_scale("product of exp factors with different rates is not on the scale");
    }
    return Monomial(u, r, a.q + b.q, a.k + b.k);
}

/// M^e for rational e; requires the log power to stay a nonnegative integer.
inline Monomial monomial_pow(const Monomial& m, const Rational& e) {
    Rational ku = Rational(m.k) * e;
    if (!is_integer(ku)) throw out_of_scale("rational power makes log exponent non-integer");
    if (ku < 0) throw out_of_scale("negative log power is not on the scale");
    return Monomial(m.u * e, m.r, m.q * e, static_cast<long>(num(ku)));
}

/// lim_{eps->0+} of the monomial: 0, 1 (the constant monomial), or +inf.
enum class MonomialLimit { Zero, One, Infinite };

inline MonomialLimit monomial_limit(const Monomial& m) {
    if (m.u < 0) return MonomialLimit::Zero;
    if (m.u > 0) return MonomialLimit::Infinite;
    if (m.q > 0) return MonomialLimit::Zero;
    if (m.q < 0) return MonomialLimit::Infinite;
    return m.k == 0 ? MonomialLimit::One : MonomialLimit::Infinite;
}

}  // namespace smalleps
