#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "monomial.hpp"

namespace smalleps {

struct division_by_zero_net : error {
    using error::error;
};

enum class Sign { Negative, Zero, Positive };

struct LimitClass {
    enum class Kind { Zero, Finite, Infinite };
    Kind kind;
    Rational value;  ///< meaningful only for Finite

    static LimitClass zero() { return {Kind::Zero, Rational(0)}; }
    static LimitClass finite(Rational v) { return {Kind::Finite, std::move(v)}; }
    static LimitClass infinite() { return {Kind::Infinite, Rational(0)}; }
    bool is_zero() const { return kind == Kind::Zero; }
    bool is_finite_limit() const { return kind != Kind::Infinite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
};

/// Exact finite sum of scale monomials with nonzero rational coefficients,
/// kept sorted strictly descending by growth. The empty sum is the unique
/// representation of 0. This is the decidable representative class: every
/// eventual relation reduces to the sign of a leading coefficient.
class AsymptoticExpr {
public:
    struct Term {
        Rational coeff;
        Monomial mono;
    };

    AsymptoticExpr() = default;

    static AsymptoticExpr zero() { return {}; }
    static AsymptoticExpr constant(const Rational& c) {
        return from_terms({{c, Monomial::one()}});
    }
    static AsymptoticExpr eps() { return from_terms({{Rational(1), Monomial::eps_pow(Rational(1))}}); }
    static AsymptoticExpr eps_pow(const Rational& q) {
        return from_terms({{Rational(1), Monomial::eps_pow(q)}});
    }
    static AsymptoticExpr log1e(long k = 1) {
        return from_terms({{Rational(1), Monomial::log_pow(k)}});
    }
    static AsymptoticExpr exp_term(const Rational& u, const Rational& r) {
        return from_terms({{Rational(1), Monomial::exp_part(u, r)}});
    }
    static AsymptoticExpr monomial(const Rational& coeff, const Monomial& m) {
        return from_terms({{coeff, m}});
    }

    /// Canonicalizes an arbitrary term list: merges equal monomials, drops
    /// zero coefficients, sorts descending.
    static AsymptoticExpr from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
            return compare_growth(a.mono, b.mono) == GrowthOrder::Dominates;
        });
        AsymptoticExpr e;
        for (auto& t : ts) {
            if (t.coeff == 0) continue;
            if (!e.terms_.empty() && e.terms_.back().mono == t.mono) {
                e.terms_.back().coeff += t.coeff;
                if (e.terms_.back().coeff == 0) e.terms_.pop_back();
            } else {
                e.terms_.push_back(std::move(t));
            }
        }
        return e;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& leading() const {
        if (terms_.empty()) throw error("leading(): zero expression");
        return terms_.front();
    }

    std::optional<Rational> as_constant() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
        return std::nullopt;
    }

    friend bool operator==(const AsymptoticExpr& a, const AsymptoticExpr& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono))
                return false;
        return true;
    }

private:
    std::vector<Term> terms_;
};

inline AsymptoticExpr add(const AsymptoticExpr& a, const AsymptoticExpr& b) {
    std::vector<AsymptoticExpr::Term> ts = a.terms();
    ts.insert(ts.end(), b.terms().begin(), b.terms().end());
    return AsymptoticExpr::from_terms(std::move(ts));
}

inline AsymptoticExpr neg(const AsymptoticExpr& a) {
    std::vector<AsymptoticExpr::Term> ts = a.terms();
    for (auto& t : ts) t.coeff = -t.coeff;
    return AsymptoticExpr::from_terms(std::move(ts));
}

inline AsymptoticExpr sub(const AsymptoticExpr& a, const AsymptoticExpr& b) {
    return add(a, neg(b));
}

inline AsymptoticExpr mul(const AsymptoticExpr& a, const AsymptoticExpr& b) {
    std::vector<AsymptoticExpr::Term> ts;
    ts.reserve(a.terms().size() * b.terms().size());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            ts.push_back({x.coeff * y.coeff, monomial_mul(x.mono, y.mono)});
    return AsymptoticExpr::from_terms(std::move(ts));
}

inline AsymptoticExpr scale(const AsymptoticExpr& a, const Rational& c) {
    std::vector<AsymptoticExpr::Term> ts = a.terms();
    for (auto& t : ts) t.coeff *= c;
    return AsymptoticExpr::from_terms(std::move(ts));
}

/// Sign of a(eps) for all sufficiently small eps: the sign of the leading
/// coefficient (Zero exactly on the zero expression).
inline Sign eventual_sign(const AsymptoticExpr& a) {
    if (a.is_zero()) return Sign::Zero;
    return a.leading().coeff > 0 ? Sign::Positive : Sign::Negative;
}

inline AsymptoticExpr abs_eventual(const AsymptoticExpr& a) {
    return eventual_sign(a) == Sign::Negative ? neg(a) : a;
}

/// Reciprocal is exact only for single-monomial expressions without log
/// factors; the scale is not closed under division of general sums.
inline AsymptoticExpr reciprocal(const AsymptoticExpr& a) {
    if (a.is_zero()) throw division_by_zero_net("reciprocal of the zero net");
    if (a.terms().size() != 1)
        throw out_of_scale("reciprocal of a multi-term expression is not on the scale");
    const auto& t = a.leading();
    if (t.mono.k != 0) throw out_of_scale("reciprocal of a log factor is not on the scale");
    return AsymptoticExpr::monomial(Rational(1) / t.coeff, monomial_pow(t.mono, Rational(-1)));
}

inline AsymptoticExpr int_pow(const AsymptoticExpr& a, long n) {
    if (n < 0) {
        if (a.is_zero()) throw division_by_zero_net("int_pow: negative power of the zero net");
        return int_pow(reciprocal(a), -n);
    }
    AsymptoticExpr acc = AsymptoticExpr::constant(Rational(1));
    AsymptoticExpr base = a;
    unsigned long m = static_cast<unsigned long>(n);
    while (m) {
        if (m & 1) acc = mul(acc, base);
        base = m > 1 ? mul(base, base) : base;
        m >>= 1;
    }
    return acc;
}

/// a^e for rational e; defined on single terms whose coefficient has an exact
/// root of the required order.
inline AsymptoticExpr rational_pow(const AsymptoticExpr& a, const Rational& e) {
    if (is_integer(e)) return int_pow(a, static_cast<long>(num(e)));
    if (a.is_zero()) {
        if (e > 0) return AsymptoticExpr::zero();
        throw division_by_zero_net("rational_pow: negative power of the zero net");
    }
    if (a.terms().size() != 1)
        throw out_of_scale("rational power of a multi-term expression is not on the scale");
    const auto& t = a.leading();
    unsigned root_ord = static_cast<unsigned>(den(e));
    auto root = exact_root(t.coeff, root_ord);
    if (!root) throw out_of_scale("coefficient has no exact rational root of order " +
                                  std::to_string(root_ord));
    Rational c = rat_pow(*root, static_cast<long>(num(e)));
    return AsymptoticExpr::monomial(c, monomial_pow(t.mono, e));
}

inline LimitClass limit_class(const AsymptoticExpr& a) {
    if (a.is_zero()) return LimitClass::zero();
    switch (monomial_limit(a.leading().mono)) {
        case MonomialLimit::Zero: return LimitClass::zero();
        case MonomialLimit::One: return LimitClass::finite(a.leading().coeff);
        default: return LimitClass::infinite();
    }
}

/// Canonical text form; round-trips through parse_expr.
inline std::string to_string(const AsymptoticExpr& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : a.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::vector<std::string> factors;
        const Monomial& m = t.mono;
        if (m.u != 0) factors.push_back("exp(" + to_string(m.u) + "*eps^-" + to_string(m.r) + ")");
        if (m.q != 0) factors.push_back(m.q == 1 ? "eps" : "eps^" + to_string(m.q));
        if (m.k != 0) factors.push_back(m.k == 1 ? "log" : "log^" + std::to_string(m.k));
        if (factors.empty() || c != 1) out << to_string(c) << (factors.empty() ? "" : "*");
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

}  // namespace smalleps
