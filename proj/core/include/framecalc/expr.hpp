#pragma once

#include "framecalc/errors.hpp"
#include "framecalc/rational.hpp"
#include "framecalc/symbols.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace framecalc {

/// One canonical product: coeff * prod(sym^power) * exp(sum(freq * coord)).
/// Invariants: coeff != 0, every stored power > 0, every stored frequency != 0,
/// and exponential keys are coordinates only.
struct Term {
    Rational coeff = 0;
    std::map<Symbol, int> powers;
    std::map<Symbol, Rational> expo;

    Term() = default;
    explicit Term(Rational c) : coeff(std::move(c)) {}

    bool key_equals(const Term& other) const;
    bool is_constant() const { return powers.empty() && expo.empty(); }
};

/// Total order on term keys: first the power maps, then the frequency maps,
/// each compared by walking the union of symbol names in ascending order and
/// deciding on the first exponent that differs (absent entries count as 0).
/// The order is compatible with key addition, which exact division relies on.
int compare_term_keys(const Term& a, const Term& b);

Term term_mul(const Term& a, const Term& b);

/// Exact term quotient, or nullopt when a power would go negative.
std::optional<Term> term_div(const Term& a, const Term& b);

/// Exact symbolic scalar: a canonical sum of terms, sorted by descending key,
/// with no two terms sharing a key and no zero coefficients. The empty sum is
/// zero, and structural equality decides semantic equality.
class Expr {
public:
    Expr() = default;

    static Expr from_rational(Rational r);
    static Expr from_int(long long v) { return from_rational(rat(v)); }
    static Expr from_symbol(const Symbol& s);
    static Expr from_term(Term t);
    /// Canonicalizes an arbitrary term list (merges keys, drops zeros, sorts).
    static Expr from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// The rational value when the expression is a constant, else nullopt.
    std::optional<Rational> as_rational() const;

    /// True when no coordinate occurs anywhere (parameters are constants).
    bool is_constant() const;

    bool contains(const Symbol& s) const;
    int degree_in(const Symbol& s) const;

    friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr operator*(const Expr& a, const Expr& b);
    Expr& operator+=(const Expr& other) { return *this = *this + other; }
    Expr& operator-=(const Expr& other) { return *this = *this - other; }
    Expr& operator*=(const Expr& other) { return *this = *this * other; }

private:
    std::vector<Term> terms_;
};

bool operator==(const Term& a, const Term& b);

Expr pow(const Expr& base, unsigned exponent);

/// Exact partial derivative with respect to a coordinate. Throws Error when
/// `x` is a parameter.
Expr partial(const Expr& a, const Symbol& x);

/// Divides every term of `a` by the single term `t`. Throws NonDivisibleError
/// when a monomial power would become negative.
Expr divide_by_term(const Expr& a, const Term& t);

/// Exact quotient a / b when it exists within the algebra, else nullopt.
/// (Multivariate lead-term division; a bounded iteration count converts the
/// pathological non-terminating cases into nullopt.)
std::optional<Expr> divide_exact(const Expr& a, const Expr& b);

/// Replaces a parameter by an expression. `s` must be a parameter: parameters
/// never occur under exp(), so substitution stays inside the algebra.
Expr subst(const Expr& a, const Symbol& s, const Expr& value);

/// Splits `a` as constant + slope * s when `a` is at most linear in the
/// parameter `s`; nullopt when the degree exceeds 1.
std::optional<std::pair<Expr, Expr>> linear_in(const Expr& a, const Symbol& s);

std::string to_string(const Expr& a);
std::string to_string(const Term& t);

} // namespace framecalc
