#include "framecalc/expr.hpp"

#include <algorithm>
#include <sstream>

namespace framecalc {

namespace {

// Walks the union of two sorted (Symbol -> V) maps in ascending name order and
// compares entry-wise with absent values read as zero. First difference wins.
template <typename V>
int compare_exponent_maps(const std::map<Symbol, V>& a, const std::map<Symbol, V>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    const V zero{};
    while (ia != a.end() || ib != b.end()) {
        if (ia == a.end()) {
            // Remaining entries exist only in b.
            if (ib->second != zero) return ib->second > zero ? -1 : 1;
            ++ib;
            continue;
        }
        if (ib == b.end()) {
            if (ia->second != zero) return ia->second > zero ? 1 : -1;
            ++ia;
            continue;
        }
        if (ia->first < ib->first) {
            if (ia->second != zero) return ia->second > zero ? 1 : -1;
            ++ia;
        } else if (ib->first < ia->first) {
            if (ib->second != zero) return ib->second > zero ? -1 : 1;
            ++ib;
        } else {
            if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
            ++ia;
            ++ib;
        }
    }
    return 0;
}

void prune_term(Term& t) {
    for (auto it = t.powers.begin(); it != t.powers.end();)
        it = it->second == 0 ? t.powers.erase(it) : std::next(it);
    for (auto it = t.expo.begin(); it != t.expo.end();)
        it = it->second == 0 ? t.expo.erase(it) : std::next(it);
}

} // namespace

bool Term::key_equals(const Term& other) const { return compare_term_keys(*this, other) == 0; }

bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.powers == b.powers && a.expo == b.expo;
}

int compare_term_keys(const Term& a, const Term& b) {
    if (int c = compare_exponent_maps(a.powers, b.powers); c != 0) return c;
    return compare_exponent_maps(a.expo, b.expo);
}

Term term_mul(const Term& a, const Term& b) {
    Term out;
    out.coeff = a.coeff * b.coeff;
    out.powers = a.powers;
    for (const auto& [sym, p] : b.powers) out.powers[sym] += p;
    out.expo = a.expo;
    for (const auto& [sym, k] : b.expo) out.expo[sym] += k;
    prune_term(out);
    return out;
}

std::optional<Term> term_div(const Term& a, const Term& b) {
    Term out;
    out.coeff = a.coeff / b.coeff;
    out.powers = a.powers;
    for (const auto& [sym, p] : b.powers) {
        out.powers[sym] -= p;
        if (out.powers[sym] < 0) return std::nullopt;
    }
    out.expo = a.expo;
    for (const auto& [sym, k] : b.expo) out.expo[sym] -= k;
    prune_term(out);
    return out;
}

Expr Expr::from_rational(Rational r) {
    if (r == 0) return Expr();
    return from_term(Term(std::move(r)));
}

Expr Expr::from_symbol(const Symbol& s) {
    Term t(rat(1));
    t.powers[s] = 1;
    return from_term(std::move(t));
}

Expr Expr::from_term(Term t) {
    prune_term(t);
    if (t.coeff == 0) return Expr();
    Expr e;
    e.terms_.push_back(std::move(t));
    return e;
}

Expr Expr::from_terms(std::vector<Term> terms) {
    for (auto& t : terms) prune_term(t);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return compare_term_keys(a, b) > 0; });
    Expr e;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!e.terms_.empty() && e.terms_.back().key_equals(t)) {
            e.terms_.back().coeff += t.coeff;
            if (e.terms_.back().coeff == 0) e.terms_.pop_back();
        } else {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

bool Expr::is_one() const {
    return terms_.size() == 1 && terms_[0].is_constant() && terms_[0].coeff == 1;
}

std::optional<Rational> Expr::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].is_constant()) return terms_[0].coeff;
    return std::nullopt;
}

bool Expr::is_constant() const {
    for (const auto& t : terms_) {
        if (!t.expo.empty()) return false;
        for (const auto& [sym, p] : t.powers) {
            (void)p;
            if (sym.is_coordinate()) return false;
        }
    }
    return true;
}

bool Expr::contains(const Symbol& s) const {
    for (const auto& t : terms_) {
        if (t.powers.count(s) || t.expo.count(s)) return true;
    }
    return false;
}

int Expr::degree_in(const Symbol& s) const {
    int deg = 0;
    for (const auto& t : terms_) {
        auto it = t.powers.find(s);
        if (it != t.powers.end()) deg = std::max(deg, it->second);
    }
    return deg;
}

Expr operator+(const Expr& a, const Expr& b) {
    // Merge of two canonically sorted term lists.
    std::vector<Term> merged;
    merged.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        int c = compare_term_keys(*ia, *ib);
        if (c > 0) {
            merged.push_back(*ia++);
        } else if (c < 0) {
            merged.push_back(*ib++);
        } else {
            Term t = *ia;
            t.coeff += ib->coeff;
            if (t.coeff != 0) merged.push_back(std::move(t));
            ++ia;
            ++ib;
        }
    }
    merged.insert(merged.end(), ia, a.terms_.end());
    merged.insert(merged.end(), ib, b.terms_.end());
    Expr out;
    out.terms_ = std::move(merged);
    return out;
}

Expr operator-(const Expr& a) {
    Expr out = a;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) products.push_back(term_mul(ta, tb));
    return Expr::from_terms(std::move(products));
}

Expr pow(const Expr& base, unsigned exponent) {
    Expr out = Expr::from_int(1);
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

Expr partial(const Expr& a, const Symbol& x) {
    if (!x.is_coordinate())
        throw Error("cannot differentiate with respect to parameter '" + x.name() + "'");
    std::vector<Term> out;
    for (const auto& t : a.terms()) {
        // Power rule part.
        auto ip = t.powers.find(x);
        if (ip != t.powers.end()) {
            Term d = t;
            d.coeff *= ip->second;
            d.powers[x] -= 1;
            out.push_back(std::move(d));
        }
        // Exponential rule part.
        auto ie = t.expo.find(x);
        if (ie != t.expo.end()) {
            Term d = t;
            d.coeff *= ie->second;
            out.push_back(std::move(d));
        }
    }
    return Expr::from_terms(std::move(out));
}

Expr divide_by_term(const Expr& a, const Term& t) {
    if (t.coeff == 0) throw Error("division by a zero term");
    std::vector<Term> out;
    out.reserve(a.terms().size());
    for (const auto& ta : a.terms()) {
        auto q = term_div(ta, t);
        if (!q)
            throw NonDivisibleError("term " + to_string(ta) + " is not divisible by " +
                                    to_string(t));
        out.push_back(std::move(*q));
    }
    return Expr::from_terms(std::move(out));
}

std::optional<Expr> divide_exact(const Expr& a, const Expr& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Expr();
    if (b.terms().size() == 1) {
        try {
            return divide_by_term(a, b.terms()[0]);
        } catch (const NonDivisibleError&) {
            return std::nullopt;
        }
    }
    // Lead-term division. When a = q*b the leading key of every intermediate
    // remainder stays divisible by lead(b), so a failed term division proves
    // non-divisibility. The step cap guards the Laurent-type descents that the
    // exponential frequencies make possible.
    const Term& lead_b = b.terms().front();
    Expr rem = a;
    std::vector<Term> quotient;
    for (int steps = 0; !rem.is_zero(); ++steps) {
        if (steps > 100000) return std::nullopt;
        auto t = term_div(rem.terms().front(), lead_b);
        if (!t) return std::nullopt;
        quotient.push_back(*t);
        rem = rem - Expr::from_term(*t) * b;
    }
    return Expr::from_terms(std::move(quotient));
}

Expr subst(const Expr& a, const Symbol& s, const Expr& value) {
    if (!s.is_parameter()) throw Error("substitution target '" + s.name() + "' is not a parameter");
    Expr out;
    for (const auto& t : a.terms()) {
        auto it = t.powers.find(s);
        if (it == t.powers.end()) {
            out += Expr::from_term(t);
            continue;
        }
        Term stripped = t;
        stripped.powers.erase(s);
        out += Expr::from_term(std::move(stripped)) * pow(value, static_cast<unsigned>(it->second));
    }
    return out;
}

std::optional<std::pair<Expr, Expr>> linear_in(const Expr& a, const Symbol& s) {
    std::vector<Term> constant, slope;
    for (const auto& t : a.terms()) {
        auto it = t.powers.find(s);
        if (it == t.powers.end()) {
            constant.push_back(t);
        } else if (it->second == 1) {
            Term stripped = t;
            stripped.powers.erase(s);
            slope.push_back(std::move(stripped));
        } else {
            return std::nullopt;
        }
    }
    return std::make_pair(Expr::from_terms(std::move(constant)), Expr::from_terms(std::move(slope)));
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

// Homogeneous linear form over coordinates, e.g. "2*x2 - x5".
std::string linear_form_str(const std::map<Symbol, Rational>& expo) {
    std::string out;
    bool first = true;
    for (const auto& [sym, k] : expo) {
        Rational mag = k < 0 ? Rational(-k) : k;
        std::string piece = mag == 1 ? sym.name() : rational_str(mag) + "*" + sym.name();
        if (first) {
            out += (k < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (k < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

std::string term_body(const Term& t, const Rational& magnitude) {
    std::vector<std::string> pieces;
    if (magnitude != 1 || t.is_constant()) pieces.push_back(rational_str(magnitude));
    for (const auto& [sym, p] : t.powers)
        pieces.push_back(p == 1 ? sym.name() : sym.name() + "^" + std::to_string(p));
    if (!t.expo.empty()) pieces.push_back("exp(" + linear_form_str(t.expo) + ")");
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += "*";
        out += pieces[i];
    }
    return out;
}

} // namespace

std::string to_string(const Term& t) {
    Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
    return (t.coeff < 0 ? "-" : "") + term_body(t, mag);
}

std::string to_string(const Expr& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms()) {
        bool negative = t.coeff < 0;
        Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        if (first) {
            out += (negative ? "-" : "") + term_body(t, mag);
            first = false;
        } else {
            out += (negative ? " - " : " + ") + term_body(t, mag);
        }
    }
    return out;
}

} // namespace framecalc
