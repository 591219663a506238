#include "framecalc/rational.hpp"

#include <sstream>

namespace framecalc {

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-' || text[pos] == '+') {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](BigInt& out) -> bool {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
        out = BigInt(digits);
        return true;
    };
    BigInt num, den = 1;
    if (!read_digits(num)) return std::nullopt;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!read_digits(den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

} // namespace framecalc
