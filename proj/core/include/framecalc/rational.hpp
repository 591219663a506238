#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace framecalc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; every arithmetic operation in the engine is exact.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

std::string to_string(const Rational& r);

/// Parses "p" or "p/q" with optional leading '-'. Returns nullopt on malformed
/// input or q == 0.
std::optional<Rational> parse_rational(const std::string& text);

inline int sign_of(const Rational& r) { return r.sign(); }

} // namespace framecalc
