#pragma once

#include "framecalc/expr.hpp"
#include "framecalc/symbols.hpp"

#include <string>

namespace framecalc {

/// Parses the expression grammar: integers, rationals "p/q", symbols,
/// the operators + - * ^ (nonnegative integer exponents), parentheses, and
/// exp(<homogeneous linear form in coordinates with rational coefficients>).
/// Identifiers unknown to `ctx` are registered as parameters. Throws
/// ParseError with a byte offset on malformed input.
Expr parse_expr(const std::string& text, SymbolContext& ctx);

} // namespace framecalc
