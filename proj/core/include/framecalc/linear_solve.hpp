#pragma once

#include "framecalc/expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace framecalc {

/// One linear equation: sum_j coeffs[j] * unknown[j] == rhs.
struct LinearEquation {
    std::vector<Expr> coeffs;
    Expr rhs;
};

enum class SolveStatus {
    Unique,          // consistent, exactly one solution over the expression field
    Inconsistent,    // no solution
    Underdetermined, // positive-dimensional solution family
    Inconclusive,    // elimination required a division outside the algebra
};

struct LinearSolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    std::map<Symbol, Expr> assignment; // filled only for Unique
    std::string note;                  // diagnostic for Inconclusive
};

/// Fraction-free Gaussian elimination over exact expressions. Coefficients and
/// right-hand sides must not mention the unknowns (parameters). Divisions are
/// attempted only during back substitution; an unsupported one yields
/// Inconclusive rather than an error.
LinearSolveResult solve_linear(const std::vector<LinearEquation>& equations,
                               const std::vector<Symbol>& unknowns);

std::string to_string(SolveStatus status);

} // namespace framecalc
