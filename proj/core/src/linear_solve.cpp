#include "framecalc/linear_solve.hpp"

#include "framecalc/errors.hpp"

#include <utility>

namespace framecalc {

std::string to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::Inconsistent: return "inconsistent";
    case SolveStatus::Underdetermined: return "underdetermined";
    case SolveStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

LinearSolveResult solve_linear(const std::vector<LinearEquation>& equations,
                               const std::vector<Symbol>& unknowns) {
    const std::size_t n = unknowns.size();
    for (const auto& eq : equations) {
        if (eq.coeffs.size() != n) throw Error("equation arity does not match unknown count");
        for (const auto& u : unknowns) {
            for (const auto& c : eq.coeffs)
                if (c.contains(u)) throw Error("coefficient mentions unknown '" + u.name() + "'");
            if (eq.rhs.contains(u)) throw Error("rhs mentions unknown '" + u.name() + "'");
        }
    }

    // Augmented rows; the last column is the rhs.
    std::vector<std::vector<Expr>> rows;
    rows.reserve(equations.size());
    for (const auto& eq : equations) {
        std::vector<Expr> row = eq.coeffs;
        row.push_back(eq.rhs);
        rows.push_back(std::move(row));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
        // Prefer single-term pivots so back substitution stays term-divisible.
        std::size_t best = rows.size();
        for (std::size_t r = pivot_row; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            if (rows[r][col].terms().size() == 1) {
                best = r;
                break;
            }
            if (best == rows.size()) best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[pivot_row], rows[best]);
        const Expr pivot_val = rows[pivot_row][col];
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const Expr factor = rows[r][col];
            for (std::size_t c = 0; c <= n; ++c)
                rows[r][c] = pivot_val * rows[r][c] - factor * rows[pivot_row][c];
        }
        pivots.emplace_back(pivot_row, col);
        ++pivot_row;
    }

    // Rows without pivots must vanish entirely for the system to be solvable.
    for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        bool coeffs_zero = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!rows[r][c].is_zero()) coeffs_zero = false;
        if (coeffs_zero && !rows[r][n].is_zero()) {
            LinearSolveResult res;
            res.status = SolveStatus::Inconsistent;
            return res;
        }
    }

    if (pivots.size() < n) {
        LinearSolveResult res;
        res.status = SolveStatus::Underdetermined;
        return res;
    }

    LinearSolveResult res;
    res.status = SolveStatus::Unique;
    std::vector<Expr> values(n);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto [r, col] = *it;
        Expr num = rows[r][n];
        for (std::size_t c = col + 1; c < n; ++c)
            if (!rows[r][c].is_zero()) num -= rows[r][c] * values[c];
        auto q = divide_exact(num, rows[r][col]);
        if (!q) {
            LinearSolveResult bad;
            bad.status = SolveStatus::Inconclusive;
            bad.note = "elimination requires dividing " + to_string(num) + " by " +
                       to_string(rows[r][col]) + ", which leaves the expression algebra";
            return bad;
        }
        values[col] = *q;
    }
    for (std::size_t j = 0; j < n; ++j) res.assignment.emplace(unknowns[j], values[j]);
    return res;
}

} // namespace framecalc
