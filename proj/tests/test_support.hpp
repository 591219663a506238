#pragma once

#include "framecalc/almost_contact.hpp"
#include "framecalc/expr_parser.hpp"

#include <random>
#include <string>
#include <vector>

namespace framecalc::test {

using Rng = std::mt19937_64;

/// Random expression over two coordinates and two parameters: a handful of
/// terms with small rational coefficients, powers up to 2 and exponential
/// frequencies in {-1, 0, 1}.
inline Expr random_expr(Rng& rng, SymbolContext& ctx) {
    std::uniform_int_distribution<int> term_count(0, 4);
    std::uniform_int_distribution<int> coeff_num(-6, 6);
    std::uniform_int_distribution<int> coeff_den(1, 3);
    std::uniform_int_distribution<int> power(0, 2);
    std::uniform_int_distribution<int> freq(-1, 1);
    const Symbol x = ctx.coordinate("x");
    const Symbol y = ctx.coordinate("y");
    const Symbol a = ctx.parameter("a");
    const Symbol b = ctx.parameter("b");
    std::vector<Term> terms;
    const int count = term_count(rng);
    for (int t = 0; t < count; ++t) {
        Term term(rat(coeff_num(rng), coeff_den(rng)));
        if (term.coeff == 0) continue;
        if (int p = power(rng)) term.powers[x] = p;
        if (int p = power(rng)) term.powers[y] = p;
        if (int p = power(rng)) term.powers[a] = p;
        if (int p = power(rng)) term.powers[b] = p;
        if (int f = freq(rng)) term.expo[x] = rat(f);
        if (int f = freq(rng)) term.expo[y] = rat(f);
        terms.push_back(std::move(term));
    }
    return Expr::from_terms(std::move(terms));
}

/// Random diagonal frame f_a(x) d/dx_a on dims 2..5 with single-term
/// coefficient-times-exponential warpings; such terms invert inside the
/// algebra (frequencies negate), so the frame matrix is always invertible.
inline FrameManifold random_diagonal_manifold(Rng& rng, SymbolContext& ctx, int dim) {
    std::uniform_int_distribution<int> coeff(1, 3);
    std::uniform_int_distribution<int> freq(-1, 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Symbol> chart;
    for (int i = 1; i <= dim; ++i) chart.push_back(ctx.coordinate("x" + std::to_string(i)));
    FrameManifold::ExprMatrix frame(dim, std::vector<Expr>(dim));
    for (int i = 0; i < dim; ++i) {
        Term t(rat(sign(rng) ? coeff(rng) : -coeff(rng), coeff(rng)));
        for (int a = 0; a < dim; ++a)
            if (int f = freq(rng)) t.expo[chart[a]] = rat(f);
        frame[i][i] = Expr::from_term(std::move(t));
    }
    return FrameManifold::from_chart(chart, frame);
}

/// Random vector field with single-term components (possibly zero).
inline TensorField random_field(Rng& rng, SymbolContext& ctx, int dim) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> power(0, 1);
    std::uniform_int_distribution<int> freq(-1, 1);
    std::vector<Expr> comps(dim);
    for (int i = 0; i < dim; ++i) {
        Term t(rat(coeff(rng)));
        if (t.coeff == 0) continue;
        for (int a = 0; a < dim; ++a) {
            const Symbol x = ctx.coordinate("x" + std::to_string(a + 1));
            if (int p = power(rng)) t.powers[x] = p;
            if (int f = freq(rng)) t.expo[x] = rat(f);
        }
        comps[i] = Expr::from_term(std::move(t));
    }
    return TensorField::vector(std::move(comps));
}

/// The 5-dimensional warped-product example with its contact structure and
/// the distinguished potential field.
struct Kenmotsu5 {
    SymbolContext ctx;
    FrameManifold manifold;
    GeometryData geo;
    AlmostContactData contact;
    TensorField v;

    static Kenmotsu5 make() {
        SymbolContext ctx;
        std::vector<Symbol> chart;
        for (int i = 1; i <= 5; ++i) chart.push_back(ctx.coordinate("x" + std::to_string(i)));
        FrameManifold::ExprMatrix frame(5, std::vector<Expr>(5));
        for (int i = 0; i < 4; ++i) frame[i][i] = parse_expr("exp(-x5)", ctx);
        frame[4][4] = Expr::from_int(1);
        FrameManifold m = FrameManifold::from_chart(chart, frame);
        GeometryData geo = compute_geometry(m);
        AlmostContactData a;
        a.n = 2;
        a.phi.assign(5, std::vector<Expr>(5));
        a.phi[0][2] = Expr::from_int(1);
        a.phi[1][3] = Expr::from_int(1);
        a.phi[2][0] = Expr::from_int(-1);
        a.phi[3][1] = Expr::from_int(-1);
        std::vector<Expr> z(5);
        z[4] = Expr::from_int(1);
        a.zeta = TensorField::vector(z);
        a.eta = TensorField::oneform(z);
        std::vector<Expr> v(5);
        for (int i = 0; i < 4; ++i)
            v[i] = parse_expr("x" + std::to_string(i + 1) + "*exp(x5)", ctx);
        v[4] = Expr::from_int(1);
        return Kenmotsu5{std::move(ctx), std::move(m), std::move(geo), std::move(a),
                         TensorField::vector(std::move(v))};
    }
};

/// The 3-dimensional analog (n = 1).
struct Kenmotsu3 {
    SymbolContext ctx;
    FrameManifold manifold;
    GeometryData geo;
    AlmostContactData contact;

    static Kenmotsu3 make() {
        SymbolContext ctx;
        std::vector<Symbol> chart;
        for (int i = 1; i <= 3; ++i) chart.push_back(ctx.coordinate("x" + std::to_string(i)));
        FrameManifold::ExprMatrix frame(3, std::vector<Expr>(3));
        frame[0][0] = parse_expr("exp(-x3)", ctx);
        frame[1][1] = parse_expr("exp(-x3)", ctx);
        frame[2][2] = Expr::from_int(1);
        FrameManifold m = FrameManifold::from_chart(chart, frame);
        GeometryData geo = compute_geometry(m);
        AlmostContactData a;
        a.n = 1;
        a.phi.assign(3, std::vector<Expr>(3));
        a.phi[0][1] = Expr::from_int(1);
        a.phi[1][0] = Expr::from_int(-1);
        std::vector<Expr> z(3);
        z[2] = Expr::from_int(1);
        a.zeta = TensorField::vector(z);
        a.eta = TensorField::oneform(z);
        return Kenmotsu3{std::move(ctx), std::move(m), std::move(geo), std::move(a)};
    }
};

/// Flat identity frame on three coordinates.
struct Euclidean3 {
    SymbolContext ctx;
    FrameManifold manifold;
    GeometryData geo;

    static Euclidean3 make() {
        SymbolContext ctx;
        std::vector<Symbol> chart;
        for (int i = 1; i <= 3; ++i) chart.push_back(ctx.coordinate("x" + std::to_string(i)));
        FrameManifold::ExprMatrix frame(3, std::vector<Expr>(3));
        for (int i = 0; i < 3; ++i) frame[i][i] = Expr::from_int(1);
        FrameManifold m = FrameManifold::from_chart(chart, frame);
        GeometryData geo = compute_geometry(m);
        return Euclidean3{std::move(ctx), std::move(m), std::move(geo)};
    }
};

} // namespace framecalc::test
