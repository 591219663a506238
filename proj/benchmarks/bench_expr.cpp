#include "framecalc/expr_parser.hpp"

#include <benchmark/benchmark.h>

using namespace framecalc;

namespace {

Expr sample_polynomial(SymbolContext& ctx) {
    return parse_expr("3/2*x1^2*exp(-x2) + x1*x2 - 5*kappa*exp(x1 + 2*x2) + 7 - x2^2", ctx);
}

void BM_expr_multiply(benchmark::State& state) {
    SymbolContext ctx;
    ctx.coordinate("x1");
    ctx.coordinate("x2");
    Expr a = sample_polynomial(ctx);
    Expr b = a * a;
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_expr_multiply);

void BM_expr_partial(benchmark::State& state) {
    SymbolContext ctx;
    const Symbol x1 = ctx.coordinate("x1");
    ctx.coordinate("x2");
    Expr a = sample_polynomial(ctx);
    Expr b = a * a * a;
    for (auto _ : state) benchmark::DoNotOptimize(partial(b, x1));
}
BENCHMARK(BM_expr_partial);

void BM_expr_parse(benchmark::State& state) {
    for (auto _ : state) {
        SymbolContext ctx;
        ctx.coordinate("x1");
        ctx.coordinate("x2");
        benchmark::DoNotOptimize(sample_polynomial(ctx));
    }
}
BENCHMARK(BM_expr_parse);

} // namespace
