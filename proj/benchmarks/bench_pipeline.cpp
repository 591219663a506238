#include "framecalc/runner.hpp"

#include <benchmark/benchmark.h>

using namespace framecalc;

namespace {

void BM_curvature_pipeline(benchmark::State& state) {
    Manifest manifest = builtin("kenmotsu5");
    Model model = build_model(manifest);
    for (auto _ : state) benchmark::DoNotOptimize(compute_geometry(model.manifold));
}
BENCHMARK(BM_curvature_pipeline);

void BM_full_run(benchmark::State& state) {
    Manifest manifest = builtin("kenmotsu5");
    RunOptions opts;
    opts.command = "all";
    for (auto _ : state) benchmark::DoNotOptimize(run(manifest, opts));
}
BENCHMARK(BM_full_run);

void BM_verify_structure(benchmark::State& state) {
    Model model = build_model(builtin("kenmotsu5"));
    GeometryData geo = compute_geometry(model.manifold);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_structure(model.manifold, *model.contact, geo));
}
BENCHMARK(BM_verify_structure);

} // namespace
