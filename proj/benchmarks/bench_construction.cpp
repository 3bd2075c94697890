#include <benchmark/benchmark.h>

#include "simplexity/coloring_product.hpp"
#include "simplexity/pipeline.hpp"
#include "simplexity/product_staircase.hpp"
#include "simplexity/seed_catalog.hpp"

using namespace simplexity;

static void bm_staircase(benchmark::State& state)
{
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(staircase_triangulation(k, k).size());
}
BENCHMARK(bm_staircase)->DenseRange(2, 6, 2);

static void bm_triangulate_product(benchmark::State& state)
{
    const auto q = static_cast<unsigned>(state.range(0));
    const Triangulation tq = q <= 3 ? minimal_cube(q) : unimodular_cube(q);
    const Triangulation t0 = mixed_to_triangulation(seed_i3d2());
    const Coloring c = make_coloring(tq.config().size(), 3, ColoringStrategy::random, 1);
    for (auto _ : state) benchmark::DoNotOptimize(triangulate_product(tq, t0, c).size());
}
BENCHMARK(bm_triangulate_product)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

static void bm_product_size(benchmark::State& state)
{
    const Triangulation tq = unimodular_cube(5);
    const Triangulation t0 = mixed_to_triangulation(seed_i3d2());
    const Coloring c = make_coloring(tq.config().size(), 3, ColoringStrategy::random, 1);
    for (auto _ : state) benchmark::DoNotOptimize(product_size(tq, t0, c));
}
BENCHMARK(bm_product_size);

static void bm_pipeline(benchmark::State& state)
{
    PipelineSpec spec;
    spec.target_dim = static_cast<unsigned>(state.range(0));
    spec.samples = 16;
    for (auto _ : state) benchmark::DoNotOptimize(build_cube_recursive(spec).size);
}
BENCHMARK(bm_pipeline)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
