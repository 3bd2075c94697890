#include <benchmark/benchmark.h>

#include <random>

#include "simplexity/exact_geometry.hpp"
#include "simplexity/linear_program.hpp"
#include "simplexity/seed_catalog.hpp"

using namespace simplexity;

static void bm_determinant(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Coordinate> dist(-1, 1);
    CoordinateMatrix m(n, n);
    for (auto& v : m.data) v = dist(rng);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(bm_determinant)->DenseRange(4, 12, 4);

static void bm_interiors_intersect(benchmark::State& state)
{
    const auto d = static_cast<unsigned>(state.range(0));
    const Triangulation t = unimodular_cube(d);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simplex_interiors_intersect(t.config(), t.simplex(i % t.size()), t.simplex((i + 1) % t.size())));
        ++i;
    }
}
BENCHMARK(bm_interiors_intersect)->DenseRange(3, 6, 1);

static void bm_face_to_face(benchmark::State& state)
{
    const auto d = static_cast<unsigned>(state.range(0));
    const Triangulation t = unimodular_cube(d);
    for (auto _ : state) benchmark::DoNotOptimize(validate_face_to_face(t).is_face_to_face);
    state.counters["simplices"] = static_cast<double>(t.size());
}
BENCHMARK(bm_face_to_face)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);
