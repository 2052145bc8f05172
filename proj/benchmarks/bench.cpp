#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "zpfourier/field.hpp"
#include "zpfourier/fourier.hpp"
#include "zpfourier/progressions.hpp"

using namespace zpf;

namespace {

Signal random_signal(std::uint64_t p, const Field& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, field.order() - 1);
    Signal f;
    f.values.reserve(p);
    for (std::uint64_t i = 0; i < p; ++i) f.values.push_back(Fe{dist(rng)});
    return f;
}

// The three transform sizes cover the regimes that matter: tiny (table
// lookups dominate), medium (quadratic cost becomes visible), and large
// enough that the fast path's advantage should be unambiguous.
void transform_args(benchmark::internal::Benchmark* b) {
    b->Args({13, 53})->Args({251, 503})->Args({2003, 4007});
}

void bm_forward_naive(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    Field f(static_cast<std::uint64_t>(state.range(1)));
    FourierContext ctx(p, f);
    Signal x = random_signal(p, f, 42);
    for (auto _ : state) benchmark::DoNotOptimize(forward(ctx, x));
    state.SetComplexityN(static_cast<std::int64_t>(p));
}
BENCHMARK(bm_forward_naive)->Apply(transform_args);

void bm_forward_rader(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    Field f(static_cast<std::uint64_t>(state.range(1)));
    FourierContext ctx(p, f);
    Signal x = random_signal(p, f, 42);
    for (auto _ : state) benchmark::DoNotOptimize(forward_rader(ctx, x));
    state.SetComplexityN(static_cast<std::int64_t>(p));
}
BENCHMARK(bm_forward_rader)->Apply(transform_args);

void bm_field_mul(benchmark::State& state) {
    Field f(2, 16, find_irreducible(2, 16));
    std::vector<Fe> xs;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, f.order() - 1);
    for (int i = 0; i < 4096; ++i) xs.push_back(Fe{dist(rng)});
    std::size_t i = 0;
    Fe acc = f.one();
    for (auto _ : state) {
        acc = f.mul(acc, xs[i]);
        i = (i + 1) & 4095;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_field_mul);

void bm_cyclic_convolution(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    Field f(12289); // 12288 = 2^12 * 3 keeps every divisor of interest NTT-friendly
    Signal a = random_signal(n, f, 1);
    Signal b = random_signal(n, f, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(cyclic_convolution(f, a.values, b.values));
}
BENCHMARK(bm_cyclic_convolution)->Arg(16)->Arg(256)->Arg(1024);

void bm_exact_r(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exact_r(p, 3));
}
BENCHMARK(bm_exact_r)->Arg(13)->Arg(17)->Arg(23);

} // namespace

BENCHMARK_MAIN();
