#include "hankelwalk/hankelwalk.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hankelwalk;

MomentPrefix catalan(std::size_t len) {
    std::vector<Rational> out{1};
    for (std::size_t n = 1; n < len; ++n)
        out.push_back(out.back() * static_cast<long>(2 * (2 * n - 1)) / static_cast<long>(n + 1));
    return MomentPrefix(out);
}

LevelWeights staircase(std::size_t levels) {
    LevelWeights w;
    for (std::size_t h = 1; h <= levels; ++h) w.lambda.emplace_back(static_cast<long>((h + 1) / 2));
    return w;
}

void BM_HankelTransform(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto a = catalan(4 * k + 8);
    for (auto _ : state) benchmark::DoNotOptimize(hankel_transform(a, k));
}
BENCHMARK(BM_HankelTransform)->DenseRange(2, 6, 2);

void BM_ClosedWalkSum(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const WalkGraph g = ProductGraph{k, staircase(n + 2 * k)};
    for (auto _ : state) benchmark::DoNotOptimize(closed_walk_sum(g, n));
}
BENCHMARK(BM_ClosedWalkSum)->Args({2, 4})->Args({2, 8})->Args({3, 4})->Args({3, 8});

void BM_Lanczos(benchmark::State& state) {
    const auto depth = static_cast<std::size_t>(state.range(0));
    const WalkGraph g = ProductGraph{2, staircase(2 * depth + 8)};
    for (auto _ : state) benchmark::DoNotOptimize(lanczos_path_weights(g, depth));
}
BENCHMARK(BM_Lanczos)->Arg(2)->Arg(4)->Arg(6);

void BM_EnumerateNoncrossing(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_noncrossing(n, k));
}
BENCHMARK(BM_EnumerateNoncrossing)->Args({2, 4})->Args({2, 6})->Args({3, 4});

void BM_WeightsFromMoments(benchmark::State& state) {
    const auto a = catalan(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(weights_from_moments(a));
}
BENCHMARK(BM_WeightsFromMoments)->Arg(9)->Arg(17)->Arg(33);

}  // namespace

BENCHMARK_MAIN();
