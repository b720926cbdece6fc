#include <benchmark/benchmark.h>

#include "rtheta/bounds.hpp"
#include "rtheta/gau_map.hpp"
#include "rtheta/linear_code.hpp"
#include "rtheta/reed_muller.hpp"

using namespace rtheta;

namespace {

void BM_ring_table_build(benchmark::State& state) {
    for (auto _ : state) {
        Ring ring(kTwoPlusTwoW);
        benchmark::DoNotOptimize(ring.mul(kW, kW));
    }
}
BENCHMARK(BM_ring_table_build);

void BM_enumerate_gau_maps(benchmark::State& state) {
    for (auto _ : state) {
        auto maps = enumerate_gau_maps(kTwoPlusTwoW);
        benchmark::DoNotOptimize(maps.size());
    }
}
BENCHMARK(BM_enumerate_gau_maps)->Unit(benchmark::kMillisecond);

void BM_encode_decode(benchmark::State& state) {
    const GauMap& map = GauMap::canonical();
    Word w(16);
    for (int i = 0; i < 16; ++i) w[i] = Elem::from_index(i);
    for (auto _ : state) {
        auto back = decode(map, encode(map, w));
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_encode_decode);

void BM_span_enumeration(benchmark::State& state) {
    const RMSpec spec{kTwo, kTwoW, static_cast<int>(state.range(0)), 3};
    const GeneratorMatrix g = rm_generator(spec);
    for (auto _ : state) {
        auto words = span(g, 1ull << 26);
        benchmark::DoNotOptimize(words.size());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(span(g, 1ull << 26).size()));
}
BENCHMARK(BM_span_enumeration)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_min_distance_pairwise(benchmark::State& state) {
    const LinearCode code = make_code(rm_generator({kTwo, kTwo, 1, 2}));
    const GauMap& map = GauMap::canonical();
    for (auto _ : state) benchmark::DoNotOptimize(min_gau_distance(code, map, 1u << 14));
}
BENCHMARK(BM_min_distance_pairwise)->Unit(benchmark::kMillisecond);

void BM_min_distance_layered(benchmark::State& state) {
    const LinearCode code = make_code(rm_generator({kTwo, kTwoW, 2, 3}), 1ull << 26);
    const GauMap& map = GauMap::canonical();
    for (auto _ : state) benchmark::DoNotOptimize(min_gau_distance(code, map, 1));
}
BENCHMARK(BM_min_distance_layered)->Unit(benchmark::kMillisecond);

void BM_dual_brute_force(benchmark::State& state) {
    const GeneratorMatrix g{kTwo, 4, {{kOne, kTwo, kW, kOne}, {kZero, kTwo, kZero, kTwoW}}, {}};
    for (auto _ : state) {
        auto dual = dual_brute_force(g);
        benchmark::DoNotOptimize(dual.size());
    }
}
BENCHMARK(BM_dual_brute_force)->Unit(benchmark::kMillisecond);

void BM_circle_count(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state)
        for (long long r = 0; r <= 2 * n; ++r) benchmark::DoNotOptimize(circle_count(n, r));
}
BENCHMARK(BM_circle_count)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
