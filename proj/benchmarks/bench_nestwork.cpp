#include <benchmark/benchmark.h>

#include "nestwork/bijections.hpp"
#include "nestwork/enumerate.hpp"
#include "nestwork/patterns.hpp"
#include "nestwork/series.hpp"

using namespace nestwork;

namespace {

void BM_EnumeratePartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        PartitionStream stream = all_partitions(n);
        while (stream.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(8)->Arg(10);

void BM_EnumerateMatchings(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        MatchingStream stream = all_partial_matchings(n);
        while (stream.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateMatchings)->Arg(10)->Arg(12);

void BM_BruteForceCountR(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const CountTable table = count_table_bruteforce(ClassId::R, n);
        benchmark::DoNotOptimize(table.entries.size());
    }
}
BENCHMARK(BM_BruteForceCountR)->Arg(8)->Arg(10);

void BM_PatternScan(benchmark::State& state) {
    const Diagram d(18, {{1, 9}, {2, 10}, {3, 15}, {5, 11}, {6, 12}, {7, 16}, {8, 17}, {14, 18}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(occurrences(d, PatternKind::Nesting).size());
        benchmark::DoNotOptimize(occurrences(d, Pattern::k_crossing(3)).size());
    }
}
BENCHMARK(BM_PatternScan);

void BM_GfP(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gf_p(order).coeff(order, 0));
}
BENCHMARK(BM_GfP)->Arg(12)->Arg(20);

void BM_GfQ(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gf_q(order).coeff(order, 0));
}
BENCHMARK(BM_GfQ)->Arg(12)->Arg(20);

void BM_GfRt(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gf_rt(order).coeff(order, 0));
}
BENCHMARK(BM_GfRt)->Arg(20)->Arg(40);

void BM_AlphaRoundTrip(benchmark::State& state) {
    const Diagram p = from_blocks(Blocks({{1, 5}, {2, 3, 4, 7}, {6, 8}}));
    for (auto _ : state) {
        const Diagram image = alpha(p);
        benchmark::DoNotOptimize(alpha_inv(image).arc_count());
    }
}
BENCHMARK(BM_AlphaRoundTrip);

void BM_GammaRoundTrip(benchmark::State& state) {
    const Diagram m(18, {{1, 9}, {2, 10}, {3, 15}, {5, 11}, {6, 12}, {7, 16}, {8, 17}, {14, 18}});
    for (auto _ : state) {
        const Diagram image = gamma(m);
        benchmark::DoNotOptimize(gamma_inv(image).arc_count());
    }
}
BENCHMARK(BM_GammaRoundTrip);

}  // namespace

BENCHMARK_MAIN();
