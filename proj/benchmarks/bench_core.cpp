#include <benchmark/benchmark.h>

#include "cartdom/amenable.hpp"
#include "cartdom/eod.hpp"
#include "cartdom/graph.hpp"
#include "cartdom/trees.hpp"

using namespace cartdom;

static void BM_FindEodTorusPositive(benchmark::State& state) {
    auto [product, dims] = cartesian_product(cycle_graph(4), cycle_graph(8));
    for (auto _ : state) {
        auto cert = find_eod_set(product);
        benchmark::DoNotOptimize(cert.nodes_explored);
    }
}
BENCHMARK(BM_FindEodTorusPositive);

static void BM_FindEodTorusExhausted(benchmark::State& state) {
    auto [product, dims] = cartesian_product(cycle_graph(6), cycle_graph(6));
    for (auto _ : state) {
        auto cert = find_eod_set(product);
        benchmark::DoNotOptimize(cert.nodes_explored);
    }
}
BENCHMARK(BM_FindEodTorusExhausted);

static void BM_FindEodGrid(benchmark::State& state) {
    auto [product, dims] = cartesian_product(path_graph(4), path_graph(9));
    for (auto _ : state) {
        auto cert = find_eod_set(product);
        benchmark::DoNotOptimize(cert.nodes_explored);
    }
}
BENCHMARK(BM_FindEodGrid);

static void BM_EnumerateEodC4C8(benchmark::State& state) {
    auto [product, dims] = cartesian_product(cycle_graph(4), cycle_graph(8));
    for (auto _ : state) {
        auto sets = enumerate_eod_sets(product);
        benchmark::DoNotOptimize(sets.size());
    }
}
BENCHMARK(BM_EnumerateEodC4C8);

static void BM_KrAmenableSearchTree(benchmark::State& state) {
    auto joined = type_b(k1r_plus(3), k1r_plus(3), 0, 0);  // order 14
    for (auto _ : state) {
        auto partition = find_kr_amenable(joined.tree, 3);
        benchmark::DoNotOptimize(partition.has_value());
    }
}
BENCHMARK(BM_KrAmenableSearchTree);

static void BM_CanonicalCode(benchmark::State& state) {
    auto joined = type_b(k1r_plus(3), k1r_plus(3), 0, 0);
    for (auto _ : state) {
        auto code = canonical_code(joined.tree);
        benchmark::DoNotOptimize(code.size());
    }
}
BENCHMARK(BM_CanonicalCode);

static void BM_CanonicalCodeSweepOrder9(benchmark::State& state) {
    auto trees = enumerate_trees(9);  // cache-warm
    for (auto _ : state) {
        size_t total = 0;
        for (const Graph& t : trees) total += canonical_code(t).size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_CanonicalCodeSweepOrder9);

static void BM_RecognizeTree(benchmark::State& state) {
    auto glued = type_a(k1r_plus(3), k1r_plus(3), 1, {1, 2}, {1, 2},
                        TypeAOrientation::straight);  // order 12
    for (auto _ : state) {
        auto trace = recognize_tree(glued.tree, 3);
        benchmark::DoNotOptimize(trace.has_value());
    }
}
BENCHMARK(BM_RecognizeTree);

BENCHMARK_MAIN();
