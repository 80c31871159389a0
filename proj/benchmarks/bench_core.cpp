#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <vector>

#include "qembed/canonical.hpp"
#include "qembed/embedding_search.hpp"
#include "qembed/graph.hpp"
#include "qembed/graph6.hpp"
#include "qembed/multipartite.hpp"
#include "qembed/spectral.hpp"

namespace {

qembed::Graph random_connected(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        qembed::Graph g(n, edges);
        if (qembed::is_connected(g)) return g;
    }
}

void BM_QecNumeric(benchmark::State& state) {
    std::mt19937 rng(7);
    const qembed::Graph g = random_connected(rng, static_cast<int>(state.range(0)), 0.3);
    const qembed::DistanceMatrix d = qembed::bfs_distances(g);
    for (auto _ : state) benchmark::DoNotOptimize(qembed::qec_numeric(d).value);
}
BENCHMARK(BM_QecNumeric)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_QuadraticEmbedding(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n); // even cycle embeds
    const qembed::DistanceMatrix d = qembed::bfs_distances(qembed::Graph(n, edges));
    for (auto _ : state) benchmark::DoNotOptimize(qembed::quadratic_embedding(d, 1e-9).dim);
}
BENCHMARK(BM_QuadraticEmbedding)->Arg(8)->Arg(32)->Arg(64);

void BM_MinimalRoot(benchmark::State& state) {
    std::vector<int> parts{static_cast<int>(state.range(0))};
    for (int i = 1; i < state.range(1); ++i) parts.push_back(1 + i % 3);
    const qembed::PartitionSpec spec(parts);
    for (auto _ : state) benchmark::DoNotOptimize(qembed::minimal_root(spec));
}
BENCHMARK(BM_MinimalRoot)->Args({9, 4})->Args({50, 16})->Args({200, 64});

void BM_EnumerateConnected(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(qembed::enumerate_connected(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateConnected)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& state) {
    std::mt19937 rng(99);
    std::vector<std::string> lines;
    for (int i = 0; i < 256; ++i)
        lines.push_back(qembed::write_graph6(random_connected(rng, 8, 0.4)));
    for (auto _ : state)
        for (const auto& line : lines)
            benchmark::DoNotOptimize(qembed::write_graph6(qembed::parse_graph6(line)).size());
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(lines.size()));
}
BENCHMARK(BM_Graph6RoundTrip);

void BM_IsometricSearch(benchmark::State& state) {
    const qembed::Graph pattern = qembed::complete_multipartite_graph({3, 2});
    const qembed::Graph host = qembed::complete_multipartite_graph({7, 5, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(qembed::find_isometric_embedding(pattern, host).has_value());
}
BENCHMARK(BM_IsometricSearch);

void BM_NonQeScan(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(qembed::non_qe_scan(static_cast<int>(state.range(0))).total());
}
BENCHMARK(BM_NonQeScan)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
