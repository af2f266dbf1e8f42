// Serial reference vs OpenMP-parallel kernels on fixed workloads: the
// crossing-pair scan, the subset-search oracle, and annealer restarts.
#include <benchmark/benchmark.h>

#include <random>

#include "extremalkit/anneal.hpp"
#include "extremalkit/geometry.hpp"
#include "extremalkit/graph.hpp"
#include "extremalkit/oracle.hpp"
#include "extremalkit/rat.hpp"
#include "extremalkit/weighting.hpp"

namespace {

exk::Drawing large_legal_drawing() {
  std::mt19937_64 rng(12345);
  const int n = 60;
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
      edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
    exk::Drawing d;
    d.graph = exk::Tree(n, edges).graph();
    for (int v = 0; v < n; ++v)
      d.positions.push_back({exk::Rat(static_cast<long>(rng() % 2001) - 1000),
                             exk::Rat(static_cast<long>(rng() % 2001) - 1000)});
    if (exk::is_legal(d).legal) return d;
  }
}

void BM_crossing_scan_serial(benchmark::State& state) {
  exk::Drawing d = large_legal_drawing();
  for (auto _ : state) benchmark::DoNotOptimize(exk::count_crossings_unchecked(d, false));
}
BENCHMARK(BM_crossing_scan_serial);

void BM_crossing_scan_parallel(benchmark::State& state) {
  exk::Drawing d = large_legal_drawing();
  for (auto _ : state) benchmark::DoNotOptimize(exk::count_crossings_unchecked(d, true));
}
BENCHMARK(BM_crossing_scan_parallel);

void BM_host_oracle_serial(benchmark::State& state) {
  exk::Graph host = exk::build_complete_multipartite({2, 2, 2, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(exk::max_edges_clique_free_subgraph_serial(host, 3).value);
}
BENCHMARK(BM_host_oracle_serial);

void BM_host_oracle_parallel(benchmark::State& state) {
  exk::Graph host = exk::build_complete_multipartite({2, 2, 2, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(exk::max_edges_clique_free_subgraph(host, 3).value);
}
BENCHMARK(BM_host_oracle_parallel);

void BM_anneal_serial(benchmark::State& state) {
  exk::Tree t = exk::SpiderDescriptor({2, 2, 2}).to_tree();
  exk::AnnealParams params;
  params.iterations = 4000;
  for (auto _ : state)
    benchmark::DoNotOptimize(exk::anneal_max_crossings_serial(t, params).crossings);
}
BENCHMARK(BM_anneal_serial);

void BM_anneal_parallel(benchmark::State& state) {
  exk::Tree t = exk::SpiderDescriptor({2, 2, 2}).to_tree();
  exk::AnnealParams params;
  params.iterations = 4000;
  for (auto _ : state) benchmark::DoNotOptimize(exk::anneal_max_crossings(t, params).crossings);
}
BENCHMARK(BM_anneal_parallel);

}  // namespace

BENCHMARK_MAIN();
