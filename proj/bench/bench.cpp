// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "graphmon/lattice.hpp"
#include "graphmon/path_counts.hpp"
#include "graphmon/properties.hpp"

using namespace graphmon;

namespace {

// Sparse random graph; a few sinks keep the lattice non-trivial.
Graph random_graph(std::size_t n, std::size_t edges, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  std::vector<Edge> es;
  while (es.size() < edges) {
    const std::size_t s = pick(rng);
    if (s < n / 4) continue;
    es.push_back({s, pick(rng)});
  }
  return Graph::from_indices(names, es);
}

Graph mixed() {
  return Graph({"a", "b", "c", "d"}, std::vector<std::pair<std::string, std::string>>{
                                         {"a", "a"},
                                         {"a", "a"},
                                         {"b", "a"},
                                         {"b", "c"},
                                         {"c", "c"},
                                         {"c", "c"},
                                         {"c", "d"}});
}

void BM_HSat(benchmark::State& st) {
  const Graph g = random_graph(st.range(0), 2 * st.range(0), 7);
  for (auto _ : st) benchmark::DoNotOptimize(hsat_sets(g));
}
void BM_HSatSerial(benchmark::State& st) {
  const Graph g = random_graph(st.range(0), 2 * st.range(0), 7);
  for (auto _ : st) benchmark::DoNotOptimize(hsat_sets_serial(g));
}

void BM_PathCounts(benchmark::State& st) {
  const Graph g = random_graph(st.range(0), 4 * st.range(0), 11);
  for (auto _ : st) benchmark::DoNotOptimize(path_counts(g, 40));
}
void BM_PathCountsSerial(benchmark::State& st) {
  const Graph g = random_graph(st.range(0), 4 * st.range(0), 11);
  for (auto _ : st) benchmark::DoNotOptimize(path_counts_serial(g, 40));
}

void BM_Separativity(benchmark::State& st) {
  for (auto _ : st) {
    const WordProblem wp(mixed());
    benchmark::DoNotOptimize(check_separativity(wp, st.range(0), 3));
  }
}
void BM_SeparativitySerial(benchmark::State& st) {
  for (auto _ : st) {
    const WordProblem wp(mixed());
    benchmark::DoNotOptimize(check_separativity_serial(wp, st.range(0), 3));
  }
}

void BM_Unperforation(benchmark::State& st) {
  for (auto _ : st) {
    const WordProblem wp(mixed());
    benchmark::DoNotOptimize(check_unperforation(wp, st.range(0), 3));
  }
}
void BM_UnperforationSerial(benchmark::State& st) {
  for (auto _ : st) {
    const WordProblem wp(mixed());
    benchmark::DoNotOptimize(check_unperforation_serial(wp, st.range(0), 3));
  }
}

}  // namespace

BENCHMARK(BM_HSat)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HSatSerial)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathCounts)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathCountsSerial)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Separativity)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeparativitySerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Unperforation)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnperforationSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
