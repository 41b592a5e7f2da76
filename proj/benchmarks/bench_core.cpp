#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "scramblegraph/features.hpp"
#include "scramblegraph/mds.hpp"
#include "scramblegraph/persistence.hpp"
#include "scramblegraph/pipeline.hpp"

namespace sg = scramblegraph;

namespace {

// Random undirected graph on n vertices with edge probability p.
sg::UndirectedGraph random_undirected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  sg::UndirectedGraph u;
  for (std::size_t i = 0; i < n; ++i) u.vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) u.edges.emplace(i, j);
    }
  }
  return u;
}

std::vector<std::vector<double>> lattice_cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 30);
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  for (auto& p : pts) {
    for (auto& x : p) x = coord(rng);
  }
  return pts;
}

void BM_CliqueCounts(benchmark::State& state) {
  const auto u = random_undirected(static_cast<std::size_t>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sg::clique_counts(u));
}
BENCHMARK(BM_CliqueCounts)->Arg(15)->Arg(30)->Arg(43);

void BM_SingleLinkage(benchmark::State& state) {
  const auto dist = sg::DistanceMatrix::euclidean(lattice_cloud(static_cast<std::size_t>(state.range(0)), 89, 2));
  for (auto _ : state) benchmark::DoNotOptimize(sg::single_linkage(dist));
}
BENCHMARK(BM_SingleLinkage)->Arg(100)->Arg(283)->Arg(600);

void BM_ClassicalMds(benchmark::State& state) {
  const auto dist = sg::DistanceMatrix::euclidean(lattice_cloud(static_cast<std::size_t>(state.range(0)), 89, 3));
  for (auto _ : state) benchmark::DoNotOptimize(sg::classical_mds(dist));
}
BENCHMARK(BM_ClassicalMds)->Arg(100)->Arg(283);

void BM_ToyPipeline(benchmark::State& state) {
  sg::PipelineConfig config;
  config.input = SCRAMBLEGRAPH_DATA_DIR "/toy_annotation.tsv";
  config.output_dir = std::filesystem::temp_directory_path() / "scramblegraph_bench";
  for (auto _ : state) {
    sg::ArtifactStore store(config.output_dir);
    for (const auto s : sg::kAllStages) sg::run_stage(s, config, store);
    benchmark::DoNotOptimize(store.pending().size());
  }
}
BENCHMARK(BM_ToyPipeline);

}  // namespace

BENCHMARK_MAIN();
