#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "nmetrics/dominance.hpp"
#include "nmetrics/front.hpp"
#include "nmetrics/igd.hpp"
#include "nmetrics/noise.hpp"
#include "nmetrics/r2.hpp"
#include "nmetrics/rng.hpp"
#include "nmetrics/sweep.hpp"

using namespace nmetrics;

namespace {

std::vector<ObjectiveVector> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<ObjectiveVector> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    points.push_back(ObjectiveVector{uniform01(gen), uniform01(gen)});
  }
  return points;
}

SolutionSet noisy_set(std::size_t n, double eta, std::uint64_t seed) {
  const auto truths = random_points(n, seed);
  const auto estimates = apply_noise(truths, NoiseModel{NoiseKind::UniformBox, eta, seed + 1});
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(std::to_string(i));
  }
  return SolutionSet::from_columns(ids, truths, estimates);
}

void BM_NondominatedFilter(benchmark::State& state) {
  const auto points = random_points(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nondominated_filter(points));
  }
}
BENCHMARK(BM_NondominatedFilter)->Arg(100)->Arg(1000);

void BM_R2(benchmark::State& state) {
  const auto points = random_points(static_cast<std::size_t>(state.range(0)), 2);
  const WeightSampleSet weights = sample_weights(2, 1000, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(r2(points, weights));
  }
}
BENCHMARK(BM_R2)->Arg(20)->Arg(100);

void BM_NoisyR2(benchmark::State& state) {
  const SolutionSet set = noisy_set(static_cast<std::size_t>(state.range(0)), 0.1, 4);
  const WeightSampleSet weights = sample_weights(2, 1000, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(n_r2(set, weights));
  }
}
BENCHMARK(BM_NoisyR2)->Arg(20)->Arg(100);

void BM_AnalyticR2(benchmark::State& state) {
  const auto points = random_points(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_r2_linear_2d(points));
  }
}
BENCHMARK(BM_AnalyticR2)->Arg(16)->Arg(256)->Arg(4096);

void BM_NoisyIgdPlus(benchmark::State& state) {
  const SolutionSet set = noisy_set(200, 0.1, 7);
  const GeneratedFront front =
      generate_test_front(2, 8, FrontParams{static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(n_igd_plus(set, front.reference));
  }
}
BENCHMARK(BM_NoisyIgdPlus)->Arg(100)->Arg(1000);

void BM_SweepCell(benchmark::State& state) {
  ExperimentConfig config;
  config.n_solutions = 30;
  config.m_weights = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_cell(config, 2, 0));
  }
}
BENCHMARK(BM_SweepCell);

}  // namespace

BENCHMARK_MAIN();
