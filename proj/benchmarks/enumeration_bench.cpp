#include <benchmark/benchmark.h>

#include "ratcat/necklaces.hpp"
#include "ratcat/paths.hpp"
#include "ratcat/verify.hpp"

#include <random>

using namespace ratcat;

namespace {

GridShape square(const benchmark::State& state) {
  const auto half = static_cast<std::size_t>(state.range(0));
  return GridShape(half, half);
}

template <class T>
std::size_t drain(Stream<T> s) {
  std::size_t count = 0;
  while (s.next()) ++count;
  return count;
}

}  // namespace

static void BM_EnumerateWords(benchmark::State& state) {
  const GridShape shape = square(state);
  for (auto _ : state) benchmark::DoNotOptimize(drain(enumerate_words(shape)));
}
BENCHMARK(BM_EnumerateWords)->DenseRange(5, 9, 2);

static void BM_EnumerateDyck(benchmark::State& state) {
  const GridShape shape = square(state);
  for (auto _ : state) benchmark::DoNotOptimize(drain(enumerate_dyck(shape)));
}
BENCHMARK(BM_EnumerateDyck)->DenseRange(5, 9, 2);

static void BM_NecklacesFilter(benchmark::State& state) {
  const GridShape shape = square(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(drain(enumerate_necklaces(shape, NecklaceAlgorithm::kFilterCanonical)));
  }
}
BENCHMARK(BM_NecklacesFilter)->DenseRange(5, 9, 2);

static void BM_NecklacesFixedContent(benchmark::State& state) {
  const GridShape shape = square(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(drain(enumerate_necklaces(shape, NecklaceAlgorithm::kFixedContent)));
  }
}
BENCHMARK(BM_NecklacesFixedContent)->DenseRange(5, 9, 2);

static void BM_BoothLeastRotation(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<Letter> letters(static_cast<std::size_t>(state.range(0)));
  for (auto& l : letters) l = rng() & 1u ? Letter::R : Letter::U;
  const BinaryWord word(std::move(letters));
  for (auto _ : state) benchmark::DoNotOptimize(least_rotation(word));
}
BENCHMARK(BM_BoothLeastRotation)->RangeMultiplier(4)->Range(16, 4096);

static void BM_VerifyAll(benchmark::State& state) {
  RunOptions opts;
  opts.max_sum = static_cast<std::size_t>(state.range(0));
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_all(opts).pass());
}
BENCHMARK(BM_VerifyAll)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
