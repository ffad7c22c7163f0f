// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lili/kernels.hpp"
#include "lili/reconstruct.hpp"

namespace {

std::vector<std::uint8_t> random_bits(std::size_t n) {
  std::mt19937_64 rng(n);
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = rng() & 1U;
  return v;
}

std::vector<std::int64_t> random_signs(std::size_t n) {
  std::mt19937_64 rng(n + 1);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = (rng() & 1U) ? 1 : -1;
  return v;
}

template <void (*Kernel)(std::span<std::uint8_t>)>
void BM_Moebius(benchmark::State& state) {
  auto t = random_bits(std::size_t{1} << state.range(0));
  for (auto _ : state) {
    Kernel(t);
    benchmark::DoNotOptimize(t.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.size()));
}

template <void (*Kernel)(std::span<std::int64_t>)>
void BM_Walsh(benchmark::State& state) {
  const auto base = random_signs(std::size_t{1} << state.range(0));
  for (auto _ : state) {
    auto t = base;
    Kernel(t);
    benchmark::DoNotOptimize(t.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(base.size()));
}

void BM_MinBitsSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lili::recon::min_bits_experiment_serial(static_cast<std::size_t>(state.range(0)), 1));
}

void BM_MinBitsParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lili::recon::min_bits_experiment(static_cast<std::size_t>(state.range(0)), 1));
}

}  // namespace

BENCHMARK(BM_Moebius<lili::kernels::moebius_serial>)->DenseRange(10, 22, 4);
BENCHMARK(BM_Moebius<lili::kernels::moebius_parallel>)->DenseRange(10, 22, 4);
BENCHMARK(BM_Walsh<lili::kernels::walsh_serial>)->DenseRange(10, 22, 4);
BENCHMARK(BM_Walsh<lili::kernels::walsh_parallel>)->DenseRange(10, 22, 4);
BENCHMARK(BM_MinBitsSerial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinBitsParallel)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
