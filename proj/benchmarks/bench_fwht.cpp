#include <benchmark/benchmark.h>

#include <random>

#include "walshlab/kernels.hpp"
#include "walshlab/walsh.hpp"

namespace {

using namespace walshlab;

void bm_fwht_float(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1, 1);
  std::vector<double> v(std::size_t{1} << depth);
  for (auto& x : v) x = dist(rng);
  const FloatFunction f(depth, v);
  for (auto _ : state) benchmark::DoNotOptimize(fwht_forward(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(bm_fwht_float)->DenseRange(10, 22, 4);

void bm_fwht_exact(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::vector<Rational> v(std::size_t{1} << depth);
  for (auto& x : v) x = Rational(static_cast<std::int64_t>(rng() % 17) - 8, 3);
  const ExactFunction f(depth, v);
  for (auto _ : state) benchmark::DoNotOptimize(fwht_forward(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(bm_fwht_exact)->DenseRange(6, 12, 3);

void bm_conjugate_fejer_norm(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto t = ConjugateParameter::from_rational(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_fejer_l1_norm(n, t));
}
BENCHMARK(bm_conjugate_fejer_norm)->Arg(1000)->Arg(100000)->Arg(300000);

}  // namespace
