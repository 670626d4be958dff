#include <benchmark/benchmark.h>

#include "walshlab/lebesgue.hpp"

namespace {

using namespace walshlab;

void bm_lebesgue_exact(benchmark::State& state) {
  const FrequencyIndex n((std::uint64_t{1} << state.range(0)) | 0x2D5ULL);
  const auto t = ConjugateParameter::from_rational(5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_exact(n, t));
}
BENCHMARK(bm_lebesgue_exact)->Arg(12)->Arg(40)->Arg(63);

void bm_lebesgue_bruteforce(benchmark::State& state) {
  const FrequencyIndex n((std::uint64_t{1} << state.range(0)) | 0x5ULL);
  const auto t = ConjugateParameter::from_rational(5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_bruteforce(n, t));
}
BENCHMARK(bm_lebesgue_bruteforce)->Arg(8)->Arg(14);

void bm_check_bounds(benchmark::State& state) {
  const FrequencyIndex n(0xB6DULL);
  const auto t = ConjugateParameter::from_rational(3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(check_bounds(n, t));
}
BENCHMARK(bm_check_bounds);

void bm_exhaustive_scan(benchmark::State& state) {
  ScanConfig c;
  c.exp_max = static_cast<int>(state.range(0));
  c.keep_records = false;
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(scan(c));
}
BENCHMARK(bm_exhaustive_scan)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
