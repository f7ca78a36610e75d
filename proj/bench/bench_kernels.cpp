// Serial reference kernels against their OpenMP counterparts.

#include "realkirwan/f2/matrix.hpp"
#include "realkirwan/gkm_module.hpp"
#include "realkirwan/io.hpp"
#include "realkirwan/kirwan.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace realkirwan;

namespace {

f2::F2Matrix random_matrix(std::size_t r, std::size_t c) {
  std::mt19937_64 rng(r * 131 + c);
  f2::F2Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1);
  }
  return m;
}

const MomentGraph& flag_a3() {
  static const MomentGraph g = io::graph_from_json(io::read_json_file(std::string(RK_DATA_DIR) + "/graphs/flag_a3.json"));
  return g;
}

const std::vector<Chamber>& flag_a3_chambers() {
  static const auto cs = chambers(flag_a3(), parse_rational_list("1/7,2/11,1/13"));
  return cs;
}

void BM_RrefSerial(benchmark::State& state) {
  const auto m = random_matrix(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f2::reference::rref_serial(m));
}

void BM_RrefParallel(benchmark::State& state) {
  const auto m = random_matrix(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f2::rref(m, Exec::Parallel));
}

void BM_PoincareSerial(benchmark::State& state) {
  flag_a3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::poincare_series_serial(flag_a3(), static_cast<unsigned>(state.range(0))));
  }
}

void BM_PoincareParallel(benchmark::State& state) {
  flag_a3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(poincare_series(flag_a3(), static_cast<unsigned>(state.range(0)), Exec::Parallel));
  }
}

void BM_KernelSerial(benchmark::State& state) {
  flag_a3_chambers();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reference::kernel_in_degree_serial(flag_a3(), flag_a3_chambers(), static_cast<unsigned>(state.range(0))));
  }
}

void BM_KernelParallel(benchmark::State& state) {
  flag_a3_chambers();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernel_in_degree(flag_a3(), flag_a3_chambers(), static_cast<unsigned>(state.range(0)), Exec::Parallel));
  }
}

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallel)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PoincareSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PoincareParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_KernelSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
