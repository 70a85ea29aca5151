// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "hallpost/audit.hpp"
#include "hallpost/oracle.hpp"

using namespace hallpost;

namespace {

AuditSpec large_audit() {
  AuditSpec spec = default_audit_spec(Model::CalogeroD);
  spec.n_max = 40;
  spec.dim_max = 12;
  return spec;
}

oracle::ResidualOptions residual_options() {
  oracle::ResidualOptions opt;
  opt.samples = 2000;
  opt.seed = 1;
  return opt;
}

void BM_AuditParallel(benchmark::State& state) {
  const AuditSpec spec = large_audit();
  for (auto _ : state) benchmark::DoNotOptimize(audit_grid(spec));
}

void BM_AuditSerial(benchmark::State& state) {
  const AuditSpec spec = large_audit();
  for (auto _ : state) benchmark::DoNotOptimize(audit_grid_serial(spec));
}

void BM_ResidualParallel(benchmark::State& state) {
  const Calogero1DParams p{static_cast<int>(state.range(0)), 1.0, 2.0};
  const auto opt = residual_options();
  for (auto _ : state) benchmark::DoNotOptimize(oracle::residual_stats(p, opt));
}

void BM_ResidualSerial(benchmark::State& state) {
  const Calogero1DParams p{static_cast<int>(state.range(0)), 1.0, 2.0};
  const auto opt = residual_options();
  for (auto _ : state) benchmark::DoNotOptimize(oracle::residual_stats_serial(p, opt));
}

}  // namespace

BENCHMARK(BM_AuditParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AuditSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ResidualParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ResidualSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
