#include <benchmark/benchmark.h>

#include "schedsim/algorithms.hpp"
#include "schedsim/metrics.hpp"

using namespace schedsim;

namespace {

Workload bench_workload(long long count) {
  return generate_workload(
      {.count = count, .burst_min = 4, .burst_max = 30, .seed = 12345});
}

void BM_fcfs(benchmark::State& state) {
  const Workload workload = bench_workload(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_fcfs(workload));
  }
}
BENCHMARK(BM_fcfs)->Arg(100)->Arg(1000)->Arg(10000);

void BM_sjf(benchmark::State& state) {
  const Workload workload = bench_workload(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sjf(workload));
  }
}
BENCHMARK(BM_sjf)->Arg(100)->Arg(1000)->Arg(10000);

void BM_rr(benchmark::State& state) {
  const Workload workload = bench_workload(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_rr(workload, 6));
  }
}
BENCHMARK(BM_rr)->Arg(100)->Arg(1000)->Arg(10000);

void BM_omdrrs(benchmark::State& state) {
  const Workload workload = bench_workload(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_omdrrs(workload, 6, 2));
  }
}
BENCHMARK(BM_omdrrs)->Arg(100)->Arg(1000)->Arg(10000);

void BM_validate(benchmark::State& state) {
  const Workload workload = bench_workload(state.range(0));
  const Schedule schedule = run_rr(workload, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_schedule(workload, schedule));
  }
}
BENCHMARK(BM_validate)->Arg(100)->Arg(1000)->Arg(10000);

void BM_metrics(benchmark::State& state) {
  const Workload workload = bench_workload(state.range(0));
  const Schedule schedule = run_rr(workload, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_metrics(workload, schedule));
  }
}
BENCHMARK(BM_metrics)->Arg(100)->Arg(1000);

void BM_schedule_json(benchmark::State& state) {
  const Workload workload = bench_workload(state.range(0));
  const Schedule schedule = run_rr(workload, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schedule_to_json(schedule));
  }
}
BENCHMARK(BM_schedule_json)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
