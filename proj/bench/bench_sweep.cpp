#include "metatok/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

metatok::SweepConfig bench_config() {
    metatok::SweepConfig cfg;
    cfg.statements = {metatok::Statement::Main};
    cfg.r_min = 1;
    cfg.r_max = 3;
    cfg.n_min = 1;
    cfg.n_max = 2;
    cfg.lambda_max = 1;
    return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto cfg = bench_config();
    for (auto _ : state) benchmark::DoNotOptimize(metatok::run_sweep_serial(cfg));
}

void BM_SweepParallel(benchmark::State& state) {
    auto cfg = bench_config();
    cfg.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(metatok::run_sweep(cfg));
}

} // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
