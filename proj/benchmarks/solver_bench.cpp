#include <benchmark/benchmark.h>

#include "leveling/oracle.hpp"
#include "leveling/solver.hpp"

namespace {

using namespace leveling;

// 9 jobs over 14 days, the size of the paper's field instance.
ProjectInstance nine_by_fourteen() {
  ProjectInstance inst;
  inst.horizon = 14;
  const int durations[] = {2, 3, 4, 5, 3, 2, 6, 4, 3};
  const int demands[] = {6, 5, 3, 4, 2, 7, 3, 4, 5};
  for (int x = 0; x < 9; ++x) {
    inst.jobs.push_back({"J" + std::to_string(x + 1), durations[x], demands[x]});
  }
  inst.front = PrecedenceTable(9);
  inst.front.set(3, 1);
  inst.front.set(4, 2);
  inst.front.set(7, 3);
  inst.front.set(9, 8);
  return inst;
}

void BM_RunTrial(benchmark::State& state) {
  const auto inst = nine_by_fourteen();
  const auto params = PenaltyParams::defaults_for(inst);
  SolverConfig config;
  config.chain_length = static_cast<int>(state.range(0));
  config.record_trace = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(inst, params, config).result.best_energy.total);
    ++config.seed;
  }
}

void BM_OracleThreeJobs(benchmark::State& state) {
  ProjectInstance inst;
  inst.horizon = 8;
  inst.jobs = {{"A", 2, 3}, {"B", 2, 2}, {"C", 2, 1}};
  inst.front = PrecedenceTable(3);
  inst.front.set(2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_variance(inst, PrecedenceMode::kPaper));
  }
}

}  // namespace

BENCHMARK(BM_RunTrial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleThreeJobs)->Unit(benchmark::kMicrosecond);
