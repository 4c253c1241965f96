// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Simulation speed: host time per simulated workload, with simulated
// cycles/second as a counter.
#include <benchmark/benchmark.h>

#include <random>

#include "crv/bench/bench.hpp"

using namespace crv;

namespace {

Bytes make_input(std::size_t n) {
  std::mt19937_64 rng(11);
  Bytes b(n);
  for (auto& x : b) x = std::uint8_t(rng());
  return b;
}

void BM_LongMessageSha512(benchmark::State& state) {
  TimingConfig cfg;
  Workload w;
  w.algorithm = CryptoMode::Sha512;
  w.shape = WorkloadShape::LongMessage;
  w.message = make_input(std::size_t(state.range(0)) * 128 - 17);
  Plan plan = plan_long_message(w, cfg);
  std::uint64_t cycles = 0;
  for (auto _ : state) {
    ScheduleResult res = run_plan(plan, cfg);
    cycles += res.sched.t_total;
    benchmark::DoNotOptimize(res.digests);
  }
  state.counters["sim_cycles_per_s"] =
      benchmark::Counter(double(cycles), benchmark::Counter::kIsRate);
}

void BM_ManyHashHaraka256(benchmark::State& state) {
  TimingConfig cfg;
  Workload w;
  w.algorithm = CryptoMode::Haraka256;
  w.shape = WorkloadShape::ManyHash;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    w.instances.push_back(make_input(32));
  }
  Plan plan = plan_many_hash(w, cfg);
  std::uint64_t cycles = 0;
  for (auto _ : state) {
    ScheduleResult res = run_plan(plan, cfg);
    cycles += res.sched.t_total;
    benchmark::DoNotOptimize(res.digests);
  }
  state.counters["sim_cycles_per_s"] =
      benchmark::Counter(double(cycles), benchmark::Counter::kIsRate);
}

void BM_PaperWorkloads(benchmark::State& state) {
  TimingConfig cfg;
  for (auto _ : state) {
    CycleReport r = cmd_cycles(cfg, 42);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_LongMessageSha512)->Arg(8)->Arg(64);
BENCHMARK(BM_ManyHashHaraka256)->Arg(8)->Arg(24);
BENCHMARK(BM_PaperWorkloads);

BENCHMARK_MAIN();
