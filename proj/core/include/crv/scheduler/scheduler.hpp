// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Emits programs and DM layouts for the two double-buffered workload
// shapes (long-message chaining and batched many-hash), and computes the
// T_compute/T_dma/T_total decomposition from finished traces. Layouts are
// documented in docs/memory-layouts.md.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crv/core/core.hpp"
#include "crv/primitives/primitives.hpp"

namespace crv {

enum class WorkloadShape { LongMessage, ManyHash };

struct Workload {
  CryptoMode algorithm = CryptoMode::Sha256;
  WorkloadShape shape = WorkloadShape::LongMessage;
  Bytes message;                 // LONG_MESSAGE payload
  std::vector<Bytes> instances;  // MANY_HASH inputs, uniform size
  std::size_t out_len = 0;       // SHAKE output bytes (0 = mode default)
  std::optional<std::pair<Bytes, Bytes>> seeded_rc;  // Haraka (sk, pk)
};

struct DigestRef {
  std::uint32_t dm_addr = 0;  // word index of the first digest word
  std::uint32_t bytes = 0;
};

struct Plan {
  Program program;
  std::vector<std::uint64_t> host_image;  // DMA source (empty when preloaded)
  std::vector<DigestRef> digests;
  CryptoMode mode = CryptoMode::Sha256;

  // Layout details, mainly for inspection in tests.
  std::uint32_t ping_base = 0, pong_base = 0;  // buffer message regions
  std::uint32_t chunk_blocks = 0;              // long-message DM chunking
  std::uint32_t slot_group_base[2] = {0, 0};   // many-hash DM slot groups
  std::uint32_t slot_words = 0;
  std::size_t batches = 1;
};

struct PlanOptions {
  // Stage the whole workload into DM before cycle 0 instead of streaming
  // it through the DMA channel (the paper-shaped single-message runs).
  bool preload_dm = false;
};

Plan plan_long_message(const Workload& w, const TimingConfig& cfg,
                       const PlanOptions& opts = {});
Plan plan_many_hash(const Workload& w, const TimingConfig& cfg,
                    const PlanOptions& opts = {});

// T_compute = cycles any engine is busy, T_dma = cycles the DMA channel is
// busy, T_total = end-to-end cycles, overlap = cycles both are busy.
struct ScheduleTrace {
  std::uint64_t t_compute = 0;
  std::uint64_t t_dma = 0;
  std::uint64_t t_total = 0;
  std::uint64_t overlap = 0;
};

// Throws Error for traces that did not halt normally.
ScheduleTrace analyze(const ExecutionTrace& trace);

struct ScheduleResult {
  RunResult run;
  std::vector<Bytes> digests;
  ScheduleTrace sched;
};

// Executes a plan on a fresh machine and extracts the digests from DM.
ScheduleResult run_plan(const Plan& plan, const TimingConfig& cfg,
                        std::uint64_t limit = kDefaultCycleLimit);

// ----------------------------------------------------------------------
// Workload config files: text key=value ('#' comments). Keys: algorithm,
// shape (long_message | many_hash), message_bytes, instance_count,
// instance_bytes, out_len, seed, preload_dm, sk_hex/pk_hex (seeded
// Haraka), plus any timing key understood by parse_config() as an
// override on the base configuration.
struct WorkloadConfig {
  CryptoMode algorithm = CryptoMode::Sha256;
  WorkloadShape shape = WorkloadShape::LongMessage;
  std::size_t message_bytes = 0;
  std::size_t instance_count = 1;
  std::size_t instance_bytes = 0;
  std::size_t out_len = 0;
  std::uint64_t seed = 1;
  bool preload_dm = false;
  std::optional<std::pair<Bytes, Bytes>> seeded_rc;
  std::string timing_overrides;  // raw lines, applied over the base config
};

WorkloadConfig parse_workload_config(std::istream& in);
WorkloadConfig load_workload_config(const std::string& path);

// Pseudo-random content for the configured sizes, deterministic in seed.
Workload materialize(const WorkloadConfig& wc);

// Applies the config's timing overrides on top of a base configuration.
TimingConfig apply_overrides(const TimingConfig& base, const WorkloadConfig& wc);

Plan plan_workload(const Workload& w, const TimingConfig& cfg,
                   const PlanOptions& opts = {});

// The schedule summary export: one `key: value` line per field.
std::string schedule_summary(const ScheduleTrace& s);

}  // namespace crv
