// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// The five-stage in-order pipeline (IF, ID, EXE, MEM, WB) with the DMA
// channel and crypto engines ticked once per cycle. Architectural effects
// are applied in order (ALU/branches entering EXE, memory and custom ops
// when leaving MEM), so values are always exact; hazards only add stalls.
// The hazard model is documented in docs/isa.md.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crv/config.hpp"
#include "crv/isa/program.hpp"
#include "crv/memsys/memsys.hpp"
#include "crv/units/units.hpp"

namespace crv {

struct TrapInfo {
  bool trapped = false;
  std::uint32_t pc = 0;
  std::string reason;
};

enum class StallKind : std::uint8_t { None = 0, Hazard, Wait, MemBusy };

struct CycleRecord {
  std::int32_t stage[5];  // instruction index in IF, ID, EXE, MEM, WB; -1 empty
  StallKind stall;
  bool md_busy, aes_busy, keccak_busy, dma_busy;
  bool flush;
};

struct ExecutionTrace {
  std::vector<CycleRecord> records;
  bool complete = false;  // halted normally (no trap, no runaway)
  std::uint64_t retired = 0;
  std::uint64_t id_stalls = 0;
  std::uint64_t mem_extra = 0;
  std::uint64_t flush_bubbles = 0;

  std::uint64_t cycles() const { return records.size(); }
  std::uint64_t engine_busy_cycles() const;
  std::uint64_t dma_busy_cycles() const;
  std::uint64_t overlap_cycles() const;

  // One record per line: cycle, stage occupancy, stall tag, busy flags.
  std::string to_text() const;
  std::string summary() const;
};

struct CoreState {
  std::uint64_t regs[32] = {};
  std::uint32_t pc = 0;
  std::uint64_t cycle = 0;
  bool halted = false;
  TrapInfo trap;
};

struct RunResult {
  CoreState state;
  ExecutionTrace trace;
};

class RunawayWithTrace : public RunawayError {
 public:
  RunawayWithTrace(const std::string& msg, ExecutionTrace t)
      : RunawayError(msg), trace(std::move(t)) {}
  ExecutionTrace trace;
};

inline constexpr std::uint64_t kDefaultCycleLimit = 4'000'000;

class Machine {
 public:
  explicit Machine(Program program, TimingConfig cfg = {},
                   WordSpan host_image = {});

  Machine(const Machine&) = delete;
  Machine& operator=(const Machine&) = delete;

  // Steps until halt (or trap-halt); throws RunawayWithTrace at the cycle
  // limit. The trace moves out; the machine stays inspectable.
  RunResult run(std::uint64_t limit = kDefaultCycleLimit);

  void step();
  const CoreState& state() const { return state_; }
  const ExecutionTrace& trace() const { return trace_; }

  TimingConfig cfg;
  DataMemory dm;
  InternalBuffer buf;
  HostMemory host;
  DmaChannel dma;
  CryptoUnits units;

 private:
  void fetch();
  void execute_at_ex(const Instruction& in, std::uint32_t idx);
  std::uint32_t mem_occupancy(const Instruction& in);
  void commit_mem(const Instruction& in, std::uint32_t idx);
  bool id_blocked(const Instruction& in, std::int32_t ex_snapshot,
                  std::int32_t mem_snapshot);
  void trap(std::uint32_t idx, const std::string& reason);
  void write_reg(std::uint8_t rd, std::uint64_t value);

  Program program_;
  CoreState state_;
  ExecutionTrace trace_;

  std::int32_t if_ = -1, id_ = -1, ex_ = -1, mem_ = -1, wb_ = -1;
  std::uint32_t mem_left_ = 0;
  // Last dispatched mode per engine; a dispatch that switches an engine's
  // mode pays the configured reconfiguration overhead.
  std::int8_t engine_mode_[3] = {-1, -1, -1};
  bool halt_seen_ = false;
  std::uint32_t fetch_hold_ = 0;
  StallKind stall_this_cycle_ = StallKind::None;
  bool flush_this_cycle_ = false;
};

// Convenience wrapper: build a machine, run, return the result.
RunResult run_program(const Program& program, const TimingConfig& cfg = {},
                      WordSpan host_image = {},
                      std::uint64_t limit = kDefaultCycleLimit);

// Architectural reference interpreter for differential testing of base-ISA
// programs (no pipeline, no timing). Rejects custom ops.
struct ReferenceResult {
  std::uint64_t regs[32] = {};
  std::array<std::uint64_t, kDmWords> dm{};
};
ReferenceResult interpret_reference(const Program& program,
                                    std::uint64_t step_limit = 1'000'000);

}  // namespace crv
