// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/core/core.hpp"

#include <sstream>

namespace crv {

namespace {

std::uint64_t alu_result(const Instruction& in, std::uint64_t a, std::uint64_t b,
                         std::uint32_t pc) {
  auto s = [](std::uint64_t v) { return std::int64_t(v); };
  switch (in.op) {
    case Op::Lui: return std::uint64_t(std::int64_t(std::int32_t(in.imm << 12)));
    case Op::Addi: return a + std::uint64_t(std::int64_t(in.imm));
    case Op::Andi: return a & std::uint64_t(std::int64_t(in.imm));
    case Op::Ori: return a | std::uint64_t(std::int64_t(in.imm));
    case Op::Xori: return a ^ std::uint64_t(std::int64_t(in.imm));
    case Op::Slti: return s(a) < std::int64_t(in.imm) ? 1 : 0;
    case Op::Sltiu: return a < std::uint64_t(std::int64_t(in.imm)) ? 1 : 0;
    case Op::Slli: return a << in.imm;
    case Op::Srli: return a >> in.imm;
    case Op::Srai: return std::uint64_t(s(a) >> in.imm);
    case Op::Add: return a + b;
    case Op::Sub: return a - b;
    case Op::And: return a & b;
    case Op::Or: return a | b;
    case Op::Xor: return a ^ b;
    case Op::Sll: return a << (b & 63);
    case Op::Srl: return a >> (b & 63);
    case Op::Sra: return std::uint64_t(s(a) >> (b & 63));
    case Op::Slt: return s(a) < s(b) ? 1 : 0;
    case Op::Sltu: return a < b ? 1 : 0;
    case Op::Jal:
    case Op::Jalr: return pc + 1;
    default: return 0;
  }
}

bool branch_taken(Op op, std::uint64_t a, std::uint64_t b) {
  switch (op) {
    case Op::Beq: return a == b;
    case Op::Bne: return a != b;
    case Op::Blt: return std::int64_t(a) < std::int64_t(b);
    case Op::Bge: return std::int64_t(a) >= std::int64_t(b);
    default: return false;
  }
}

EngineJob job_from(const Instruction& in) {
  EngineJob job;
  job.mode = in.mode;
  job.state_base = in.state_base;
  job.msg_base = in.msg_base;
  job.count = in.mode == CryptoMode::HarakaRc ? 8u * in.count : in.count;
  job.dual_lane = in.flags & kDispatchDual;
  job.init_state = in.flags & kDispatchInit;
  job.no_absorb = in.flags & kDispatchNoAbsorb;
  job.rc_from_buffer = in.flags & kDispatchRcBuf;
  job.rc_base = in.state_base;  // seeded Haraka: constants live at the
                                // state field's index
  return job;
}

}  // namespace

std::uint64_t ExecutionTrace::engine_busy_cycles() const {
  std::uint64_t n = 0;
  for (const CycleRecord& r : records) {
    n += (r.md_busy || r.aes_busy || r.keccak_busy) ? 1 : 0;
  }
  return n;
}

std::uint64_t ExecutionTrace::dma_busy_cycles() const {
  std::uint64_t n = 0;
  for (const CycleRecord& r : records) n += r.dma_busy ? 1 : 0;
  return n;
}

std::uint64_t ExecutionTrace::overlap_cycles() const {
  std::uint64_t n = 0;
  for (const CycleRecord& r : records) {
    n += ((r.md_busy || r.aes_busy || r.keccak_busy) && r.dma_busy) ? 1 : 0;
  }
  return n;
}

std::string ExecutionTrace::to_text() const {
  // Columns: cycle IF ID EXE MEM WB stall md aes keccak dma flush
  std::ostringstream os;
  os << "# cycle if id exe mem wb stall md aes keccak dma flush\n";
  static const char* stall_names[] = {"-", "hazard", "wait", "membusy"};
  for (std::size_t c = 0; c < records.size(); ++c) {
    const CycleRecord& r = records[c];
    os << (c + 1);
    for (int s = 0; s < 5; ++s) {
      if (r.stage[s] < 0) os << " -";
      else os << " " << r.stage[s];
    }
    os << " " << stall_names[int(r.stall)] << " " << int(r.md_busy) << " "
       << int(r.aes_busy) << " " << int(r.keccak_busy) << " " << int(r.dma_busy)
       << " " << int(r.flush) << "\n";
  }
  return os.str();
}

std::string ExecutionTrace::summary() const {
  std::ostringstream os;
  os << "cycles: " << cycles() << "\n"
     << "retired: " << retired << "\n"
     << "id_stalls: " << id_stalls << "\n"
     << "mem_extra: " << mem_extra << "\n"
     << "flush_bubbles: " << flush_bubbles << "\n"
     << "engine_busy_cycles: " << engine_busy_cycles() << "\n"
     << "dma_busy_cycles: " << dma_busy_cycles() << "\n"
     << "overlap_cycles: " << overlap_cycles() << "\n"
     << "complete: " << (complete ? 1 : 0) << "\n";
  return os.str();
}

Machine::Machine(Program program, TimingConfig config, WordSpan host_image)
    : cfg(std::move(config)), dma(cfg), units(cfg), program_(std::move(program)) {
  program_.validate(cfg.im_capacity);
  host.words.assign(host_image.begin(), host_image.end());
  dm.load_image(program_.dm_image, program_.dm_base);
}

void Machine::write_reg(std::uint8_t rd, std::uint64_t value) {
  if (rd != 0) state_.regs[rd] = value;
}

void Machine::trap(std::uint32_t idx, const std::string& reason) {
  state_.trap.trapped = true;
  state_.trap.pc = idx;
  state_.trap.reason = reason;
  state_.halted = true;
}

void Machine::fetch() {
  if (if_ != -1 || halt_seen_ || state_.halted) return;
  if (fetch_hold_ > 0) {
    --fetch_hold_;
    return;
  }
  if (state_.pc >= program_.code.size()) {
    trap(state_.pc, "fetch past the end of instruction memory");
    return;
  }
  if_ = std::int32_t(state_.pc++);
}

void Machine::execute_at_ex(const Instruction& in, std::uint32_t idx) {
  std::uint64_t a = state_.regs[in.rs1];
  std::uint64_t b = state_.regs[in.rs2];
  switch (in.op) {
    case Op::Beq: case Op::Bne: case Op::Blt: case Op::Bge: {
      if (branch_taken(in.op, a, b)) {
        std::int64_t target = std::int64_t(idx) + in.imm;
        if (target < 0 || target > std::int64_t(program_.code.size())) {
          trap(idx, "branch target out of range");
          return;
        }
        std::uint32_t bubbles = cfg.hazard_branch_flush ? cfg.hazard_branch_flush : 1;
        if (if_ != -1) if_ = -1;
        fetch_hold_ = bubbles - 1;
        trace_.flush_bubbles += bubbles;
        flush_this_cycle_ = true;
        state_.pc = std::uint32_t(target);
      }
      break;
    }
    case Op::Jal:
    case Op::Jalr: {
      std::int64_t target = in.op == Op::Jal
                                ? std::int64_t(idx) + in.imm
                                : std::int64_t(a) + in.imm;
      if (target < 0 || target > std::int64_t(program_.code.size())) {
        trap(idx, "jump target out of range");
        return;
      }
      std::uint32_t bubbles = cfg.hazard_branch_flush ? cfg.hazard_branch_flush : 1;
      if (if_ != -1) if_ = -1;
      fetch_hold_ = bubbles - 1;
      trace_.flush_bubbles += bubbles;
      flush_this_cycle_ = true;
      state_.pc = std::uint32_t(target);
      break;
    }
    default:
      break;  // register and memory writes commit in order at MEM exit
  }
}

std::uint32_t Machine::mem_occupancy(const Instruction& in) {
  switch (in.op) {
    case Op::BufLoad:
    case Op::BufStore: {
      std::uint32_t wpc = cfg.buf_words_per_cycle;
      return cfg.buf_setup + (in.count + wpc - 1) / wpc;
    }
    case Op::CryptoDispatch: {
      int engine = int(engine_for(in.mode));
      bool reconfigure = engine_mode_[engine] != std::int8_t(in.mode);
      engine_mode_[engine] = std::int8_t(in.mode);
      return 1 + (reconfigure ? cfg.dispatch_overhead(in.mode) : 0);
    }
    default:
      return 1;
  }
}

void Machine::commit_mem(const Instruction& in, std::uint32_t idx) {
  try {
    switch (in.op) {
      case Op::Lui: case Op::Addi: case Op::Andi: case Op::Ori: case Op::Xori:
      case Op::Slti: case Op::Sltiu: case Op::Slli: case Op::Srli: case Op::Srai:
      case Op::Add: case Op::Sub: case Op::And: case Op::Or: case Op::Xor:
      case Op::Sll: case Op::Srl: case Op::Sra: case Op::Slt: case Op::Sltu:
        write_reg(in.rd, alu_result(in, state_.regs[in.rs1],
                                    state_.regs[in.rs2], idx));
        break;
      case Op::Jal:
      case Op::Jalr:
        write_reg(in.rd, idx + 1);
        break;
      case Op::Ld: {
        std::int64_t addr = std::int64_t(state_.regs[in.rs1]) + in.imm;
        if (addr < 0) throw BoundsError("negative DM address");
        write_reg(in.rd, dm.read(std::size_t(addr)));
        break;
      }
      case Op::Sd: {
        std::int64_t addr = std::int64_t(state_.regs[in.rs1]) + in.imm;
        if (addr < 0) throw BoundsError("negative DM address");
        dm.write(std::size_t(addr), state_.regs[in.rs2]);
        break;
      }
      case Op::BufLoad:
        buf_transfer(BufDirection::DmToBuf, dm, buf, in.dm_addr, in.buf_base,
                     in.count, cfg);
        break;
      case Op::BufStore:
        buf_transfer(BufDirection::BufToDm, dm, buf, in.dm_addr, in.buf_base,
                     in.count, cfg);
        break;
      case Op::CryptoDispatch:
        units.for_mode(in.mode).dispatch(job_from(in), buf);
        break;
      case Op::CryptoRead:
        write_reg(in.rd, buf.read(in.buf_base));
        break;
      case Op::DmaStart: {
        std::uint64_t off = state_.regs[in.rs2];
        std::uint64_t count = std::uint64_t(in.imm);
        if (off + count > host.words.size()) {
          throw BoundsError("DMA source range exceeds host image");
        }
        dma.start(WordSpan(host.words.data() + off, count), state_.regs[in.rs1]);
        break;
      }
      case Op::Illegal: {
        std::ostringstream os;
        os << "illegal instruction word 0x" << std::hex << in.raw;
        throw DecodeError(os.str());
      }
      default:
        break;
    }
  } catch (const Error& e) {
    trap(idx, e.what());
  }
}

bool Machine::id_blocked(const Instruction& in, std::int32_t ex_snapshot,
                         std::int32_t mem_snapshot) {
  if (in.op == Op::CryptoWait) {
    bool target_busy = false;
    switch (in.engine) {
      case EngineSel::Md: target_busy = units.md.status().busy; break;
      case EngineSel::AesHaraka: target_busy = units.aes.status().busy; break;
      case EngineSel::Keccak: target_busy = units.keccak.status().busy; break;
      case EngineSel::All: target_busy = units.any_busy(); break;
    }
    // Also drain older in-flight instructions so an uncommitted dispatch
    // cannot be overtaken.
    if (target_busy || ex_ != -1 || mem_ != -1) {
      stall_this_cycle_ = StallKind::Wait;
      return true;
    }
    return false;
  }
  if (in.op == Op::DmaWait) {
    if (dma.busy() || ex_ != -1 || mem_ != -1) {
      stall_this_cycle_ = StallKind::Wait;
      return true;
    }
    return false;
  }
  auto depends_on = [&](std::int32_t producer_idx) {
    if (producer_idx == -1) return false;
    const Instruction& producer = program_.code[producer_idx];
    if (!writes_rd(producer.op) || producer.rd == 0) return false;
    return (reads_rs1(in.op) && in.rs1 == producer.rd) ||
           (reads_rs2(in.op) && in.rs2 == producer.rd);
  };
  // Producer still in EXE: one bubble (the MEM->ID forward path closes the
  // gap a cycle later). Depth 2 also interlocks producers that started the
  // cycle in MEM, i.e. operands wait for WB.
  if (depends_on(ex_snapshot) ||
      (cfg.hazard_ex_use >= 2 && depends_on(mem_snapshot))) {
    stall_this_cycle_ = StallKind::Hazard;
    return true;
  }
  return false;
}

void Machine::step() {
  if (state_.halted) return;
  ++state_.cycle;
  stall_this_cycle_ = StallKind::None;
  flush_this_cycle_ = false;

  dma.tick(dm);
  units.tick_all(buf);

  std::int32_t ex_snapshot = ex_;
  std::int32_t mem_snapshot = mem_;

  // MEM: the occupant entered on an earlier cycle; it leaves when its
  // occupancy is spent, committing its effects on the way out.
  bool mem_burned = false;  // this cycle's lost slot already attributed
  if (!state_.halted && mem_ != -1) {
    if (mem_left_ > 1) {
      --mem_left_;
      ++trace_.mem_extra;
      mem_burned = true;
    } else {
      std::uint32_t idx = std::uint32_t(mem_);
      mem_ = -1;
      commit_mem(program_.code[idx], idx);
      if (!state_.trap.trapped) wb_ = std::int32_t(idx);
    }
  }

  // EXE -> MEM.
  if (!state_.halted && ex_ != -1 && mem_ == -1) {
    mem_ = ex_;
    mem_left_ = mem_occupancy(program_.code[mem_]);
    ex_ = -1;
  }

  // ID -> EXE (hazard, wait, and structural checks).
  if (!state_.halted && id_ != -1 && ex_ == -1) {
    const Instruction& in = program_.code[id_];
    if (id_blocked(in, ex_snapshot, mem_snapshot)) {
      if (!mem_burned) ++trace_.id_stalls;
    } else {
      ex_ = id_;
      id_ = -1;
      execute_at_ex(in, std::uint32_t(ex_));
    }
  } else if (!state_.halted && id_ != -1 && ex_ != -1 &&
             stall_this_cycle_ == StallKind::None) {
    stall_this_cycle_ = StallKind::MemBusy;
  }

  // IF -> ID.
  if (!state_.halted && if_ != -1 && id_ == -1) {
    id_ = if_;
    if_ = -1;
    if (program_.code[id_].op == Op::Halt) halt_seen_ = true;
  }

  if (!state_.halted) fetch();

  CycleRecord rec{};
  rec.stage[0] = if_;
  rec.stage[1] = id_;
  rec.stage[2] = ex_;
  rec.stage[3] = mem_;
  rec.stage[4] = wb_;
  rec.stall = stall_this_cycle_;
  rec.md_busy = units.md.status().busy;
  rec.aes_busy = units.aes.status().busy;
  rec.keccak_busy = units.keccak.status().busy;
  rec.dma_busy = dma.busy();
  rec.flush = flush_this_cycle_;
  trace_.records.push_back(rec);

  // WB work (register writeback) is applied earlier in program order, so an
  // instruction retires at the end of its WB cycle.
  if (wb_ != -1) {
    ++trace_.retired;
    if (program_.code[wb_].op == Op::Halt) state_.halted = true;
    wb_ = -1;
  }
}

RunResult Machine::run(std::uint64_t limit) {
  if (limit == 0) throw Error("cycle limit must be positive");
  while (!state_.halted) {
    if (state_.cycle >= limit) {
      trace_.complete = false;
      throw RunawayWithTrace(
          "cycle limit of " + std::to_string(limit) + " exceeded",
          std::move(trace_));
    }
    step();
  }
  trace_.complete = !state_.trap.trapped;
  return RunResult{state_, std::move(trace_)};
}

RunResult run_program(const Program& program, const TimingConfig& cfg,
                      WordSpan host_image, std::uint64_t limit) {
  Machine m(program, cfg, host_image);
  return m.run(limit);
}

}  // namespace crv
