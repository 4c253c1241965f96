// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Non-pipelined architectural interpreter for differential testing of
// base-ISA programs.
#include "crv/core/core.hpp"

namespace crv {

ReferenceResult interpret_reference(const Program& program,
                                    std::uint64_t step_limit) {
  ReferenceResult r;
  for (std::size_t i = 0; i < program.dm_image.size(); ++i) {
    r.dm[program.dm_base + i] = program.dm_image[i];
  }
  auto sx = [](std::int32_t v) { return std::uint64_t(std::int64_t(v)); };
  std::uint64_t pc = 0;
  for (std::uint64_t steps = 0;; ++steps) {
    if (steps >= step_limit) throw RunawayError("reference interpreter step limit");
    if (pc >= program.code.size()) {
      throw Error("reference interpreter ran past the end");
    }
    const Instruction& in = program.code[pc];
    std::uint64_t a = r.regs[in.rs1];
    std::uint64_t b = r.regs[in.rs2];
    auto wr = [&](std::uint64_t v) {
      if (in.rd != 0) r.regs[in.rd] = v;
    };
    std::uint64_t next = pc + 1;
    switch (in.op) {
      case Op::Lui: wr(std::uint64_t(std::int64_t(std::int32_t(in.imm << 12)))); break;
      case Op::Addi: wr(a + sx(in.imm)); break;
      case Op::Andi: wr(a & sx(in.imm)); break;
      case Op::Ori: wr(a | sx(in.imm)); break;
      case Op::Xori: wr(a ^ sx(in.imm)); break;
      case Op::Slti: wr(std::int64_t(a) < std::int64_t(in.imm) ? 1 : 0); break;
      case Op::Sltiu: wr(a < sx(in.imm) ? 1 : 0); break;
      case Op::Slli: wr(a << in.imm); break;
      case Op::Srli: wr(a >> in.imm); break;
      case Op::Srai: wr(std::uint64_t(std::int64_t(a) >> in.imm)); break;
      case Op::Add: wr(a + b); break;
      case Op::Sub: wr(a - b); break;
      case Op::And: wr(a & b); break;
      case Op::Or: wr(a | b); break;
      case Op::Xor: wr(a ^ b); break;
      case Op::Sll: wr(a << (b & 63)); break;
      case Op::Srl: wr(a >> (b & 63)); break;
      case Op::Sra: wr(std::uint64_t(std::int64_t(a) >> (b & 63))); break;
      case Op::Slt: wr(std::int64_t(a) < std::int64_t(b) ? 1 : 0); break;
      case Op::Sltu: wr(a < b ? 1 : 0); break;
      case Op::Ld: {
        std::int64_t addr = std::int64_t(a) + in.imm;
        if (addr < 0 || addr >= std::int64_t(kDmWords)) {
          throw BoundsError("reference: DM read out of bounds");
        }
        wr(r.dm[addr]);
        break;
      }
      case Op::Sd: {
        std::int64_t addr = std::int64_t(a) + in.imm;
        if (addr < 0 || addr >= std::int64_t(kDmWords)) {
          throw BoundsError("reference: DM write out of bounds");
        }
        r.dm[addr] = b;
        break;
      }
      case Op::Beq: if (a == b) next = pc + in.imm; break;
      case Op::Bne: if (a != b) next = pc + in.imm; break;
      case Op::Blt: if (std::int64_t(a) < std::int64_t(b)) next = pc + in.imm; break;
      case Op::Bge: if (std::int64_t(a) >= std::int64_t(b)) next = pc + in.imm; break;
      case Op::Jal:
        wr(pc + 1);
        next = pc + in.imm;
        break;
      case Op::Jalr:
        wr(pc + 1);
        next = a + sx(in.imm);
        break;
      case Op::Halt:
        return r;
      default:
        throw ModeError("reference interpreter handles base instructions only");
    }
    pc = next;
  }
}

}  // namespace crv
