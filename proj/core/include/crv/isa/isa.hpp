// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Instruction set of the simulated core: an RV64-style base subset in the
// standard encodings plus custom crypto/data-movement instructions in the
// custom opcode space. Bit layouts are documented in docs/isa.md.
#pragma once

#include <cstdint>
#include <string>

#include "crv/error.hpp"
#include "crv/modes.hpp"

namespace crv {

enum class Op : std::uint8_t {
  // Base ALU, immediate forms.
  Lui, Addi, Andi, Ori, Xori, Slti, Sltiu, Slli, Srli, Srai,
  // Base ALU, register forms.
  Add, Sub, And, Or, Xor, Sll, Srl, Sra, Slt, Sltu,
  // Memory (DM is word-addressed: the effective address is a word index).
  Ld, Sd,
  // Control flow (offsets/targets in instruction units).
  Beq, Bne, Blt, Bge, Jal, Jalr,
  Halt,
  // Custom.
  BufLoad,         // buffer <- DM[dm_addr ..], count words
  BufStore,        // DM[dm_addr ..] <- buffer, count words
  CryptoDispatch,  // start an engine job
  CryptoWait,      // stall until engine(s) idle
  CryptoRead,      // rd <- buffer[buf_base]
  DmaStart,        // DM[reg rs1 ..] <- host[reg rs2 ..], imm words
  DmaWait,         // stall until the DMA channel is idle
  // Raw word that failed to decode; traps when it reaches ID.
  Illegal,
};

enum class EngineSel : std::uint8_t { Md = 0, AesHaraka = 1, Keccak = 2, All = 3 };

// CRYPTO_DISPATCH flag bits.
inline constexpr std::uint8_t kDispatchInit = 1;      // start from IV / zero state
inline constexpr std::uint8_t kDispatchDual = 2;      // two 32-bit lanes
inline constexpr std::uint8_t kDispatchNoAbsorb = 4;  // Keccak squeeze permutation
inline constexpr std::uint8_t kDispatchRcBuf = 8;     // Haraka constants from buffer

struct Instruction {
  Op op = Op::Halt;
  std::uint8_t rd = 0, rs1 = 0, rs2 = 0;
  std::int32_t imm = 0;  // ALU imm / branch+jump offset / ld+sd offset / DMA count

  // Custom-instruction fields.
  std::uint8_t buf_base = 0;   // buf ops, crypto_read source, dispatch rc base
  std::uint16_t dm_addr = 0;   // buf ops absolute DM word address
  std::uint8_t count = 1;      // buf ops words (1..128); dispatch blocks (1..7)
  CryptoMode mode = CryptoMode::Sha256;
  std::uint8_t state_base = 0, msg_base = 0;
  std::uint8_t flags = 0;
  EngineSel engine = EngineSel::All;
  std::uint32_t raw = 0;  // original word for Op::Illegal

  bool operator==(const Instruction&) const = default;
};

struct EncodedWord {
  std::uint32_t bits = 0;
  bool operator==(const EncodedWord&) const = default;
};

// Throws EncodingError when a field is out of range for its layout.
EncodedWord encode(const Instruction& instr);

// Throws DecodeError on unknown opcode bits.
Instruction decode(EncodedWord word);

// Lenient form for loading raw images: unknown words become Op::Illegal.
Instruction decode_lenient(EncodedWord word);

std::string disassemble(const Instruction& instr);

// True when the op reads/writes the named register file slots; used by the
// pipeline hazard logic and the assembler.
bool writes_rd(Op op);
bool reads_rs1(Op op);
bool reads_rs2(Op op);

}  // namespace crv
