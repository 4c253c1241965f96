// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/isa/isa.hpp"

#include <sstream>

namespace crv {

namespace {

constexpr std::uint32_t kOpLui = 0x37, kOpImm = 0x13, kOpReg = 0x33;
constexpr std::uint32_t kOpLoad = 0x03, kOpStore = 0x23, kOpBranch = 0x63;
constexpr std::uint32_t kOpJal = 0x6F, kOpJalr = 0x67, kOpSystem = 0x73;
constexpr std::uint32_t kOpBufLoad = 0x0B, kOpBufStore = 0x2B;
constexpr std::uint32_t kOpCustom2 = 0x5B, kOpDispatch = 0x7B;

void check_reg(std::uint8_t r, const char* what) {
  if (r > 31) throw EncodingError(std::string(what) + " register out of range");
}

void check_simm(std::int32_t v, int bits, const char* what) {
  std::int32_t lo = -(1 << (bits - 1));
  std::int32_t hi = (1 << (bits - 1)) - 1;
  if (v < lo || v > hi) {
    throw EncodingError(std::string(what) + " immediate out of range: " +
                        std::to_string(v));
  }
}

std::uint32_t itype(std::int32_t imm, std::uint8_t rs1, std::uint32_t funct3,
                    std::uint8_t rd, std::uint32_t opcode) {
  return (std::uint32_t(imm & 0xFFF) << 20) | (std::uint32_t(rs1) << 15) |
         (funct3 << 12) | (std::uint32_t(rd) << 7) | opcode;
}

std::uint32_t rtype(std::uint32_t funct7, std::uint8_t rs2, std::uint8_t rs1,
                    std::uint32_t funct3, std::uint8_t rd, std::uint32_t opcode) {
  return (funct7 << 25) | (std::uint32_t(rs2) << 20) | (std::uint32_t(rs1) << 15) |
         (funct3 << 12) | (std::uint32_t(rd) << 7) | opcode;
}

std::uint32_t stype(std::int32_t imm, std::uint8_t rs2, std::uint8_t rs1,
                    std::uint32_t funct3, std::uint32_t opcode) {
  std::uint32_t u = std::uint32_t(imm & 0xFFF);
  return ((u >> 5) << 25) | (std::uint32_t(rs2) << 20) |
         (std::uint32_t(rs1) << 15) | (funct3 << 12) | ((u & 0x1F) << 7) | opcode;
}

std::int32_t sext(std::uint32_t v, int bits) {
  std::uint32_t m = 1u << (bits - 1);
  return std::int32_t((v ^ m) - m);
}

}  // namespace

bool writes_rd(Op op) {
  switch (op) {
    case Op::Lui: case Op::Addi: case Op::Andi: case Op::Ori: case Op::Xori:
    case Op::Slti: case Op::Sltiu: case Op::Slli: case Op::Srli: case Op::Srai:
    case Op::Add: case Op::Sub: case Op::And: case Op::Or: case Op::Xor:
    case Op::Sll: case Op::Srl: case Op::Sra: case Op::Slt: case Op::Sltu:
    case Op::Ld: case Op::Jal: case Op::Jalr: case Op::CryptoRead:
      return true;
    default:
      return false;
  }
}

bool reads_rs1(Op op) {
  switch (op) {
    case Op::Addi: case Op::Andi: case Op::Ori: case Op::Xori:
    case Op::Slti: case Op::Sltiu: case Op::Slli: case Op::Srli: case Op::Srai:
    case Op::Add: case Op::Sub: case Op::And: case Op::Or: case Op::Xor:
    case Op::Sll: case Op::Srl: case Op::Sra: case Op::Slt: case Op::Sltu:
    case Op::Ld: case Op::Sd: case Op::Beq: case Op::Bne: case Op::Blt:
    case Op::Bge: case Op::Jalr: case Op::DmaStart:
      return true;
    default:
      return false;
  }
}

bool reads_rs2(Op op) {
  switch (op) {
    case Op::Add: case Op::Sub: case Op::And: case Op::Or: case Op::Xor:
    case Op::Sll: case Op::Srl: case Op::Sra: case Op::Slt: case Op::Sltu:
    case Op::Sd: case Op::Beq: case Op::Bne: case Op::Blt: case Op::Bge:
    case Op::DmaStart:
      return true;
    default:
      return false;
  }
}

EncodedWord encode(const Instruction& in) {
  check_reg(in.rd, "rd");
  check_reg(in.rs1, "rs1");
  check_reg(in.rs2, "rs2");
  std::uint32_t w = 0;
  switch (in.op) {
    case Op::Lui:
      if (in.imm < 0 || in.imm > 0xFFFFF) {
        throw EncodingError("lui immediate out of range");
      }
      w = (std::uint32_t(in.imm) << 12) | (std::uint32_t(in.rd) << 7) | kOpLui;
      break;
    case Op::Addi: case Op::Andi: case Op::Ori: case Op::Xori:
    case Op::Slti: case Op::Sltiu: {
      check_simm(in.imm, 12, "alu");
      std::uint32_t f3 = in.op == Op::Addi   ? 0
                         : in.op == Op::Slti ? 2
                         : in.op == Op::Sltiu ? 3
                         : in.op == Op::Xori ? 4
                         : in.op == Op::Ori  ? 6
                                             : 7;
      w = itype(in.imm, in.rs1, f3, in.rd, kOpImm);
      break;
    }
    case Op::Slli: case Op::Srli: case Op::Srai: {
      if (in.imm < 0 || in.imm > 63) throw EncodingError("shift amount out of range");
      std::uint32_t f3 = in.op == Op::Slli ? 1 : 5;
      std::uint32_t f6 = in.op == Op::Srai ? 0x10 : 0;
      w = (f6 << 26) | (std::uint32_t(in.imm) << 20) |
          (std::uint32_t(in.rs1) << 15) | (f3 << 12) |
          (std::uint32_t(in.rd) << 7) | kOpImm;
      break;
    }
    case Op::Add: case Op::Sub: case Op::And: case Op::Or: case Op::Xor:
    case Op::Sll: case Op::Srl: case Op::Sra: case Op::Slt: case Op::Sltu: {
      std::uint32_t f3 = 0, f7 = 0;
      switch (in.op) {
        case Op::Add: f3 = 0; break;
        case Op::Sub: f3 = 0; f7 = 0x20; break;
        case Op::Sll: f3 = 1; break;
        case Op::Slt: f3 = 2; break;
        case Op::Sltu: f3 = 3; break;
        case Op::Xor: f3 = 4; break;
        case Op::Srl: f3 = 5; break;
        case Op::Sra: f3 = 5; f7 = 0x20; break;
        case Op::Or: f3 = 6; break;
        default: f3 = 7; break;
      }
      w = rtype(f7, in.rs2, in.rs1, f3, in.rd, kOpReg);
      break;
    }
    case Op::Ld:
      check_simm(in.imm, 12, "load");
      w = itype(in.imm, in.rs1, 3, in.rd, kOpLoad);
      break;
    case Op::Sd:
      check_simm(in.imm, 12, "store");
      w = stype(in.imm, in.rs2, in.rs1, 3, kOpStore);
      break;
    case Op::Beq: case Op::Bne: case Op::Blt: case Op::Bge: {
      check_simm(in.imm, 11, "branch");  // +-1024 instructions
      std::int32_t off = in.imm * 4;     // stored in byte units
      std::uint32_t u = std::uint32_t(off) & 0x1FFF;
      std::uint32_t f3 = in.op == Op::Beq   ? 0
                         : in.op == Op::Bne ? 1
                         : in.op == Op::Blt ? 4
                                            : 5;
      w = (((u >> 12) & 1) << 31) | (((u >> 5) & 0x3F) << 25) |
          (std::uint32_t(in.rs2) << 20) | (std::uint32_t(in.rs1) << 15) |
          (f3 << 12) | (((u >> 1) & 0xF) << 8) | (((u >> 11) & 1) << 7) |
          kOpBranch;
      break;
    }
    case Op::Jal: {
      check_simm(in.imm, 19, "jump");  // J-type: +-2^18 instructions
      std::int32_t off = in.imm * 4;
      std::uint32_t u = std::uint32_t(off) & 0x1FFFFF;
      w = (((u >> 20) & 1) << 31) | (((u >> 1) & 0x3FF) << 21) |
          (((u >> 11) & 1) << 20) | (((u >> 12) & 0xFF) << 12) |
          (std::uint32_t(in.rd) << 7) | kOpJal;
      break;
    }
    case Op::Jalr:
      check_simm(in.imm, 12, "jalr");
      w = itype(in.imm, in.rs1, 0, in.rd, kOpJalr);
      break;
    case Op::Halt:
      w = (1u << 20) | kOpSystem;  // EBREAK
      break;
    case Op::BufLoad:
    case Op::BufStore: {
      if (in.count < 1 || in.count > 128) {
        throw EncodingError("buffer transfer count must be in [1, 128], got " +
                            std::to_string(int(in.count)));
      }
      if (in.buf_base > 127) throw EncodingError("buffer index out of range");
      if (in.dm_addr > 1023) throw EncodingError("DM address out of range");
      w = (std::uint32_t(in.buf_base) << 25) | (std::uint32_t(in.dm_addr) << 15) |
          (std::uint32_t(in.count) << 7) |
          (in.op == Op::BufLoad ? kOpBufLoad : kOpBufStore);
      break;
    }
    case Op::CryptoDispatch: {
      if (in.count < 1 || in.count > 7) {
        throw EncodingError("dispatch count must be in [1, 7]");
      }
      if (in.state_base > 127 || in.msg_base > 127) {
        throw EncodingError("buffer index out of range");
      }
      if (in.flags > 15) throw EncodingError("dispatch flags out of range");
      w = (std::uint32_t(in.mode) << 28) | (std::uint32_t(in.state_base) << 21) |
          (std::uint32_t(in.msg_base) << 14) | (std::uint32_t(in.count) << 11) |
          (std::uint32_t(in.flags) << 7) | kOpDispatch;
      break;
    }
    case Op::CryptoWait:
      w = (std::uint32_t(in.engine) << 20) | (0u << 12) | kOpCustom2;
      break;
    case Op::CryptoRead:
      if (in.buf_base > 127) throw EncodingError("buffer index out of range");
      w = (std::uint32_t(in.buf_base) << 20) | (1u << 12) |
          (std::uint32_t(in.rd) << 7) | kOpCustom2;
      break;
    case Op::DmaStart:
      if (in.imm < 0 || in.imm > 1024) {
        throw EncodingError("DMA word count out of range");
      }
      w = stype(in.imm, in.rs2, in.rs1, 2, kOpCustom2);
      break;
    case Op::DmaWait:
      w = (3u << 12) | kOpCustom2;
      break;
    case Op::Illegal:
      throw EncodingError("cannot encode an illegal instruction");
  }
  return EncodedWord{w};
}

Instruction decode(EncodedWord word) {
  std::uint32_t w = word.bits;
  std::uint32_t opcode = w & 0x7F;
  std::uint32_t f3 = (w >> 12) & 7;
  Instruction in;
  in.rd = std::uint8_t((w >> 7) & 31);
  in.rs1 = std::uint8_t((w >> 15) & 31);
  in.rs2 = std::uint8_t((w >> 20) & 31);
  switch (opcode) {
    case kOpLui:
      in.op = Op::Lui;
      in.rs1 = in.rs2 = 0;
      in.imm = std::int32_t(w >> 12);
      return in;
    case kOpImm: {
      in.rs2 = 0;
      in.imm = sext(w >> 20, 12);
      switch (f3) {
        case 0: in.op = Op::Addi; return in;
        case 2: in.op = Op::Slti; return in;
        case 3: in.op = Op::Sltiu; return in;
        case 4: in.op = Op::Xori; return in;
        case 6: in.op = Op::Ori; return in;
        case 7: in.op = Op::Andi; return in;
        case 1:
          if ((w >> 26) != 0) break;
          in.op = Op::Slli;
          in.imm = std::int32_t((w >> 20) & 63);
          return in;
        case 5: {
          std::uint32_t f6 = w >> 26;
          if (f6 != 0 && f6 != 0x10) break;
          in.op = f6 ? Op::Srai : Op::Srli;
          in.imm = std::int32_t((w >> 20) & 63);
          return in;
        }
      }
      break;
    }
    case kOpReg: {
      std::uint32_t f7 = w >> 25;
      in.imm = 0;
      if (f7 == 0) {
        static constexpr Op ops[8] = {Op::Add, Op::Sll, Op::Slt, Op::Sltu,
                                      Op::Xor, Op::Srl, Op::Or, Op::And};
        in.op = ops[f3];
        return in;
      }
      if (f7 == 0x20 && f3 == 0) { in.op = Op::Sub; return in; }
      if (f7 == 0x20 && f3 == 5) { in.op = Op::Sra; return in; }
      break;
    }
    case kOpLoad:
      if (f3 != 3) break;
      in.op = Op::Ld;
      in.rs2 = 0;
      in.imm = sext(w >> 20, 12);
      return in;
    case kOpStore:
      if (f3 != 3) break;
      in.op = Op::Sd;
      in.rd = 0;
      in.imm = sext(((w >> 25) << 5) | ((w >> 7) & 0x1F), 12);
      return in;
    case kOpBranch: {
      std::uint32_t u = (((w >> 31) & 1) << 12) | (((w >> 7) & 1) << 11) |
                        (((w >> 25) & 0x3F) << 5) | (((w >> 8) & 0xF) << 1);
      std::int32_t off = sext(u, 13);
      if (off % 4 != 0) break;
      in.rd = 0;
      in.imm = off / 4;
      switch (f3) {
        case 0: in.op = Op::Beq; return in;
        case 1: in.op = Op::Bne; return in;
        case 4: in.op = Op::Blt; return in;
        case 5: in.op = Op::Bge; return in;
      }
      break;
    }
    case kOpJal: {
      std::uint32_t u = (((w >> 31) & 1) << 20) | (((w >> 12) & 0xFF) << 12) |
                        (((w >> 20) & 1) << 11) | (((w >> 21) & 0x3FF) << 1);
      std::int32_t off = sext(u, 21);
      if (off % 4 != 0) break;
      in.op = Op::Jal;
      in.rs1 = in.rs2 = 0;
      in.imm = off / 4;
      return in;
    }
    case kOpJalr:
      if (f3 != 0) break;
      in.op = Op::Jalr;
      in.rs2 = 0;
      in.imm = sext(w >> 20, 12);
      return in;
    case kOpSystem:
      if (w == ((1u << 20) | kOpSystem)) {
        in = Instruction{};
        in.op = Op::Halt;
        return in;
      }
      break;
    case kOpBufLoad:
    case kOpBufStore: {
      in = Instruction{};
      in.op = opcode == kOpBufLoad ? Op::BufLoad : Op::BufStore;
      in.buf_base = std::uint8_t((w >> 25) & 0x7F);
      in.dm_addr = std::uint16_t((w >> 15) & 0x3FF);
      in.count = std::uint8_t((w >> 7) & 0xFF);
      if (in.count < 1 || in.count > 128) break;
      return in;
    }
    case kOpDispatch: {
      in = Instruction{};
      in.op = Op::CryptoDispatch;
      std::uint32_t mode = w >> 28;
      if (mode >= kCryptoModeCount) break;
      in.mode = static_cast<CryptoMode>(mode);
      in.state_base = std::uint8_t((w >> 21) & 0x7F);
      in.msg_base = std::uint8_t((w >> 14) & 0x7F);
      in.count = std::uint8_t((w >> 11) & 0x7);
      in.flags = std::uint8_t((w >> 7) & 0xF);
      if (in.count < 1) break;
      return in;
    }
    case kOpCustom2:
      switch (f3) {
        case 0:
          in = Instruction{};
          in.op = Op::CryptoWait;
          in.engine = static_cast<EngineSel>((w >> 20) & 3);
          return in;
        case 1:
          in = Instruction{};
          in.op = Op::CryptoRead;
          in.rd = std::uint8_t((w >> 7) & 31);
          in.buf_base = std::uint8_t((w >> 20) & 0x7F);
          return in;
        case 2:
          in.op = Op::DmaStart;
          in.rd = 0;
          in.imm = std::int32_t(((w >> 25) << 5) | ((w >> 7) & 0x1F));
          if (in.imm > 1024) break;
          return in;
        case 3:
          in = Instruction{};
          in.op = Op::DmaWait;
          return in;
      }
      break;
    default:
      break;
  }
  std::ostringstream os;
  os << "illegal instruction word 0x" << std::hex << w;
  throw DecodeError(os.str());
}

Instruction decode_lenient(EncodedWord word) {
  try {
    return decode(word);
  } catch (const DecodeError&) {
    Instruction in;
    in.op = Op::Illegal;
    in.raw = word.bits;
    return in;
  }
}

namespace {

const char* op_mnemonic(Op op) {
  switch (op) {
    case Op::Lui: return "lui";
    case Op::Addi: return "addi";
    case Op::Andi: return "andi";
    case Op::Ori: return "ori";
    case Op::Xori: return "xori";
    case Op::Slti: return "slti";
    case Op::Sltiu: return "sltiu";
    case Op::Slli: return "slli";
    case Op::Srli: return "srli";
    case Op::Srai: return "srai";
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Xor: return "xor";
    case Op::Sll: return "sll";
    case Op::Srl: return "srl";
    case Op::Sra: return "sra";
    case Op::Slt: return "slt";
    case Op::Sltu: return "sltu";
    case Op::Ld: return "ld";
    case Op::Sd: return "sd";
    case Op::Beq: return "beq";
    case Op::Bne: return "bne";
    case Op::Blt: return "blt";
    case Op::Bge: return "bge";
    case Op::Jal: return "jal";
    case Op::Jalr: return "jalr";
    case Op::Halt: return "halt";
    case Op::BufLoad: return "buf_load";
    case Op::BufStore: return "buf_store";
    case Op::CryptoDispatch: return "crypto_dispatch";
    case Op::CryptoWait: return "crypto_wait";
    case Op::CryptoRead: return "crypto_read";
    case Op::DmaStart: return "dma_start";
    case Op::DmaWait: return "dma_wait";
    case Op::Illegal: return ".word";
  }
  return "?";
}

}  // namespace

std::string disassemble(const Instruction& in) {
  std::ostringstream os;
  os << op_mnemonic(in.op);
  auto r = [](int n) { return "r" + std::to_string(n); };
  switch (in.op) {
    case Op::Lui:
      os << " " << r(in.rd) << ", " << in.imm;
      break;
    case Op::Addi: case Op::Andi: case Op::Ori: case Op::Xori:
    case Op::Slti: case Op::Sltiu: case Op::Slli: case Op::Srli: case Op::Srai:
      os << " " << r(in.rd) << ", " << r(in.rs1) << ", " << in.imm;
      break;
    case Op::Add: case Op::Sub: case Op::And: case Op::Or: case Op::Xor:
    case Op::Sll: case Op::Srl: case Op::Sra: case Op::Slt: case Op::Sltu:
      os << " " << r(in.rd) << ", " << r(in.rs1) << ", " << r(in.rs2);
      break;
    case Op::Ld:
      os << " " << r(in.rd) << ", " << in.imm << "(" << r(in.rs1) << ")";
      break;
    case Op::Sd:
      os << " " << r(in.rs2) << ", " << in.imm << "(" << r(in.rs1) << ")";
      break;
    case Op::Beq: case Op::Bne: case Op::Blt: case Op::Bge:
      os << " " << r(in.rs1) << ", " << r(in.rs2) << ", " << in.imm;
      break;
    case Op::Jal:
      os << " " << r(in.rd) << ", " << in.imm;
      break;
    case Op::Jalr:
      os << " " << r(in.rd) << ", " << r(in.rs1) << ", " << in.imm;
      break;
    case Op::Halt:
    case Op::DmaWait:
      break;
    case Op::BufLoad:
      os << " b" << int(in.buf_base) << ", dm:" << in.dm_addr << ", "
         << int(in.count);
      break;
    case Op::BufStore:
      os << " dm:" << in.dm_addr << ", b" << int(in.buf_base) << ", "
         << int(in.count);
      break;
    case Op::CryptoDispatch: {
      os << " " << mode_name(in.mode) << ", b" << int(in.state_base) << ", b"
         << int(in.msg_base) << ", " << int(in.count);
      if (in.flags) {
        os << ", ";
        bool first = true;
        auto emit = [&](std::uint8_t bit, const char* name) {
          if (in.flags & bit) {
            if (!first) os << "|";
            os << name;
            first = false;
          }
        };
        emit(kDispatchInit, "init");
        emit(kDispatchDual, "dual");
        emit(kDispatchNoAbsorb, "no_absorb");
        emit(kDispatchRcBuf, "rc_buf");
      }
      break;
    }
    case Op::CryptoWait: {
      static const char* names[4] = {"md", "aes", "keccak", "all"};
      os << " " << names[int(in.engine)];
      break;
    }
    case Op::CryptoRead:
      os << " " << r(in.rd) << ", b" << int(in.buf_base);
      break;
    case Op::DmaStart:
      os << " " << r(in.rs1) << ", " << r(in.rs2) << ", " << in.imm;
      break;
    case Op::Illegal:
      os << " 0x" << std::hex << in.raw;
      break;
  }
  return os.str();
}

}  // namespace crv
