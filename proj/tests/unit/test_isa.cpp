// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <sstream>

#include "crv/isa/assembler.hpp"
#include "crv/isa/isa.hpp"
#include "crv/isa/program.hpp"
#include "doctest.h"

using namespace crv;

namespace {

// Canonical random instruction generator: unused fields stay default so the
// encode/decode bijection holds field-for-field.
Instruction random_instruction(std::mt19937_64& rng) {
  static const Op kOps[] = {
      Op::Lui, Op::Addi, Op::Andi, Op::Ori, Op::Xori, Op::Slti, Op::Sltiu,
      Op::Slli, Op::Srli, Op::Srai, Op::Add, Op::Sub, Op::And, Op::Or,
      Op::Xor, Op::Sll, Op::Srl, Op::Sra, Op::Slt, Op::Sltu, Op::Ld, Op::Sd,
      Op::Beq, Op::Bne, Op::Blt, Op::Bge, Op::Jal, Op::Jalr, Op::Halt,
      Op::BufLoad, Op::BufStore, Op::CryptoDispatch, Op::CryptoWait,
      Op::CryptoRead, Op::DmaStart, Op::DmaWait};
  Instruction in;
  in.op = kOps[rng() % std::size(kOps)];
  auto reg = [&] { return std::uint8_t(rng() % 32); };
  auto imm12 = [&] { return std::int32_t(rng() % 4096) - 2048; };
  switch (in.op) {
    case Op::Lui:
      in.rd = reg();
      in.imm = std::int32_t(rng() % 0x100000);
      break;
    case Op::Addi: case Op::Andi: case Op::Ori: case Op::Xori:
    case Op::Slti: case Op::Sltiu:
      in.rd = reg();
      in.rs1 = reg();
      in.imm = imm12();
      break;
    case Op::Slli: case Op::Srli: case Op::Srai:
      in.rd = reg();
      in.rs1 = reg();
      in.imm = std::int32_t(rng() % 64);
      break;
    case Op::Add: case Op::Sub: case Op::And: case Op::Or: case Op::Xor:
    case Op::Sll: case Op::Srl: case Op::Sra: case Op::Slt: case Op::Sltu:
      in.rd = reg();
      in.rs1 = reg();
      in.rs2 = reg();
      break;
    case Op::Ld:
      in.rd = reg();
      in.rs1 = reg();
      in.imm = imm12();
      break;
    case Op::Sd:
      in.rs1 = reg();
      in.rs2 = reg();
      in.imm = imm12();
      break;
    case Op::Beq: case Op::Bne: case Op::Blt: case Op::Bge:
      in.rs1 = reg();
      in.rs2 = reg();
      in.imm = std::int32_t(rng() % 2048) - 1024;
      break;
    case Op::Jal:
      in.rd = reg();
      in.imm = std::int32_t(rng() % 4096) - 2048;
      break;
    case Op::Jalr:
      in.rd = reg();
      in.rs1 = reg();
      in.imm = imm12();
      break;
    case Op::Halt:
    case Op::DmaWait:
      break;
    case Op::BufLoad:
    case Op::BufStore:
      in.buf_base = std::uint8_t(rng() % 128);
      in.dm_addr = std::uint16_t(rng() % 1024);
      in.count = std::uint8_t(1 + rng() % 128);
      break;
    case Op::CryptoDispatch:
      in.mode = static_cast<CryptoMode>(rng() % kCryptoModeCount);
      in.state_base = std::uint8_t(rng() % 128);
      in.msg_base = std::uint8_t(rng() % 128);
      in.count = std::uint8_t(1 + rng() % 7);
      in.flags = std::uint8_t(rng() % 16);
      break;
    case Op::CryptoWait:
      in.engine = static_cast<EngineSel>(rng() % 4);
      break;
    case Op::CryptoRead:
      in.rd = reg();
      in.buf_base = std::uint8_t(rng() % 128);
      break;
    case Op::DmaStart:
      in.rs1 = reg();
      in.rs2 = reg();
      in.imm = std::int32_t(rng() % 1025);
      break;
    case Op::Illegal:
      break;
  }
  return in;
}

}  // namespace

TEST_CASE("encode/decode bijection over 10000 random instructions") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    Instruction in = random_instruction(rng);
    EncodedWord w = encode(in);
    Instruction back = decode(w);
    CHECK(back == in);
    CHECK(encode(back) == w);
  }
}

TEST_CASE("boundary encodings") {
  Instruction in;
  in.op = Op::BufLoad;
  in.count = 128;
  in.dm_addr = 896;
  CHECK(decode(encode(in)) == in);

  in.count = 129;
  CHECK_THROWS_AS(encode(in), EncodingError);
  in.count = 0;
  CHECK_THROWS_AS(encode(in), EncodingError);

  Instruction add;
  add.op = Op::Add;
  add.rd = 1;
  add.rs1 = 2;
  add.rs2 = 3;
  CHECK(decode(encode(add)) == add);
}

TEST_CASE("all-zero and reserved words are illegal") {
  CHECK_THROWS_AS(decode(EncodedWord{0}), DecodeError);
  CHECK_THROWS_AS(decode(EncodedWord{0xFFFFFFFF}), DecodeError);
  Instruction in = decode_lenient(EncodedWord{0});
  CHECK(in.op == Op::Illegal);
  CHECK(in.raw == 0);
}

TEST_CASE("crypto_dispatch keeps its mode tag through decode") {
  Instruction in;
  in.op = Op::CryptoDispatch;
  in.mode = CryptoMode::Shake256;
  in.state_base = 0;
  in.msg_base = 32;
  in.count = 2;
  in.flags = kDispatchInit;
  Instruction back = decode(encode(in));
  CHECK(back.mode == CryptoMode::Shake256);
  CHECK(back.flags == kDispatchInit);
  CHECK(back.msg_base == 32);
}

TEST_CASE("assembler basics") {
  Program p = assemble("halt\n");
  REQUIRE(p.code.size() == 1);
  CHECK(p.code[0].op == Op::Halt);

  Program empty_lines = assemble("; nothing here\n\n  ; still nothing\nhalt\n");
  CHECK(empty_lines.code.size() == 1);
}

TEST_CASE("assembler resolves a backward branch over a 10-line loop") {
  const char* src = R"(
        addi r1, r0, 0
        addi r2, r0, 10
loop:   addi r1, r1, 1
        addi r3, r1, 0
        addi r4, r3, 0
        addi r5, r4, 0
        addi r6, r5, 0
        addi r7, r6, 0
        addi r8, r7, 0
        bne  r1, r2, loop
        halt
)";
  Program p = assemble(src);
  REQUIRE(p.code.size() == 11);
  const Instruction& bne = p.code[9];
  CHECK(bne.op == Op::Bne);
  CHECK(bne.imm == -7);  // back to index 2
}

TEST_CASE("assembler reports errors with line numbers") {
  try {
    assemble("addi r1, r0, 1\nbuf_load b0, dm:0, 129\n");
    FAIL("expected AsmError");
  } catch (const AsmError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("128") != std::string::npos);
  }

  CHECK_THROWS_AS(assemble("frobnicate r1, r2\n"), AsmError);
  CHECK_THROWS_AS(assemble("beq r1, r2, nowhere\nhalt\n"), AsmError);
  CHECK_THROWS_AS(assemble("addi r1, r0, 99999\n"), AsmError);
  CHECK_THROWS_AS(assemble("addi r32, r0, 1\n"), AsmError);
}

TEST_CASE("assembler custom instruction forms") {
  const char* src = R"(
    buf_load  b8, dm:16, 8
    crypto_dispatch sha512, b0, b32, 1, init
    crypto_wait md
    crypto_read r5, b3
    buf_store dm:0, b0, 8
    dma_start r1, r2, 128
    dma_wait
    crypto_dispatch sha256, b0, b32, 1, init|dual
    halt
)";
  Program p = assemble(src);
  REQUIRE(p.code.size() == 9);
  CHECK(p.code[0].op == Op::BufLoad);
  CHECK(p.code[0].buf_base == 8);
  CHECK(p.code[0].dm_addr == 16);
  CHECK(p.code[1].mode == CryptoMode::Sha512);
  CHECK(p.code[1].flags == kDispatchInit);
  CHECK(p.code[2].engine == EngineSel::Md);
  CHECK(p.code[3].rd == 5);
  CHECK(p.code[5].imm == 128);
  CHECK(p.code[7].flags == (kDispatchInit | kDispatchDual));
}

TEST_CASE("assemble-disassemble-assemble is a fixed point") {
  const char* src = R"(
        addi r1, r0, 5
        lui  r2, 4096
        add  r3, r1, r2
        sd   r3, 4(r0)
        ld   r4, 4(r0)
loop:   addi r4, r4, -1
        bne  r4, r0, loop
        buf_load b0, dm:4, 1
        crypto_dispatch sm3, b0, b32, 1, init
        crypto_wait all
        buf_store dm:8, b0, 4
        jal  r0, end
        halt
end:    halt
)";
  Program p1 = assemble(src);
  Program p2 = assemble(disassemble_program(p1));
  CHECK(p1.code == p2.code);
  Program p3 = assemble(disassemble_program(p2));
  CHECK(p2.code == p3.code);
}

TEST_CASE("program binary round trip with DM image") {
  std::mt19937_64 rng(7);
  Program p;
  for (int i = 0; i < 50; ++i) p.code.push_back(random_instruction(rng));
  Instruction halt;
  halt.op = Op::Halt;
  p.code.push_back(halt);
  p.dm_base = 12;
  for (int i = 0; i < 40; ++i) p.dm_image.push_back(rng());

  std::stringstream buf;
  save_program(p, buf);
  Program q = load_program(buf);
  CHECK(q.code == p.code);
  CHECK(q.dm_image == p.dm_image);
  CHECK(q.dm_base == p.dm_base);
}

TEST_CASE("program validation limits") {
  Program p;
  Instruction halt;
  halt.op = Op::Halt;
  p.code.assign(4097, halt);
  CHECK_THROWS_AS(p.validate(4096), Error);
  p.code.assign(1, halt);
  p.dm_base = 1000;
  p.dm_image.assign(30, 0);
  CHECK_THROWS_AS(p.validate(), BoundsError);
}

TEST_CASE("decode_lenient never throws on arbitrary words") {
  std::mt19937_64 rng(99);
  int legal = 0;
  for (int i = 0; i < 200000; ++i) {
    EncodedWord w{std::uint32_t(rng())};
    Instruction in = decode_lenient(w);
    if (in.op != Op::Illegal) {
      ++legal;
      // Whatever decodes must re-encode to an equivalent decoding.
      Instruction again = decode(encode(in));
      CHECK(again == in);
    }
  }
  CHECK(legal > 0);
}
