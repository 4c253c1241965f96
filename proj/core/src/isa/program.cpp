// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/isa/program.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

namespace crv {

namespace {

constexpr char kMagic[4] = {'C', 'R', 'V', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = char(v >> (8 * i));
  out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = char(v >> (8 * i));
  out.write(b, 8);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) throw Error("truncated program file");
  return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) |
         (std::uint32_t(b[2]) << 16) | (std::uint32_t(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t lo = get_u32(in);
  std::uint64_t hi = get_u32(in);
  return lo | (hi << 32);
}

}  // namespace

void Program::validate(std::uint32_t im_capacity) const {
  if (code.size() > im_capacity) {
    throw Error("program has " + std::to_string(code.size()) +
                " instructions, instruction memory holds " +
                std::to_string(im_capacity));
  }
  if (dm_base + dm_image.size() > 1024) {
    throw BoundsError("DM image does not fit data memory");
  }
}

void save_program(const Program& p, std::ostream& out) {
  out.write(kMagic, 4);
  put_u32(out, std::uint32_t(p.code.size()));
  for (const Instruction& in : p.code) put_u32(out, encode(in).bits);
  put_u32(out, std::uint32_t(p.dm_image.size()));
  put_u32(out, p.dm_base);
  for (std::uint64_t w : p.dm_image) put_u64(out, w);
}

void save_program(const Program& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  save_program(p, out);
}

Program load_program(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw Error("not a CRV1 program file");
  }
  Program p;
  std::uint32_t n = get_u32(in);
  p.code.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    p.code.push_back(decode_lenient(EncodedWord{get_u32(in)}));
  }
  std::uint32_t dm_count = get_u32(in);
  p.dm_base = get_u32(in);
  p.dm_image.reserve(dm_count);
  for (std::uint32_t i = 0; i < dm_count; ++i) p.dm_image.push_back(get_u64(in));
  p.validate();
  return p;
}

Program load_program(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open program file: " + path);
  return load_program(in);
}

std::string disassemble_program(const Program& p) {
  std::ostringstream os;
  for (const Instruction& in : p.code) os << disassemble(in) << "\n";
  return os.str();
}

}  // namespace crv
