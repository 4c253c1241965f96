// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "crv/isa/isa.hpp"

namespace crv {

// A runnable image: instructions from slot 0, plus an optional initial DM
// image placed at dm_base before execution starts.
struct Program {
  std::vector<Instruction> code;
  std::vector<std::uint64_t> dm_image;
  std::uint32_t dm_base = 0;

  // Throws Error when the program exceeds the instruction memory or the DM
  // image does not fit.
  void validate(std::uint32_t im_capacity = 4096) const;
};

// Binary format: magic "CRV1", u32 instruction count, count little-endian
// 32-bit words, then the optional DM image section: u32 word count,
// u32 base, count little-endian 64-bit words.
void save_program(const Program& p, std::ostream& out);
void save_program(const Program& p, const std::string& path);
Program load_program(std::istream& in);
Program load_program(const std::string& path);

std::string disassemble_program(const Program& p);

}  // namespace crv
