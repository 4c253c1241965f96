// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "crv/isa/program.hpp"

namespace crv {

// Line-oriented assembler. One instruction or label per line, ';' comments.
// Labels end with ':'; branch/jump operands may be labels or numeric
// offsets in instruction units. Pseudo-instructions: nop, mv, li, j.
// Throws AsmError with the offending 1-based line number.
Program assemble(std::string_view source);

}  // namespace crv
