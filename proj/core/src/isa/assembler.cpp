// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/isa/assembler.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace crv {

namespace {

struct Pending {
  Instruction instr;
  std::string label;  // unresolved branch/jump target, empty if none
  int line = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  std::size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_operands(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  std::string last = trim(cur);
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

class Parser {
 public:
  explicit Parser(int line) : line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const { throw AsmError(line_, msg); }

  std::uint8_t reg(const std::string& tok) const {
    if (tok.size() < 2 || (tok[0] != 'r' && tok[0] != 'R')) {
      fail("expected register, got '" + tok + "'");
    }
    int n = number(tok.substr(1), 0, 31, "register index");
    return std::uint8_t(n);
  }

  long number(const std::string& tok, long lo, long hi, const char* what) const {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(tok, &pos, 0);
    } catch (const std::exception&) {
      fail(std::string("bad ") + what + ": '" + tok + "'");
    }
    if (pos != tok.size()) fail(std::string("bad ") + what + ": '" + tok + "'");
    if (v < lo || v > hi) {
      fail(std::string(what) + " out of range: " + std::to_string(v));
    }
    return v;
  }

  std::uint8_t buf_index(const std::string& tok) const {
    if (tok.size() < 2 || (tok[0] != 'b' && tok[0] != 'B')) {
      fail("expected buffer index like b0, got '" + tok + "'");
    }
    return std::uint8_t(number(tok.substr(1), 0, 127, "buffer index"));
  }

  std::uint16_t dm_addr(const std::string& tok) const {
    if (tok.rfind("dm:", 0) != 0) {
      fail("expected DM address like dm:0, got '" + tok + "'");
    }
    return std::uint16_t(number(tok.substr(3), 0, 1023, "DM address"));
  }

  // imm(rs1)
  std::pair<std::int32_t, std::uint8_t> mem_operand(const std::string& tok) const {
    std::size_t open = tok.find('(');
    std::size_t close = tok.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      fail("expected offset(reg), got '" + tok + "'");
    }
    std::string off = trim(tok.substr(0, open));
    std::int32_t imm =
        off.empty() ? 0 : std::int32_t(number(off, -2048, 2047, "offset"));
    std::uint8_t rs1 = reg(trim(tok.substr(open + 1, close - open - 1)));
    return {imm, rs1};
  }

 private:
  int line_;
};

bool valid_label(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '.';
  });
}

}  // namespace

Program assemble(std::string_view source) {
  std::map<std::string, std::int32_t, std::less<>> labels;
  std::vector<Pending> pending;

  std::istringstream stream{std::string(source)};
  std::string raw;
  int lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t semi = line.find(';');
    if (semi != std::string::npos) line.erase(semi);
    line = trim(line);

    // Leading labels, possibly followed by an instruction.
    while (true) {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) break;
      std::string name = trim(line.substr(0, colon));
      if (!valid_label(name)) break;  // e.g. "dm:" inside an operand
      if (labels.count(name)) throw AsmError(lineno, "duplicate label '" + name + "'");
      labels[name] = std::int32_t(pending.size());
      line = trim(line.substr(colon + 1));
    }
    if (line.empty()) continue;

    Parser p(lineno);
    std::size_t sp = line.find_first_of(" \t");
    std::string mnem = lower(line.substr(0, sp));
    std::vector<std::string> ops =
        sp == std::string::npos ? std::vector<std::string>{}
                                : split_operands(trim(line.substr(sp)));
    auto want = [&](std::size_t n) {
      if (ops.size() != n) {
        p.fail(mnem + " expects " + std::to_string(n) + " operands, got " +
               std::to_string(ops.size()));
      }
    };

    Instruction in;
    std::string label_ref;

    auto branch_target = [&](const std::string& tok) -> std::int32_t {
      if (!tok.empty() &&
          (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-')) {
        return std::int32_t(p.number(tok, -(1 << 17), (1 << 17) - 1, "offset"));
      }
      if (!valid_label(tok)) p.fail("bad label '" + tok + "'");
      label_ref = tok;
      return 0;
    };

    static const std::map<std::string, Op, std::less<>> kAluImm = {
        {"addi", Op::Addi}, {"andi", Op::Andi},   {"ori", Op::Ori},
        {"xori", Op::Xori}, {"slti", Op::Slti},   {"sltiu", Op::Sltiu},
        {"slli", Op::Slli}, {"srli", Op::Srli},   {"srai", Op::Srai}};
    static const std::map<std::string, Op, std::less<>> kAluReg = {
        {"add", Op::Add}, {"sub", Op::Sub}, {"and", Op::And}, {"or", Op::Or},
        {"xor", Op::Xor}, {"sll", Op::Sll}, {"srl", Op::Srl}, {"sra", Op::Sra},
        {"slt", Op::Slt}, {"sltu", Op::Sltu}};
    static const std::map<std::string, Op, std::less<>> kBranch = {
        {"beq", Op::Beq}, {"bne", Op::Bne}, {"blt", Op::Blt}, {"bge", Op::Bge}};

    if (auto it = kAluImm.find(mnem); it != kAluImm.end()) {
      want(3);
      in.op = it->second;
      in.rd = p.reg(ops[0]);
      in.rs1 = p.reg(ops[1]);
      bool shift = mnem[0] == 's' && mnem != "slti" && mnem != "sltiu";
      in.imm = std::int32_t(p.number(ops[2], shift ? 0 : -2048,
                                     shift ? 63 : 2047, "immediate"));
    } else if (auto it2 = kAluReg.find(mnem); it2 != kAluReg.end()) {
      want(3);
      in.op = it2->second;
      in.rd = p.reg(ops[0]);
      in.rs1 = p.reg(ops[1]);
      in.rs2 = p.reg(ops[2]);
    } else if (auto it3 = kBranch.find(mnem); it3 != kBranch.end()) {
      want(3);
      in.op = it3->second;
      in.rs1 = p.reg(ops[0]);
      in.rs2 = p.reg(ops[1]);
      in.imm = branch_target(ops[2]);
    } else if (mnem == "lui") {
      want(2);
      in.op = Op::Lui;
      in.rd = p.reg(ops[0]);
      in.imm = std::int32_t(p.number(ops[1], 0, 0xFFFFF, "upper immediate"));
    } else if (mnem == "ld" || mnem == "sd") {
      want(2);
      auto [imm, rs1] = p.mem_operand(ops[1]);
      in.imm = imm;
      in.rs1 = rs1;
      if (mnem == "ld") {
        in.op = Op::Ld;
        in.rd = p.reg(ops[0]);
      } else {
        in.op = Op::Sd;
        in.rs2 = p.reg(ops[0]);
      }
    } else if (mnem == "jal") {
      want(2);
      in.op = Op::Jal;
      in.rd = p.reg(ops[0]);
      in.imm = branch_target(ops[1]);
    } else if (mnem == "jalr") {
      want(3);
      in.op = Op::Jalr;
      in.rd = p.reg(ops[0]);
      in.rs1 = p.reg(ops[1]);
      in.imm = std::int32_t(p.number(ops[2], -2048, 2047, "immediate"));
    } else if (mnem == "halt") {
      want(0);
      in.op = Op::Halt;
    } else if (mnem == "nop") {
      want(0);
      in.op = Op::Addi;
    } else if (mnem == "mv") {
      want(2);
      in.op = Op::Addi;
      in.rd = p.reg(ops[0]);
      in.rs1 = p.reg(ops[1]);
    } else if (mnem == "j") {
      want(1);
      in.op = Op::Jal;
      in.imm = branch_target(ops[0]);
    } else if (mnem == "li") {
      want(2);
      std::uint8_t rd = p.reg(ops[0]);
      long v = p.number(ops[1], -2147483648L, 2147483647L, "immediate");
      if (v >= -2048 && v <= 2047) {
        in.op = Op::Addi;
        in.rd = rd;
        in.imm = std::int32_t(v);
      } else {
        std::int32_t hi = std::int32_t((std::uint32_t(v) + 0x800) >> 12);
        std::int32_t lo = std::int32_t(v) - (hi << 12);
        Instruction first;
        first.op = Op::Lui;
        first.rd = rd;
        first.imm = hi & 0xFFFFF;
        pending.push_back({first, "", lineno});
        in.op = Op::Addi;
        in.rd = rd;
        in.rs1 = rd;
        in.imm = lo;
      }
    } else if (mnem == "buf_load") {
      want(3);
      in.op = Op::BufLoad;
      in.buf_base = p.buf_index(ops[0]);
      in.dm_addr = p.dm_addr(ops[1]);
      in.count = std::uint8_t(p.number(ops[2], 0, 255, "word count"));
    } else if (mnem == "buf_store") {
      want(3);
      in.op = Op::BufStore;
      in.dm_addr = p.dm_addr(ops[0]);
      in.buf_base = p.buf_index(ops[1]);
      in.count = std::uint8_t(p.number(ops[2], 0, 255, "word count"));
    } else if (mnem == "crypto_dispatch") {
      if (ops.size() != 4 && ops.size() != 5) {
        p.fail("crypto_dispatch expects mode, state, msg, count[, flags]");
      }
      in.op = Op::CryptoDispatch;
      try {
        in.mode = mode_from_name(lower(ops[0]));
      } catch (const ModeError& e) {
        p.fail(e.what());
      }
      in.state_base = p.buf_index(ops[1]);
      in.msg_base = p.buf_index(ops[2]);
      in.count = std::uint8_t(p.number(ops[3], 0, 255, "count"));
      if (ops.size() == 5) {
        std::istringstream fs(lower(ops[4]));
        std::string flag;
        while (std::getline(fs, flag, '|')) {
          flag = trim(flag);
          if (flag == "init") in.flags |= kDispatchInit;
          else if (flag == "dual") in.flags |= kDispatchDual;
          else if (flag == "no_absorb") in.flags |= kDispatchNoAbsorb;
          else if (flag == "rc_buf") in.flags |= kDispatchRcBuf;
          else p.fail("unknown dispatch flag '" + flag + "'");
        }
      }
    } else if (mnem == "crypto_wait") {
      if (ops.size() > 1) p.fail("crypto_wait expects at most one operand");
      in.op = Op::CryptoWait;
      if (!ops.empty()) {
        std::string e = lower(ops[0]);
        if (e == "md") in.engine = EngineSel::Md;
        else if (e == "aes") in.engine = EngineSel::AesHaraka;
        else if (e == "keccak") in.engine = EngineSel::Keccak;
        else if (e == "all") in.engine = EngineSel::All;
        else p.fail("unknown engine '" + e + "'");
      }
    } else if (mnem == "crypto_read") {
      want(2);
      in.op = Op::CryptoRead;
      in.rd = p.reg(ops[0]);
      in.buf_base = p.buf_index(ops[1]);
    } else if (mnem == "dma_start") {
      want(3);
      in.op = Op::DmaStart;
      in.rs1 = p.reg(ops[0]);
      in.rs2 = p.reg(ops[1]);
      in.imm = std::int32_t(p.number(ops[2], 0, 4095, "word count"));
    } else if (mnem == "dma_wait") {
      want(0);
      in.op = Op::DmaWait;
    } else {
      p.fail("unknown mnemonic '" + mnem + "'");
    }

    pending.push_back({in, label_ref, lineno});
  }

  Program prog;
  prog.code.reserve(pending.size());
  for (std::size_t i = 0; i < pending.size(); ++i) {
    Instruction in = pending[i].instr;
    if (!pending[i].label.empty()) {
      auto it = labels.find(pending[i].label);
      if (it == labels.end()) {
        throw AsmError(pending[i].line,
                       "unresolved label '" + pending[i].label + "'");
      }
      in.imm = it->second - std::int32_t(i);
    }
    try {
      encode(in);  // surfaces operand-range errors with a line number
    } catch (const EncodingError& e) {
      throw AsmError(pending[i].line, e.what());
    }
    prog.code.push_back(in);
  }
  prog.validate();
  return prog;
}

}  // namespace crv
