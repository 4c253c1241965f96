// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/config.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "crv/error.hpp"

namespace crv {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

TimingConfig parse_config(std::istream& in) {
  TimingConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(lineno) + ": missing '='");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    double num = 0;
    try {
      num = std::stod(value);
    } catch (const std::exception&) {
      throw Error("config line " + std::to_string(lineno) + ": bad value '" +
                  value + "'");
    }
    auto u = [&] { return static_cast<std::uint32_t>(num); };
    if (key == "fill.md") cfg.fill_md = u();
    else if (key == "fill.aes") cfg.fill_aes = u();
    else if (key == "fill.keccak") cfg.fill_keccak = u();
    else if (key == "dispatch_overhead.md") cfg.dispatch_overhead_md = u();
    else if (key == "dispatch_overhead.aes") cfg.dispatch_overhead_aes = u();
    else if (key == "dispatch_overhead.keccak") cfg.dispatch_overhead_keccak = u();
    else if (key.rfind("dispatch_overhead.mode.", 0) == 0) {
      CryptoMode m = mode_from_name(key.substr(23));
      cfg.dispatch_overhead_mode[static_cast<int>(m)] = u();
    } else if (key == "rc_precompute_cycles") cfg.rc_precompute_cycles = u();
    else if (key == "buf.setup") cfg.buf_setup = u();
    else if (key == "buf.words_per_cycle") cfg.buf_words_per_cycle = u();
    else if (key == "dma.setup") cfg.dma_setup = u();
    else if (key == "dma.words_per_cycle") cfg.dma_words_per_cycle = u();
    else if (key == "hazard.ex_use") cfg.hazard_ex_use = u();
    else if (key == "hazard.branch_flush") cfg.hazard_branch_flush = u();
    else if (key == "im.capacity") cfg.im_capacity = u();
    else if (key == "frequency_mhz") cfg.frequency_mhz = num;
    else if (key == "power.md_w") cfg.power_md_w = num;
    else if (key == "power.keccak_w") cfg.power_keccak_w = num;
    else if (key == "power.aes_w") cfg.power_aes_w = num;
    else if (key == "power.core_w") cfg.power_core_w = num;
    else if (key == "power.soc_dynamic_w") cfg.power_soc_dynamic_w = num;
    else throw Error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");

    if (key.rfind("power.", 0) == 0 && num <= 0) {
      throw Error("config line " + std::to_string(lineno) + ": power must be positive");
    }
    if (key == "buf.words_per_cycle" && cfg.buf_words_per_cycle == 0) {
      throw Error("buf.words_per_cycle must be >= 1");
    }
    if (key == "hazard.ex_use" && cfg.hazard_ex_use == 0) {
      // Branch operands are read at EXE entry; the producer-in-EXE
      // interlock is what makes that read architecturally ordered.
      throw Error("hazard.ex_use must be >= 1");
    }
    if (key == "dma.words_per_cycle" && cfg.dma_words_per_cycle == 0) {
      throw Error("dma.words_per_cycle must be >= 1");
    }
  }
  return cfg;
}

TimingConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  return parse_config(in);
}

}  // namespace crv
