// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Storage hierarchy: 1024x64-bit data memory, 128x64-bit internal buffer,
// and the 64-bit DMA channel that fills DM from the host image. All costs
// come from the TimingConfig; transfers commit atomically at completion.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "crv/bytes.hpp"
#include "crv/config.hpp"
#include "crv/error.hpp"

namespace crv {

inline constexpr std::size_t kDmWords = 1024;
inline constexpr std::size_t kBufWords = 128;

struct DataMemory {
  std::array<std::uint64_t, kDmWords> words{};

  std::uint64_t read(std::size_t addr) const;
  void write(std::size_t addr, std::uint64_t value);
  void load_image(WordSpan image, std::size_t base);
};

struct InternalBuffer {
  std::array<std::uint64_t, kBufWords> words{};

  std::uint64_t read(std::size_t index) const;
  void write(std::size_t index, std::uint64_t value);
};

// Host-side staging memory, the DMA source (stands in for external DRAM).
struct HostMemory {
  std::vector<std::uint64_t> words;
};

enum class BufDirection { DmToBuf, BufToDm };

// Copies `count` words and returns the cycle cost
// (setup + ceil(count / words_per_cycle)). The copy itself is immediate;
// the core models the cost by occupying its MEM stage.
std::uint32_t buf_transfer(BufDirection dir, DataMemory& dm, InternalBuffer& buf,
                           std::size_t dm_base, std::size_t buf_base,
                           std::size_t count, const TimingConfig& cfg);

class DmaChannel {
 public:
  explicit DmaChannel(const TimingConfig& cfg) : cfg_(cfg) {}

  // Begins a host -> DM transfer. Throws BusyError while busy and
  // BoundsError when the image does not fit. Ticking is the only way time
  // passes; the data lands in DM on the completing tick.
  void start(WordSpan image, std::size_t dm_base);

  // Advances one cycle; returns true while busy (before this tick's work).
  bool tick(DataMemory& dm);

  bool busy() const { return remaining_ > 0; }
  std::uint32_t cost(std::size_t count) const;

 private:
  const TimingConfig& cfg_;
  std::vector<std::uint64_t> image_;
  std::size_t dm_base_ = 0;
  std::uint32_t remaining_ = 0;
};

// DM image files: raw little-endian 64-bit words, and a textual hex dump
// (one 16-digit word per line, '#' comments) for tests.
std::vector<std::uint64_t> load_dm_image(const std::string& path);
void save_dm_image(WordSpan words, const std::string& path);
std::vector<std::uint64_t> parse_dm_hex(std::istream& in);

}  // namespace crv
