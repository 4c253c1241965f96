// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/memsys/memsys.hpp"

#include <fstream>
#include <sstream>

namespace crv {

std::uint64_t DataMemory::read(std::size_t addr) const {
  if (addr >= kDmWords) {
    throw BoundsError("DM read at word " + std::to_string(addr));
  }
  return words[addr];
}

void DataMemory::write(std::size_t addr, std::uint64_t value) {
  if (addr >= kDmWords) {
    throw BoundsError("DM write at word " + std::to_string(addr));
  }
  words[addr] = value;
}

void DataMemory::load_image(WordSpan image, std::size_t base) {
  if (base + image.size() > kDmWords) {
    throw BoundsError("DM image exceeds data memory");
  }
  for (std::size_t i = 0; i < image.size(); ++i) words[base + i] = image[i];
}

std::uint64_t InternalBuffer::read(std::size_t index) const {
  if (index >= kBufWords) {
    throw BoundsError("buffer read at word " + std::to_string(index));
  }
  return words[index];
}

void InternalBuffer::write(std::size_t index, std::uint64_t value) {
  if (index >= kBufWords) {
    throw BoundsError("buffer write at word " + std::to_string(index));
  }
  words[index] = value;
}

std::uint32_t buf_transfer(BufDirection dir, DataMemory& dm, InternalBuffer& buf,
                           std::size_t dm_base, std::size_t buf_base,
                           std::size_t count, const TimingConfig& cfg) {
  if (count < 1 || count > kBufWords) {
    throw SizeError("buffer transfer count must be in [1, 128], got " +
                    std::to_string(count));
  }
  if (dm_base + count > kDmWords) {
    throw BoundsError("buffer transfer DM range [" + std::to_string(dm_base) +
                      ", " + std::to_string(dm_base + count) + ") out of bounds");
  }
  if (buf_base + count > kBufWords) {
    throw BoundsError("buffer transfer buffer range out of bounds");
  }
  if (dir == BufDirection::DmToBuf) {
    for (std::size_t i = 0; i < count; ++i) {
      buf.words[buf_base + i] = dm.words[dm_base + i];
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      dm.words[dm_base + i] = buf.words[buf_base + i];
    }
  }
  std::uint32_t wpc = cfg.buf_words_per_cycle;
  return cfg.buf_setup + std::uint32_t((count + wpc - 1) / wpc);
}

std::uint32_t DmaChannel::cost(std::size_t count) const {
  std::uint32_t wpc = cfg_.dma_words_per_cycle;
  return cfg_.dma_setup + std::uint32_t((count + wpc - 1) / wpc);
}

void DmaChannel::start(WordSpan image, std::size_t dm_base) {
  if (busy()) throw BusyError("DMA channel is busy");
  if (dm_base + image.size() > kDmWords) {
    throw BoundsError("DMA transfer exceeds data memory");
  }
  image_.assign(image.begin(), image.end());
  dm_base_ = dm_base;
  remaining_ = cost(image.size());
}

bool DmaChannel::tick(DataMemory& dm) {
  if (remaining_ == 0) return false;
  if (--remaining_ == 0) {
    dm.load_image(image_, dm_base_);
    image_.clear();
  }
  return true;
}

std::vector<std::uint64_t> load_dm_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open DM image: " + path);
  std::vector<std::uint64_t> words;
  unsigned char b[8];
  while (in.read(reinterpret_cast<char*>(b), 8)) {
    std::uint64_t w = 0;
    for (int i = 7; i >= 0; --i) w = (w << 8) | b[i];
    words.push_back(w);
  }
  if (in.gcount() != 0) throw Error("DM image is not a whole number of words");
  return words;
}

void save_dm_image(WordSpan words, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  for (std::uint64_t w : words) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = char(w >> (8 * i));
    out.write(b, 8);
  }
}

std::vector<std::uint64_t> parse_dm_hex(std::istream& in) {
  std::vector<std::uint64_t> words;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok.size() != 16) {
        throw Error("hex dump line " + std::to_string(lineno) +
                    ": expected 16 hex digits per word");
      }
      words.push_back(std::stoull(tok, nullptr, 16));
    }
  }
  return words;
}

}  // namespace crv
