// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crv {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;
using Words = std::vector<std::uint64_t>;
using WordSpan = std::span<const std::uint64_t>;

std::string to_hex(ByteSpan data);
Bytes from_hex(std::string_view hex);  // throws Error on odd length / bad digit
Bytes to_bytes(std::string_view ascii);

inline std::uint32_t load_be32(const std::uint8_t* p) {
  return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
         (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}
inline std::uint64_t load_be64(const std::uint8_t* p) {
  return (std::uint64_t(load_be32(p)) << 32) | load_be32(p + 4);
}
inline std::uint64_t load_le64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}
inline void store_be32(std::uint8_t* p, std::uint32_t v) {
  p[0] = std::uint8_t(v >> 24);
  p[1] = std::uint8_t(v >> 16);
  p[2] = std::uint8_t(v >> 8);
  p[3] = std::uint8_t(v);
}
inline void store_be64(std::uint8_t* p, std::uint64_t v) {
  store_be32(p, std::uint32_t(v >> 32));
  store_be32(p + 4, std::uint32_t(v));
}
inline void store_le64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = std::uint8_t(v >> (8 * i));
}

// Byte-sequence <-> 64-bit word packing. The datapath carries 64-bit words;
// SHA-2/SM3 data is packed big-endian per word (their standards load words
// big-endian), Keccak/AES/Haraka data little-endian (FIPS 202 lane order).
// Short tails are zero-padded.
Words pack_words_be(ByteSpan data);
Words pack_words_le(ByteSpan data);
Bytes unpack_bytes_be(WordSpan words, std::size_t nbytes);
Bytes unpack_bytes_le(WordSpan words, std::size_t nbytes);

}  // namespace crv
