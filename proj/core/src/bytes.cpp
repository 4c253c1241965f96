// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/bytes.hpp"

#include "crv/error.hpp"

namespace crv {

std::string to_hex(ByteSpan data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

static int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error("hex string has odd length");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_digit(hex[2 * i]);
    int lo = hex_digit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw Error("bad hex digit");
    out[i] = std::uint8_t(hi << 4 | lo);
  }
  return out;
}

Bytes to_bytes(std::string_view ascii) {
  return Bytes(ascii.begin(), ascii.end());
}

Words pack_words_be(ByteSpan data) {
  Words out((data.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i / 8] |= std::uint64_t(data[i]) << (8 * (7 - i % 8));
  }
  return out;
}

Words pack_words_le(ByteSpan data) {
  Words out((data.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i / 8] |= std::uint64_t(data[i]) << (8 * (i % 8));
  }
  return out;
}

Bytes unpack_bytes_be(WordSpan words, std::size_t nbytes) {
  if (nbytes > words.size() * 8) throw SizeError("unpack range exceeds words");
  Bytes out(nbytes);
  for (std::size_t i = 0; i < nbytes; ++i) {
    out[i] = std::uint8_t(words[i / 8] >> (8 * (7 - i % 8)));
  }
  return out;
}

Bytes unpack_bytes_le(WordSpan words, std::size_t nbytes) {
  if (nbytes > words.size() * 8) throw SizeError("unpack range exceeds words");
  Bytes out(nbytes);
  for (std::size_t i = 0; i < nbytes; ++i) {
    out[i] = std::uint8_t(words[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

}  // namespace crv
