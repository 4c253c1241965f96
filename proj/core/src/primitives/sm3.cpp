// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// SM3 per GB/T 32905-2016. Boolean functions and T constant switch at
// round 16; no variant modes.
#include <bit>

#include "crv/primitives/primitives.hpp"

namespace crv {
namespace sm3_detail {

extern const std::uint32_t kIv[8];
const std::uint32_t kIv[8] = {0x7380166f, 0x4914b2b9, 0x172442d7, 0xda8a0600,
                              0xa96f30bc, 0x163138aa, 0xe38dee4d, 0xb0fb0e4e};

inline std::uint32_t p0(std::uint32_t x) {
  return x ^ std::rotl(x, 9) ^ std::rotl(x, 17);
}
inline std::uint32_t p1(std::uint32_t x) {
  return x ^ std::rotl(x, 15) ^ std::rotl(x, 23);
}

void compress(std::uint32_t v[8], const std::uint8_t* block) {
  std::uint32_t w[68];
  std::uint32_t wp[64];
  for (int i = 0; i < 16; ++i) w[i] = load_be32(block + 4 * i);
  for (int i = 16; i < 68; ++i) {
    w[i] = p1(w[i - 16] ^ w[i - 9] ^ std::rotl(w[i - 3], 15)) ^
           std::rotl(w[i - 13], 7) ^ w[i - 6];
  }
  for (int i = 0; i < 64; ++i) wp[i] = w[i] ^ w[i + 4];

  std::uint32_t a = v[0], b = v[1], c = v[2], d = v[3];
  std::uint32_t e = v[4], f = v[5], g = v[6], h = v[7];
  for (int j = 0; j < 64; ++j) {
    std::uint32_t t = (j < 16) ? 0x79cc4519u : 0x7a879d8au;
    std::uint32_t ss1 =
        std::rotl(std::uint32_t(std::rotl(a, 12) + e + std::rotl(t, j % 32)), 7);
    std::uint32_t ss2 = ss1 ^ std::rotl(a, 12);
    std::uint32_t ff =
        (j < 16) ? (a ^ b ^ c) : ((a & b) | (a & c) | (b & c));
    std::uint32_t gg = (j < 16) ? (e ^ f ^ g) : ((e & f) | (~e & g));
    std::uint32_t tt1 = ff + d + ss2 + wp[j];
    std::uint32_t tt2 = gg + h + ss1 + w[j];
    d = c;
    c = std::rotl(b, 9);
    b = a;
    a = tt1;
    h = g;
    g = std::rotl(f, 19);
    f = e;
    e = p0(tt2);
  }
  v[0] ^= a;
  v[1] ^= b;
  v[2] ^= c;
  v[3] ^= d;
  v[4] ^= e;
  v[5] ^= f;
  v[6] ^= g;
  v[7] ^= h;
}

}  // namespace sm3_detail
}  // namespace crv
