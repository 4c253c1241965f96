// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Keccak-f[1600] and the FIPS 202 sponge (SHA3-256, SHAKE-128/256).
#include <bit>

#include "crv/primitives/primitives.hpp"

namespace crv {

namespace {

constexpr std::uint64_t kRc[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

constexpr int kRho[24] = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                          27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};

constexpr int kPi[24] = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                         15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

void round(KeccakState& s, std::uint64_t rc) {
  std::uint64_t c[5];
  for (int x = 0; x < 5; ++x) {
    c[x] = s[x] ^ s[x + 5] ^ s[x + 10] ^ s[x + 15] ^ s[x + 20];
  }
  for (int x = 0; x < 5; ++x) {
    std::uint64_t t = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
    for (int y = 0; y < 5; ++y) s[x + 5 * y] ^= t;
  }
  std::uint64_t last = s[1];
  for (int i = 0; i < 24; ++i) {
    int j = kPi[i];
    std::uint64_t t = s[j];
    s[j] = std::rotl(last, kRho[i]);
    last = t;
  }
  for (int y = 0; y < 5; ++y) {
    std::uint64_t row[5];
    for (int x = 0; x < 5; ++x) row[x] = s[x + 5 * y];
    for (int x = 0; x < 5; ++x) {
      s[x + 5 * y] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
    }
  }
  s[0] ^= rc;
}

std::uint8_t domain_sep(SpongeMode m) {
  return m == SpongeMode::Sha3_256 ? 0x06 : 0x1F;
}

}  // namespace

void keccak_f1600(KeccakState& state) {
  for (int r = 0; r < 24; ++r) round(state, kRc[r]);
}

void keccak_rounds(KeccakState& state, unsigned first, unsigned count) {
  if (first + count > 24) throw SizeError("keccak round index out of range");
  for (unsigned r = first; r < first + count; ++r) round(state, kRc[r]);
}

std::size_t sponge_rate_bytes(SpongeMode m) {
  switch (m) {
    case SpongeMode::Shake128:
      return 168;
    case SpongeMode::Sha3_256:
    case SpongeMode::Shake256:
      return 136;
  }
  return 0;
}

Bytes sponge_pad(SpongeMode m, ByteSpan message) {
  std::size_t rate = sponge_rate_bytes(m);
  Bytes padded(message.begin(), message.end());
  padded.push_back(domain_sep(m));
  while (padded.size() % rate != 0) padded.push_back(0);
  padded.back() ^= 0x80;
  return padded;
}

Bytes sponge(SpongeMode m, ByteSpan message, std::size_t out_len) {
  if (out_len == 0) throw SizeError("sponge output length must be >= 1");
  if (m == SpongeMode::Sha3_256 && out_len != 32) {
    throw SizeError("SHA3-256 output length is fixed at 32 bytes");
  }
  std::size_t rate = sponge_rate_bytes(m);
  Bytes padded = sponge_pad(m, message);

  KeccakState s{};
  for (std::size_t off = 0; off < padded.size(); off += rate) {
    for (std::size_t i = 0; i < rate / 8; ++i) {
      s[i] ^= load_le64(padded.data() + off + 8 * i);
    }
    keccak_f1600(s);
  }

  Bytes out;
  out.reserve(out_len);
  while (out.size() < out_len) {
    for (std::size_t i = 0; i < rate / 8 && out.size() < out_len; ++i) {
      std::uint8_t lane[8];
      store_le64(lane, s[i]);
      for (int b = 0; b < 8 && out.size() < out_len; ++b) out.push_back(lane[b]);
    }
    if (out.size() < out_len) keccak_f1600(s);
  }
  return out;
}

}  // namespace crv
