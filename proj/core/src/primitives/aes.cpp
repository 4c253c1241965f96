// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// AES-128 per FIPS 197. The S-boxes are generated from the GF(2^8)
// definition at compile time.
#include <array>

#include "crv/primitives/primitives.hpp"

namespace crv {
namespace aes_detail {

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t r = 0;
  for (int i = 0; i < 8; ++i) {
    if (b & 1) r ^= a;
    std::uint8_t hi = a & 0x80;
    a = std::uint8_t(a << 1);
    if (hi) a ^= 0x1B;
    b >>= 1;
  }
  return r;
}

// Multiplicative inverse as x^254 (x^255 = 1 for nonzero x).
constexpr std::uint8_t gf_inv(std::uint8_t x) {
  std::uint8_t result = 1;
  std::uint8_t power = gf_mul(x, x);  // x^2
  for (int bit = 1; bit < 8; ++bit) { // exponent 254 = 0b11111110
    result = gf_mul(result, power);
    power = gf_mul(power, power);
  }
  return result;
}

constexpr std::array<std::uint8_t, 256> make_sbox() {
  std::array<std::uint8_t, 256> sbox{};
  for (int x = 0; x < 256; ++x) {
    std::uint8_t b = x == 0 ? std::uint8_t(0) : gf_inv(std::uint8_t(x));
    std::uint8_t s = 0;
    for (int i = 0; i < 8; ++i) {
      int bit = ((b >> i) ^ (b >> ((i + 4) % 8)) ^ (b >> ((i + 5) % 8)) ^
                 (b >> ((i + 6) % 8)) ^ (b >> ((i + 7) % 8)) ^ (0x63 >> i)) &
                1;
      s = std::uint8_t(s | (bit << i));
    }
    sbox[x] = s;
  }
  return sbox;
}

constexpr std::array<std::uint8_t, 256> kSbox = make_sbox();

constexpr std::array<std::uint8_t, 256> make_inv_sbox() {
  std::array<std::uint8_t, 256> inv{};
  for (int x = 0; x < 256; ++x) inv[kSbox[x]] = std::uint8_t(x);
  return inv;
}

constexpr std::array<std::uint8_t, 256> kInvSbox = make_inv_sbox();

static_assert(kSbox[0x00] == 0x63 && kSbox[0x53] == 0xed, "S-box generation");

// State bytes are column-major (byte i sits at row i%4, column i/4).
Block16 shift_rows(const Block16& in) {
  Block16 out{};
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      out[4 * c + r] = in[4 * ((c + r) % 4) + r];
    }
  }
  return out;
}

Block16 inv_shift_rows(const Block16& in) {
  Block16 out{};
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      out[4 * ((c + r) % 4) + r] = in[4 * c + r];
    }
  }
  return out;
}

Block16 mix_columns(const Block16& in) {
  Block16 out{};
  for (int c = 0; c < 4; ++c) {
    const std::uint8_t* col = in.data() + 4 * c;
    for (int r = 0; r < 4; ++r) {
      out[4 * c + r] = gf_mul(col[r], 2) ^ gf_mul(col[(r + 1) % 4], 3) ^
                       col[(r + 2) % 4] ^ col[(r + 3) % 4];
    }
  }
  return out;
}

Block16 inv_mix_columns(const Block16& in) {
  Block16 out{};
  for (int c = 0; c < 4; ++c) {
    const std::uint8_t* col = in.data() + 4 * c;
    for (int r = 0; r < 4; ++r) {
      out[4 * c + r] = gf_mul(col[r], 0x0e) ^ gf_mul(col[(r + 1) % 4], 0x0b) ^
                       gf_mul(col[(r + 2) % 4], 0x0d) ^
                       gf_mul(col[(r + 3) % 4], 0x09);
    }
  }
  return out;
}

Block16 sub_bytes(const Block16& in, const std::array<std::uint8_t, 256>& box) {
  Block16 out{};
  for (int i = 0; i < 16; ++i) out[i] = box[in[i]];
  return out;
}

Block16 xor_block(const Block16& a, const Block16& b) {
  Block16 out{};
  for (int i = 0; i < 16; ++i) out[i] = a[i] ^ b[i];
  return out;
}

}  // namespace aes_detail

using namespace aes_detail;

AesRoundKeys aes128_key_schedule(const Block16& key) {
  std::array<std::array<std::uint8_t, 4>, 44> w{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) w[i][j] = key[4 * i + j];
  }
  std::uint8_t rcon = 1;
  for (int i = 4; i < 44; ++i) {
    auto t = w[i - 1];
    if (i % 4 == 0) {
      t = {t[1], t[2], t[3], t[0]};
      for (auto& b : t) b = kSbox[b];
      t[0] ^= rcon;
      rcon = gf_mul(rcon, 2);
    }
    for (int j = 0; j < 4; ++j) w[i][j] = w[i - 4][j] ^ t[j];
  }
  AesRoundKeys rks{};
  for (int r = 0; r < 11; ++r) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) rks[r][4 * i + j] = w[4 * r + i][j];
    }
  }
  return rks;
}

Block16 aes_enc_round(const Block16& state, const Block16& round_key) {
  return xor_block(mix_columns(shift_rows(sub_bytes(state, kSbox))), round_key);
}

Block16 aes128(AesDir dir, const Block16& key, const Block16& block) {
  AesRoundKeys rks = aes128_key_schedule(key);
  if (dir == AesDir::Encrypt) {
    Block16 s = xor_block(block, rks[0]);
    for (int r = 1; r < 10; ++r) s = aes_enc_round(s, rks[r]);
    s = xor_block(shift_rows(sub_bytes(s, kSbox)), rks[10]);
    return s;
  }
  Block16 s = xor_block(block, rks[10]);
  s = sub_bytes(inv_shift_rows(s), kInvSbox);
  for (int r = 9; r >= 1; --r) {
    s = xor_block(s, rks[r]);
    s = sub_bytes(inv_shift_rows(inv_mix_columns(s)), kInvSbox);
  }
  return xor_block(s, rks[0]);
}

}  // namespace crv
