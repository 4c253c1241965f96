// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Haraka v2 (256/512) built on two AES rounds per lane per round plus the
// cross-lane byte mixes, with the feed-forward and truncation of the v2
// definition. The standard round constants are the 40 published ones.
#include <cstring>

#include "crv/primitives/primitives.hpp"

namespace crv {

namespace {

// rc[0..39] as in the Haraka-v2 reference implementation.
constexpr const char* kStandardRcHex[40] = {
    "9d7b8175f0fec5b20ac020e64c708406", "17f7082fa46b0f646ba0f388e1b4668b",
    "1491029f609d02cf9884f2532dde0234", "794f5bfdafbcf3bb084f7b2ee6ead60e",
    "447039be1ccdee798b447248cbb0cfcb", "7b058a2bed35538db732906eeecdea7e",
    "1bef4fda612741e2d07c2e5e438fc267", "3b0bc71fe2fd5f6707cccaafb0d92429",
    "ee65d4b9ca8fdbece97f86e6f1634dab", "337e03ad4f402a5b64cdb7d484bf301c",
    "0098f68d2e8b0269bf231794b90bccb2", "8a2d9d5cc89eaa4a72556fdea67804fa",
    "d49f12292e4ffa0e122a776b2b9fb4df", "ee126abbae11d63236a249f44403a11e",
    "a6eca89cc900965f8400054b884904af", "ec93e527e3c7a2784f9c199dd85e0221",
    "7301d482cd2e28b9b7c959a7f8aa3abf", "6b7d3010d9eff23717b086610d706062",
    "c69afcf65391c28143043021c245ca5a", "3a94d136e892af2cbb686b223c972392",
    "b47110e558b9ba6ceb8658223892bfd3", "8d12e124ddfd3d9377c6f0aee53c86db",
    "b11222cbe38de4839ca0ebff686260bb", "7df72bc74e1ab92d9cd1e4e2dcd34b73",
    "4e92b32cc415144b431b3061c347bb43", "9968eb16dd31b203f6ef07e7a875a7db",
    "2c47ca7e02235e8e7759753c4b61f36d", "f91786b8b9e51b6d777dded6175aa7cd",
    "5dee46a99d066c9daae9a86bf0436bec", "c127f33b591153a22b3357f950691ecb",
    "d9d00e605303ede49c61da00750cee2c", "50a3a463bcbabb80ab0ce996a1a5b1f0",
    "39ca8d9330de0dab8829965e02b13dae", "42b4752ea8f314880ba454d5388fbb17",
    "f6160a3679b7b6aed77f425f5b8abb34", "deafbaff1859ce433854e5cb4152f626",
    "78c99e83f79ccaa26a02f3b9549ae94c", "35129022286ec040bef7df1b1aa551ae",
    "cf59a6480fbc73c12bd27eba3c61c1a0", "a19dc5e9fdbdd64a8882280203cc6a75"};

Block16 to_block(ByteSpan b, std::size_t off) {
  Block16 out{};
  std::memcpy(out.data(), b.data() + off, 16);
  return out;
}

// SSE-order dword unpacks used by the Haraka mixing layers.
Block16 unpacklo32(const Block16& a, const Block16& b) {
  Block16 out{};
  std::memcpy(out.data() + 0, a.data() + 0, 4);
  std::memcpy(out.data() + 4, b.data() + 0, 4);
  std::memcpy(out.data() + 8, a.data() + 4, 4);
  std::memcpy(out.data() + 12, b.data() + 4, 4);
  return out;
}

Block16 unpackhi32(const Block16& a, const Block16& b) {
  Block16 out{};
  std::memcpy(out.data() + 0, a.data() + 8, 4);
  std::memcpy(out.data() + 4, b.data() + 8, 4);
  std::memcpy(out.data() + 8, a.data() + 12, 4);
  std::memcpy(out.data() + 12, b.data() + 12, 4);
  return out;
}

void require_rc(const HarakaRcSet& rc, std::size_t need) {
  if (rc.constants.size() < need) {
    throw SizeError("haraka rc set provides " +
                    std::to_string(rc.constants.size()) + " constants, needs " +
                    std::to_string(need));
  }
}

}  // namespace

const HarakaRcSet& haraka_standard_rc() {
  static const HarakaRcSet set = [] {
    HarakaRcSet s;
    s.constants.reserve(40);
    for (const char* hex : kStandardRcHex) {
      Bytes b = from_hex(hex);
      Block16 c{};
      std::memcpy(c.data(), b.data(), 16);
      s.constants.push_back(c);
    }
    return s;
  }();
  return set;
}

HarakaRcSet haraka_rc_derive(ByteSpan sk, ByteSpan pk, std::size_t count) {
  if (sk.empty() || pk.empty()) throw SizeError("haraka rc seed must be non-empty");
  Bytes seed(sk.begin(), sk.end());
  seed.insert(seed.end(), pk.begin(), pk.end());
  Bytes stream = sponge(SpongeMode::Shake256, seed, 16 * count);
  HarakaRcSet out;
  out.constants.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::memcpy(out.constants[i].data(), stream.data() + 16 * i, 16);
  }
  return out;
}

std::array<std::uint8_t, 64> haraka512_perm(const std::array<std::uint8_t, 64>& input,
                                            const HarakaRcSet& rc) {
  require_rc(rc, 40);
  Block16 s0 = to_block(input, 0), s1 = to_block(input, 16);
  Block16 s2 = to_block(input, 32), s3 = to_block(input, 48);
  for (int rnd = 0; rnd < 5; ++rnd) {
    for (int half = 0; half < 2; ++half) {
      int base = 8 * rnd + 4 * half;
      s0 = aes_enc_round(s0, rc.constants[base + 0]);
      s1 = aes_enc_round(s1, rc.constants[base + 1]);
      s2 = aes_enc_round(s2, rc.constants[base + 2]);
      s3 = aes_enc_round(s3, rc.constants[base + 3]);
    }
    Block16 t = unpacklo32(s0, s1);
    s0 = unpackhi32(s0, s1);
    s1 = unpacklo32(s2, s3);
    s2 = unpackhi32(s2, s3);
    s3 = unpacklo32(s0, s2);
    s0 = unpackhi32(s0, s2);
    s2 = unpackhi32(s1, t);
    s1 = unpacklo32(s1, t);
  }
  std::array<std::uint8_t, 64> out{};
  std::memcpy(out.data() + 0, s0.data(), 16);
  std::memcpy(out.data() + 16, s1.data(), 16);
  std::memcpy(out.data() + 32, s2.data(), 16);
  std::memcpy(out.data() + 48, s3.data(), 16);
  return out;
}

Bytes haraka(HarakaMode m, ByteSpan input, const HarakaRcSet& rc) {
  if (m == HarakaMode::H512) {
    if (input.size() != 64) throw SizeError("haraka-512 input must be 64 bytes");
    std::array<std::uint8_t, 64> in{};
    std::memcpy(in.data(), input.data(), 64);
    std::array<std::uint8_t, 64> p = haraka512_perm(in, rc);
    for (int i = 0; i < 64; ++i) p[i] ^= in[i];
    Bytes out(32);
    std::memcpy(out.data() + 0, p.data() + 8, 8);
    std::memcpy(out.data() + 8, p.data() + 24, 8);
    std::memcpy(out.data() + 16, p.data() + 32, 8);
    std::memcpy(out.data() + 24, p.data() + 48, 8);
    return out;
  }

  if (input.size() != 32) throw SizeError("haraka-256 input must be 32 bytes");
  require_rc(rc, 20);
  Block16 s0 = to_block(input, 0), s1 = to_block(input, 16);
  for (int rnd = 0; rnd < 5; ++rnd) {
    for (int half = 0; half < 2; ++half) {
      int base = 4 * rnd + 2 * half;
      s0 = aes_enc_round(s0, rc.constants[base + 0]);
      s1 = aes_enc_round(s1, rc.constants[base + 1]);
    }
    Block16 t = unpacklo32(s0, s1);
    s1 = unpackhi32(s0, s1);
    s0 = t;
  }
  Bytes out(32);
  for (int i = 0; i < 16; ++i) {
    out[i] = s0[i] ^ input[i];
    out[16 + i] = s1[i] ^ input[16 + i];
  }
  return out;
}

}  // namespace crv
