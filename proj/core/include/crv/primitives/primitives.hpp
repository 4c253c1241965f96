// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Golden-reference implementations of the nine supported primitives:
// SHA-256/SHA-512 (FIPS 180-4), SM3 (GB/T 32905-2016), SHA3-256 and
// SHAKE-128/256 (FIPS 202), AES-128 (FIPS 197), and Haraka-256/512 v2.
// Everything here is a pure function; the hardware models are tested
// against these.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "crv/bytes.hpp"
#include "crv/error.hpp"
#include "crv/modes.hpp"

namespace crv {

enum class MdMode { Sha256, Sha512, Sm3 };
enum class SpongeMode { Sha3_256, Shake128, Shake256 };
enum class AesDir { Encrypt, Decrypt };
enum class HarakaMode { H256, H512 };

// ----------------------------------------------------------------------
// Merkle-Damgard family (SHA-256, SHA-512, SM3)

// Chaining state: 8 words of the algorithm's width. 32-bit modes keep each
// word in the low half of an entry.
struct ChainState {
  std::vector<std::uint64_t> words;
  bool operator==(const ChainState&) const = default;
};

std::size_t md_block_bytes(MdMode m);
std::size_t md_digest_bytes(MdMode m);
ChainState md_iv(MdMode m);

// One compression. `block` must be exactly the mode's block size and the
// state width must match, else SizeError.
ChainState md_compress(MdMode m, const ChainState& state, ByteSpan block);

// Standard pad-then-fold over md_compress.
Bytes hash_md(MdMode m, ByteSpan message);

// Standard padding (0x80, zeros, big-endian bit length).
Bytes md_pad(MdMode m, ByteSpan message);

Bytes md_state_digest(MdMode m, const ChainState& state);

// Buffer packing: 32-bit modes pack word pairs (even index in the high
// half); SHA-512 is the identity.
Words md_state_to_words(MdMode m, const ChainState& state);
ChainState md_state_from_words(MdMode m, WordSpan words);

// ----------------------------------------------------------------------
// Keccak / sponge family

using KeccakState = std::array<std::uint64_t, 25>;

void keccak_f1600(KeccakState& state);
// `count` rounds starting at round index `first` (first + count <= 24);
// the two-round composite of the unrolled engine is keccak_rounds(s, 2i, 2).
void keccak_rounds(KeccakState& state, unsigned first, unsigned count);

std::size_t sponge_rate_bytes(SpongeMode m);
// FIPS 202 output. out_len must be 32 for SHA3-256 and >= 1 otherwise.
Bytes sponge(SpongeMode m, ByteSpan message, std::size_t out_len);
// Domain-separated pad10*1 padding to a whole number of rate blocks.
Bytes sponge_pad(SpongeMode m, ByteSpan message);

// ----------------------------------------------------------------------
// AES-128

using Block16 = std::array<std::uint8_t, 16>;
using AesRoundKeys = std::array<Block16, 11>;

AesRoundKeys aes128_key_schedule(const Block16& key);
Block16 aes128(AesDir dir, const Block16& key, const Block16& block);

// One AES encryption round (SubBytes, ShiftRows, MixColumns, AddRoundKey);
// the Haraka building block.
Block16 aes_enc_round(const Block16& state, const Block16& round_key);

// ----------------------------------------------------------------------
// Haraka v2

struct HarakaRcSet {
  std::vector<Block16> constants;
  bool operator==(const HarakaRcSet&) const = default;
};

// The 40 published Haraka-v2 constants.
const HarakaRcSet& haraka_standard_rc();

// Seeded constants: consecutive 16-byte reads of SHAKE256(sk || pk).
// Throws SizeError on an empty seed.
HarakaRcSet haraka_rc_derive(ByteSpan sk, ByteSpan pk, std::size_t count = 64);

// 32-byte output; input must be 32 (H256) or 64 (H512) bytes and rc must
// provide at least 20 / 40 constants (what Haraka-v2 consumes).
Bytes haraka(HarakaMode m, ByteSpan input, const HarakaRcSet& rc = haraka_standard_rc());

// The 512-bit permutation without feed-forward/truncation.
std::array<std::uint8_t, 64> haraka512_perm(const std::array<std::uint8_t, 64>& input,
                                            const HarakaRcSet& rc);

// ----------------------------------------------------------------------
// Unified entry point used by the vector runner and the differential tests:
// one call per supported dispatch mode (AES "digest" is the processed block,
// with the input laid out as key || block).
Bytes primitive_digest(CryptoMode mode, ByteSpan input, std::size_t out_len = 0,
                       const HarakaRcSet* rc = nullptr);

}  // namespace crv
