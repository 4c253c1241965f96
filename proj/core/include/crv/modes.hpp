// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

#include "crv/error.hpp"

namespace crv {

// Dispatch tags understood by the crypto units. AES direction is part of the
// tag; HarakaRc is the round-constant precompute job of the AES/Haraka unit.
enum class CryptoMode : std::uint8_t {
  Sha256 = 0,
  Sha512 = 1,
  Sm3 = 2,
  Sha3_256 = 3,
  Shake128 = 4,
  Shake256 = 5,
  AesEnc = 6,
  AesDec = 7,
  Haraka256 = 8,
  Haraka512 = 9,
  HarakaRc = 10,
};
inline constexpr int kCryptoModeCount = 11;

enum class EngineId : std::uint8_t { Md = 0, AesHaraka = 1, Keccak = 2 };

constexpr EngineId engine_for(CryptoMode m) {
  switch (m) {
    case CryptoMode::Sha256:
    case CryptoMode::Sha512:
    case CryptoMode::Sm3:
      return EngineId::Md;
    case CryptoMode::Sha3_256:
    case CryptoMode::Shake128:
    case CryptoMode::Shake256:
      return EngineId::Keccak;
    default:
      return EngineId::AesHaraka;
  }
}

// Pipeline iterations per unit of work: compression rounds per block for the
// MD unit, two-round composites per permutation for the Keccak unit, AES
// rounds per block, and AES-round applications per Haraka input.
constexpr std::uint32_t mode_rounds(CryptoMode m) {
  switch (m) {
    case CryptoMode::Sha256:
    case CryptoMode::Sm3:
      return 64;
    case CryptoMode::Sha512:
      return 80;
    case CryptoMode::Sha3_256:
    case CryptoMode::Shake128:
    case CryptoMode::Shake256:
      return 12;
    case CryptoMode::AesEnc:
    case CryptoMode::AesDec:
      return 10;
    case CryptoMode::Haraka256:
      return 32;
    case CryptoMode::Haraka512:
    case CryptoMode::HarakaRc:
      return 64;
  }
  return 0;
}

// Bytes consumed from the message region per count unit (hash block, sponge
// rate, cipher block, Haraka input).
constexpr std::uint32_t mode_block_bytes(CryptoMode m) {
  switch (m) {
    case CryptoMode::Sha256:
    case CryptoMode::Sm3:
      return 64;
    case CryptoMode::Sha512:
      return 128;
    case CryptoMode::Sha3_256:
    case CryptoMode::Shake256:
      return 136;
    case CryptoMode::Shake128:
      return 168;
    case CryptoMode::AesEnc:
    case CryptoMode::AesDec:
      return 16;
    case CryptoMode::Haraka256:
      return 32;
    case CryptoMode::Haraka512:
    case CryptoMode::HarakaRc:
      return 64;
  }
  return 0;
}

// 64-bit buffer words occupied by the state region.
constexpr std::uint32_t mode_state_words(CryptoMode m) {
  switch (m) {
    case CryptoMode::Sha256:
    case CryptoMode::Sm3:
      return 4;  // 8 x 32-bit packed two per word
    case CryptoMode::Sha512:
      return 8;
    case CryptoMode::Sha3_256:
    case CryptoMode::Shake128:
    case CryptoMode::Shake256:
      return 25;
    case CryptoMode::AesEnc:
    case CryptoMode::AesDec:
      return 2;  // the key
    case CryptoMode::Haraka256:
    case CryptoMode::Haraka512:
      return 0;  // stateless
    case CryptoMode::HarakaRc:
      return 8;  // sk (4) then pk (4)
  }
  return 0;
}

// Default result size in bytes (SHAKE output length is caller-chosen).
constexpr std::uint32_t mode_digest_bytes(CryptoMode m) {
  switch (m) {
    case CryptoMode::Sha512:
      return 64;
    case CryptoMode::AesEnc:
    case CryptoMode::AesDec:
      return 16;
    default:
      return 32;
  }
}

constexpr bool mode_is_md(CryptoMode m) { return engine_for(m) == EngineId::Md; }
constexpr bool mode_is_sponge(CryptoMode m) {
  return engine_for(m) == EngineId::Keccak;
}

std::string_view mode_name(CryptoMode m);
CryptoMode mode_from_name(std::string_view name);  // throws ModeError

}  // namespace crv
