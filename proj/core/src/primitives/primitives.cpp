// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/primitives/primitives.hpp"

#include <cstring>

namespace crv {

namespace sha2_detail {
extern const std::uint32_t kIv256[8];
extern const std::uint64_t kIv512[8];
template <typename W>
void compress(W state[8], const std::uint8_t* block);
}  // namespace sha2_detail

namespace sm3_detail {
extern const std::uint32_t kIv[8];
void compress(std::uint32_t v[8], const std::uint8_t* block);
}  // namespace sm3_detail

std::size_t md_block_bytes(MdMode m) {
  return m == MdMode::Sha512 ? 128 : 64;
}

std::size_t md_digest_bytes(MdMode m) {
  return m == MdMode::Sha512 ? 64 : 32;
}

ChainState md_iv(MdMode m) {
  ChainState s;
  s.words.resize(8);
  switch (m) {
    case MdMode::Sha256:
      for (int i = 0; i < 8; ++i) s.words[i] = sha2_detail::kIv256[i];
      break;
    case MdMode::Sha512:
      for (int i = 0; i < 8; ++i) s.words[i] = sha2_detail::kIv512[i];
      break;
    case MdMode::Sm3:
      for (int i = 0; i < 8; ++i) s.words[i] = sm3_detail::kIv[i];
      break;
  }
  return s;
}

ChainState md_compress(MdMode m, const ChainState& state, ByteSpan block) {
  if (block.size() != md_block_bytes(m)) {
    throw SizeError("compression block must be " +
                    std::to_string(md_block_bytes(m)) + " bytes, got " +
                    std::to_string(block.size()));
  }
  if (state.words.size() != 8) {
    throw SizeError("chaining state must hold 8 words");
  }
  ChainState out = state;
  if (m == MdMode::Sha512) {
    std::uint64_t v[8];
    for (int i = 0; i < 8; ++i) v[i] = state.words[i];
    sha2_detail::compress<std::uint64_t>(v, block.data());
    for (int i = 0; i < 8; ++i) out.words[i] = v[i];
    return out;
  }
  std::uint32_t v[8];
  for (int i = 0; i < 8; ++i) {
    if (state.words[i] > 0xFFFFFFFFULL) {
      throw SizeError("32-bit chaining state word out of range");
    }
    v[i] = std::uint32_t(state.words[i]);
  }
  if (m == MdMode::Sha256) {
    sha2_detail::compress<std::uint32_t>(v, block.data());
  } else {
    sm3_detail::compress(v, block.data());
  }
  for (int i = 0; i < 8; ++i) out.words[i] = v[i];
  return out;
}

Bytes md_pad(MdMode m, ByteSpan message) {
  std::size_t block = md_block_bytes(m);
  std::size_t len_bytes = (m == MdMode::Sha512) ? 16 : 8;
  Bytes padded(message.begin(), message.end());
  padded.push_back(0x80);
  while ((padded.size() + len_bytes) % block != 0) padded.push_back(0);
  // Bit length, big-endian. Message sizes here stay far below 2^64 bits,
  // so the top half of the SHA-512 length field is zero.
  if (m == MdMode::Sha512) padded.resize(padded.size() + 8, 0);
  std::uint8_t len[8];
  store_be64(len, std::uint64_t(message.size()) * 8);
  padded.insert(padded.end(), len, len + 8);
  return padded;
}

Bytes md_state_digest(MdMode m, const ChainState& state) {
  Bytes out(md_digest_bytes(m));
  if (m == MdMode::Sha512) {
    for (int i = 0; i < 8; ++i) store_be64(out.data() + 8 * i, state.words[i]);
  } else {
    for (int i = 0; i < 8; ++i) {
      store_be32(out.data() + 4 * i, std::uint32_t(state.words[i]));
    }
  }
  return out;
}

Bytes hash_md(MdMode m, ByteSpan message) {
  Bytes padded = md_pad(m, message);
  ChainState state = md_iv(m);
  std::size_t block = md_block_bytes(m);
  for (std::size_t off = 0; off < padded.size(); off += block) {
    state = md_compress(m, state, ByteSpan(padded.data() + off, block));
  }
  return md_state_digest(m, state);
}

Words md_state_to_words(MdMode m, const ChainState& state) {
  if (state.words.size() != 8) throw SizeError("chaining state must hold 8 words");
  if (m == MdMode::Sha512) return Words(state.words.begin(), state.words.end());
  Words out(4);
  for (int i = 0; i < 4; ++i) {
    out[i] = (state.words[2 * i] << 32) | (state.words[2 * i + 1] & 0xFFFFFFFFULL);
  }
  return out;
}

ChainState md_state_from_words(MdMode m, WordSpan words) {
  ChainState s;
  s.words.resize(8);
  if (m == MdMode::Sha512) {
    if (words.size() < 8) throw SizeError("need 8 words for a SHA-512 state");
    for (int i = 0; i < 8; ++i) s.words[i] = words[i];
    return s;
  }
  if (words.size() < 4) throw SizeError("need 4 words for a 32-bit state");
  for (int i = 0; i < 4; ++i) {
    s.words[2 * i] = words[i] >> 32;
    s.words[2 * i + 1] = words[i] & 0xFFFFFFFFULL;
  }
  return s;
}

std::string_view mode_name(CryptoMode m) {
  switch (m) {
    case CryptoMode::Sha256: return "sha256";
    case CryptoMode::Sha512: return "sha512";
    case CryptoMode::Sm3: return "sm3";
    case CryptoMode::Sha3_256: return "sha3_256";
    case CryptoMode::Shake128: return "shake128";
    case CryptoMode::Shake256: return "shake256";
    case CryptoMode::AesEnc: return "aes_enc";
    case CryptoMode::AesDec: return "aes_dec";
    case CryptoMode::Haraka256: return "haraka256";
    case CryptoMode::Haraka512: return "haraka512";
    case CryptoMode::HarakaRc: return "haraka_rc";
  }
  return "?";
}

CryptoMode mode_from_name(std::string_view name) {
  for (int i = 0; i < kCryptoModeCount; ++i) {
    CryptoMode m = static_cast<CryptoMode>(i);
    if (mode_name(m) == name) return m;
  }
  throw ModeError("unknown mode name: " + std::string(name));
}

Bytes primitive_digest(CryptoMode mode, ByteSpan input, std::size_t out_len,
                       const HarakaRcSet* rc) {
  const HarakaRcSet& rcs = rc ? *rc : haraka_standard_rc();
  switch (mode) {
    case CryptoMode::Sha256:
      return hash_md(MdMode::Sha256, input);
    case CryptoMode::Sha512:
      return hash_md(MdMode::Sha512, input);
    case CryptoMode::Sm3:
      return hash_md(MdMode::Sm3, input);
    case CryptoMode::Sha3_256:
      return sponge(SpongeMode::Sha3_256, input, 32);
    case CryptoMode::Shake128:
      return sponge(SpongeMode::Shake128, input, out_len ? out_len : 32);
    case CryptoMode::Shake256:
      return sponge(SpongeMode::Shake256, input, out_len ? out_len : 32);
    case CryptoMode::AesEnc:
    case CryptoMode::AesDec: {
      if (input.size() != 32) {
        throw SizeError("AES input must be key||block (32 bytes)");
      }
      Block16 key{}, block{};
      std::memcpy(key.data(), input.data(), 16);
      std::memcpy(block.data(), input.data() + 16, 16);
      Block16 out = aes128(
          mode == CryptoMode::AesEnc ? AesDir::Encrypt : AesDir::Decrypt, key,
          block);
      return Bytes(out.begin(), out.end());
    }
    case CryptoMode::Haraka256:
      return haraka(HarakaMode::H256, input, rcs);
    case CryptoMode::Haraka512:
      return haraka(HarakaMode::H512, input, rcs);
    case CryptoMode::HarakaRc:
      throw ModeError("haraka_rc is not a digest mode");
  }
  throw ModeError("unhandled mode");
}

}  // namespace crv
