// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/units/units.hpp"

#include <cstring>

namespace crv {

namespace {

MdMode md_mode_of(CryptoMode m) {
  switch (m) {
    case CryptoMode::Sha256: return MdMode::Sha256;
    case CryptoMode::Sha512: return MdMode::Sha512;
    default: return MdMode::Sm3;
  }
}

void check_range(std::uint32_t base, std::uint32_t words, const char* what) {
  if (base + words > kBufWords) {
    throw BoundsError(std::string(what) + " region [" + std::to_string(base) +
                      ", " + std::to_string(base + words) + ") exceeds buffer");
  }
}

Bytes read_bytes_le(const InternalBuffer& buf, std::uint32_t base,
                    std::size_t nbytes) {
  std::size_t words = (nbytes + 7) / 8;
  Bytes out = unpack_bytes_le(WordSpan(buf.words.data() + base, words), nbytes);
  return out;
}

Block16 read_block16(const InternalBuffer& buf, std::uint32_t base) {
  Block16 b{};
  std::uint8_t tmp[16];
  store_le64(tmp, buf.words[base]);
  store_le64(tmp + 8, buf.words[base + 1]);
  std::memcpy(b.data(), tmp, 16);
  return b;
}

}  // namespace

std::uint32_t rc_precompute_cycles(const TimingConfig& cfg, std::uint32_t count) {
  if (cfg.rc_precompute_cycles != 0) return cfg.rc_precompute_cycles;
  std::uint32_t bytes = 16 * count;
  std::uint32_t rate = 136;  // SHAKE-256
  std::uint32_t perms = (bytes + rate - 1) / rate;
  if (perms == 0) perms = 1;
  return cfg.fill_keccak + 12 * perms;
}

EngineStatus Engine::dispatch(const EngineJob& job, InternalBuffer& buf) {
  if (status_.busy) throw BusyError("engine is busy");
  if (engine_for(job.mode) != id_) {
    throw ModeError(std::string("mode ") + std::string(mode_name(job.mode)) +
                    " does not belong to this engine");
  }
  if (job.count < 1) throw SizeError("dispatch count must be >= 1");
  std::uint32_t rounds = job.rounds ? job.rounds : mode_rounds(job.mode);
  if (rounds != mode_rounds(job.mode)) {
    throw ModeError("round count " + std::to_string(job.rounds) +
                    " does not match mode " + std::string(mode_name(job.mode)));
  }
  if (job.dual_lane && job.mode != CryptoMode::Sha256 &&
      job.mode != CryptoMode::Sm3) {
    throw ModeError("dual-lane is only valid for SHA-256/SM3");
  }
  if (job.no_absorb && !mode_is_sponge(job.mode)) {
    throw ModeError("no_absorb is only valid for sponge modes");
  }

  pending_.clear();
  auto emit_words = [&](std::uint32_t base, WordSpan words) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      pending_.emplace_back(base + std::uint32_t(i), words[i]);
    }
  };
  auto emit_bytes_le = [&](std::uint32_t base, ByteSpan bytes) {
    emit_words(base, pack_words_le(bytes));
  };

  std::uint32_t busy_cycles = cfg_.engine_fill(id_) + job.count * rounds;

  switch (job.mode) {
    case CryptoMode::Sha256:
    case CryptoMode::Sha512:
    case CryptoMode::Sm3: {
      MdMode m = md_mode_of(job.mode);
      std::uint32_t sw = mode_state_words(job.mode);
      std::uint32_t bw = mode_block_bytes(job.mode) / 8;
      int lanes = job.dual_lane ? 2 : 1;
      check_range(job.state_base, sw * lanes, "state");
      check_range(job.msg_base, job.count * bw * lanes, "message");
      for (int lane = 0; lane < lanes; ++lane) {
        std::uint32_t sbase = job.state_base + lane * sw;
        std::uint32_t mbase = job.msg_base + lane * job.count * bw;
        ChainState st =
            job.init_state
                ? md_iv(m)
                : md_state_from_words(m, WordSpan(buf.words.data() + sbase, sw));
        for (std::uint32_t b = 0; b < job.count; ++b) {
          Bytes block = unpack_bytes_be(
              WordSpan(buf.words.data() + mbase + b * bw, bw),
              mode_block_bytes(job.mode));
          st = md_compress(m, st, block);
        }
        emit_words(sbase, md_state_to_words(m, st));
      }
      break;
    }
    case CryptoMode::Sha3_256:
    case CryptoMode::Shake128:
    case CryptoMode::Shake256: {
      std::uint32_t rate_w = mode_block_bytes(job.mode) / 8;
      check_range(job.state_base, 25, "state");
      if (!job.no_absorb) check_range(job.msg_base, job.count * rate_w, "message");
      KeccakState s{};
      if (!job.init_state) {
        for (int i = 0; i < 25; ++i) s[i] = buf.words[job.state_base + i];
      }
      for (std::uint32_t b = 0; b < job.count; ++b) {
        if (!job.no_absorb) {
          for (std::uint32_t i = 0; i < rate_w; ++i) {
            s[i] ^= buf.words[job.msg_base + b * rate_w + i];
          }
        }
        // Two unrolled rounds per iteration, twelve iterations.
        for (unsigned it = 0; it < 12; ++it) keccak_rounds(s, 2 * it, 2);
      }
      emit_words(job.state_base, Words(s.begin(), s.end()));
      break;
    }
    case CryptoMode::AesEnc:
    case CryptoMode::AesDec: {
      check_range(job.state_base, 2, "key");
      check_range(job.msg_base, job.count * 2, "message");
      Block16 key = read_block16(buf, job.state_base);
      AesDir dir = job.mode == CryptoMode::AesEnc ? AesDir::Encrypt : AesDir::Decrypt;
      for (std::uint32_t b = 0; b < job.count; ++b) {
        Block16 block = read_block16(buf, job.msg_base + 2 * b);
        Block16 out = aes128(dir, key, block);
        emit_bytes_le(job.msg_base + 2 * b, out);
      }
      break;
    }
    case CryptoMode::Haraka256:
    case CryptoMode::Haraka512: {
      bool h512 = job.mode == CryptoMode::Haraka512;
      std::uint32_t iw = h512 ? 8 : 4;
      std::uint32_t need_rc = h512 ? 40 : 20;
      check_range(job.msg_base, iw, "input");
      HarakaRcSet rc;
      if (job.rc_from_buffer) {
        check_range(job.rc_base, need_rc * 2, "round constants");
        rc.constants.resize(need_rc);
        for (std::uint32_t i = 0; i < need_rc; ++i) {
          rc.constants[i] = read_block16(buf, job.rc_base + 2 * i);
        }
      } else {
        rc = haraka_standard_rc();
      }
      Bytes input = read_bytes_le(buf, job.msg_base, iw * 8);
      Bytes digest = haraka(h512 ? HarakaMode::H512 : HarakaMode::H256, input, rc);
      emit_bytes_le(job.msg_base, digest);
      break;
    }
    case CryptoMode::HarakaRc: {
      check_range(job.state_base, 8, "seed");
      check_range(job.msg_base, job.count * 2, "round constants");
      Bytes sk = read_bytes_le(buf, job.state_base, 32);
      Bytes pk = read_bytes_le(buf, job.state_base + 4, 32);
      HarakaRcSet rc = haraka_rc_derive(sk, pk, job.count);
      Bytes stream;
      stream.reserve(16 * job.count);
      for (const Block16& c : rc.constants) {
        stream.insert(stream.end(), c.begin(), c.end());
      }
      emit_bytes_le(job.msg_base, stream);
      busy_cycles = rc_precompute_cycles(cfg_, job.count);
      break;
    }
  }

  status_.busy = true;
  status_.cycles_remaining = busy_cycles;
  status_.result_ready = false;
  return status_;
}

EngineStatus Engine::tick(InternalBuffer& buf) {
  if (!status_.busy) return status_;
  if (--status_.cycles_remaining == 0) {
    for (const auto& [index, value] : pending_) buf.write(index, value);
    pending_.clear();
    status_.busy = false;
    status_.result_ready = true;
  }
  return status_;
}

}  // namespace crv
