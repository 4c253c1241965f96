// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Functional + timing models of the three unified engines. Results are
// always bit-identical to the primitives module; timing follows the
// fill + count*rounds pipeline model with per-engine fill depths.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crv/config.hpp"
#include "crv/memsys/memsys.hpp"
#include "crv/modes.hpp"
#include "crv/primitives/primitives.hpp"

namespace crv {

struct EngineJob {
  CryptoMode mode = CryptoMode::Sha256;
  std::uint32_t state_base = 0;  // buffer word index of the state region
  std::uint32_t msg_base = 0;    // buffer word index of the message region
  std::uint32_t count = 1;       // blocks (MD/AES), permutations (Keccak),
                                 // round constants (HarakaRc)
  std::uint32_t rounds = 0;      // 0 selects mode_rounds(mode); else validated
  bool dual_lane = false;        // SHA-256/SM3: two independent lanes
  bool init_state = false;       // start from the standard IV / zero state
  bool no_absorb = false;        // Keccak: permute without message XOR
  bool rc_from_buffer = false;   // Haraka: constants at rc_base
  std::uint32_t rc_base = 0;
};

struct EngineStatus {
  bool busy = false;
  std::uint32_t cycles_remaining = 0;
  bool result_ready = false;
};

class Engine {
 public:
  Engine(EngineId id, const TimingConfig& cfg) : id_(id), cfg_(cfg) {}

  // Validates the job, captures its inputs, and computes the busy duration.
  // The result is written to the buffer by the completing tick().
  EngineStatus dispatch(const EngineJob& job, InternalBuffer& buf);

  // One cycle; writes results and raises result_ready on the tick that
  // brings cycles_remaining to zero. Ticking an idle engine is a no-op.
  EngineStatus tick(InternalBuffer& buf);

  EngineStatus status() const { return status_; }
  EngineId id() const { return id_; }

 private:
  EngineId id_;
  const TimingConfig& cfg_;
  EngineStatus status_{};
  std::vector<std::pair<std::uint32_t, std::uint64_t>> pending_;
};

// The three engines of the crypto-specialized unit; independent, all may be
// busy simultaneously.
struct CryptoUnits {
  explicit CryptoUnits(const TimingConfig& cfg)
      : md(EngineId::Md, cfg), aes(EngineId::AesHaraka, cfg),
        keccak(EngineId::Keccak, cfg) {}

  Engine md, aes, keccak;

  Engine& engine(EngineId id) {
    switch (id) {
      case EngineId::Md: return md;
      case EngineId::AesHaraka: return aes;
      case EngineId::Keccak: return keccak;
    }
    return md;
  }
  Engine& for_mode(CryptoMode m) { return engine(engine_for(m)); }

  void tick_all(InternalBuffer& buf) {
    md.tick(buf);
    aes.tick(buf);
    keccak.tick(buf);
  }
  bool any_busy() const {
    return md.status().busy || aes.status().busy || keccak.status().busy;
  }
};

// Busy duration of a haraka_rc derive of `count` constants under the
// SHAKE-256 squeeze model (used when cfg.rc_precompute_cycles is 0).
std::uint32_t rc_precompute_cycles(const TimingConfig& cfg, std::uint32_t count);

}  // namespace crv
