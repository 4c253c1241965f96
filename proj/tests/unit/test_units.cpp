// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// The central test: every engine result is bit-identical to the primitives
// module, and busy durations follow fill + count*rounds exactly.
#include <random>

#include "crv/units/units.hpp"
#include "doctest.h"

using namespace crv;

namespace {

Bytes rand_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = std::uint8_t(rng());
  return b;
}

void put_words(InternalBuffer& buf, std::uint32_t base, const Words& w) {
  for (std::size_t i = 0; i < w.size(); ++i) buf.words[base + i] = w[i];
}

std::uint32_t run_to_completion(Engine& e, InternalBuffer& buf) {
  std::uint32_t ticks = 0;
  while (e.status().busy) {
    e.tick(buf);
    ++ticks;
  }
  CHECK(e.status().result_ready);
  return ticks;
}

}  // namespace

TEST_CASE("md unit: one SHA-512 block costs 4+80 and matches md_compress") {
  TimingConfig cfg;
  InternalBuffer buf;
  Engine md(EngineId::Md, cfg);
  std::mt19937_64 rng(21);

  ChainState iv = md_iv(MdMode::Sha512);
  Bytes block = rand_bytes(rng, 128);
  put_words(buf, 0, md_state_to_words(MdMode::Sha512, iv));
  put_words(buf, 32, pack_words_be(block));

  EngineJob job;
  job.mode = CryptoMode::Sha512;
  job.state_base = 0;
  job.msg_base = 32;
  EngineStatus st = md.dispatch(job, buf);
  CHECK(st.busy);
  CHECK(st.cycles_remaining == 84);
  CHECK(run_to_completion(md, buf) == 84);

  ChainState expect = md_compress(MdMode::Sha512, iv, block);
  CHECK(md_state_from_words(MdMode::Sha512,
                            WordSpan(buf.words.data(), 8)) == expect);
}

TEST_CASE("keccak unit: one permutation costs 2+12 and matches f1600") {
  TimingConfig cfg;
  InternalBuffer buf;
  Engine keccak(EngineId::Keccak, cfg);
  std::mt19937_64 rng(22);

  KeccakState s{};
  for (auto& lane : s) lane = rng();
  put_words(buf, 0, Words(s.begin(), s.end()));

  EngineJob job;
  job.mode = CryptoMode::Shake256;
  job.state_base = 0;
  job.no_absorb = true;
  EngineStatus st = keccak.dispatch(job, buf);
  CHECK(st.cycles_remaining == 14);
  run_to_completion(keccak, buf);

  keccak_f1600(s);
  for (int i = 0; i < 25; ++i) CHECK(buf.words[i] == s[i]);
}

TEST_CASE("engine/mode mismatch and busy dispatch are errors") {
  TimingConfig cfg;
  InternalBuffer buf;
  Engine aes(EngineId::AesHaraka, cfg);
  EngineJob sha_job;
  sha_job.mode = CryptoMode::Sha256;
  sha_job.init_state = true;
  CHECK_THROWS_AS(aes.dispatch(sha_job, buf), ModeError);

  EngineJob aes_job;
  aes_job.mode = CryptoMode::AesEnc;
  aes_job.state_base = 0;
  aes_job.msg_base = 2;
  aes.dispatch(aes_job, buf);
  CHECK_THROWS_AS(aes.dispatch(aes_job, buf), BusyError);
}

TEST_CASE("malformed buffer ranges are rejected") {
  TimingConfig cfg;
  InternalBuffer buf;
  Engine keccak(EngineId::Keccak, cfg);
  EngineJob job;
  job.mode = CryptoMode::Sha3_256;
  job.state_base = 110;  // 25 words do not fit
  job.no_absorb = true;
  CHECK_THROWS_AS(keccak.dispatch(job, buf), BoundsError);

  Engine md(EngineId::Md, cfg);
  EngineJob mj;
  mj.mode = CryptoMode::Sha256;
  mj.init_state = true;
  mj.msg_base = 124;  // a 64-byte block needs 8 words
  CHECK_THROWS_AS(md.dispatch(mj, buf), BoundsError);

  EngineJob rj;
  rj.mode = CryptoMode::Sha256;
  rj.rounds = 80;  // SHA-256 compresses in 64
  rj.init_state = true;
  CHECK_THROWS_AS(md.dispatch(rj, buf), ModeError);
}

TEST_CASE("ticking an idle engine changes nothing") {
  TimingConfig cfg;
  InternalBuffer buf;
  buf.words[0] = 123;
  Engine md(EngineId::Md, cfg);
  EngineStatus st = md.tick(buf);
  CHECK_FALSE(st.busy);
  CHECK_FALSE(st.result_ready);
  CHECK(buf.words[0] == 123);
}

TEST_CASE("result_ready rises exactly at the reported cycle count") {
  TimingConfig cfg;
  InternalBuffer buf;
  Engine md(EngineId::Md, cfg);
  EngineJob job;
  job.mode = CryptoMode::Sm3;
  job.init_state = true;
  job.msg_base = 32;
  EngineStatus st = md.dispatch(job, buf);
  for (std::uint32_t i = 0; i + 1 < st.cycles_remaining; ++i) {
    EngineStatus now = md.tick(buf);
    CHECK(now.busy);
    CHECK_FALSE(now.result_ready);
  }
  EngineStatus done = md.tick(buf);
  CHECK_FALSE(done.busy);
  CHECK(done.result_ready);
}

TEST_CASE("random jobs per engine are bit-identical to primitives") {
  TimingConfig cfg;
  std::mt19937_64 rng(23);
  const int kTrials = 1000;

  for (int t = 0; t < kTrials; ++t) {
    // MD unit, random mode and 1..3 blocks.
    {
      InternalBuffer buf;
      Engine md(EngineId::Md, cfg);
      MdMode pm = static_cast<MdMode>(rng() % 3);
      CryptoMode cm = pm == MdMode::Sha256   ? CryptoMode::Sha256
                      : pm == MdMode::Sha512 ? CryptoMode::Sha512
                                             : CryptoMode::Sm3;
      std::uint32_t blocks = 1 + rng() % 3;
      std::size_t bb = md_block_bytes(pm);
      Bytes msg = rand_bytes(rng, blocks * bb);
      put_words(buf, 0, md_state_to_words(pm, md_iv(pm)));
      put_words(buf, 32, pack_words_be(msg));
      EngineJob job;
      job.mode = cm;
      job.msg_base = 32;
      job.count = blocks;
      EngineStatus st = md.dispatch(job, buf);
      CHECK(st.cycles_remaining == 4 + blocks * mode_rounds(cm));
      run_to_completion(md, buf);
      ChainState expect = md_iv(pm);
      for (std::uint32_t b = 0; b < blocks; ++b) {
        expect = md_compress(pm, expect, ByteSpan(msg.data() + b * bb, bb));
      }
      CHECK(md_state_from_words(
                pm, WordSpan(buf.words.data(), pm == MdMode::Sha512 ? 8 : 4)) ==
            expect);
    }
    // Keccak unit: absorb one random rate block into a random state.
    {
      InternalBuffer buf;
      Engine keccak(EngineId::Keccak, cfg);
      CryptoMode cm = std::array{CryptoMode::Sha3_256, CryptoMode::Shake128,
                                 CryptoMode::Shake256}[rng() % 3];
      std::uint32_t rate_w = mode_block_bytes(cm) / 8;
      KeccakState s{};
      for (auto& lane : s) lane = rng();
      Words block(rate_w);
      for (auto& w : block) w = rng();
      put_words(buf, 0, Words(s.begin(), s.end()));
      put_words(buf, 40, block);
      EngineJob job;
      job.mode = cm;
      job.msg_base = 40;
      keccak.dispatch(job, buf);
      run_to_completion(keccak, buf);
      for (std::uint32_t i = 0; i < rate_w; ++i) s[i] ^= block[i];
      keccak_f1600(s);
      for (int i = 0; i < 25; ++i) CHECK(buf.words[i] == s[i]);
    }
    // AES/Haraka unit.
    {
      InternalBuffer buf;
      Engine aes(EngineId::AesHaraka, cfg);
      int pick = int(rng() % 4);
      if (pick < 2) {
        Bytes key = rand_bytes(rng, 16);
        Bytes block = rand_bytes(rng, 16);
        put_words(buf, 0, pack_words_le(key));
        put_words(buf, 2, pack_words_le(block));
        EngineJob job;
        job.mode = pick == 0 ? CryptoMode::AesEnc : CryptoMode::AesDec;
        job.state_base = 0;
        job.msg_base = 2;
        EngineStatus st = aes.dispatch(job, buf);
        CHECK(st.cycles_remaining == 14);
        run_to_completion(aes, buf);
        Bytes in = key;
        in.insert(in.end(), block.begin(), block.end());
        CHECK(unpack_bytes_le(WordSpan(buf.words.data() + 2, 2), 16) ==
              primitive_digest(job.mode, in));
      } else {
        bool h512 = pick == 3;
        Bytes input = rand_bytes(rng, h512 ? 64 : 32);
        put_words(buf, 96, pack_words_le(input));
        EngineJob job;
        job.mode = h512 ? CryptoMode::Haraka512 : CryptoMode::Haraka256;
        job.msg_base = 96;
        EngineStatus st = aes.dispatch(job, buf);
        CHECK(st.cycles_remaining == 4u + (h512 ? 64u : 32u));
        run_to_completion(aes, buf);
        CHECK(unpack_bytes_le(WordSpan(buf.words.data() + 96, 4), 32) ==
              haraka(h512 ? HarakaMode::H512 : HarakaMode::H256, input));
      }
    }
  }
}

TEST_CASE("dual-lane: two SHA-256 blocks in 68 cycles, lanes independent") {
  TimingConfig cfg;
  std::mt19937_64 rng(24);
  Bytes block_a = rand_bytes(rng, 64);
  Bytes block_b = rand_bytes(rng, 64);

  auto run_dual = [&](const Bytes& lane0, const Bytes& lane1) {
    InternalBuffer buf;
    Engine md(EngineId::Md, cfg);
    put_words(buf, 0, md_state_to_words(MdMode::Sha256, md_iv(MdMode::Sha256)));
    put_words(buf, 4, md_state_to_words(MdMode::Sha256, md_iv(MdMode::Sha256)));
    put_words(buf, 32, pack_words_be(lane0));
    put_words(buf, 40, pack_words_be(lane1));
    EngineJob job;
    job.mode = CryptoMode::Sha256;
    job.msg_base = 32;
    job.dual_lane = true;
    EngineStatus st = md.dispatch(job, buf);
    CHECK(st.cycles_remaining == 68);
    run_to_completion(md, buf);
    return std::pair{
        md_state_from_words(MdMode::Sha256, WordSpan(buf.words.data(), 4)),
        md_state_from_words(MdMode::Sha256, WordSpan(buf.words.data() + 4, 4))};
  };

  auto [a0, b0] = run_dual(block_a, block_b);
  CHECK(a0 == md_compress(MdMode::Sha256, md_iv(MdMode::Sha256), block_a));
  CHECK(b0 == md_compress(MdMode::Sha256, md_iv(MdMode::Sha256), block_b));

  auto [a1, b1] = run_dual(block_b, block_a);  // swapped inputs swap outputs
  CHECK(a1 == b0);
  CHECK(b1 == a0);
}

TEST_CASE("dual-lane SHA-512 is an invalid mode") {
  TimingConfig cfg;
  InternalBuffer buf;
  Engine md(EngineId::Md, cfg);
  EngineJob job;
  job.mode = CryptoMode::Sha512;
  job.dual_lane = true;
  job.init_state = true;
  CHECK_THROWS_AS(md.dispatch(job, buf), ModeError);
}

TEST_CASE("dual-lane throughput: 2k blocks within 0.55x of single-lane") {
  TimingConfig cfg;
  for (std::uint32_t k : {1u, 8u, 32u}) {
    std::uint64_t dual = cfg.fill_md + k * 64;        // k pair-iterations
    std::uint64_t single = cfg.fill_md + 2 * k * 64;  // 2k blocks serially
    CHECK(double(dual) <= 0.55 * double(single));
  }
}

TEST_CASE("haraka rc precompute fills the buffer with derived constants") {
  TimingConfig cfg;
  InternalBuffer buf;
  Engine aes(EngineId::AesHaraka, cfg);
  std::mt19937_64 rng(25);
  Bytes sk = rand_bytes(rng, 32);
  Bytes pk = rand_bytes(rng, 32);
  put_words(buf, 96, pack_words_le(sk));
  put_words(buf, 100, pack_words_le(pk));

  EngineJob job;
  job.mode = CryptoMode::HarakaRc;
  job.state_base = 96;
  job.msg_base = 0;
  job.count = 40;
  EngineStatus st = aes.dispatch(job, buf);
  CHECK(st.cycles_remaining == rc_precompute_cycles(cfg, 40));
  run_to_completion(aes, buf);

  HarakaRcSet expect = haraka_rc_derive(sk, pk, 40);
  for (int i = 0; i < 40; ++i) {
    CHECK(unpack_bytes_le(WordSpan(buf.words.data() + 2 * i, 2), 16) ==
          Bytes(expect.constants[i].begin(), expect.constants[i].end()));
  }

  // Same seeds, same constants.
  InternalBuffer buf2;
  Engine aes2(EngineId::AesHaraka, cfg);
  put_words(buf2, 96, pack_words_le(sk));
  put_words(buf2, 100, pack_words_le(pk));
  aes2.dispatch(job, buf2);
  run_to_completion(aes2, buf2);
  for (int i = 0; i < 80; ++i) CHECK(buf2.words[i] == buf.words[i]);

  // Subsequent seeded Haraka jobs read these constants.
  Bytes input = rand_bytes(rng, 64);
  put_words(buf, 96, pack_words_le(input));
  EngineJob hj;
  hj.mode = CryptoMode::Haraka512;
  hj.msg_base = 96;
  hj.rc_from_buffer = true;
  hj.rc_base = 0;
  aes.dispatch(hj, buf);
  run_to_completion(aes, buf);
  CHECK(unpack_bytes_le(WordSpan(buf.words.data() + 96, 4), 32) ==
        haraka(HarakaMode::H512, input, expect));
}

TEST_CASE("engines are independent: all three busy at once") {
  TimingConfig cfg;
  InternalBuffer buf;
  CryptoUnits units(cfg);

  EngineJob mj;
  mj.mode = CryptoMode::Sha256;
  mj.init_state = true;
  mj.msg_base = 32;
  EngineJob kj;
  kj.mode = CryptoMode::Sha3_256;
  kj.init_state = true;
  kj.no_absorb = true;
  EngineJob aj;
  aj.mode = CryptoMode::AesEnc;
  aj.state_base = 96;
  aj.msg_base = 98;

  units.md.dispatch(mj, buf);
  units.keccak.dispatch(kj, buf);
  units.aes.dispatch(aj, buf);
  CHECK(units.md.status().busy);
  CHECK(units.keccak.status().busy);
  CHECK(units.aes.status().busy);
  while (units.any_busy()) units.tick_all(buf);
  CHECK(units.md.status().result_ready);
  CHECK(units.keccak.status().result_ready);
  CHECK(units.aes.status().result_ready);
}

TEST_CASE("timing is an exact function of mode and count") {
  TimingConfig cfg;
  InternalBuffer buf;
  std::mt19937_64 rng(26);
  for (int t = 0; t < 10; ++t) {
    Engine md(EngineId::Md, cfg);
    Bytes msg = rand_bytes(rng, 128);  // data varies, timing must not
    put_words(buf, 32, pack_words_be(msg));
    EngineJob job;
    job.mode = CryptoMode::Sha512;
    job.init_state = true;
    job.msg_base = 32;
    CHECK(md.dispatch(job, buf).cycles_remaining == 84);
  }
}
