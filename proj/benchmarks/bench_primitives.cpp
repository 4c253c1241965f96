// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Host-side throughput of the golden-reference primitives.
#include <benchmark/benchmark.h>

#include <random>

#include "crv/primitives/primitives.hpp"

using namespace crv;

namespace {

Bytes make_input(std::size_t n) {
  std::mt19937_64 rng(7);
  Bytes b(n);
  for (auto& x : b) x = std::uint8_t(rng());
  return b;
}

void BM_HashMd(benchmark::State& state, MdMode mode) {
  Bytes input = make_input(std::size_t(state.range(0)));
  for (auto _ : state) {
    Bytes digest = hash_md(mode, input);
    benchmark::DoNotOptimize(digest);
  }
  state.SetBytesProcessed(std::int64_t(state.iterations()) * state.range(0));
}

void BM_Sponge(benchmark::State& state, SpongeMode mode) {
  Bytes input = make_input(std::size_t(state.range(0)));
  for (auto _ : state) {
    Bytes digest = sponge(mode, input, 32);
    benchmark::DoNotOptimize(digest);
  }
  state.SetBytesProcessed(std::int64_t(state.iterations()) * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_HashMd, sha256, MdMode::Sha256)->Range(64, 64 << 8);
BENCHMARK_CAPTURE(BM_HashMd, sha512, MdMode::Sha512)->Range(128, 128 << 8);
BENCHMARK_CAPTURE(BM_HashMd, sm3, MdMode::Sm3)->Range(64, 64 << 8);
BENCHMARK_CAPTURE(BM_Sponge, sha3_256, SpongeMode::Sha3_256)->Range(136, 136 << 8);
BENCHMARK_CAPTURE(BM_Sponge, shake128, SpongeMode::Shake128)->Range(168, 168 << 8);

static void BM_KeccakF1600(benchmark::State& state) {
  KeccakState s{};
  s[0] = 0x0123456789ABCDEFULL;
  for (auto _ : state) {
    keccak_f1600(s);
    benchmark::DoNotOptimize(s);
  }
  state.SetBytesProcessed(std::int64_t(state.iterations()) * 200);
}
BENCHMARK(BM_KeccakF1600);

static void BM_Aes128(benchmark::State& state) {
  Block16 key{}, block{};
  for (int i = 0; i < 16; ++i) key[i] = std::uint8_t(i);
  for (auto _ : state) {
    block = aes128(AesDir::Encrypt, key, block);
    benchmark::DoNotOptimize(block);
  }
  state.SetBytesProcessed(std::int64_t(state.iterations()) * 16);
}
BENCHMARK(BM_Aes128);

static void BM_Haraka(benchmark::State& state, HarakaMode mode) {
  Bytes input = make_input(mode == HarakaMode::H512 ? 64 : 32);
  for (auto _ : state) {
    Bytes digest = haraka(mode, input);
    benchmark::DoNotOptimize(digest);
  }
  state.SetBytesProcessed(std::int64_t(state.iterations()) *
                          std::int64_t(input.size()));
}
BENCHMARK_CAPTURE(BM_Haraka, h256, HarakaMode::H256);
BENCHMARK_CAPTURE(BM_Haraka, h512, HarakaMode::H512);

static void BM_HarakaRcDerive(benchmark::State& state) {
  Bytes sk = make_input(32), pk = make_input(32);
  for (auto _ : state) {
    HarakaRcSet rc = haraka_rc_derive(sk, pk);
    benchmark::DoNotOptimize(rc);
  }
}
BENCHMARK(BM_HarakaRcDerive);
