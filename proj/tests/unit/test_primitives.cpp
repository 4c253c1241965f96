// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Golden-reference tests: published standard vectors, frozen values from
// independent implementations, and the structural properties the hardware
// models rely on.
#include <random>

#include "crv/primitives/primitives.hpp"
#include "doctest.h"

using namespace crv;

namespace {

Bytes rand_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = std::uint8_t(rng());
  return b;
}

std::string hex(ByteSpan b) { return to_hex(b); }

}  // namespace

TEST_CASE("sha256 standard vectors") {
  CHECK(hex(hash_md(MdMode::Sha256, to_bytes("abc"))) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(hex(hash_md(MdMode::Sha256, {})) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(hex(hash_md(MdMode::Sha256,
                    to_bytes("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmno"
                             "mnopnopq"))) ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("sha512 standard vectors") {
  CHECK(hex(hash_md(MdMode::Sha512, {})) ==
        "cf83e1357eefb8bdf1542850d66d8007d620e4050b5715dc83f4a921d36ce9ce"
        "47d0d13c5d85f2b0ff8318d2877eec2f63b931bd47417a81a538327af927da3e");
  CHECK(hex(hash_md(MdMode::Sha512, to_bytes("abc"))) ==
        "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a"
        "2192992a274fc1a836ba3c23a3feebbd454d4423643ce80e2a9ac94fa54ca49f");
}

TEST_CASE("sm3 published worked examples") {
  CHECK(hex(hash_md(MdMode::Sm3, to_bytes("abc"))) ==
        "66c7f0f462eeedd9d1f2d46bdc10e4e24167c4875cf2f7a2297da02b8f4ba8e0");
  Bytes m;
  for (int i = 0; i < 16; ++i) {
    Bytes part = to_bytes("abcd");
    m.insert(m.end(), part.begin(), part.end());
  }
  CHECK(hex(hash_md(MdMode::Sm3, m)) ==
        "debe9ff92275b8a138604889c18e5a4d6fdb70e5387e5765293dcba39c0c5732");
}

TEST_CASE("md_compress single-block identity and errors") {
  // With a single padded block, IV + one compression is the full hash.
  Bytes padded = md_pad(MdMode::Sha256, to_bytes("abc"));
  REQUIRE(padded.size() == 64);
  ChainState s = md_compress(MdMode::Sha256, md_iv(MdMode::Sha256), padded);
  CHECK(md_state_digest(MdMode::Sha256, s) == hash_md(MdMode::Sha256, to_bytes("abc")));

  Bytes p512 = md_pad(MdMode::Sha512, {});
  REQUIRE(p512.size() == 128);
  ChainState s512 = md_compress(MdMode::Sha512, md_iv(MdMode::Sha512), p512);
  CHECK(md_state_digest(MdMode::Sha512, s512) == hash_md(MdMode::Sha512, {}));

  CHECK_THROWS_AS(md_compress(MdMode::Sha256, md_iv(MdMode::Sha256), Bytes(63)),
                  SizeError);
  CHECK_THROWS_AS(md_compress(MdMode::Sha512, md_iv(MdMode::Sha512), Bytes(64)),
                  SizeError);
}

TEST_CASE("fold equivalence: hash_md is pad-then-fold over md_compress") {
  std::mt19937_64 rng(101);
  for (MdMode m : {MdMode::Sha256, MdMode::Sha512, MdMode::Sm3}) {
    for (int trial = 0; trial < 20; ++trial) {
      Bytes msg = rand_bytes(rng, rng() % 400);
      Bytes padded = md_pad(m, msg);
      std::size_t bb = md_block_bytes(m);
      REQUIRE(padded.size() % bb == 0);
      ChainState s = md_iv(m);
      for (std::size_t off = 0; off < padded.size(); off += bb) {
        s = md_compress(m, s, ByteSpan(padded.data() + off, bb));
      }
      CHECK(md_state_digest(m, s) == hash_md(m, msg));
    }
  }
}

TEST_CASE("chaining identity: block-at-a-time state equals streamed hash") {
  // Iterating state <- compress(state, block) over the message blocks is
  // the long-message schedule's contract.
  std::mt19937_64 rng(102);
  Bytes msg = rand_bytes(rng, 5 * 128);
  Bytes padded = md_pad(MdMode::Sha512, msg);
  ChainState s = md_iv(MdMode::Sha512);
  for (std::size_t off = 0; off < padded.size(); off += 128) {
    s = md_compress(MdMode::Sha512, s, ByteSpan(padded.data() + off, 128));
  }
  CHECK(md_state_digest(MdMode::Sha512, s) == hash_md(MdMode::Sha512, msg));
}

TEST_CASE("md state word packing round-trips") {
  std::mt19937_64 rng(103);
  for (MdMode m : {MdMode::Sha256, MdMode::Sha512, MdMode::Sm3}) {
    ChainState s = md_iv(m);
    Words w = md_state_to_words(m, s);
    CHECK(md_state_from_words(m, w) == s);
    CHECK(w.size() == (m == MdMode::Sha512 ? 8 : 4));
  }
}

TEST_CASE("keccak_f1600 zero-state permutation") {
  // Frozen from an independent implementation validated against hashlib.
  static const std::uint64_t kExpected[25] = {
      0xf1258f7940e1dde7ULL, 0x84d5ccf933c0478aULL, 0xd598261ea65aa9eeULL,
      0xbd1547306f80494dULL, 0x8b284e056253d057ULL, 0xff97a42d7f8e6fd4ULL,
      0x90fee5a0a44647c4ULL, 0x8c5bda0cd6192e76ULL, 0xad30a6f71b19059cULL,
      0x30935ab7d08ffc64ULL, 0xeb5aa93f2317d635ULL, 0xa9a6e6260d712103ULL,
      0x81a57c16dbcf555fULL, 0x43b831cd0347c826ULL, 0x01f22f1a11a5569fULL,
      0x05e5635a21d9ae61ULL, 0x64befef28cc970f2ULL, 0x613670957bc46611ULL,
      0xb87c5a554fd00ecbULL, 0x8c3ee88a1ccf32c8ULL, 0x940c7922ae3a2614ULL,
      0x1841f924a2c509e4ULL, 0x16f53526e70465c2ULL, 0x75f644e97f30a13bULL,
      0xeaf1ff7b5ceca249ULL};
  KeccakState s{};
  keccak_f1600(s);
  for (int i = 0; i < 25; ++i) CHECK(s[i] == kExpected[i]);
}

TEST_CASE("keccak two-round composite applied 12 times equals f1600") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 50; ++trial) {
    KeccakState a{};
    for (auto& lane : a) lane = rng();
    KeccakState b = a;
    keccak_f1600(a);
    for (unsigned i = 0; i < 12; ++i) keccak_rounds(b, 2 * i, 2);
    CHECK(a == b);
  }
  KeccakState s{};
  CHECK_THROWS_AS(keccak_rounds(s, 23, 2), SizeError);
}

TEST_CASE("keccak permutation distinguishes distinct states") {
  std::mt19937_64 rng(105);
  KeccakState a{}, b{};
  for (auto& lane : a) lane = rng();
  b = a;
  b[7] ^= 1;
  keccak_f1600(a);
  keccak_f1600(b);
  CHECK(a != b);
}

TEST_CASE("sponge standard vectors") {
  CHECK(hex(sponge(SpongeMode::Sha3_256, {}, 32)) ==
        "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
  CHECK(hex(sponge(SpongeMode::Shake128, {}, 32)) ==
        "7f9c2ba4e88f827d616045507605853ed73b8093f6efbc88eb1a6eacfa66ef26");
  CHECK(hex(sponge(SpongeMode::Shake256, {}, 32)) ==
        "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f");
  CHECK(hex(sponge(SpongeMode::Sha3_256, to_bytes("abc"), 32)) ==
        "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
}

TEST_CASE("sponge output length rules") {
  CHECK_THROWS_AS(sponge(SpongeMode::Shake128, {}, 0), SizeError);
  CHECK_THROWS_AS(sponge(SpongeMode::Sha3_256, {}, 33), SizeError);
}

TEST_CASE("xof prefix property") {
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 20; ++trial) {
    Bytes m = rand_bytes(rng, rng() % 300);
    for (SpongeMode mode : {SpongeMode::Shake128, SpongeMode::Shake256}) {
      Bytes small = sponge(mode, m, 16);
      Bytes big = sponge(mode, m, 64 + rng() % 300);
      CHECK(Bytes(big.begin(), big.begin() + 16) == small);
    }
  }
}

TEST_CASE("aes128 FIPS 197 example and key schedule") {
  Block16 key{}, pt{};
  for (int i = 0; i < 16; ++i) key[i] = std::uint8_t(i);
  Bytes ptb = from_hex("00112233445566778899aabbccddeeff");
  std::copy(ptb.begin(), ptb.end(), pt.begin());
  Block16 ct = aes128(AesDir::Encrypt, key, pt);
  CHECK(hex(ByteSpan(ct.data(), 16)) == "69c4e0d86a7b0430d8cdb78070b4c55a");
  CHECK(aes128(AesDir::Decrypt, key, ct) == pt);

  AesRoundKeys rks = aes128_key_schedule(key);
  CHECK(hex(ByteSpan(rks[1].data(), 16)) == "d6aa74fdd2af72fadaa678f1d6ab76fe");
}

TEST_CASE("aes128 decrypt inverts encrypt") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 1000; ++trial) {
    Block16 key{}, b{};
    for (auto& x : key) x = std::uint8_t(rng());
    for (auto& x : b) x = std::uint8_t(rng());
    CHECK(aes128(AesDir::Decrypt, key, aes128(AesDir::Encrypt, key, b)) == b);
  }
}

TEST_CASE("haraka v2 published vectors with standard constants") {
  Bytes in64(64), in32(32);
  for (int i = 0; i < 64; ++i) in64[i] = std::uint8_t(i);
  for (int i = 0; i < 32; ++i) in32[i] = std::uint8_t(i);
  CHECK(hex(haraka(HarakaMode::H512, in64)) ==
        "be7f723b4e80a99813b292287f306f625a6d57331cae5f34dd9277b0945be2aa");
  CHECK(hex(haraka(HarakaMode::H256, in32)) ==
        "8027ccb87949774b78d0545fb72bf70c695c2a0923cbd47bba1159efbf2b2c1c");
  CHECK(haraka_standard_rc().constants.size() == 40);
}

TEST_CASE("haraka input validation") {
  CHECK_THROWS_AS(haraka(HarakaMode::H256, Bytes(31)), SizeError);
  CHECK_THROWS_AS(haraka(HarakaMode::H512, Bytes(65)), SizeError);
  HarakaRcSet too_few;
  too_few.constants.resize(19);
  CHECK_THROWS_AS(haraka(HarakaMode::H256, Bytes(32), too_few), SizeError);
}

TEST_CASE("haraka depends on its round constants") {
  std::mt19937_64 rng(108);
  Bytes in = rand_bytes(rng, 32);
  HarakaRcSet other = haraka_standard_rc();
  other.constants[3][0] ^= 0x5A;
  CHECK(haraka(HarakaMode::H256, in) != haraka(HarakaMode::H256, in, other));
}

TEST_CASE("haraka_rc_derive: deterministic, order-sensitive, SHAKE-consistent") {
  std::mt19937_64 rng(109);
  Bytes sk = rand_bytes(rng, 16);
  Bytes pk = from_hex("f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff");
  HarakaRcSet a = haraka_rc_derive(sk, pk);
  HarakaRcSet b = haraka_rc_derive(sk, pk);
  CHECK(a == b);
  CHECK(a.constants.size() == 64);
  CHECK(haraka_rc_derive(sk, pk) != haraka_rc_derive(pk, sk));
  CHECK_THROWS_AS(haraka_rc_derive({}, pk), SizeError);
  CHECK_THROWS_AS(haraka_rc_derive(sk, {}), SizeError);

  // Constants are consecutive 16-byte reads of SHAKE256(sk || pk).
  Bytes seed = sk;
  seed.insert(seed.end(), pk.begin(), pk.end());
  Bytes stream = sponge(SpongeMode::Shake256, seed, 16 * 64);
  for (std::size_t i = 0; i < 64; ++i) {
    CHECK(Bytes(a.constants[i].begin(), a.constants[i].end()) ==
          Bytes(stream.begin() + 16 * i, stream.begin() + 16 * (i + 1)));
  }
}

TEST_CASE("seeded haraka frozen cross-check") {
  // sk = 00..0f, pk = f0..ff; expectations computed with hashlib SHAKE-256
  // plus the reference-validated Haraka oracle.
  Bytes sk(16), pk(16);
  for (int i = 0; i < 16; ++i) {
    sk[i] = std::uint8_t(i);
    pk[i] = std::uint8_t(240 + i);
  }
  HarakaRcSet rc = haraka_rc_derive(sk, pk);
  CHECK(hex(ByteSpan(rc.constants[0].data(), 16)) ==
        "06ed1dbbc02f38f7b1bca94208f715c0");
  CHECK(hex(ByteSpan(rc.constants[63].data(), 16)) ==
        "51900f9dbee26906e7169d6638dc5080");

  Bytes in32(32), in64(64);
  for (int i = 0; i < 32; ++i) in32[i] = std::uint8_t(i);
  for (int i = 0; i < 64; ++i) in64[i] = std::uint8_t(i);
  CHECK(hex(haraka(HarakaMode::H256, in32, rc)) ==
        "94ccacdebf6568ed2a8f5b7f81b62830594d5321ecb1cc6e83eef0cb98fb9f06");
  CHECK(hex(haraka(HarakaMode::H512, in64, rc)) ==
        "e6b19a634dea97aff68ced22518a3719b9451ea1173370b1fe0d5b180d2682f7");
}

TEST_CASE("primitive_digest unified entry") {
  Bytes key_block = from_hex(
      "000102030405060708090a0b0c0d0e0f00112233445566778899aabbccddeeff");
  CHECK(hex(primitive_digest(CryptoMode::AesEnc, key_block)) ==
        "69c4e0d86a7b0430d8cdb78070b4c55a");
  Bytes ct = primitive_digest(CryptoMode::AesEnc, key_block);
  Bytes key_ct(key_block.begin(), key_block.begin() + 16);
  key_ct.insert(key_ct.end(), ct.begin(), ct.end());
  CHECK(primitive_digest(CryptoMode::AesDec, key_ct) ==
        Bytes(key_block.begin() + 16, key_block.end()));
  CHECK_THROWS_AS(primitive_digest(CryptoMode::AesEnc, Bytes(31)), SizeError);
  CHECK_THROWS_AS(primitive_digest(CryptoMode::HarakaRc, Bytes(32)), ModeError);
}
