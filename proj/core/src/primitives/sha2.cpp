// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// SHA-256 and SHA-512 per FIPS 180-4.
#include <bit>
#include <cstring>

#include "crv/primitives/primitives.hpp"

namespace crv {
namespace sha2_detail {

extern const std::uint32_t kK256[64];
const std::uint32_t kK256[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

extern const std::uint64_t kK512[80];
const std::uint64_t kK512[80] = {
    0x428a2f98d728ae22ULL, 0x7137449123ef65cdULL, 0xb5c0fbcfec4d3b2fULL,
    0xe9b5dba58189dbbcULL, 0x3956c25bf348b538ULL, 0x59f111f1b605d019ULL,
    0x923f82a4af194f9bULL, 0xab1c5ed5da6d8118ULL, 0xd807aa98a3030242ULL,
    0x12835b0145706fbeULL, 0x243185be4ee4b28cULL, 0x550c7dc3d5ffb4e2ULL,
    0x72be5d74f27b896fULL, 0x80deb1fe3b1696b1ULL, 0x9bdc06a725c71235ULL,
    0xc19bf174cf692694ULL, 0xe49b69c19ef14ad2ULL, 0xefbe4786384f25e3ULL,
    0x0fc19dc68b8cd5b5ULL, 0x240ca1cc77ac9c65ULL, 0x2de92c6f592b0275ULL,
    0x4a7484aa6ea6e483ULL, 0x5cb0a9dcbd41fbd4ULL, 0x76f988da831153b5ULL,
    0x983e5152ee66dfabULL, 0xa831c66d2db43210ULL, 0xb00327c898fb213fULL,
    0xbf597fc7beef0ee4ULL, 0xc6e00bf33da88fc2ULL, 0xd5a79147930aa725ULL,
    0x06ca6351e003826fULL, 0x142929670a0e6e70ULL, 0x27b70a8546d22ffcULL,
    0x2e1b21385c26c926ULL, 0x4d2c6dfc5ac42aedULL, 0x53380d139d95b3dfULL,
    0x650a73548baf63deULL, 0x766a0abb3c77b2a8ULL, 0x81c2c92e47edaee6ULL,
    0x92722c851482353bULL, 0xa2bfe8a14cf10364ULL, 0xa81a664bbc423001ULL,
    0xc24b8b70d0f89791ULL, 0xc76c51a30654be30ULL, 0xd192e819d6ef5218ULL,
    0xd69906245565a910ULL, 0xf40e35855771202aULL, 0x106aa07032bbd1b8ULL,
    0x19a4c116b8d2d0c8ULL, 0x1e376c085141ab53ULL, 0x2748774cdf8eeb99ULL,
    0x34b0bcb5e19b48a8ULL, 0x391c0cb3c5c95a63ULL, 0x4ed8aa4ae3418acbULL,
    0x5b9cca4f7763e373ULL, 0x682e6ff3d6b2b8a3ULL, 0x748f82ee5defb2fcULL,
    0x78a5636f43172f60ULL, 0x84c87814a1f0ab72ULL, 0x8cc702081a6439ecULL,
    0x90befffa23631e28ULL, 0xa4506cebde82bde9ULL, 0xbef9a3f7b2c67915ULL,
    0xc67178f2e372532bULL, 0xca273eceea26619cULL, 0xd186b8c721c0c207ULL,
    0xeada7dd6cde0eb1eULL, 0xf57d4f7fee6ed178ULL, 0x06f067aa72176fbaULL,
    0x0a637dc5a2c898a6ULL, 0x113f9804bef90daeULL, 0x1b710b35131c471bULL,
    0x28db77f523047d84ULL, 0x32caab7b40c72493ULL, 0x3c9ebe0a15c9bebcULL,
    0x431d67c49c100d4cULL, 0x4cc5d4becb3e42b6ULL, 0x597f299cfc657e2aULL,
    0x5fcb6fab3ad6faecULL, 0x6c44198c4a475817ULL};

extern const std::uint32_t kIv256[8];
const std::uint32_t kIv256[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372,
                                 0xa54ff53a, 0x510e527f, 0x9b05688c,
                                 0x1f83d9ab, 0x5be0cd19};

extern const std::uint64_t kIv512[8];
const std::uint64_t kIv512[8] = {
    0x6a09e667f3bcc908ULL, 0xbb67ae8584caa73bULL, 0x3c6ef372fe94f82bULL,
    0xa54ff53a5f1d36f1ULL, 0x510e527fade682d1ULL, 0x9b05688c2b3e6c1fULL,
    0x1f83d9abfb41bd6bULL, 0x5be0cd19137e2179ULL};

template <typename W>
struct Params;

template <>
struct Params<std::uint32_t> {
  static constexpr int rounds = 64;
  static constexpr int s0a = 7, s0b = 18, s0c = 3;    // sigma0
  static constexpr int s1a = 17, s1b = 19, s1c = 10;  // sigma1
  static constexpr int S0a = 2, S0b = 13, S0c = 22;   // Sigma0
  static constexpr int S1a = 6, S1b = 11, S1c = 25;   // Sigma1
  static const std::uint32_t* k() { return kK256; }
  static std::uint32_t load(const std::uint8_t* p) { return load_be32(p); }
};

template <>
struct Params<std::uint64_t> {
  static constexpr int rounds = 80;
  static constexpr int s0a = 1, s0b = 8, s0c = 7;
  static constexpr int s1a = 19, s1b = 61, s1c = 6;
  static constexpr int S0a = 28, S0b = 34, S0c = 39;
  static constexpr int S1a = 14, S1b = 18, S1c = 41;
  static const std::uint64_t* k() { return kK512; }
  static std::uint64_t load(const std::uint8_t* p) { return load_be64(p); }
};

template <typename W>
void compress(W state[8], const std::uint8_t* block) {
  using P = Params<W>;
  W w[P::rounds];
  for (int i = 0; i < 16; ++i) w[i] = P::load(block + i * sizeof(W));
  for (int i = 16; i < P::rounds; ++i) {
    W s0 = std::rotr(w[i - 15], P::s0a) ^ std::rotr(w[i - 15], P::s0b) ^
           (w[i - 15] >> P::s0c);
    W s1 = std::rotr(w[i - 2], P::s1a) ^ std::rotr(w[i - 2], P::s1b) ^
           (w[i - 2] >> P::s1c);
    w[i] = w[i - 16] + s0 + w[i - 7] + s1;
  }
  W a = state[0], b = state[1], c = state[2], d = state[3];
  W e = state[4], f = state[5], g = state[6], h = state[7];
  for (int i = 0; i < P::rounds; ++i) {
    W S1 = std::rotr(e, P::S1a) ^ std::rotr(e, P::S1b) ^ std::rotr(e, P::S1c);
    W ch = (e & f) ^ (~e & g);
    W t1 = h + S1 + ch + P::k()[i] + w[i];
    W S0 = std::rotr(a, P::S0a) ^ std::rotr(a, P::S0b) ^ std::rotr(a, P::S0c);
    W maj = (a & b) ^ (a & c) ^ (b & c);
    W t2 = S0 + maj;
    h = g;
    g = f;
    f = e;
    e = d + t1;
    d = c;
    c = b;
    b = a;
    a = t1 + t2;
  }
  state[0] += a;
  state[1] += b;
  state[2] += c;
  state[3] += d;
  state[4] += e;
  state[5] += f;
  state[6] += g;
  state[7] += h;
}

template void compress<std::uint32_t>(std::uint32_t[8], const std::uint8_t*);
template void compress<std::uint64_t>(std::uint64_t[8], const std::uint8_t*);

}  // namespace sha2_detail
}  // namespace crv
