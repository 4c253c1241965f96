// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <sstream>

#include "crv/memsys/memsys.hpp"
#include "doctest.h"

using namespace crv;

TEST_CASE("buf_transfer cost formula and copy fidelity") {
  TimingConfig cfg;
  DataMemory dm;
  InternalBuffer buf;
  std::mt19937_64 rng(11);
  for (std::size_t i = 0; i < kDmWords; ++i) dm.words[i] = rng();

  CHECK(buf_transfer(BufDirection::DmToBuf, dm, buf, 0, 0, 128, cfg) == 129);
  for (std::size_t i = 0; i < 128; ++i) CHECK(buf.words[i] == dm.words[i]);

  std::uint64_t before = dm.words[500];
  CHECK(buf_transfer(BufDirection::DmToBuf, dm, buf, 500, 10, 1, cfg) == 2);
  CHECK(buf.words[10] == before);
  CHECK(dm.words[500] == before);  // source unchanged

  buf.words[20] = 0xDEADBEEF;
  CHECK(buf_transfer(BufDirection::BufToDm, dm, buf, 900, 20, 1, cfg) == 2);
  CHECK(dm.words[900] == 0xDEADBEEF);
}

TEST_CASE("buf_transfer bounds and count errors") {
  TimingConfig cfg;
  DataMemory dm;
  InternalBuffer buf;
  CHECK_THROWS_AS(buf_transfer(BufDirection::DmToBuf, dm, buf, 1020, 0, 8, cfg),
                  BoundsError);
  CHECK_THROWS_AS(buf_transfer(BufDirection::DmToBuf, dm, buf, 0, 120, 16, cfg),
                  BoundsError);
  CHECK_THROWS_AS(buf_transfer(BufDirection::DmToBuf, dm, buf, 0, 0, 0, cfg),
                  SizeError);
  CHECK_THROWS_AS(buf_transfer(BufDirection::DmToBuf, dm, buf, 0, 0, 129, cfg),
                  SizeError);
}

TEST_CASE("buf_transfer cost is strictly increasing in count") {
  TimingConfig cfg;
  DataMemory dm;
  InternalBuffer buf;
  std::uint32_t prev = 0;
  for (std::size_t count = 1; count <= 128; ++count) {
    std::uint32_t c = buf_transfer(BufDirection::DmToBuf, dm, buf, 0, 0, count, cfg);
    CHECK(c > prev);
    prev = c;
  }
}

TEST_CASE("dma timing: setup + words, data lands on the completing tick") {
  TimingConfig cfg;  // setup 4, 1 word/cycle
  DataMemory dm;
  DmaChannel dma(cfg);
  std::vector<std::uint64_t> image(100);
  std::mt19937_64 rng(12);
  for (auto& w : image) w = rng();

  dma.start(image, 50);
  CHECK(dma.busy());
  int ticks = 0;
  while (dma.busy()) {
    CHECK(dm.words[50] == 0);  // nothing visible before completion
    dma.tick(dm);
    ++ticks;
  }
  CHECK(ticks == 104);
  for (int i = 0; i < 100; ++i) CHECK(dm.words[50 + i] == image[i]);
}

TEST_CASE("dma zero-word image completes after setup only") {
  TimingConfig cfg;
  DataMemory dm;
  dm.words[0] = 77;
  DmaChannel dma(cfg);
  dma.start({}, 0);
  int ticks = 0;
  while (dma.busy()) {
    dma.tick(dm);
    ++ticks;
  }
  CHECK(ticks == 4);
  CHECK(dm.words[0] == 77);
}

TEST_CASE("dma busy and bounds errors") {
  TimingConfig cfg;
  DataMemory dm;
  DmaChannel dma(cfg);
  std::vector<std::uint64_t> image(10, 1);
  dma.start(image, 0);
  CHECK_THROWS_AS(dma.start(image, 100), BusyError);
  while (dma.busy()) dma.tick(dm);
  CHECK_THROWS_AS(dma.start(image, 1020), BoundsError);
}

TEST_CASE("determinism: identical operation sequences, identical images") {
  TimingConfig cfg;
  auto run_once = [&] {
    DataMemory dm;
    InternalBuffer buf;
    DmaChannel dma(cfg);
    std::vector<std::uint64_t> image(64);
    std::mt19937_64 rng(13);
    for (auto& w : image) w = rng();
    dma.start(image, 0);
    while (dma.busy()) dma.tick(dm);
    buf_transfer(BufDirection::DmToBuf, dm, buf, 0, 0, 64, cfg);
    buf_transfer(BufDirection::BufToDm, dm, buf, 128, 0, 64, cfg);
    return dm.words;
  };
  CHECK(run_once() == run_once());
}

TEST_CASE("dm hex dump loader") {
  std::istringstream in(
      "# two words\n"
      "00000000000000ff 0123456789abcdef\n");
  std::vector<std::uint64_t> words = parse_dm_hex(in);
  REQUIRE(words.size() == 2);
  CHECK(words[0] == 0xFF);
  CHECK(words[1] == 0x0123456789ABCDEFULL);

  std::istringstream bad("abc\n");
  CHECK_THROWS_AS(parse_dm_hex(bad), Error);
}

TEST_CASE("dm raw image file round trip") {
  std::vector<std::uint64_t> words = {1, 0xFFFFFFFFFFFFFFFFULL, 42};
  std::string path = "/tmp/crv_test_dm.bin";
  save_dm_image(words, path);
  CHECK(load_dm_image(path) == words);
}
