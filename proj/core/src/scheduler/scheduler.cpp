// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crv/scheduler/scheduler.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace crv {

namespace {

// Buffer layout: state region at 0, message ping/pong from word 32,
// Haraka round constants at 0 with inputs at 96.
constexpr std::uint32_t kStateBase = 0;
constexpr std::uint32_t kMsgBase = 32;
constexpr std::uint32_t kHarakaInputBase = 96;
constexpr std::uint32_t kSeedBase = 96;

struct Emitter {
  Program prog;

  void op(Instruction in) { prog.code.push_back(in); }
  void li(std::uint8_t rd, std::int32_t value) {
    Instruction in;
    in.op = Op::Addi;
    in.rd = rd;
    in.imm = value;
    op(in);
  }
  void addi(std::uint8_t rd, std::uint8_t rs1, std::int32_t value) {
    Instruction in;
    in.op = Op::Addi;
    in.rd = rd;
    in.rs1 = rs1;
    in.imm = value;
    op(in);
  }
  void buf_load(std::uint8_t buf_base, std::uint32_t dm_addr, std::uint32_t count) {
    Instruction in;
    in.op = Op::BufLoad;
    in.buf_base = buf_base;
    in.dm_addr = std::uint16_t(dm_addr);
    in.count = std::uint8_t(count);
    op(in);
  }
  void buf_store(std::uint32_t dm_addr, std::uint8_t buf_base, std::uint32_t count) {
    Instruction in;
    in.op = Op::BufStore;
    in.buf_base = buf_base;
    in.dm_addr = std::uint16_t(dm_addr);
    in.count = std::uint8_t(count);
    op(in);
  }
  void dispatch(CryptoMode mode, std::uint8_t state, std::uint8_t msg,
                std::uint32_t count, std::uint8_t flags) {
    Instruction in;
    in.op = Op::CryptoDispatch;
    in.mode = mode;
    in.state_base = state;
    in.msg_base = msg;
    in.count = std::uint8_t(count);
    in.flags = flags;
    op(in);
  }
  void wait(EngineSel engine) {
    Instruction in;
    in.op = Op::CryptoWait;
    in.engine = engine;
    op(in);
  }
  void dma_start(std::uint8_t dm_reg, std::uint8_t off_reg, std::uint32_t count) {
    Instruction in;
    in.op = Op::DmaStart;
    in.rs1 = dm_reg;
    in.rs2 = off_reg;
    in.imm = std::int32_t(count);
    op(in);
  }
  void dma_wait() {
    Instruction in;
    in.op = Op::DmaWait;
    op(in);
  }
  void halt() {
    Instruction in;
    in.op = Op::Halt;
    op(in);
  }
};

EngineSel engine_sel(CryptoMode m) {
  switch (engine_for(m)) {
    case EngineId::Md: return EngineSel::Md;
    case EngineId::AesHaraka: return EngineSel::AesHaraka;
    case EngineId::Keccak: return EngineSel::Keccak;
  }
  return EngineSel::All;
}

bool big_endian_words(CryptoMode m) { return mode_is_md(m); }

Words pack_for(CryptoMode m, ByteSpan bytes) {
  return big_endian_words(m) ? pack_words_be(bytes) : pack_words_le(bytes);
}

// Message padded to whole engine blocks for the dispatchable modes.
Bytes padded_input(CryptoMode m, ByteSpan message) {
  switch (m) {
    case CryptoMode::Sha256: return md_pad(MdMode::Sha256, message);
    case CryptoMode::Sha512: return md_pad(MdMode::Sha512, message);
    case CryptoMode::Sm3: return md_pad(MdMode::Sm3, message);
    case CryptoMode::Sha3_256: return sponge_pad(SpongeMode::Sha3_256, message);
    case CryptoMode::Shake128: return sponge_pad(SpongeMode::Shake128, message);
    case CryptoMode::Shake256: return sponge_pad(SpongeMode::Shake256, message);
    default: return Bytes(message.begin(), message.end());  // fixed-size input
  }
}

std::size_t effective_out_len(const Workload& w) {
  if (w.out_len == 0) return mode_digest_bytes(w.algorithm);
  if (w.algorithm != CryptoMode::Shake128 && w.algorithm != CryptoMode::Shake256) {
    if (w.out_len != mode_digest_bytes(w.algorithm)) {
      throw LayoutError("output length is fixed for this algorithm");
    }
  }
  if (w.out_len < 1) throw LayoutError("output length must be >= 1");
  return w.out_len;
}

std::uint8_t result_base(CryptoMode m, std::uint32_t input_base) {
  switch (engine_for(m)) {
    case EngineId::Md:
    case EngineId::Keccak:
      return kStateBase;
    case EngineId::AesHaraka:
      // AES writes the processed block in place (past the 2 key words);
      // Haraka writes its digest over the input start.
      return std::uint8_t(m == CryptoMode::AesEnc || m == CryptoMode::AesDec
                              ? input_base + 2
                              : input_base);
  }
  return kStateBase;
}

void emit_seeded_rc_prologue(Emitter& e, const Workload& w,
                             std::uint32_t seed_dm, std::uint32_t rc_count) {
  e.buf_load(kSeedBase, seed_dm, 8);
  std::uint32_t instr_count = (rc_count + 7) / 8;
  Instruction in;
  in.op = Op::CryptoDispatch;
  in.mode = CryptoMode::HarakaRc;
  in.state_base = kSeedBase;
  in.msg_base = 0;
  in.count = std::uint8_t(instr_count);
  e.op(in);
  e.wait(EngineSel::AesHaraka);
  (void)w;
}

Words seed_words(const Workload& w) {
  // The rc-precompute instruction reads fixed 4-word seed fields, so the
  // schedulable form of the seeds is exactly 32 bytes each.
  const Bytes& sk = w.seeded_rc->first;
  const Bytes& pk = w.seeded_rc->second;
  if (sk.size() != 32 || pk.size() != 32) {
    throw LayoutError("seeded rc requires 32-byte sk and pk");
  }
  Words out = pack_words_le(sk);
  Words pkw = pack_words_le(pk);
  out.insert(out.end(), pkw.begin(), pkw.end());
  return out;
}

}  // namespace

Plan plan_long_message(const Workload& w, const TimingConfig& cfg,
                       const PlanOptions& opts) {
  if (w.shape != WorkloadShape::LongMessage) {
    throw LayoutError("workload shape is not LONG_MESSAGE");
  }
  CryptoMode m = w.algorithm;
  if (!mode_is_md(m) && !mode_is_sponge(m)) {
    throw LayoutError("long-message scheduling needs a hash algorithm");
  }

  Bytes padded = padded_input(m, w.message);
  std::uint32_t bw = mode_block_bytes(m) / 8;
  std::uint32_t n = std::uint32_t(padded.size() / mode_block_bytes(m));
  std::size_t out_len = effective_out_len(w);
  std::uint32_t dw = std::uint32_t((out_len + 7) / 8);
  std::uint32_t rate_w = bw;

  Plan plan;
  plan.mode = m;
  plan.ping_base = kMsgBase;
  plan.pong_base = kMsgBase + bw;
  if (plan.pong_base + bw > kBufWords) throw LayoutError("block does not fit buffer");

  std::uint32_t cb = std::min<std::uint32_t>(n, 8);  // blocks per DM chunk
  plan.chunk_blocks = cb;
  std::uint32_t halves_base = std::max<std::uint32_t>(16, dw);
  std::uint32_t half_words = cb * bw;
  std::uint32_t half_base[2] = {halves_base, halves_base + half_words};
  std::uint32_t chunks = (n + cb - 1) / cb;

  Words blocks = pack_for(m, padded);

  Emitter e;
  bool streaming = !opts.preload_dm;
  if (streaming) {
    if (half_base[1] + half_words > kDmWords) {
      throw LayoutError("chunk halves do not fit data memory");
    }
    plan.host_image = blocks;
    e.li(1, std::int32_t(half_base[0]));
    e.li(2, std::int32_t(half_base[1]));
    std::uint32_t w0 = std::min<std::uint32_t>(cb, n) * bw;
    e.li(3, std::int32_t(w0));  // host offset of the next chunk to start
    e.dma_start(1, 0, w0);
    e.dma_wait();
  } else {
    // The whole padded message is staged contiguously in DM before cycle 0.
    if (halves_base + n * bw > kDmWords) {
      throw LayoutError("preloaded message does not fit data memory");
    }
  }

  auto block_dm_addr = [&](std::uint32_t g) {
    if (!streaming) return halves_base + g * bw;
    std::uint32_t chunk = g / cb;
    std::uint32_t within = g % cb;
    return half_base[chunk % 2] + within * bw;
  };

  EngineSel sel = engine_sel(m);
  e.buf_load(std::uint8_t(plan.ping_base), block_dm_addr(0), bw);
  for (std::uint32_t g = 0; g < n; ++g) {
    std::uint8_t region = std::uint8_t(g % 2 ? plan.pong_base : plan.ping_base);
    e.dispatch(m, kStateBase, region, 1, g == 0 ? kDispatchInit : 0);
    bool chunk_first = streaming && g % cb == 0;
    std::uint32_t chunk = g / cb;
    if (chunk_first && chunk + 1 < chunks) {
      std::uint32_t next_words =
          std::min<std::uint32_t>(cb, n - (chunk + 1) * cb) * bw;
      e.dma_start((chunk + 1) % 2 ? 2 : 1, 3, next_words);
      e.addi(3, 3, std::int32_t(next_words));
    }
    if (g + 1 < n) {
      bool crosses_chunk = streaming && (g + 1) % cb == 0;
      if (crosses_chunk) e.dma_wait();
      std::uint8_t next_region =
          std::uint8_t((g + 1) % 2 ? plan.pong_base : plan.ping_base);
      e.buf_load(next_region, block_dm_addr(g + 1), bw);
    }
    e.wait(sel);
  }

  // Result write-out. SHAKE outputs longer than one rate block squeeze
  // additional permutations.
  if (mode_is_sponge(m) && out_len > mode_block_bytes(m)) {
    std::uint32_t remaining = dw;
    std::uint32_t seg = 0;
    e.buf_store(0, kStateBase, std::min(remaining, rate_w));
    remaining -= std::min(remaining, rate_w);
    while (remaining > 0) {
      ++seg;
      e.dispatch(m, kStateBase, kStateBase, 1, kDispatchNoAbsorb);
      e.wait(sel);
      e.buf_store(seg * rate_w, kStateBase, std::min(remaining, rate_w));
      remaining -= std::min(remaining, rate_w);
    }
  } else {
    e.buf_store(0, kStateBase, dw);
  }
  e.halt();

  plan.digests.push_back({0, std::uint32_t(out_len)});
  plan.program.code = std::move(e.prog.code);
  if (!streaming) {
    plan.program.dm_base = halves_base;
    plan.program.dm_image = std::move(blocks);
  }
  plan.program.validate(cfg.im_capacity);
  return plan;
}

Plan plan_many_hash(const Workload& w, const TimingConfig& cfg,
                    const PlanOptions& opts) {
  if (w.shape != WorkloadShape::ManyHash) {
    throw LayoutError("workload shape is not MANY_HASH");
  }
  if (w.instances.empty()) throw LayoutError("no instances");
  CryptoMode m = w.algorithm;
  if (m == CryptoMode::HarakaRc) throw LayoutError("haraka_rc is not a workload");

  std::size_t in_bytes = w.instances.front().size();
  for (const Bytes& b : w.instances) {
    if (b.size() != in_bytes) {
      throw LayoutError("many-hash instances must share one size");
    }
  }

  std::size_t out_len = effective_out_len(w);
  std::uint32_t dw = std::uint32_t((out_len + 7) / 8);
  if (mode_is_sponge(m) && out_len > mode_block_bytes(m)) {
    throw LayoutError("many-hash sponge output is limited to one rate block");
  }

  bool fixed_input = engine_for(m) == EngineId::AesHaraka;
  std::uint32_t expect =
      m == CryptoMode::AesEnc || m == CryptoMode::AesDec ? 32
      : m == CryptoMode::Haraka256                       ? 32
      : m == CryptoMode::Haraka512                       ? 64
                                                         : 0;
  if (fixed_input && in_bytes != expect) {
    throw LayoutError("instance size must be " + std::to_string(expect) +
                      " bytes for this algorithm");
  }

  // Per-instance layout.
  Bytes first_padded = padded_input(m, w.instances.front());
  std::uint32_t block_bytes = mode_block_bytes(m);
  std::uint32_t blocks = fixed_input
                             ? 1
                             : std::uint32_t(first_padded.size() / block_bytes);
  std::uint32_t iw = std::uint32_t(first_padded.size() / 8);
  std::uint32_t input_base = engine_for(m) == EngineId::AesHaraka
                                 ? kHarakaInputBase
                                 : kMsgBase;
  if (blocks > 7 || input_base + iw > kBufWords) {
    throw LayoutError("instance size exceeds slot capacity");
  }

  std::uint32_t rc_count = 0;
  bool seeded = w.seeded_rc.has_value();
  if (seeded && (m != CryptoMode::Haraka256 && m != CryptoMode::Haraka512)) {
    throw LayoutError("seeded constants only apply to Haraka workloads");
  }
  if (seeded) {
    rc_count = m == CryptoMode::Haraka512 ? 40 : 24;
  }

  std::size_t n = w.instances.size();
  std::size_t batches = (n + 7) / 8;
  bool streaming = !opts.preload_dm && batches > 0;

  // DM layout: digest region, optional seeds, then the two slot groups.
  Plan plan;
  plan.mode = m;
  plan.slot_words = iw;
  std::uint32_t out_base = 0;
  std::uint32_t seed_dm = out_base + std::uint32_t(n) * dw;
  std::uint32_t groups_base = seed_dm + (seeded ? 8 : 0);
  plan.slot_group_base[0] = groups_base;
  plan.slot_group_base[1] = groups_base + 8 * iw;
  plan.batches = batches;
  std::uint32_t dm_end = plan.slot_group_base[1] + 8 * iw;
  if (dm_end > kDmWords) throw LayoutError("slot groups do not fit data memory");

  // Host image: instances padded, batch-major, 8 slots per batch.
  Words image;
  std::vector<Words> padded_instances;
  padded_instances.reserve(n);
  for (const Bytes& inst : w.instances) {
    padded_instances.push_back(pack_for(m, padded_input(m, inst)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    image.insert(image.end(), padded_instances[i].begin(),
                 padded_instances[i].end());
  }

  Emitter e;
  Words dm_image;
  if (seeded) {
    Words seeds = seed_words(w);
    dm_image.resize(seed_dm + 8 - out_base, 0);
    std::copy(seeds.begin(), seeds.end(), dm_image.begin() + seed_dm);
    emit_seeded_rc_prologue(e, w, seed_dm, rc_count);
  }

  std::uint8_t flags = std::uint8_t((seeded ? kDispatchRcBuf : 0) |
                                    (fixed_input ? 0 : kDispatchInit));
  std::uint8_t state_base =
      m == CryptoMode::AesEnc || m == CryptoMode::AesDec
          ? std::uint8_t(input_base)  // key is the first two input words
      : seeded ? 0
               : kStateBase;
  std::uint8_t msg_base =
      m == CryptoMode::AesEnc || m == CryptoMode::AesDec
          ? std::uint8_t(input_base + 2)
          : std::uint8_t(input_base);
  std::uint8_t res_base = result_base(m, input_base);
  EngineSel sel = engine_sel(m);

  auto slot_addr = [&](std::size_t batch, std::size_t slot) {
    return plan.slot_group_base[batch % 2] + std::uint32_t(slot) * iw;
  };

  if (streaming) {
    plan.host_image = std::move(image);
    e.li(1, std::int32_t(plan.slot_group_base[0]));
    e.li(2, std::int32_t(plan.slot_group_base[1]));
    std::uint32_t w0 = std::uint32_t(std::min<std::size_t>(8, n)) * iw;
    e.li(3, std::int32_t(w0));
    e.dma_start(1, 0, w0);
    e.dma_wait();
  } else {
    // Preloaded: stage every instance in its batch-0..k slot image,
    // packed back to back from the first group base.
    dm_image.resize(std::max<std::size_t>(dm_image.size(),
                                          groups_base - out_base),
                    0);
    dm_image.insert(dm_image.end(), image.begin(), image.end());
    if (batches > 2) {
      throw LayoutError("preloaded many-hash is limited to 16 instances");
    }
  }

  std::size_t idx = 0;
  for (std::size_t batch = 0; batch < batches; ++batch) {
    std::size_t in_batch = std::min<std::size_t>(8, n - batch * 8);
    if (streaming && batch + 1 < batches) {
      std::size_t next_count = std::min<std::size_t>(8, n - (batch + 1) * 8);
      std::uint32_t next_words = std::uint32_t(next_count) * iw;
      e.dma_start((batch + 1) % 2 ? 2 : 1, 3, next_words);
      e.addi(3, 3, std::int32_t(next_words));
    }
    for (std::size_t slot = 0; slot < in_batch; ++slot, ++idx) {
      std::uint32_t addr = streaming
                               ? slot_addr(batch, slot)
                               : groups_base + std::uint32_t(idx) * iw;
      e.buf_load(std::uint8_t(input_base), addr, iw);
      e.dispatch(m, state_base, msg_base, blocks, flags);
      e.wait(sel);
      e.buf_store(out_base + std::uint32_t(idx) * dw, res_base, dw);
      plan.digests.push_back(
          {out_base + std::uint32_t(idx) * dw, std::uint32_t(out_len)});
    }
    if (streaming && batch + 1 < batches) e.dma_wait();
  }
  e.halt();

  plan.program.code = std::move(e.prog.code);
  plan.program.dm_base = out_base;
  plan.program.dm_image = std::move(dm_image);
  plan.program.validate(cfg.im_capacity);
  return plan;
}

ScheduleTrace analyze(const ExecutionTrace& trace) {
  if (!trace.complete) {
    throw Error("analysis refused: trace is not a normally halted run");
  }
  ScheduleTrace s;
  s.t_compute = trace.engine_busy_cycles();
  s.t_dma = trace.dma_busy_cycles();
  s.t_total = trace.cycles();
  s.overlap = trace.overlap_cycles();
  return s;
}

namespace {

std::string trim_ws(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

WorkloadConfig parse_workload_config(std::istream& in) {
  WorkloadConfig wc;
  Bytes sk, pk;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim_ws(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error("workload line " + std::to_string(lineno) + ": missing '='");
    }
    std::string key = trim_ws(line.substr(0, eq));
    std::string value = trim_ws(line.substr(eq + 1));
    try {
      if (key == "algorithm") wc.algorithm = mode_from_name(value);
      else if (key == "shape") {
        if (value == "long_message") wc.shape = WorkloadShape::LongMessage;
        else if (value == "many_hash") wc.shape = WorkloadShape::ManyHash;
        else throw Error("unknown shape '" + value + "'");
      } else if (key == "message_bytes") wc.message_bytes = std::stoull(value);
      else if (key == "instance_count") wc.instance_count = std::stoull(value);
      else if (key == "instance_bytes") wc.instance_bytes = std::stoull(value);
      else if (key == "out_len") wc.out_len = std::stoull(value);
      else if (key == "seed") wc.seed = std::stoull(value);
      else if (key == "preload_dm") wc.preload_dm = std::stoull(value) != 0;
      else if (key == "sk_hex") sk = from_hex(value);
      else if (key == "pk_hex") pk = from_hex(value);
      else wc.timing_overrides += line + "\n";  // validated by parse_config
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error("workload line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!sk.empty() || !pk.empty()) {
    if (sk.empty() || pk.empty()) {
      throw Error("seeded constants need both sk_hex and pk_hex");
    }
    wc.seeded_rc = {std::move(sk), std::move(pk)};
  }
  if (!wc.timing_overrides.empty()) {
    std::istringstream check(wc.timing_overrides);
    parse_config(check);  // reject unknown keys early
  }
  return wc;
}

WorkloadConfig load_workload_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open workload config: " + path);
  return parse_workload_config(in);
}

Workload materialize(const WorkloadConfig& wc) {
  std::mt19937_64 rng(wc.seed);
  auto rand_bytes = [&](std::size_t n) {
    Bytes b(n);
    for (auto& x : b) x = std::uint8_t(rng());
    return b;
  };
  Workload w;
  w.algorithm = wc.algorithm;
  w.shape = wc.shape;
  w.out_len = wc.out_len;
  w.seeded_rc = wc.seeded_rc;
  if (wc.shape == WorkloadShape::LongMessage) {
    w.message = rand_bytes(wc.message_bytes);
  } else {
    std::size_t bytes = wc.instance_bytes;
    if (bytes == 0) {
      bytes = wc.algorithm == CryptoMode::Haraka512 ? 64
              : engine_for(wc.algorithm) == EngineId::AesHaraka ? 32
                                                                : 64;
    }
    for (std::size_t i = 0; i < std::max<std::size_t>(1, wc.instance_count); ++i) {
      w.instances.push_back(rand_bytes(bytes));
    }
  }
  return w;
}

TimingConfig apply_overrides(const TimingConfig& base, const WorkloadConfig& wc) {
  if (wc.timing_overrides.empty()) return base;
  // parse_config starts from the compiled-in defaults, so parse the
  // override lines into a fresh config and carry over exactly the fields
  // that moved away from those defaults.
  TimingConfig cfg = base;
  TimingConfig defaults;
  std::istringstream all(wc.timing_overrides);
  TimingConfig parsed = parse_config(all);
  auto pick_u32 = [](std::uint32_t base_v, std::uint32_t parsed_v,
                     std::uint32_t default_v) {
    return parsed_v != default_v ? parsed_v : base_v;
  };
  auto pick_d = [](double base_v, double parsed_v, double default_v) {
    return parsed_v != default_v ? parsed_v : base_v;
  };
  cfg.fill_md = pick_u32(base.fill_md, parsed.fill_md, defaults.fill_md);
  cfg.fill_aes = pick_u32(base.fill_aes, parsed.fill_aes, defaults.fill_aes);
  cfg.fill_keccak =
      pick_u32(base.fill_keccak, parsed.fill_keccak, defaults.fill_keccak);
  cfg.dispatch_overhead_md = pick_u32(base.dispatch_overhead_md,
                                      parsed.dispatch_overhead_md,
                                      defaults.dispatch_overhead_md);
  cfg.dispatch_overhead_aes = pick_u32(base.dispatch_overhead_aes,
                                       parsed.dispatch_overhead_aes,
                                       defaults.dispatch_overhead_aes);
  cfg.dispatch_overhead_keccak = pick_u32(base.dispatch_overhead_keccak,
                                          parsed.dispatch_overhead_keccak,
                                          defaults.dispatch_overhead_keccak);
  for (int i = 0; i < kCryptoModeCount; ++i) {
    cfg.dispatch_overhead_mode[i] = pick_u32(base.dispatch_overhead_mode[i],
                                             parsed.dispatch_overhead_mode[i],
                                             defaults.dispatch_overhead_mode[i]);
  }
  cfg.rc_precompute_cycles =
      pick_u32(base.rc_precompute_cycles, parsed.rc_precompute_cycles,
               defaults.rc_precompute_cycles);
  cfg.buf_setup = pick_u32(base.buf_setup, parsed.buf_setup, defaults.buf_setup);
  cfg.buf_words_per_cycle = pick_u32(base.buf_words_per_cycle,
                                     parsed.buf_words_per_cycle,
                                     defaults.buf_words_per_cycle);
  cfg.dma_setup = pick_u32(base.dma_setup, parsed.dma_setup, defaults.dma_setup);
  cfg.dma_words_per_cycle = pick_u32(base.dma_words_per_cycle,
                                     parsed.dma_words_per_cycle,
                                     defaults.dma_words_per_cycle);
  cfg.hazard_ex_use =
      pick_u32(base.hazard_ex_use, parsed.hazard_ex_use, defaults.hazard_ex_use);
  cfg.hazard_branch_flush = pick_u32(base.hazard_branch_flush,
                                     parsed.hazard_branch_flush,
                                     defaults.hazard_branch_flush);
  cfg.im_capacity =
      pick_u32(base.im_capacity, parsed.im_capacity, defaults.im_capacity);
  cfg.frequency_mhz =
      pick_d(base.frequency_mhz, parsed.frequency_mhz, defaults.frequency_mhz);
  cfg.power_md_w = pick_d(base.power_md_w, parsed.power_md_w, defaults.power_md_w);
  cfg.power_keccak_w =
      pick_d(base.power_keccak_w, parsed.power_keccak_w, defaults.power_keccak_w);
  cfg.power_aes_w =
      pick_d(base.power_aes_w, parsed.power_aes_w, defaults.power_aes_w);
  cfg.power_core_w =
      pick_d(base.power_core_w, parsed.power_core_w, defaults.power_core_w);
  cfg.power_soc_dynamic_w = pick_d(base.power_soc_dynamic_w,
                                   parsed.power_soc_dynamic_w,
                                   defaults.power_soc_dynamic_w);
  return cfg;
}

Plan plan_workload(const Workload& w, const TimingConfig& cfg,
                   const PlanOptions& opts) {
  return w.shape == WorkloadShape::LongMessage ? plan_long_message(w, cfg, opts)
                                               : plan_many_hash(w, cfg, opts);
}

std::string schedule_summary(const ScheduleTrace& s) {
  std::ostringstream os;
  os << "t_compute: " << s.t_compute << "\n"
     << "t_dma: " << s.t_dma << "\n"
     << "t_total: " << s.t_total << "\n"
     << "overlap: " << s.overlap << "\n";
  return os.str();
}

ScheduleResult run_plan(const Plan& plan, const TimingConfig& cfg,
                        std::uint64_t limit) {
  Machine machine(plan.program, cfg, plan.host_image);
  ScheduleResult result{machine.run(limit), {}, {}};
  result.sched = analyze(result.run.trace);
  bool be = big_endian_words(plan.mode);
  for (const DigestRef& ref : plan.digests) {
    std::uint32_t words = (ref.bytes + 7) / 8;
    WordSpan span(machine.dm.words.data() + ref.dm_addr, words);
    result.digests.push_back(be ? unpack_bytes_be(span, ref.bytes)
                                : unpack_bytes_le(span, ref.bytes));
  }
  return result;
}

}  // namespace crv
