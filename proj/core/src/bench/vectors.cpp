// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <random>
#include <sstream>

#include "crv/bench/bench.hpp"

namespace crv {

namespace {

CryptoMode vector_mode(const std::string& tag, const char* where) {
  if (tag == "SHA256") return CryptoMode::Sha256;
  if (tag == "SHA512") return CryptoMode::Sha512;
  if (tag == "SM3") return CryptoMode::Sm3;
  if (tag == "SHA3_256") return CryptoMode::Sha3_256;
  if (tag == "SHAKE128") return CryptoMode::Shake128;
  if (tag == "SHAKE256") return CryptoMode::Shake256;
  if (tag == "AES128") return CryptoMode::AesEnc;
  if (tag == "AES128DEC") return CryptoMode::AesDec;
  if (tag == "HARAKA256") return CryptoMode::Haraka256;
  if (tag == "HARAKA512") return CryptoMode::Haraka512;
  throw Error(std::string(where) + ": unknown algorithm tag '" + tag + "'");
}

// One input through the planner, core, and engines.
Bytes stack_digest(CryptoMode mode, ByteSpan input, std::size_t out_len,
                   const TimingConfig& cfg) {
  Workload w;
  w.algorithm = mode;
  w.out_len = out_len;
  PlanOptions opts;
  opts.preload_dm = true;
  Plan plan;
  if (mode_is_md(mode) || mode_is_sponge(mode)) {
    w.shape = WorkloadShape::LongMessage;
    w.message.assign(input.begin(), input.end());
    plan = plan_long_message(w, cfg, opts);
  } else {
    w.shape = WorkloadShape::ManyHash;
    w.instances.emplace_back(input.begin(), input.end());
    plan = plan_many_hash(w, cfg, opts);
  }
  return run_plan(plan, cfg).digests.at(0);
}

std::size_t default_out_len(CryptoMode mode) {
  return mode_digest_bytes(mode);
}

}  // namespace

std::vector<VectorRecord> load_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open vector file: " + path);
  std::vector<VectorRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::string cur;
    for (char c : line) {
      if (c == '\t') {
        cols.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    cols.push_back(cur);
    std::string where = path + ":" + std::to_string(lineno);
    if (cols.size() != 3 && cols.size() != 4) {
      throw Error(where + ": expected 3 or 4 tab-separated fields, got " +
                  std::to_string(cols.size()));
    }
    VectorRecord rec;
    rec.line = lineno;
    rec.mode = vector_mode(cols[0], where.c_str());
    try {
      rec.input = from_hex(cols[1]);
      rec.expected = from_hex(cols[2]);
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
    if (cols.size() == 4) {
      try {
        rec.out_len = std::stoul(cols[3]);
      } catch (const std::exception&) {
        throw Error(where + ": bad out_len '" + cols[3] + "'");
      }
    } else {
      rec.out_len = default_out_len(rec.mode);
    }
    if (rec.expected.size() != rec.out_len) {
      throw Error(where + ": output is " + std::to_string(rec.expected.size()) +
                  " bytes but out_len says " + std::to_string(rec.out_len));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

VectorsOutcome run_vector_files(const std::vector<std::string>& paths,
                                const TimingConfig& cfg) {
  VectorsOutcome out;
  for (const std::string& path : paths) {
    std::vector<VectorRecord> records = load_vector_file(path);
    for (std::size_t i = 0; i < records.size(); ++i) {
      const VectorRecord& rec = records[i];
      std::string where = path + ":" + std::to_string(rec.line);
      try {
        Bytes prim = primitive_digest(rec.mode, rec.input, rec.out_len);
        Bytes stack = stack_digest(rec.mode, rec.input, rec.out_len, cfg);
        if (prim != rec.expected) {
          out.failures.push_back(where + ": primitives disagree with vector");
          ++out.failed;
        } else if (stack != rec.expected) {
          out.failures.push_back(where + ": stack disagrees with vector");
          ++out.failed;
        } else {
          ++out.passed;
        }
      } catch (const Error& e) {
        out.failures.push_back(where + ": " + e.what());
        ++out.failed;
      }
    }
  }
  return out;
}

VectorsOutcome run_random_differential(std::size_t n_per_alg, std::uint64_t seed,
                                       const TimingConfig& cfg) {
  VectorsOutcome out;
  static const CryptoMode kModes[] = {
      CryptoMode::Sha256,   CryptoMode::Sha512,    CryptoMode::Sm3,
      CryptoMode::Sha3_256, CryptoMode::Shake128,  CryptoMode::Shake256,
      CryptoMode::AesEnc,   CryptoMode::Haraka256, CryptoMode::Haraka512};

  for (CryptoMode mode : kModes) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (std::uint64_t(mode) + 1)));
    auto rand_bytes = [&](std::size_t n) {
      Bytes b(n);
      for (auto& x : b) x = std::uint8_t(rng());
      return b;
    };
    bool hash_mode = mode_is_md(mode) || mode_is_sponge(mode);
    bool is_shake =
        mode == CryptoMode::Shake128 || mode == CryptoMode::Shake256;
    std::size_t fixed = mode == CryptoMode::AesEnc    ? 32
                        : mode == CryptoMode::Haraka256 ? 32
                        : mode == CryptoMode::Haraka512 ? 64
                                                        : 0;

    std::size_t done = 0;
    std::size_t group = 0;
    while (done < n_per_alg) {
      bool long_single = hash_mode && group % 25 == 0;
      try {
        if (long_single) {
          std::size_t len = rng() % 1500;
          std::size_t out_len = is_shake ? 1 + rng() % 64 : 0;
          Bytes msg = rand_bytes(len);
          Workload w;
          w.algorithm = mode;
          w.shape = WorkloadShape::LongMessage;
          w.message = msg;
          w.out_len = out_len;
          ScheduleResult res = run_plan(plan_long_message(w, cfg), cfg);
          Bytes oracle = primitive_digest(mode, msg,
                                          out_len ? out_len : default_out_len(mode));
          if (res.digests.at(0) != oracle) {
            ++out.failed;
            out.failures.push_back(std::string(mode_name(mode)) +
                                   ": long-message digest mismatch at input " +
                                   std::to_string(done));
          } else {
            ++out.passed;
          }
          ++done;
        } else {
          std::size_t k = std::min<std::size_t>(8, n_per_alg - done);
          std::size_t len = hash_mode ? rng() % 200 : fixed;
          std::size_t out_len = is_shake ? 1 + rng() % 64 : 0;
          Workload w;
          w.algorithm = mode;
          w.shape = WorkloadShape::ManyHash;
          w.out_len = out_len;
          for (std::size_t i = 0; i < k; ++i) {
            w.instances.push_back(rand_bytes(len));
          }
          ScheduleResult res = run_plan(plan_many_hash(w, cfg), cfg);
          for (std::size_t i = 0; i < k; ++i) {
            Bytes oracle =
                primitive_digest(mode, w.instances[i],
                                 out_len ? out_len : default_out_len(mode));
            if (res.digests.at(i) != oracle) {
              ++out.failed;
              out.failures.push_back(std::string(mode_name(mode)) +
                                     ": batch digest mismatch at input " +
                                     std::to_string(done + i));
            } else {
              ++out.passed;
            }
          }
          done += k;
        }
      } catch (const Error& e) {
        ++out.failed;
        out.failures.push_back(std::string(mode_name(mode)) + ": " + e.what());
        ++done;
      }
      ++group;
    }
  }
  return out;
}

}  // namespace crv
