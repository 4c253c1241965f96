// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Reporting layer: cycle-table reproduction, throughput/efficiency and
// speedup reports, and the vector/differential runner. Reference figures
// come from the published FPGA implementation of the modeled co-processor
// and are labeled [paper-constant] wherever they appear; simulated numbers
// are labeled [measured-in-simulation].
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crv/config.hpp"
#include "crv/scheduler/scheduler.hpp"

namespace crv {

enum class ReportFormat { Table, Csv, JsonLines };

ReportFormat report_format_from_name(std::string_view name);

inline constexpr const char* kProvenanceBanner =
    "# provenance: [measured-in-simulation] = produced by this run; "
    "[paper-constant] = published reference figure, not measured here";

struct AlgRef {
  CryptoMode mode;
  const char* name;
  std::uint32_t ref_cycles;   // [paper-constant]
  std::uint32_t input_bytes;  // derived from the published table
  double ref_cpb;             // [paper-constant]
  double speedup_factor;      // [paper-constant], 0 = not published
};

// The nine benchmark rows plus the published operating constants.
struct PaperReference {
  static const std::vector<AlgRef>& table();
  static const AlgRef& row(CryptoMode mode);

  // Reference cycles/byte must reproduce ref_cpb to two decimals.
  static bool internally_consistent();
};

double throughput_mbps(std::size_t bytes, std::uint64_t cycles, double freq_mhz);

struct CycleRow {
  std::string alg;
  std::size_t input_bytes = 0;
  std::uint64_t cycles = 0;          // [measured-in-simulation]
  double cpb = 0;                    // [measured-in-simulation]
  double throughput_mbps = 0;        // [measured-in-simulation]
  std::uint32_t ref_cycles = 0;      // [paper-constant]
  double ref_cpb = 0;                // [paper-constant]
  double delta_pct = 0;              // measured vs reference
  std::string error;                 // non-empty when the run failed
};

struct CycleReport {
  std::vector<CycleRow> rows;
  std::string render(ReportFormat fmt) const;
  bool within_tolerance(double pct) const;
};

// Runs each algorithm's paper-shaped single-message workload (input sizes
// from the reference table) with DM pre-staged, and reports deltas.
CycleReport cmd_cycles(const TimingConfig& cfg, std::uint64_t seed);

// Builds the single-message workload used by cmd_cycles (also the
// acceptance suite); deterministic in (mode, seed).
Workload paper_workload(CryptoMode mode, std::uint64_t seed);
Plan paper_plan(CryptoMode mode, const TimingConfig& cfg, std::uint64_t seed);

struct EfficiencyRow {
  std::string alg;
  double measured_cpb = 0;        // [measured-in-simulation]
  double measured_mbps = 0;       // [measured-in-simulation]
  double measured_mbps_per_w = 0; // measured throughput / soc power
  double ref_mbps_per_w = 0;      // derived from [paper-constant] figures
  double unit_power_w = 0;        // [paper-constant]
  std::string error;
};

struct EfficiencyReport {
  std::vector<EfficiencyRow> rows;
  double soc_power_w = 0;  // [paper-constant] denominator
  double freq_mhz = 0;
  std::string render(ReportFormat fmt) const;
};

EfficiencyReport cmd_efficiency(const TimingConfig& cfg, std::uint64_t seed);

struct SpeedupRow {
  std::string alg;
  std::uint64_t measured_cycles = 0;     // [measured-in-simulation]
  std::uint64_t baseline_cycles = 0;     // [paper-constant] back-derivation
  double speedup = 0;                    // baseline / measured
  bool available = false;                // false: no published factor
  std::string error;
};

struct SpeedupReport {
  std::vector<SpeedupRow> rows;
  std::string render(ReportFormat fmt) const;
};

SpeedupReport cmd_speedup(const TimingConfig& cfg, std::uint64_t seed);

// ----------------------------------------------------------------------
// Vector files: ALG<TAB>hex-input<TAB>hex-output[<TAB>out_len], '#'
// comments. AES input is key||plaintext.

struct VectorRecord {
  CryptoMode mode;
  Bytes input;
  Bytes expected;
  std::size_t out_len = 0;
  int line = 0;  // 1-based source line, for failure reports
};

std::vector<VectorRecord> load_vector_file(const std::string& path);

struct VectorsOutcome {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // "file:line: what"
  bool ok() const { return failed == 0; }
};

// Runs every record through the primitives and through the full
// scheduler->core->units stack; both must match the expected output.
VectorsOutcome run_vector_files(const std::vector<std::string>& paths,
                                const TimingConfig& cfg);

// Differential testing: n pseudo-random inputs per algorithm, full stack
// versus primitives. Deterministic in the seed.
VectorsOutcome run_random_differential(std::size_t n_per_alg, std::uint64_t seed,
                                       const TimingConfig& cfg);

}  // namespace crv
