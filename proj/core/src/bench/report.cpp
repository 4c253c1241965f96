// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "crv/bench/bench.hpp"
#include "json.hpp"

namespace crv {

ReportFormat report_format_from_name(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json-lines" || name == "jsonl") return ReportFormat::JsonLines;
  throw Error("unknown report format: " + std::string(name));
}

const std::vector<AlgRef>& PaperReference::table() {
  static const std::vector<AlgRef> rows = {
      {CryptoMode::Sha256, "SHA-256", 146, 64, 2.28, 660},
      {CryptoMode::Sha512, "SHA-512", 263, 128, 2.05, 604},
      {CryptoMode::Sm3, "SM3", 144, 64, 2.25, 789},
      {CryptoMode::Shake128, "SHAKE-128", 265, 100, 2.65, 220},
      {CryptoMode::Shake256, "SHAKE-256", 261, 100, 2.61, 220},
      {CryptoMode::Sha3_256, "SHA3-256", 261, 64, 4.08, 0},
      {CryptoMode::AesEnc, "AES-128", 98, 16, 6.13, 965},
      {CryptoMode::Haraka256, "HARAKA-256", 110, 32, 3.44, 1061},
      {CryptoMode::Haraka512, "HARAKA-512", 205, 64, 3.20, 780},
  };
  return rows;
}

const AlgRef& PaperReference::row(CryptoMode mode) {
  for (const AlgRef& r : table()) {
    if (r.mode == mode) return r;
  }
  throw ModeError("no reference row for mode");
}

bool PaperReference::internally_consistent() {
  for (const AlgRef& r : table()) {
    double cpb = double(r.ref_cycles) / double(r.input_bytes);
    if (std::abs(std::round(cpb * 100) / 100 - r.ref_cpb) > 0.005) return false;
  }
  return true;
}

double throughput_mbps(std::size_t bytes, std::uint64_t cycles, double freq_mhz) {
  if (cycles == 0) return 0;
  return double(bytes) * 8.0 * freq_mhz / double(cycles);
}

Workload paper_workload(CryptoMode mode, std::uint64_t seed) {
  const AlgRef& ref = PaperReference::row(mode);
  std::mt19937_64 rng(seed ^ (std::uint64_t(mode) << 32));
  // AES processes ref.input_bytes of data; the instance also carries the key.
  std::size_t instance_bytes =
      mode == CryptoMode::AesEnc ? ref.input_bytes + 16 : ref.input_bytes;
  Bytes input(instance_bytes);
  for (auto& b : input) b = std::uint8_t(rng());
  Workload w;
  w.algorithm = mode;
  if (mode_is_md(mode) || mode_is_sponge(mode)) {
    w.shape = WorkloadShape::LongMessage;
    w.message = std::move(input);
    w.out_len = mode_is_sponge(mode) && mode != CryptoMode::Sha3_256 ? 32 : 0;
  } else {
    w.shape = WorkloadShape::ManyHash;
    w.instances.push_back(std::move(input));
  }
  return w;
}

Plan paper_plan(CryptoMode mode, const TimingConfig& cfg, std::uint64_t seed) {
  Workload w = paper_workload(mode, seed);
  PlanOptions opts;
  opts.preload_dm = true;  // the measured kernel starts with DM staged
  return w.shape == WorkloadShape::LongMessage ? plan_long_message(w, cfg, opts)
                                               : plan_many_hash(w, cfg, opts);
}

CycleReport cmd_cycles(const TimingConfig& cfg, std::uint64_t seed) {
  CycleReport report;
  for (const AlgRef& ref : PaperReference::table()) {
    CycleRow row;
    row.alg = ref.name;
    row.input_bytes = ref.input_bytes;
    row.ref_cycles = ref.ref_cycles;
    row.ref_cpb = ref.ref_cpb;
    try {
      Plan plan = paper_plan(ref.mode, cfg, seed);
      ScheduleResult res = run_plan(plan, cfg);
      // Sanity: the stack must still compute the right digest.
      Workload w = paper_workload(ref.mode, seed);
      Bytes oracle = primitive_digest(
          ref.mode,
          w.shape == WorkloadShape::LongMessage ? ByteSpan(w.message)
                                                : ByteSpan(w.instances[0]),
          32);
      if (res.digests.at(0) != oracle) {
        row.error = "digest mismatch against primitives";
      }
      row.cycles = res.sched.t_total;
      row.cpb = double(row.cycles) / double(ref.input_bytes);
      row.throughput_mbps =
          throughput_mbps(ref.input_bytes, row.cycles, cfg.frequency_mhz);
      row.delta_pct =
          100.0 * (double(row.cycles) - double(ref.ref_cycles)) / ref.ref_cycles;
    } catch (const RunawayWithTrace&) {
      row.error = "runaway simulation";
    } catch (const Error& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool CycleReport::within_tolerance(double pct) const {
  for (const CycleRow& r : rows) {
    if (!r.error.empty()) return false;
    if (std::abs(r.delta_pct) > pct) return false;
  }
  return true;
}

namespace {

std::string fmt_double(double v, int prec = 2) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << v;
  return os.str();
}

}  // namespace

std::string CycleReport::render(ReportFormat fmt) const {
  std::ostringstream os;
  if (fmt == ReportFormat::JsonLines) {
    for (const CycleRow& r : rows) {
      nlohmann::json j{
          {"alg", r.alg},
          {"input_bytes", r.input_bytes},
          {"cycles", r.cycles},
          {"cycles_per_byte", r.cpb},
          {"throughput_mbps", r.throughput_mbps},
          {"ref_cycles", r.ref_cycles},
          {"ref_cycles_per_byte", r.ref_cpb},
          {"delta_pct", r.delta_pct},
          {"provenance",
           {{"cycles", "measured-in-simulation"},
            {"cycles_per_byte", "measured-in-simulation"},
            {"throughput_mbps", "measured-in-simulation"},
            {"ref_cycles", "paper-constant"},
            {"ref_cycles_per_byte", "paper-constant"}}}};
      if (!r.error.empty()) j["error"] = r.error;
      os << j.dump() << "\n";
    }
    return os.str();
  }
  os << kProvenanceBanner << "\n";
  if (fmt == ReportFormat::Csv) {
    os << "alg,input_bytes,cycles [measured-in-simulation],cycles_per_byte "
          "[measured-in-simulation],throughput_mbps [measured-in-simulation],"
          "ref_cycles [paper-constant],ref_cycles_per_byte [paper-constant],"
          "delta_pct,error\n";
    for (const CycleRow& r : rows) {
      os << r.alg << "," << r.input_bytes << "," << r.cycles << ","
         << fmt_double(r.cpb) << "," << fmt_double(r.throughput_mbps) << ","
         << r.ref_cycles << "," << fmt_double(r.ref_cpb) << ","
         << fmt_double(r.delta_pct, 1);
      if (!r.error.empty()) os << ",ERROR:" << r.error;
      os << "\n";
    }
    return os.str();
  }
  os << "# cycles/cpb/mbps are [measured-in-simulation]; ref columns are "
        "[paper-constant]\n";
  os << std::left << std::setw(11) << "alg" << std::right << std::setw(7)
     << "bytes" << std::setw(8) << "cycles" << std::setw(7) << "cpb"
     << std::setw(9) << "mbps" << std::setw(7) << "ref" << std::setw(9)
     << "ref_cpb" << std::setw(9) << "delta%" << "\n";
  for (const CycleRow& r : rows) {
    os << std::left << std::setw(11) << r.alg << std::right << std::setw(7)
       << r.input_bytes << std::setw(8) << r.cycles << std::setw(7)
       << fmt_double(r.cpb) << std::setw(9) << fmt_double(r.throughput_mbps)
       << std::setw(7) << r.ref_cycles << std::setw(9) << fmt_double(r.ref_cpb)
       << std::setw(9) << fmt_double(r.delta_pct, 1);
    if (!r.error.empty()) os << "  ERROR:" << r.error;
    os << "\n";
  }
  return os.str();
}

EfficiencyReport cmd_efficiency(const TimingConfig& cfg, std::uint64_t seed) {
  if (cfg.power_soc_dynamic_w <= 0 || cfg.power_md_w <= 0 ||
      cfg.power_keccak_w <= 0 || cfg.power_aes_w <= 0) {
    throw Error("power figures must be positive");
  }
  EfficiencyReport report;
  report.soc_power_w = cfg.power_soc_dynamic_w;
  report.freq_mhz = cfg.frequency_mhz;
  CycleReport cycles = cmd_cycles(cfg, seed);
  for (std::size_t i = 0; i < PaperReference::table().size(); ++i) {
    const AlgRef& ref = PaperReference::table()[i];
    const CycleRow& cr = cycles.rows[i];
    EfficiencyRow row;
    row.alg = ref.name;
    row.error = cr.error;
    switch (engine_for(ref.mode)) {
      case EngineId::Md: row.unit_power_w = cfg.power_md_w; break;
      case EngineId::Keccak: row.unit_power_w = cfg.power_keccak_w; break;
      case EngineId::AesHaraka: row.unit_power_w = cfg.power_aes_w; break;
    }
    row.measured_cpb = cr.cpb;
    row.measured_mbps = cr.throughput_mbps;
    row.measured_mbps_per_w = cr.throughput_mbps / cfg.power_soc_dynamic_w;
    row.ref_mbps_per_w = 8.0 * cfg.frequency_mhz /
                         (double(ref.ref_cycles) / ref.input_bytes) /
                         cfg.power_soc_dynamic_w;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string EfficiencyReport::render(ReportFormat fmt) const {
  std::ostringstream os;
  if (fmt == ReportFormat::JsonLines) {
    for (const EfficiencyRow& r : rows) {
      nlohmann::json j{
          {"alg", r.alg},
          {"measured_cpb", r.measured_cpb},
          {"measured_mbps", r.measured_mbps},
          {"measured_mbps_per_w", r.measured_mbps_per_w},
          {"ref_mbps_per_w", r.ref_mbps_per_w},
          {"unit_power_w", r.unit_power_w},
          {"soc_power_w", soc_power_w},
          {"provenance",
           {{"measured_cpb", "measured-in-simulation"},
            {"measured_mbps", "measured-in-simulation"},
            {"measured_mbps_per_w", "measured-in-simulation"},
            {"ref_mbps_per_w", "paper-constant"},
            {"unit_power_w", "paper-constant"},
            {"soc_power_w", "paper-constant"}}}};
      if (!r.error.empty()) j["error"] = r.error;
      os << j.dump() << "\n";
    }
    return os.str();
  }
  os << kProvenanceBanner << "\n";
  os << "# efficiency is model-derived, not measured on hardware: "
        "throughput at "
     << fmt_double(freq_mhz, 0) << " MHz over " << fmt_double(soc_power_w)
     << " W SoC dynamic power [paper-constant]\n";
  if (fmt == ReportFormat::Csv) {
    os << "alg,measured_cpb [measured-in-simulation],measured_mbps "
          "[measured-in-simulation],measured_mbps_per_w "
          "[measured-in-simulation],ref_mbps_per_w [paper-constant],"
          "unit_power_w [paper-constant],error\n";
    for (const EfficiencyRow& r : rows) {
      os << r.alg << "," << fmt_double(r.measured_cpb) << ","
         << fmt_double(r.measured_mbps) << ","
         << fmt_double(r.measured_mbps_per_w) << ","
         << fmt_double(r.ref_mbps_per_w) << "," << fmt_double(r.unit_power_w, 3);
      if (!r.error.empty()) os << ",ERROR:" << r.error;
      os << "\n";
    }
    return os.str();
  }
  os << "# cpb/mbps/mbps_w are [measured-in-simulation]; ref_mbps_w and "
        "unit_w are [paper-constant]\n";
  os << std::left << std::setw(11) << "alg" << std::right << std::setw(7)
     << "cpb" << std::setw(9) << "mbps" << std::setw(9) << "mbps_w"
     << std::setw(11) << "ref_mbps_w" << std::setw(8) << "unit_w" << "\n";
  for (const EfficiencyRow& r : rows) {
    os << std::left << std::setw(11) << r.alg << std::right << std::setw(7)
       << fmt_double(r.measured_cpb) << std::setw(9)
       << fmt_double(r.measured_mbps) << std::setw(9)
       << fmt_double(r.measured_mbps_per_w) << std::setw(11)
       << fmt_double(r.ref_mbps_per_w) << std::setw(8)
       << fmt_double(r.unit_power_w, 3);
    if (!r.error.empty()) os << "  ERROR:" << r.error;
    os << "\n";
  }
  return os.str();
}

SpeedupReport cmd_speedup(const TimingConfig& cfg, std::uint64_t seed) {
  SpeedupReport report;
  CycleReport cycles = cmd_cycles(cfg, seed);
  for (std::size_t i = 0; i < PaperReference::table().size(); ++i) {
    const AlgRef& ref = PaperReference::table()[i];
    const CycleRow& cr = cycles.rows[i];
    SpeedupRow row;
    row.alg = ref.name;
    row.measured_cycles = cr.cycles;
    row.error = cr.error;
    if (ref.speedup_factor > 0) {
      row.available = true;
      row.baseline_cycles =
          std::uint64_t(std::llround(ref.speedup_factor * ref.ref_cycles));
      if (cr.cycles > 0) {
        row.speedup = double(row.baseline_cycles) / double(cr.cycles);
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string SpeedupReport::render(ReportFormat fmt) const {
  std::ostringstream os;
  if (fmt == ReportFormat::JsonLines) {
    for (const SpeedupRow& r : rows) {
      nlohmann::json j{{"alg", r.alg},
                       {"measured_cycles", r.measured_cycles},
                       {"provenance",
                        {{"measured_cycles", "measured-in-simulation"},
                         {"baseline_cycles", "paper-constant"}}}};
      if (r.available) {
        j["baseline_cycles"] = r.baseline_cycles;
        j["speedup"] = r.speedup;
      } else {
        j["note"] = "no published baseline factor";
      }
      if (!r.error.empty()) j["error"] = r.error;
      os << j.dump() << "\n";
    }
    return os.str();
  }
  os << kProvenanceBanner << "\n";
  os << "# baselines are back-derived from published reference cycles x "
        "published speedup factors [paper-constant]; no baseline core is "
        "simulated\n";
  if (fmt == ReportFormat::Csv) {
    os << "alg,measured_cycles [measured-in-simulation],baseline_cycles "
          "[paper-constant],speedup,note\n";
    for (const SpeedupRow& r : rows) {
      os << r.alg << "," << r.measured_cycles << ",";
      if (r.available) {
        os << r.baseline_cycles << "," << fmt_double(r.speedup, 1) << "x,";
      } else {
        os << "-,-,unavailable (no published baseline factor)";
      }
      if (!r.error.empty()) os << ",ERROR:" << r.error;
      os << "\n";
    }
    return os.str();
  }
  os << "# cycles are [measured-in-simulation]; baselines are "
        "[paper-constant]\n";
  os << std::left << std::setw(11) << "alg" << std::right << std::setw(8)
     << "cycles" << std::setw(10) << "baseline" << std::setw(10) << "speedup"
     << "\n";
  for (const SpeedupRow& r : rows) {
    os << std::left << std::setw(11) << r.alg << std::right << std::setw(8)
       << r.measured_cycles;
    if (r.available) {
      os << std::setw(10) << r.baseline_cycles << std::setw(9)
         << fmt_double(r.speedup, 1) << "x";
    } else {
      os << std::setw(10) << "-"
         << "  unavailable (no published baseline factor)";
    }
    if (!r.error.empty()) os << "  ERROR:" << r.error;
    os << "\n";
  }
  return os.str();
}

}  // namespace crv
