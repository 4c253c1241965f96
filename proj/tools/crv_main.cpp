// Copyright (c) the crv-sim contributors.
// SPDX-License-Identifier: Apache-2.0
//
// crv - cycle-approximate simulator of the CRV crypto co-processor.
// Subcommands: vectors, cycles, efficiency, speedup, run, asm.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crv/bench/bench.hpp"
#include "crv/isa/assembler.hpp"

namespace fs = std::filesystem;
using namespace crv;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_trace(const ExecutionTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  out << trace.to_text();
  out << trace.summary();
}

std::vector<std::string> vector_files_in(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".tsv") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error("no .tsv vector files in " + dir);
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "crv - cycle-approximate simulator of the CRV RISC-V crypto "
      "co-processor"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 1;
  std::string format = "table";
  std::string trace_path;
  app.add_option("--config", config_path, "timing/report config file");
  app.add_option("--seed", seed, "seed for generated inputs");
  app.add_option("--format", format, "table, csv, or json-lines")
      ->check(CLI::IsMember({"table", "csv", "json-lines"}));
  app.add_option("--trace", trace_path, "write the execution trace here");

  auto* vectors = app.add_subcommand(
      "vectors", "check vector files against primitives and the full stack");
  std::string vec_dir = "data/vectors";
  std::vector<std::string> vec_files;
  std::size_t random_n = 0;
  vectors->add_option("--dir", vec_dir, "directory of .tsv vector files");
  vectors->add_option("--file", vec_files, "explicit vector files");
  vectors->add_option("--random", random_n,
                      "also run N random inputs per algorithm, stack vs "
                      "primitives");

  auto* cycles = app.add_subcommand(
      "cycles", "reproduce the per-algorithm cycle table");
  auto* efficiency = app.add_subcommand(
      "efficiency", "model-derived Mbps/W report");
  auto* speedup = app.add_subcommand(
      "speedup", "measured cycles against published baseline factors");

  auto* run = app.add_subcommand(
      "run", "execute a CRV1 program image or a workload config");
  std::string run_path, host_path;
  std::uint64_t limit = kDefaultCycleLimit;
  run->add_option("program", run_path,
                  "CRV1 binary, or a key=value workload config")
      ->required();
  run->add_option("--host", host_path, "raw u64 host image for DMA");
  run->add_option("--limit", limit, "cycle limit");

  auto* asm_cmd = app.add_subcommand("asm", "assemble a source file");
  std::string asm_in, asm_out;
  bool disasm = false;
  asm_cmd->add_option("source", asm_in, "assembly source")->required();
  asm_cmd->add_option("-o,--output", asm_out, "output CRV1 binary");
  asm_cmd->add_flag("--disasm", disasm, "print the disassembly");

  CLI11_PARSE(app, argc, argv);

  try {
    TimingConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    ReportFormat fmt = report_format_from_name(format);

    if (vectors->parsed()) {
      std::vector<std::string> files =
          vec_files.empty() ? vector_files_in(vec_dir) : vec_files;
      VectorsOutcome out = run_vector_files(files, cfg);
      std::size_t vec_passed = out.passed;
      std::cout << "vectors: " << vec_passed << " passed, " << out.failed
                << " failed (" << files.size() << " files)\n";
      if (random_n > 0) {
        VectorsOutcome rnd = run_random_differential(random_n, seed, cfg);
        std::cout << "random differential: " << rnd.passed << " passed, "
                  << rnd.failed << " failed (seed " << seed << ")\n";
        out.failed += rnd.failed;
        for (auto& f : rnd.failures) out.failures.push_back(f);
      }
      for (const std::string& f : out.failures) std::cout << "  FAIL " << f << "\n";
      return out.failed == 0 ? 0 : 1;
    }

    if (cycles->parsed()) {
      std::cout << cmd_cycles(cfg, seed).render(fmt);
      return 0;
    }
    if (efficiency->parsed()) {
      std::cout << cmd_efficiency(cfg, seed).render(fmt);
      return 0;
    }
    if (speedup->parsed()) {
      std::cout << cmd_speedup(cfg, seed).render(fmt);
      return 0;
    }

    if (run->parsed()) {
      // Sniff the magic: anything that is not a CRV1 image is treated as a
      // workload config, planned, and run through the scheduler.
      {
        std::ifstream probe(run_path, std::ios::binary);
        char magic[4] = {};
        probe.read(magic, 4);
        if (!probe || std::string_view(magic, 4) != "CRV1") {
          WorkloadConfig wc = load_workload_config(run_path);
          TimingConfig wcfg = apply_overrides(cfg, wc);
          Workload w = materialize(wc);
          PlanOptions opts;
          opts.preload_dm = wc.preload_dm;
          ScheduleResult res = run_plan(plan_workload(w, wcfg, opts), wcfg, limit);
          if (!trace_path.empty()) write_trace(res.run.trace, trace_path);
          std::cout << schedule_summary(res.sched);
          for (std::size_t i = 0; i < res.digests.size(); ++i) {
            std::cout << "digest[" << i << "]: " << to_hex(res.digests[i])
                      << "\n";
          }
          return 0;
        }
      }
      Program p = load_program(run_path);
      std::vector<std::uint64_t> host;
      if (!host_path.empty()) host = load_dm_image(host_path);
      Machine machine(p, cfg, host);
      try {
        RunResult r = machine.run(limit);
        if (!trace_path.empty()) write_trace(r.trace, trace_path);
        std::cout << r.trace.summary();
        if (r.state.trap.trapped) {
          std::cout << "trap at " << r.state.trap.pc << ": "
                    << r.state.trap.reason << "\n";
          return 1;
        }
        return 0;
      } catch (const RunawayWithTrace& e) {
        if (!trace_path.empty()) write_trace(e.trace, trace_path);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
    }

    if (asm_cmd->parsed()) {
      Program p = assemble(read_file(asm_in));
      if (disasm) std::cout << disassemble_program(p);
      std::string out_path = asm_out;
      if (out_path.empty()) {
        out_path = fs::path(asm_in).replace_extension(".crv").string();
      }
      save_program(p, out_path);
      std::cout << "wrote " << out_path << " (" << p.code.size()
                << " instructions)\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
