//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <fnmatch.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ucca/assembler.hpp"
#include "ucca/io.hpp"
#include "ucca/trace_builder.hpp"

namespace {

using namespace ucca;
namespace fs = std::filesystem;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kMonitorReset = 10,
  kViolation = 20,
};

// Raised for bad arguments that CLI11 cannot see (unknown mutant, spec id).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Mutation parse_mutation(const std::string& name) {
  const auto m = mutation_from_string(name);
  if (!m) throw UsageError("unknown mutant '" + name + "'");
  return *m;
}

corpus::RunMode parse_mode(const std::string& s) {
  if (s == "single") return corpus::RunMode::kSingleShot;
  if (s == "continuous") return corpus::RunMode::kContinuous;
  throw UsageError("mode must be 'single' or 'continuous'");
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used, 16);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("seed must be hexadecimal: '" + s + "'");
}

bool is_source(const fs::path& p) {
  const auto ext = p.extension();
  return ext == ".s" || ext == ".asm";
}

ProgramImage load_image(const fs::path& p) {
  if (is_source(p)) return corpus::assemble(io::read_text(p)).image;
  return ProgramImage::parse(io::read_bytes(p));
}

void require_valid(const UccConfig& c) {
  auto errors = validate_config(c);
  if (!errors.empty()) throw corpus::ConfigInvalid(std::move(errors));
}

void write_json(const std::string& path, const io::Json& j) {
  io::write_text(path, j.dump(2) + "\n");
}

std::string describe_causes(const std::vector<Cause>& causes) {
  std::string s;
  for (const Cause& c : causes) {
    if (!s.empty()) s += " ";
    s += c.describe();
  }
  return s;
}

// asm ------------------------------------------------------------------------

struct AsmArgs {
  std::string source;
  std::string out;
  std::string labels;
  bool listing = false;
};

int cmd_asm(const AsmArgs& a) {
  const corpus::AsmResult r = corpus::assemble(io::read_text(a.source));
  io::write_bytes(a.out, r.image.serialize());
  if (!a.labels.empty()) write_json(a.labels, io::to_json(r.labels));
  std::printf("%s: %zu instructions, %zu bytes, entry %s\n", a.out.c_str(),
              r.instructions, r.image.serialize().size(),
              io::hex(r.image.entry).c_str());
  if (a.listing) std::fputs(corpus::disassemble(r.image).c_str(), stdout);
  return kOk;
}

// run ------------------------------------------------------------------------

struct RunArgs {
  std::string image;
  std::string config;
  std::string schedule;
  std::uint64_t max_steps = 10'000;
  std::string trace;
  std::string mode = "single";
  std::string mutant = "none";
};

int cmd_run(const RunArgs& a) {
  const UccConfig config = io::load_config(a.config);
  require_valid(config);
  const ProgramImage image = load_image(a.image);
  corpus::RunOptions opt;
  opt.max_steps = a.max_steps;
  opt.mode = parse_mode(a.mode);
  opt.mutation = parse_mutation(a.mutant);
  if (!a.schedule.empty()) opt.schedule = io::load_schedule(a.schedule);

  const corpus::RunResult r = corpus::run_program(image, config, opt);
  if (!a.trace.empty()) {
    std::ofstream out(a.trace, std::ios::trunc);
    if (!out) throw io::IoError("cannot write " + a.trace);
    io::write_trace(out, r.trace, r.verdicts);
  }
  for (const corpus::ResetEvent& e : r.resets) {
    std::printf("reset at step %llu: %s\n",
                static_cast<unsigned long long>(e.step),
                describe_causes(e.causes).c_str());
  }
  std::printf("outcome: %s after %zu snapshots\n",
              std::string(corpus::to_string(r.outcome)).c_str(),
              r.snapshots.size());
  if (!r.resets.empty()) return kMonitorReset;
  switch (r.outcome) {
    case corpus::Outcome::kCompleted:
      return kOk;
    case corpus::Outcome::kFault:
      std::fprintf(stderr, "fault: %s\n", r.fault_message.c_str());
      return kUsage;
    case corpus::Outcome::kBudgetExceeded:
      std::fprintf(stderr, "step budget of %llu exceeded\n",
                   static_cast<unsigned long long>(a.max_steps));
      return kUsage;
    case corpus::Outcome::kReset:
      return kMonitorReset;
  }
  return kUsage;
}

// check ----------------------------------------------------------------------

struct CheckArgs {
  std::string trace;
  std::vector<std::string> specs;
  std::vector<std::string> formulas;
};

int cmd_check(const CheckArgs& a) {
  const io::TraceFile f = io::load_trace(a.trace);
  const std::size_t n = std::max<std::size_t>(1, f.trace.regions.uccs.size());
  const auto catalog = ltl::builtin_specs(n);

  struct Item {
    std::string label;
    ltl::Formula formula;
  };
  std::vector<Item> items;
  for (const std::string& s : a.specs) {
    if (s == "all") {
      for (const auto& b : catalog) {
        items.push_back({"spec " + std::to_string(b.id) + " " + b.name, b.formula});
      }
      continue;
    }
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(s, &used);
      if (used != s.size()) id = 0;
    } catch (const std::exception&) {
    }
    if (id < 1 || id > static_cast<int>(catalog.size())) {
      throw UsageError("unknown spec id '" + s + "' (1.." +
                       std::to_string(catalog.size()) + ")");
    }
    const auto& b = catalog[id - 1];
    items.push_back({"spec " + std::to_string(b.id) + " " + b.name, b.formula});
  }
  for (const std::string& text : a.formulas) {
    items.push_back({"formula " + text, ltl::parse_formula(text, n)});
  }
  if (items.empty()) {
    for (const auto& b : catalog) {
      items.push_back({"spec " + std::to_string(b.id) + " " + b.name, b.formula});
    }
  }

  bool all = true;
  for (const Item& it : items) {
    const ltl::CheckResult r = ltl::check(it.formula, f.trace);
    if (r.holds) {
      std::printf("holds     %s\n", it.label.c_str());
    } else {
      all = false;
      std::printf("VIOLATED  %s  (first witness: row %zu, step %llu)\n",
                  it.label.c_str(), r.witness,
                  static_cast<unsigned long long>(f.trace.rows[r.witness].step));
    }
  }
  return all ? kOk : kViolation;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string config;
  std::size_t depth = 3;
  std::string alphabet = "default";
  std::uint64_t random = 0;
  std::size_t length = 20;
  std::string seed = "5EED";
  std::string mutant = "none";
  std::string report;
  std::uint64_t max_traces = 100'000'000;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a) {
  const UccConfig config =
      a.config.empty() ? verify::default_config() : io::load_config(a.config);
  require_valid(config);
  if (config.uccs.empty()) throw UsageError("config defines no UCC");

  verify::ReducedAlphabet alphabet;
  if (a.alphabet == "default") {
    alphabet = verify::default_alphabet(config);
  } else if (a.alphabet == "full") {
    alphabet = verify::full_alphabet(config);
  } else {
    throw UsageError("alphabet must be 'default' or 'full'");
  }
  verify::CheckOptions opt;
  opt.mutation = parse_mutation(a.mutant);
  opt.max_traces = a.max_traces;
  opt.threads = a.threads;

  const verify::CheckReport r =
      a.random > 0 ? verify::random_check(config, alphabet, a.random, a.length,
                                          parse_seed(a.seed), opt)
                   : verify::exhaustive_check(config, alphabet, a.depth, opt);

  std::printf("%s check, alphabet %s (%zu symbols), %s %zu, mutant %s\n",
              r.mode.c_str(), r.alphabet.c_str(), r.alphabet_size,
              a.random > 0 ? "length" : "depth", r.length,
              std::string(to_string(r.mutation)).c_str());
  std::printf("traces examined: %llu in %.2f s\n",
              static_cast<unsigned long long>(r.traces_examined),
              r.elapsed_seconds);
  for (const verify::SpecTally& t : r.specs) {
    std::printf("  spec %2d  %-24s %s", t.id, t.name.c_str(),
                t.violations == 0 ? "holds\n" : "");
    if (t.violations) {
      std::printf("VIOLATED on %llu traces\n",
                  static_cast<unsigned long long>(t.violations));
    }
  }
  for (const verify::Violation& v : r.violations) {
    std::printf("witness: spec %d at step %zu:", v.spec_id, v.step);
    for (const SignalSnapshot& s : v.trace) {
      std::printf(" [pc=%s sp=%s%s%s%s]", io::hex(s.pc).c_str(),
                  io::hex(s.sp).c_str(),
                  s.w_en ? (" w@" + io::hex(*s.d_addr)).c_str() : "",
                  s.irq_jmp ? " irq" : "",
                  s.op_ret ? (" ret=" + io::hex(*s.op_ret)).c_str() : "");
    }
    std::printf("\n");
  }
  if (!a.report.empty()) write_json(a.report, io::to_json(r));
  std::printf("%s\n", r.clean() ? "no violations" : "VIOLATIONS FOUND");
  return r.clean() ? kOk : kViolation;
}

// scenarios ------------------------------------------------------------------

struct ScenarioArgs {
  std::string filter = "*";
  std::string dir;
  std::string export_dir;
  std::string report;
  std::string mutant = "none";
  std::string mode = "single";
};

int cmd_scenarios(const ScenarioArgs& a) {
  std::vector<corpus::Scenario> pool;
  if (a.dir.empty()) {
    pool = corpus::scenarios();
  } else {
    std::error_code ec;
    std::vector<fs::path> manifests;
    for (const auto& e : fs::directory_iterator(a.dir, ec)) {
      if (e.path().extension() == ".json") manifests.push_back(e.path());
    }
    if (ec) throw io::IoError("cannot list " + a.dir);
    std::sort(manifests.begin(), manifests.end());
    for (const fs::path& m : manifests) pool.push_back(io::load_scenario(m));
  }

  std::vector<corpus::Scenario> selected;
  for (const corpus::Scenario& s : pool) {
    if (fnmatch(a.filter.c_str(), s.name.c_str(), 0) == 0) selected.push_back(s);
  }
  if (selected.empty()) throw UsageError("no scenario matches '" + a.filter + "'");

  if (!a.export_dir.empty()) {
    for (const corpus::Scenario& s : selected) {
      io::export_scenario(s, a.export_dir);
    }
    std::printf("exported %zu scenarios to %s\n", selected.size(),
                a.export_dir.c_str());
  }

  corpus::ScenarioOptions opt;
  opt.mutation = parse_mutation(a.mutant);
  opt.mode = parse_mode(a.mode);
  std::vector<corpus::ScenarioResult> results;
  bool all = true;
  for (const corpus::Scenario& s : selected) {
    results.push_back(corpus::run_scenario(s, opt));
    const corpus::ScenarioResult& r = results.back();
    const bool ok = r.matches && r.specs_hold();
    all = all && ok;
    std::printf("%-4s %-24s expected %-30s got %s%s\n", ok ? "ok" : "FAIL",
                r.name.c_str(), r.expected.describe().c_str(),
                r.actual().c_str(), r.specs_hold() ? "" : "  (spec violated)");
  }
  if (!a.report.empty()) write_json(a.report, io::matrix_to_json(results));
  return all ? kOk : kViolation;
}

// specs / cost ---------------------------------------------------------------

int cmd_specs(std::size_t n_ucc, bool json) {
  const auto specs = ltl::builtin_specs(n_ucc);
  if (json) {
    std::printf("%s\n", io::specs_to_json(specs).dump(2).c_str());
    return kOk;
  }
  for (const auto& s : specs) {
    std::printf("%3d  property %-2d %-24s %s\n", s.id, s.property,
                s.name.c_str(), ltl::print(s.formula).c_str());
  }
  return kOk;
}

int cmd_cost(std::uint64_t max_n, std::uint64_t marshal_bytes) {
  std::printf(" N  registers  LUTs  reported(regs, LUTs)\n");
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const HardwareCost c = estimate_hardware_cost(n);
    const auto t = reported_hardware_cost(n);
    std::printf("%2llu  %9llu  %4llu", static_cast<unsigned long long>(n),
                static_cast<unsigned long long>(c.registers),
                static_cast<unsigned long long>(c.luts));
    if (t) {
      std::printf("  (%llu, %llu)", static_cast<unsigned long long>(t->registers),
                  static_cast<unsigned long long>(t->luts));
    }
    std::printf("\n");
  }
  std::printf("marshal %llu bytes: %llu copy instructions\n",
              static_cast<unsigned long long>(marshal_bytes),
              static_cast<unsigned long long>(estimate_marshal_cost(marshal_bytes)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UCC-isolating monitor simulator and verifier"};
  app.require_subcommand(1);

  AsmArgs asm_args;
  auto* c_asm = app.add_subcommand("asm", "assemble a source file");
  c_asm->add_option("source", asm_args.source, "assembly source")->required();
  c_asm->add_option("-o,--out", asm_args.out, "image output path")->required();
  c_asm->add_option("--labels", asm_args.labels, "write the label map (JSON)");
  c_asm->add_flag("--listing", asm_args.listing, "print a disassembly");

  RunArgs run_args;
  auto* c_run = app.add_subcommand("run", "run an image under the monitor");
  c_run->add_option("image", run_args.image, "image (.bin) or source (.s)")
      ->required();
  c_run->add_option("--config", run_args.config, "UCC config (JSON)")->required();
  c_run->add_option("--schedule", run_args.schedule, "interrupt schedule (JSON)");
  c_run->add_option("--max-steps", run_args.max_steps, "instruction budget");
  c_run->add_option("--trace", run_args.trace, "write a JSONL trace");
  c_run->add_option("--mode", run_args.mode, "single | continuous");
  c_run->add_option("--mutant", run_args.mutant, "monitor mutation");

  CheckArgs check_args;
  auto* c_check = app.add_subcommand("check", "check a trace against specs");
  c_check->add_option("trace", check_args.trace, "JSONL trace")->required();
  c_check->add_option("--spec", check_args.specs, "built-in spec id or 'all'");
  c_check->add_option("--formula", check_args.formulas, "LTL formula text");

  VerifyArgs verify_args;
  auto* c_verify = app.add_subcommand("verify", "exhaustive or random campaign");
  c_verify->add_option("--config", verify_args.config, "UCC config (JSON)");
  c_verify->add_option("--depth", verify_args.depth, "exhaustive depth");
  c_verify->add_option("--alphabet", verify_args.alphabet, "default | full");
  c_verify->add_option("--random", verify_args.random, "random trace count");
  c_verify->add_option("--length", verify_args.length, "random trace length");
  c_verify->add_option("--seed", verify_args.seed, "random seed (hex)");
  c_verify->add_option("--mutant", verify_args.mutant, "monitor mutation");
  c_verify->add_option("--report", verify_args.report, "write a JSON report");
  c_verify->add_option("--max-traces", verify_args.max_traces, "trace budget");
  c_verify->add_option("--threads", verify_args.threads,
                       "worker threads (0: UCCA_SIM_THREADS or all cores)");

  ScenarioArgs sc_args;
  auto* c_sc = app.add_subcommand("scenarios", "run the scenario matrix");
  c_sc->add_option("--filter", sc_args.filter, "glob over scenario names");
  c_sc->add_option("--dir", sc_args.dir, "load manifests from a directory");
  c_sc->add_option("--export", sc_args.export_dir, "write .s + .json files");
  c_sc->add_option("--report", sc_args.report, "write the result matrix");
  c_sc->add_option("--mutant", sc_args.mutant, "monitor mutation");
  c_sc->add_option("--mode", sc_args.mode, "single | continuous");

  std::size_t spec_n = 1;
  bool spec_json = false;
  auto* c_specs = app.add_subcommand("specs", "list the built-in specs");
  c_specs->add_option("--n-ucc", spec_n, "number of UCCs")
      ->check(CLI::Range(std::size_t{1}, kMaxUccs));
  c_specs->add_flag("--json", spec_json, "JSON output");

  std::uint64_t cost_n = 8;
  std::uint64_t cost_bytes = 2;
  auto* c_cost = app.add_subcommand("cost", "hardware and marshalling estimates");
  c_cost->add_option("--max-n", cost_n, "largest UCC count")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1024}));
  c_cost->add_option("--marshal-bytes", cost_bytes, "bytes to marshal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_asm) return cmd_asm(asm_args);
    if (*c_run) return cmd_run(run_args);
    if (*c_check) return cmd_check(check_args);
    if (*c_verify) return cmd_verify(verify_args);
    if (*c_sc) return cmd_scenarios(sc_args);
    if (*c_specs) return cmd_specs(spec_n, spec_json);
    if (*c_cost) return cmd_cost(cost_n, cost_bytes);
  } catch (const io::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const corpus::AsmError& e) {
    std::fprintf(stderr, "%s: %s\n",
                 asm_args.source.empty() ? "asm" : asm_args.source.c_str(),
                 e.what());
    return kUsage;
  } catch (const corpus::ConfigInvalid& e) {
    std::fprintf(stderr, "config-invalid:\n");
    for (const ConfigError& c : e.errors()) {
      std::fprintf(stderr, "  %s\n", c.describe().c_str());
    }
    return kUsage;
  } catch (const ltl::ParseError& e) {
    std::fprintf(stderr, "formula error at %zu: %s\n", e.position(), e.what());
    return kUsage;
  } catch (const std::exception& e) {
    // Format errors, load errors, budgets, bad arguments.
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
