//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when
// any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "random_ltl.hpp"
#include "segment_oracle.hpp"
#include "ucca/assembler.hpp"
#include "ucca/hwmod.hpp"
#include "ucca/runner.hpp"
#include "ucca/scenario.hpp"
#include "ucca/verify.hpp"

namespace {

using namespace ucca;

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("%s %-3s %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string props(const std::vector<int>& v) {
  std::string s;
  for (int p : v) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s.empty() ? "-" : s;
}

void exhaustive_and_mutants() {
  const UccConfig config = verify::default_config();
  const auto alphabet = verify::default_alphabet(config);

  const auto t0 = std::chrono::steady_clock::now();
  const verify::CheckReport clean = verify::exhaustive_check(config, alphabet, 3);
  const double secs = seconds_since(t0);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "exhaustive depth 3, %zu symbols, %llu traces, %llu violations, "
                "%.1f s (budget 600 s)",
                alphabet.size(),
                static_cast<unsigned long long>(clean.traces_examined),
                static_cast<unsigned long long>(clean.violations.size()), secs);
  report("1", clean.clean() && clean.specs.size() == 13 && secs <= 600.0, buf);

  bool all_caught = true;
  std::string detail;
  for (Mutation m : all_mutations()) {
    if (m == Mutation::kNone) continue;
    verify::CheckOptions o;
    o.mutation = m;
    const auto r = verify::exhaustive_check(config, alphabet, 3, o);
    const auto v = r.violated_properties();
    all_caught = all_caught && !v.empty();
    detail += std::string(to_string(m)) + "->" + props(v) + " ";
  }
  report("3", all_caught, "depth 3: " + detail);
}

void randomized() {
  const UccConfig config = verify::default_config();
  const auto alphabet = verify::default_alphabet(config);
  const std::uint64_t seed = 0x5EED;
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = verify::random_check(config, alphabet, 1'000'000, 20, seed);
  const double secs = seconds_since(t0);
  verify::CheckOptions one_thread;
  one_thread.threads = 1;
  const auto b =
      verify::random_check(config, alphabet, 1'000'000, 20, seed, one_thread);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "random 1e6 x 20, seed 0x%llX, %llu violations, %.1f s; replay "
                "with another thread count %s",
                static_cast<unsigned long long>(seed),
                static_cast<unsigned long long>(a.violations.size()), secs,
                a.same_outcome(b) ? "identical" : "DIFFERS");
  report("2", a.clean() && a.traces_examined == 1'000'000 && a.same_outcome(b),
         buf);
}

void scenario_matrix() {
  const auto& all = corpus::scenarios();
  int matched = 0, attacks = 0, on_time = 0;
  std::string bad;
  for (const corpus::Scenario& s : all) {
    const auto r = corpus::run_scenario(s);
    if (r.matches && r.specs_hold()) {
      ++matched;
    } else {
      bad += s.name + " ";
    }
    if (!s.is_attack()) continue;
    ++attacks;
    const auto hit = testing::first_violation(r.run.snapshots, r.config);
    if (hit && !r.run.resets.empty() && r.run.resets.front().step == hit->step) {
      ++on_time;
    } else {
      bad += s.name + "(latency) ";
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d/%zu scenarios match; %d/%d attacks reset on the first "
                "violating snapshot %s",
                matched, all.size(), on_time, attacks, bad.c_str());
  report("4", all.size() >= 14 && matched == static_cast<int>(all.size()) &&
                  on_time == attacks,
         buf);
}

void oracle_equivalence() {
  testing::RandomLtl gen(0xACCE97);
  int disagreements = 0;
  for (int k = 0; k < 10'000; ++k) {
    const ltl::Formula f = gen.formula(4);
    const ltl::Trace t = gen.trace(1 + static_cast<std::size_t>(gen.pick(8)));
    ltl::Evaluator ev(f);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (ev.eval(t, i) != ltl::brute_oracle(f, t, i)) {
        ++disagreements;
        break;
      }
    }
  }
  report("5", disagreements == 0,
         "10000 random pairs (depth <= 4, length <= 8), " +
             std::to_string(disagreements) + " disagreements");
}

void analytic() {
  // Published synthesis table for 1..8 regions.
  constexpr std::uint64_t kRegisters[] = {86, 121, 156, 191, 226, 261, 296, 331};
  constexpr std::uint64_t kLuts[] = {85, 145, 205, 265, 327, 389, 450, 520};
  bool regs_ok = true;
  bool luts_ok = true;
  std::string lut_detail;
  for (std::uint64_t n = 1; n <= 8; ++n) {
    const HardwareCost c = estimate_hardware_cost(n);
    regs_ok = regs_ok && c.registers == kRegisters[n - 1];
    const auto diff = static_cast<long long>(c.luts) -
                      static_cast<long long>(kLuts[n - 1]);
    luts_ok = luts_ok && diff >= -2 && diff <= 2;
    lut_detail += std::to_string(c.luts) + "/" + std::to_string(kLuts[n - 1]) +
                  (diff >= 0 ? "(+" : "(") + std::to_string(diff) + ") ";
  }
  report("6a", regs_ok, "registers 35(N-1)+86 equal the table for N = 1..8");
  report("6b", luts_ok, "LUTs 62(N-1)+85 vs table, tolerance 2: " + lut_detail);
  const std::uint64_t m2 = estimate_marshal_cost(2);
  report("6c", m2 == 1,
         "estimate_marshal_cost(2) = " + std::to_string(m2));
}

void non_interference() {
  const corpus::AsmResult prog = corpus::assemble(R"(
        .ivt 3, isr
        .ivt 5, isr
        .org 0xC000
start:  MOV #0, R4
        MOV #25, R6
loop:   ADD #7, R4
        PUSH R4
        POP R5
        MOV R5, &0x0300
        SUB #1, R6
        JZ done
        JMP loop
done:   HALT
isr:    PUSH R10
        MOV &0x0302, R10
        ADD #1, R10
        MOV R10, &0x0302
        POP R10
        RETI

        .org 0xC400
lib:    ADD R4, R4
lib_end:
        RET
)");
  UccConfig config;
  config.uccs = {{prog.labels.at("lib"), prog.labels.at("lib_end")}};

  corpus::RunOptions quiet;
  const auto base = corpus::run_program(prog.image, config, quiet);
  std::mt19937_64 rng(0x7E57);
  int ok = 0;
  std::size_t taken = 0;
  for (int k = 0; k < 100; ++k) {
    corpus::RunOptions o;
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int i = 0; i < n; ++i) {
      o.schedule.push_back(
          {std::uniform_int_distribution<std::uint64_t>(1, 150)(rng),
           std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 5});
    }
    const auto r = corpus::run_program(prog.image, config, o);
    taken += static_cast<std::size_t>(
        std::count_if(r.snapshots.begin(), r.snapshots.end(),
                      [](const SignalSnapshot& s) { return s.irq_jmp; }));
    const bool same_result = r.final_state.gpr[0] == base.final_state.gpr[0] &&
                             r.final_state.sp == base.final_state.sp;
    if (r.outcome == corpus::Outcome::kCompleted && r.resets.empty() &&
        same_result) {
      ++ok;
    }
  }
  report("7", base.outcome == corpus::Outcome::kCompleted && ok == 100 &&
                  taken > 100,
         std::to_string(ok) + "/100 random interrupt schedules complete with "
                              "verdict ok and an unchanged result (" +
             std::to_string(taken) + " interrupts taken)");
}

void config_rules() {
  const auto has = [](const std::vector<ConfigError>& es, ConfigErrorKind k) {
    return std::any_of(es.begin(), es.end(),
                       [&](const ConfigError& e) { return e.kind == k; });
  };
  UccConfig single;
  single.uccs = {{0xC100, 0xC10C}};  // one function, RET on the last word
  UccConfig nested;
  nested.uccs = {{0xC100, 0xC1FC}, {0xC120, 0xC13C}};
  UccConfig partial;
  partial.uccs = {{0xC100, 0xC1FC}, {0xC1F0, 0xC2FC}};
  const bool a = validate_config(single).empty();
  const bool b = validate_config(nested).empty();
  const bool c = has(validate_config(partial), ConfigErrorKind::kPartialOverlap);
  report("8", a && b && c,
         std::string("single function ") + (a ? "accepted" : "REJECTED") +
             ", nesting " + (b ? "accepted" : "REJECTED") +
             ", partial overlap " + (c ? "rejected" : "ACCEPTED"));
}

}  // namespace

int main() {
  // Cheap criteria first so their lines appear early.
  analytic();
  config_rules();
  oracle_equivalence();
  scenario_matrix();
  non_interference();
  exhaustive_and_mutants();
  randomized();
  std::printf("%d criteria line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
