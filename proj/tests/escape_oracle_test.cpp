//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

// Random compartment bodies run on the emulator; the monitor's first reset
// is compared with a brute-force escape predicate over the snapshots.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <random>

#include "ucca/assembler.hpp"
#include "ucca/runner.hpp"

namespace ucca::corpus {
namespace {

struct Escape {
  std::size_t step = 0;
  std::vector<Cause> causes;
};

// Brute force: for every step, rebuild each compartment's latches from the
// whole prefix and test the step against them.
std::optional<Escape> brute_escape(const std::vector<SignalSnapshot>& s,
                                   const UccConfig& c) {
  const Value cr_lo = c.cr_base;
  const Value cr_hi = c.cr_base + static_cast<Value>(4 * c.capacity) - 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Cause> causes;
    if (s[i].w_en && s[i].d_addr && *s[i].d_addr >= cr_lo &&
        *s[i].d_addr <= cr_hi) {
      causes.push_back({CauseKind::kCrIntegrity, -1});
    }
    for (std::size_t u = 0; u < c.uccs.size(); ++u) {
      const UccDefinition& r = c.uccs[u];
      // Latest non-interrupt entry at or before i, skipping returns from
      // interrupts taken inside the region.
      Value ret = kNone, base = 0;
      for (std::size_t j = 1; j <= i; ++j) {
        if (!r.contains(s[j].pc) || r.contains(s[j - 1].pc)) continue;
        // Walk back to the step that left the region most recently.
        std::size_t k = j - 1;
        while (k > 0 && !r.contains(s[k].pc)) --k;
        const bool resumed = r.contains(s[k].pc) && s[k].irq_jmp;
        if (!resumed) {
          ret = to_value(s[j - 1].op_ret);
          base = s[j - 1].sp;
        }
      }
      const int idx = static_cast<int>(u);
      const bool in = r.contains(s[i].pc);
      if (in && s[i].w_en && s[i].d_addr && *s[i].d_addr >= base) {
        causes.push_back({CauseKind::kStackIntegrity, idx});
      }
      if (!in && i > 0 && r.contains(s[i - 1].pc) && !s[i - 1].irq_jmp) {
        if (s[i].pc != ret) causes.push_back({CauseKind::kRetIntegrity, idx});
        if (s[i].sp != base) {
          causes.push_back({CauseKind::kStackIntegrity, idx});
        }
      }
    }
    if (!causes.empty()) {
      std::sort(causes.begin(), causes.end(), [](const Cause& a, const Cause& b) {
        return std::tie(a.kind, a.ucc) < std::tie(b.kind, b.ucc);
      });
      return Escape{i, causes};
    }
  }
  return std::nullopt;
}

struct Program {
  std::string source;
  std::vector<Interrupt> schedule;
};

Program random_program(std::mt19937_64& rng) {
  auto pick = [&](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  static const char* kAddrs[] = {"0x0300", "0x09F8", "0x09FA", "0x09FC",
                                 "0x09FE", "0x0100", "0x0104", "0xFFE6"};
  static const char* kValues[] = {"0x1234", "helper", "back", "0xC00C"};
  std::string body;
  const int n = 1 + pick(10);
  for (int k = 0; k < n; ++k) {
    char line[64];
    switch (pick(11)) {
      case 0:
        std::snprintf(line, sizeof line, "        MOV #%s, R4\n", kValues[pick(4)]);
        break;
      case 1:
      case 2:
        std::snprintf(line, sizeof line, "        MOV R4, &%s\n", kAddrs[pick(8)]);
        break;
      case 3: std::snprintf(line, sizeof line, "        MOV R4, @SP\n"); break;
      case 4: std::snprintf(line, sizeof line, "        PUSH R4\n"); break;
      case 5: std::snprintf(line, sizeof line, "        POP R5\n"); break;
      case 6: std::snprintf(line, sizeof line, "        ADD #2, SP\n"); break;
      case 7: std::snprintf(line, sizeof line, "        SUB #2, SP\n"); break;
      case 8: std::snprintf(line, sizeof line, "        CALL #helper\n"); break;
      default: std::snprintf(line, sizeof line, "        NOP\n"); break;
    }
    body += line;
  }
  static const char* kExits[] = {"RET", "RET", "RET", "BR R4", "RETI"};
  Program p;
  p.source = std::string(R"(
        .ivt 3, isr
        .org 0xC000
start:  PUSH #1
        CALL #f
        CALL #f
back:   HALT
isr:    PUSH R10
        POP R10
        RETI
helper: RET

        .org 0xC100
f:
)") + body + "f_end:  " + kExits[pick(5)] + "\n";
  for (int k = pick(3); k > 0; --k) {
    p.schedule.push_back({static_cast<std::uint64_t>(1 + pick(30)), 3});
  }
  return p;
}

struct Compared {
  int agree = 0;
  int escapes = 0;
  int disagree = 0;
};

Compared compare(Mutation m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Compared out;
  for (int t = 0; t < n; ++t) {
    const Program p = random_program(rng);
    const AsmResult a = assemble(p.source);
    UccConfig config;
    config.uccs = {{a.labels.at("f"), a.labels.at("f_end")}};
    RunOptions o;
    o.max_steps = 200;
    o.schedule = p.schedule;
    o.mutation = m;
    const RunResult r = run_program(a.image, config, o);

    std::vector<SignalSnapshot> seen = r.snapshots;
    if (!r.resets.empty()) seen.resize(r.resets.front().step + 1);
    const auto esc = brute_escape(seen, config);
    bool same = false;
    if (!esc) {
      same = r.resets.empty();
    } else if (!r.resets.empty()) {
      auto got = r.resets.front().causes;
      std::sort(got.begin(), got.end(), [](const Cause& x, const Cause& y) {
        return std::tie(x.kind, x.ucc) < std::tie(y.kind, y.ucc);
      });
      same = r.resets.front().step == esc->step && got == esc->causes;
    }
    if (esc) ++out.escapes;
    if (same) {
      ++out.agree;
    } else {
      ++out.disagree;
      if (m == Mutation::kNone) {
        ADD_FAILURE() << "disagreement on program " << t << ":\n" << p.source;
        return out;
      }
    }
  }
  return out;
}

TEST(EscapeOracle, MonitorMatchesBruteForce) {
  const Compared c = compare(Mutation::kNone, 3'000, 0xE5CA9E);
  EXPECT_EQ(c.disagree, 0);
  // Both outcomes must be well represented.
  EXPECT_GT(c.escapes, 300);
  EXPECT_GT(c.agree - c.escapes, 300);
}

TEST(EscapeOracle, MutantsDisagree) {
  for (Mutation m : {Mutation::kFlipStackComparator, Mutation::kDropCrCheck,
                     Mutation::kDropSpExitCheck}) {
    EXPECT_GT(compare(m, 1'000, 0xE5CA9E).disagree, 0) << to_string(m);
  }
}

}  // namespace
}  // namespace ucca::corpus
