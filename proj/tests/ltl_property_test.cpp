//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "random_ltl.hpp"
#include "ucca/hwmod.hpp"
#include "ucca/ltl.hpp"
#include "ucca/trace_builder.hpp"
#include "ucca/verify.hpp"

namespace ucca::ltl {
namespace {

using testing::RandomLtl;

bool past_only(const Term& t) {
  if (t.kind == Term::Kind::kNext) return false;
  return !t.inner || past_only(*t.inner);
}

bool past_only(const Formula& f) {
  if (!f) return true;
  if (f->op == Op::kX || f->op == Op::kG || f->op == Op::kW) return false;
  if (f->lhs && !past_only(*f->lhs)) return false;
  if (f->rhs && !past_only(*f->rhs)) return false;
  return past_only(f->a) && past_only(f->b);
}

TEST(LtlProperty, EvaluatorMatchesOracle) {
  RandomLtl gen(0xC0FFEE);
  int pairs = 0;
  for (; pairs < 10'000; ++pairs) {
    const Formula f = gen.formula(4);
    ASSERT_LE(depth(f), 4);
    const Trace t = gen.trace(1 + static_cast<std::size_t>(gen.pick(8)));
    Evaluator ev(f);
    for (std::size_t i = 0; i < t.size(); ++i) {
      ASSERT_EQ(ev.eval(t, i), brute_oracle(f, t, i))
          << print(f) << " at " << i << " of " << t.size();
    }
    const CheckResult r = ev.check(t);
    ASSERT_EQ(r.holds, brute_oracle(f, t, 0)) << print(f);
  }
  EXPECT_EQ(pairs, 10'000);
}

TEST(LtlProperty, PrintParseRoundTrip) {
  RandomLtl gen(7);
  for (int k = 0; k < 2'000; ++k) {
    const Formula f = gen.formula(5);
    const std::string text = print(f);
    Formula back;
    ASSERT_NO_THROW(back = parse_formula(text, 1)) << text;
    ASSERT_TRUE(equal(back, f)) << text << " -> " << print(back);
  }
}

TEST(LtlProperty, PastOnlyFormulasIgnoreTheFuture) {
  RandomLtl gen(11);
  int checked = 0;
  while (checked < 2'000) {
    const Formula f = gen.formula(4);
    if (!past_only(f)) continue;
    ++checked;
    const Trace full = gen.trace(8);
    Trace prefix = full;
    prefix.rows.resize(1 + static_cast<std::size_t>(gen.pick(8)));
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      ASSERT_EQ(eval(f, prefix, i), eval(f, full, i)) << print(f);
    }
  }
}

// On traces produced by the monitor, a violation of the stack write bound
// seen in a prefix stays at the same position in every extension.
TEST(LtlProperty, SafetyWitnessStableUnderExtension) {
  const UccConfig config = verify::default_config();
  const Monitor monitor(config, Mutation::kFlipStackComparator);
  const auto alphabet = verify::default_alphabet(config);
  const Formula f = builtin_specs(1)[11].formula;
  RandomLtl gen(3);
  int violated = 0;
  for (int k = 0; k < 3'000; ++k) {
    std::vector<SignalSnapshot> snaps;
    snaps.push_back(SignalSnapshot{});  // pc = 0 sentinel
    for (int i = 0; i < 11; ++i) snaps.push_back(gen.choose(alphabet.symbols));
    for (std::size_t i = 0; i < snaps.size(); ++i) snaps[i].step = i;
    const Trace full = monitor_trace(monitor, snaps).trace;
    const CheckResult whole = check(f, full);
    for (std::size_t len = 1; len <= full.size(); ++len) {
      Trace prefix = full;
      prefix.rows.resize(len);
      const CheckResult part = check(f, prefix);
      if (!part.holds) {
        ASSERT_FALSE(whole.holds);
        ASSERT_EQ(part.witness, whole.witness);
      }
    }
    violated += whole.holds ? 0 : 1;
  }
  // The mutant must actually exercise the property.
  EXPECT_GT(violated, 0);
}

TEST(LtlProperty, SingleZeroRow) {
  Trace t;
  t.regions.uccs = {{0xC100, 0xC1FC}};
  t.regions.cr_lo = 0x0100;
  t.regions.cr_hi = 0x011F;
  t.rows.resize(1);
  for (const BuiltinSpec& s : builtin_specs(1)) {
    EXPECT_TRUE(check(s.formula, t).holds) << s.name;
    EXPECT_EQ(eval(s.formula, t, 0), brute_oracle(s.formula, t, 0)) << s.name;
  }
}

}  // namespace
}  // namespace ucca::ltl
