//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>

#include "ucca/hwmod.hpp"
#include "ucca/trace_builder.hpp"
#include "ucca/verify.hpp"

namespace ucca {
namespace {

SignalSnapshot snap(Address pc, Address sp = 0x09F0) {
  SignalSnapshot s;
  s.pc = pc;
  s.sp = sp;
  return s;
}

SignalSnapshot write(Address pc, Address d, Address sp = 0x09F0) {
  SignalSnapshot s = snap(pc, sp);
  s.w_en = true;
  s.d_addr = d;
  return s;
}

SignalSnapshot call(Address pc, Address ret, Address sp = 0x09F0) {
  SignalSnapshot s = write(pc, static_cast<Address>(sp - 2), sp);
  s.op_ret = ret;
  return s;
}

const UccDefinition kUcc{0xC100, 0xC1FC};
const CrRegion kCr{0x0100, 0x011F};

bool has_error(const std::vector<ConfigError>& errs, ConfigErrorKind k) {
  for (const ConfigError& e : errs) {
    if (e.kind == k) return true;
  }
  return false;
}

TEST(ValidateConfigTest, SingleRegion) {
  EXPECT_TRUE(validate_config(UccConfig{0x0100, 8, {{0xC100, 0xC1FE}}}).empty());
}

TEST(ValidateConfigTest, NestingAccepted) {
  const UccConfig c{0x0100, 8, {{0xC100, 0xC1FE}, {0xC140, 0xC17E}}};
  EXPECT_TRUE(validate_config(c).empty());
}

TEST(ValidateConfigTest, PartialOverlapRejected) {
  const UccConfig c{0x0100, 8, {{0xC100, 0xC1FE}, {0xC180, 0xC2FE}}};
  const auto errs = validate_config(c);
  ASSERT_EQ(errs.size(), 1u);
  EXPECT_EQ(errs[0], (ConfigError{ConfigErrorKind::kPartialOverlap, 0, 1}));
  EXPECT_EQ(errs[0].describe(), "partial-overlap(0, 1)");
}

TEST(ValidateConfigTest, SingleFunctionGranularity) {
  // A one-instruction UCC is the smallest legal region.
  EXPECT_TRUE(validate_config(UccConfig{0x0100, 8, {{0xC100, 0xC100}}}).empty());
  // Nesting must be strict; a duplicated region is not a nest.
  EXPECT_TRUE(has_error(
      validate_config(UccConfig{0x0100, 8, {{0xC100, 0xC10C}, {0xC100, 0xC10C}}}),
      ConfigErrorKind::kPartialOverlap));
}

TEST(ValidateConfigTest, OtherRules) {
  EXPECT_TRUE(has_error(validate_config(UccConfig{0x0100, 8, {{0x0300, 0x0310}}}),
                        ConfigErrorKind::kOutOfProgram));
  EXPECT_TRUE(has_error(validate_config(UccConfig{0x0100, 8, {{0x0000, 0x0010}}}),
                        ConfigErrorKind::kContainsResetSentinel));
  EXPECT_TRUE(has_error(validate_config(UccConfig{0x0200, 8, {{0xC100, 0xC10C}}}),
                        ConfigErrorKind::kCrMisplaced));
  EXPECT_TRUE(has_error(validate_config(UccConfig{0x0100, 8, {{0xC10C, 0xC100}}}),
                        ConfigErrorKind::kInverted));
  EXPECT_TRUE(has_error(validate_config(UccConfig{0x0100, 8, {{0xC101, 0xC10C}}}),
                        ConfigErrorKind::kMisaligned));
  UccConfig many{0x0100, 2, {}};
  for (Address a = 0xC100; a < 0xC130; a += 0x10) {
    many.uccs.push_back({a, static_cast<Address>(a + 8)});
  }
  EXPECT_TRUE(has_error(validate_config(many), ConfigErrorKind::kCapacityExceeded));
}

TEST(CrImageTest, EncodeDecodeRoundTrip) {
  const UccConfig c{0x0100, 8, {{0xC100, 0xC1FE}, {0xC140, 0xC17E}}};
  const CrImage cr = CrImage::encode(c);
  EXPECT_EQ(cr.lo(), 0x0100);
  EXPECT_EQ(cr.hi(), 0x011F);
  EXPECT_EQ(cr.contents.size(), 32u);
  std::vector<std::uint8_t> mem(0x10000);
  cr.materialize(mem);
  EXPECT_EQ(mem[0x0100], 0x00);
  EXPECT_EQ(mem[0x0101], 0xC1);
  EXPECT_EQ(CrImage::decode(mem, 0x0100, 8), c);
}

TEST(CrFsmTest, Transitions) {
  EXPECT_EQ(cr_step(CrState::kRun, write(0xC000, 0x0100), kCr), CrState::kReset);
  SignalSnapshot read = snap(0xC000);
  read.d_addr = 0x0100;
  EXPECT_EQ(cr_step(CrState::kRun, read, kCr), CrState::kRun);
  EXPECT_EQ(cr_step(CrState::kReset, snap(0), kCr), CrState::kRun);
  EXPECT_EQ(cr_step(CrState::kReset, snap(0xC000), kCr), CrState::kReset);
  EXPECT_EQ(cr_step(CrState::kRun, write(0xC000, 0x0120), kCr), CrState::kRun);
}

TEST(RetFsmTest, LatchOnCall) {
  const SignalSnapshot prev = call(0xC010, 0xC014);
  const RetFsm s = ret_step({FsmState::kOut, 0}, snap(0xC100), &prev, kUcc);
  EXPECT_EQ(s.state, FsmState::kIn);
  EXPECT_EQ(s.ret_exp, 0xC014);
}

TEST(RetFsmTest, ReturnChecks) {
  const SignalSnapshot prev = snap(0xC1FC);
  EXPECT_EQ(ret_step({FsmState::kIn, 0xC014}, snap(0xC014), &prev, kUcc).state,
            FsmState::kOut);
  EXPECT_EQ(ret_step({FsmState::kIn, 0xC014}, snap(0xD000), &prev, kUcc).state,
            FsmState::kReset);
}

TEST(RetFsmTest, FallThroughEntryIsAViolation) {
  const SignalSnapshot prev = snap(0xC0FC);
  EXPECT_EQ(ret_step({FsmState::kOut, 0xC014}, snap(0xC100), &prev, kUcc).state,
            FsmState::kReset);
  const RetFsm m = ret_step({FsmState::kOut, 0xC014}, snap(0xC100), &prev, kUcc,
                            Mutation::kAllowFallThrough);
  EXPECT_EQ(m.state, FsmState::kIn);
  EXPECT_EQ(m.ret_exp, 0xC014);
}

TEST(RetFsmTest, InterruptKeepsRetExp) {
  SignalSnapshot irq = write(0xC104, 0x09EC);
  irq.irq_jmp = true;
  irq.op_ret = 0xC104;
  const SignalSnapshot prev = snap(0xC100);
  RetFsm s = ret_step({FsmState::kIn, 0xC014}, irq, &prev, kUcc);
  EXPECT_EQ(s.state, FsmState::kIrq);
  s = ret_step(s, snap(0xC400), &irq, kUcc);
  EXPECT_EQ(s.state, FsmState::kIrq);
  EXPECT_EQ(s.ret_exp, 0xC014);
  const SignalSnapshot isr = snap(0xC400);
  s = ret_step(s, snap(0xC104), &isr, kUcc);
  EXPECT_EQ(s.state, FsmState::kIn);
  EXPECT_EQ(s.ret_exp, 0xC014);
}

TEST(RetFsmTest, ResetExitsOnlyAtSentinel) {
  EXPECT_EQ(ret_step({FsmState::kReset, 0}, snap(0xC000), nullptr, kUcc).state,
            FsmState::kReset);
  EXPECT_EQ(ret_step({FsmState::kReset, 0}, snap(0), nullptr, kUcc).state,
            FsmState::kOut);
}

TEST(StackFsmTest, WriteBound) {
  const SignalSnapshot prev = snap(0xC100);
  EXPECT_EQ(stack_step({FsmState::kIn, 0x09F0}, write(0xC104, 0x09F4), &prev, kUcc)
                .state,
            FsmState::kReset);
  EXPECT_EQ(stack_step({FsmState::kIn, 0x09F0}, write(0xC104, 0x09E0), &prev, kUcc)
                .state,
            FsmState::kIn);
  // d_addr == bp is outside the frame.
  EXPECT_EQ(stack_step({FsmState::kIn, 0x09F0}, write(0xC104, 0x09F0), &prev, kUcc)
                .state,
            FsmState::kReset);
}

TEST(StackFsmTest, ExitRequiresRestoredSp) {
  const SignalSnapshot prev = snap(0xC1FC);
  EXPECT_EQ(
      stack_step({FsmState::kIn, 0x09F0}, snap(0xC014, 0x09EE), &prev, kUcc).state,
      FsmState::kReset);
  EXPECT_EQ(
      stack_step({FsmState::kIn, 0x09F0}, snap(0xC014, 0x09F0), &prev, kUcc).state,
      FsmState::kOut);
}

TEST(StackFsmTest, BpTracksOutsideAndFreezesOnEntry) {
  const SignalSnapshot a = snap(0xC000, 0x0A00);
  StackFsm s = stack_step({FsmState::kOut, 0}, call(0xC004, 0xC008, 0x09F8), &a,
                          kUcc);
  EXPECT_EQ(s.bp, 0x09F8);
  const SignalSnapshot c = call(0xC004, 0xC008, 0x09F8);
  s = stack_step(s, snap(0xC100, 0x09F6), &c, kUcc);
  EXPECT_EQ(s.state, FsmState::kIn);
  EXPECT_EQ(s.bp, 0x09F8);
}

TEST(StackFsmTest, ResetNeedsQuietSentinel) {
  EXPECT_EQ(stack_step({FsmState::kReset, 0}, write(0, 0x0300), nullptr, kUcc).state,
            FsmState::kReset);
  EXPECT_EQ(stack_step({FsmState::kReset, 0}, snap(0), nullptr, kUcc).state,
            FsmState::kOut);
}

TEST(MonitorTest, BenignTraceStaysOk) {
  const Monitor m(UccConfig{0x0100, 8, {kUcc}});
  MonitorState s = m.initial_state();
  std::vector<SignalSnapshot> trace = {snap(0, 0x0A00), snap(0xC000, 0x0A00),
                                       write(0xC004, 0x0300, 0x0A00),
                                       snap(0xC008, 0x0A00)};
  for (const SignalSnapshot& x : trace) {
    auto [next, v] = m.observe(s, x);
    EXPECT_FALSE(v.reset);
    s = next;
  }
}

TEST(MonitorTest, CrWriteResetsAtThatStep) {
  const Monitor m(UccConfig{0x0100, 8, {kUcc}});
  const std::vector<SignalSnapshot> trace = {snap(0), snap(0xC000),
                                             write(0xC004, 0x0104)};
  const MonitoredTrace mt = monitor_trace(m, trace);
  EXPECT_FALSE(mt.verdicts[1].reset);
  ASSERT_TRUE(mt.verdicts[2].reset);
  const auto causes = mt.verdicts[2].causes.list();
  ASSERT_EQ(causes.size(), 1u);
  EXPECT_EQ(causes[0].describe(), "cr-integrity");
}

TEST(MonitorTest, InitialStateIsReset) {
  const Monitor m(UccConfig{0x0100, 8, {kUcc}});
  const MonitorState s = m.initial_state();
  EXPECT_EQ(s.cr, CrState::kReset);
  EXPECT_EQ(s.ret[0].state, FsmState::kReset);
  EXPECT_TRUE(s.reset_out);
  const auto [next, v] = m.observe(s, snap(0xC000));
  EXPECT_TRUE(v.reset);
  // Staying in Reset is not a new violation.
  EXPECT_TRUE(v.causes.empty());
}

TEST(MonitorTest, TwoUccsResetTogether) {
  const UccDefinition u0{0xC100, 0xC1FC};
  const UccDefinition u1{0xC200, 0xC2FC};
  const Monitor m(UccConfig{0x0100, 8, {u0, u1}});
  const std::vector<SignalSnapshot> trace = {
      snap(0, 0x0A00), call(0xC000, 0xC004, 0x0A00), snap(0xC200, 0x09FE),
      snap(0xC204, 0x09FE), snap(0xD000, 0x0A00)};
  const MonitoredTrace mt = monitor_trace(m, trace);
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    EXPECT_FALSE(mt.verdicts[i].reset) << i;
  }
  const Verdict& v = mt.verdicts.back();
  ASSERT_TRUE(v.reset);
  const auto causes = v.causes.list();
  ASSERT_EQ(causes.size(), 1u);
  EXPECT_EQ(causes[0].describe(), "ret-integrity(1)");
  EXPECT_EQ(mt.final_state.ret[0].state, FsmState::kReset);
  EXPECT_EQ(mt.final_state.stack[0].state, FsmState::kReset);
  EXPECT_EQ(mt.final_state.cr, CrState::kReset);
}

TEST(MonitorTest, ResetOutIsDisjunction) {
  const Monitor m(UccConfig{0x0100, 8, {kUcc}});
  const auto alphabet = verify::default_alphabet(UccConfig{0x0100, 8, {kUcc}});
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    MonitorState s = m.initial_state();
    for (int k = 0; k < 10; ++k) {
      const auto [next, v] = m.observe(s, alphabet.symbols[pick(rng)]);
      const bool any = next.cr == CrState::kReset ||
                       next.ret[0].state == FsmState::kReset ||
                       next.stack[0].state == FsmState::kReset;
      ASSERT_EQ(v.reset, any);
      ASSERT_EQ(next.reset_out, any);
      s = next;
    }
  }
}

// Between entering In and leaving {In, IRQ}, ret_exp and bp never move.
TEST(MonitorTest, RegistersFrozenInsideAndAcrossInterrupts) {
  const UccConfig c{0x0100, 8, {kUcc}};
  const Monitor m(c);
  const auto alphabet = verify::default_alphabet(c);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int frozen_steps = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    MonitorState s = m.initial_state();
    for (int k = 0; k < 12; ++k) {
      const auto [next, v] = m.observe(s, alphabet.symbols[pick(rng)]);
      const auto busy = [](FsmState x) {
        return x == FsmState::kIn || x == FsmState::kIrq;
      };
      if (busy(s.ret[0].state) && busy(next.ret[0].state)) {
        ASSERT_EQ(next.ret[0].ret_exp, s.ret[0].ret_exp);
        ++frozen_steps;
      }
      if (busy(s.stack[0].state) && busy(next.stack[0].state)) {
        ASSERT_EQ(next.stack[0].bp, s.stack[0].bp);
      }
      s = next;
    }
  }
  EXPECT_GT(frozen_steps, 100);
}

TEST(MutationTest, NamesRoundTrip) {
  EXPECT_EQ(all_mutations().size(), 6u);
  for (Mutation m : all_mutations()) {
    EXPECT_EQ(mutation_from_string(to_string(m)), m);
  }
  EXPECT_EQ(mutation_from_string("none"), Mutation::kNone);
  EXPECT_FALSE(mutation_from_string("bogus").has_value());
}

TEST(HardwareCostTest, RegistersAndLuts) {
  EXPECT_EQ(estimate_hardware_cost(1), (HardwareCost{86, 85}));
  EXPECT_EQ(estimate_hardware_cost(4), (HardwareCost{191, 271}));
  EXPECT_EQ(estimate_hardware_cost(8), (HardwareCost{331, 519}));
  EXPECT_THROW(estimate_hardware_cost(0), std::invalid_argument);
  EXPECT_EQ(reported_hardware_cost(4), (HardwareCost{191, 265}));
  EXPECT_FALSE(reported_hardware_cost(9).has_value());
}

}  // namespace
}  // namespace ucca
