//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <array>

#include "ucca/hwmod.hpp"

namespace ucca {

namespace {

constexpr std::array<Mutation, 6> kMutations = {
    Mutation::kFlipStackComparator, Mutation::kSkipRetLatch,
    Mutation::kSkipBpFreezeInIrq,   Mutation::kDropSpExitCheck,
    Mutation::kDropCrCheck,         Mutation::kAllowFallThrough,
};

struct MutationName {
  Mutation m;
  std::string_view name;
};

constexpr std::array<MutationName, 7> kMutationNames = {{
    {Mutation::kNone, "none"},
    {Mutation::kFlipStackComparator, "flip-stack-comparator"},
    {Mutation::kSkipRetLatch, "skip-ret-latch"},
    {Mutation::kSkipBpFreezeInIrq, "skip-bp-freeze-in-irq"},
    {Mutation::kDropSpExitCheck, "drop-sp-exit-check"},
    {Mutation::kDropCrCheck, "drop-cr-check"},
    {Mutation::kAllowFallThrough, "allow-fall-through"},
}};

FsmState classify(bool irq_jmp) {
  return irq_jmp ? FsmState::kIrq : FsmState::kIn;
}

}  // namespace

std::span<const Mutation> all_mutations() { return kMutations; }

std::string_view to_string(Mutation m) {
  for (const auto& e : kMutationNames) {
    if (e.m == m) return e.name;
  }
  return "?";
}

std::optional<Mutation> mutation_from_string(std::string_view s) {
  for (const auto& e : kMutationNames) {
    if (e.name == s) return e.m;
  }
  return std::nullopt;
}

std::string_view to_string(FsmState s) {
  switch (s) {
    case FsmState::kOut: return "Out";
    case FsmState::kIn: return "In";
    case FsmState::kIrq: return "IRQ";
    case FsmState::kReset: return "Reset";
  }
  return "?";
}

std::string_view to_string(CrState s) {
  return s == CrState::kRun ? "Run" : "Reset";
}

CrState cr_step(CrState s, const SignalSnapshot& now, const CrRegion& cr,
                Mutation m) {
  const bool write_cr = m != Mutation::kDropCrCheck && now.w_en &&
                        now.d_addr && cr.contains(*now.d_addr);
  if (write_cr) return CrState::kReset;
  if (s == CrState::kReset && now.pc == 0) return CrState::kRun;
  return s;
}

RetFsm ret_step(RetFsm s, const SignalSnapshot& now,
                const SignalSnapshot* prev, const UccDefinition& ucc,
                Mutation m) {
  const bool in = ucc.contains(now.pc);
  switch (s.state) {
    case FsmState::kReset:
      if (now.pc == 0) s.state = in ? FsmState::kIn : FsmState::kOut;
      break;
    case FsmState::kOut: {
      if (!in) break;
      const Value op_ret = prev ? to_value(prev->op_ret) : kNone;
      if (op_ret == kNone && m != Mutation::kAllowFallThrough) {
        // Entered without a call or interrupt.
        s.ret_exp = kNone;
        s.state = FsmState::kReset;
        break;
      }
      if (m != Mutation::kSkipRetLatch && op_ret != kNone) s.ret_exp = op_ret;
      s.state = classify(now.irq_jmp);
      break;
    }
    case FsmState::kIn:
      if (in) {
        s.state = classify(now.irq_jmp);
      } else {
        // Leaving In is always a return; an interrupt taken here has
        // already left through the IRQ state.
        s.state = now.pc == s.ret_exp ? FsmState::kOut : FsmState::kReset;
      }
      break;
    case FsmState::kIrq:
      if (in) s.state = classify(now.irq_jmp);
      break;
  }
  return s;
}

StackFsm stack_step(StackFsm s, const SignalSnapshot& now,
                    const SignalSnapshot* prev, const UccDefinition& ucc,
                    Mutation m) {
  const bool in = ucc.contains(now.pc);
  bool bad_write = false;
  if (in && now.w_en && now.d_addr) {
    const Value d = *now.d_addr;
    bad_write = m == Mutation::kFlipStackComparator ? d <= s.bp : d >= s.bp;
  }
  auto track = [&] {
    if (!prev || prev->pc != now.pc) s.bp = now.sp;
  };
  auto inside = [&] {
    s.state = bad_write ? FsmState::kReset : classify(now.irq_jmp);
  };

  switch (s.state) {
    case FsmState::kReset:
      if (now.pc == 0 && !now.w_en) {
        if (in) {
          s.state = FsmState::kIn;
        } else {
          s.state = FsmState::kOut;
          track();
        }
      }
      break;
    case FsmState::kOut:
      if (in) {
        inside();
      } else {
        track();
      }
      break;
    case FsmState::kIn:
      if (in) {
        inside();
      } else if (m == Mutation::kDropSpExitCheck || now.sp == s.bp) {
        s.state = FsmState::kOut;
      } else {
        s.state = FsmState::kReset;
      }
      break;
    case FsmState::kIrq:
      if (in) {
        inside();
      } else if (m == Mutation::kSkipBpFreezeInIrq) {
        track();
      }
      break;
  }
  return s;
}

}  // namespace ucca
