//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ucca/trace_builder.hpp"

namespace ucca {

ltl::Regions regions_of(const Monitor& monitor) {
  ltl::Regions r;
  r.uccs = monitor.uccs();
  r.cr_lo = monitor.cr().lo;
  r.cr_hi = monitor.cr().hi;
  return r;
}

ltl::TraceRow make_row(const SignalSnapshot& s, const MonitorState& after,
                       bool reset) {
  ltl::TraceRow row;
  row.step = s.step;
  row.pc = s.pc;
  row.sp = s.sp;
  row.d_addr = to_value(s.d_addr);
  row.w_en = s.w_en;
  row.irq_jmp = s.irq_jmp;
  row.op_ret = to_value(s.op_ret);
  row.reset = reset;
  row.cr_state = static_cast<std::uint8_t>(after.cr);
  for (std::size_t i = 0; i < after.n_ucc; ++i) {
    row.ret_exp[i] = after.ret[i].ret_exp;
    row.bp[i] = after.stack[i].bp;
    row.ret_state[i] = static_cast<std::uint8_t>(after.ret[i].state);
    row.stack_state[i] = static_cast<std::uint8_t>(after.stack[i].state);
  }
  return row;
}

MonitoredTrace monitor_trace(const Monitor& monitor,
                             std::span<const SignalSnapshot> snapshots) {
  MonitoredTrace out;
  out.trace.regions = regions_of(monitor);
  MonitorState state = monitor.initial_state();
  for (const SignalSnapshot& s : snapshots) {
    MonitorState next = state;
    const Verdict v = monitor.observe(state, s, next);
    out.trace.rows.push_back(make_row(s, next, v.reset));
    out.verdicts.push_back(v);
    state = next;
  }
  out.final_state = state;
  return out;
}

}  // namespace ucca
