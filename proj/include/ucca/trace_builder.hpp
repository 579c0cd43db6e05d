//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_TRACE_BUILDER_HPP
#define UCCA_TRACE_BUILDER_HPP

#include <span>
#include <vector>

#include "ucca/hwmod.hpp"
#include "ucca/ltl.hpp"

namespace ucca {

ltl::Regions regions_of(const Monitor& monitor);

// Extends a snapshot with the registers the monitor holds after it; the
// reset bit comes from the verdict.
ltl::TraceRow make_row(const SignalSnapshot& s, const MonitorState& after,
                       bool reset);

struct MonitoredTrace {
  ltl::Trace trace;
  std::vector<Verdict> verdicts;
  MonitorState final_state;
};

MonitoredTrace monitor_trace(const Monitor& monitor,
                             std::span<const SignalSnapshot> snapshots);

}  // namespace ucca

#endif  // UCCA_TRACE_BUILDER_HPP
