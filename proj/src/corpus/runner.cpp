//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <map>

#include "ucca/runner.hpp"
#include "ucca/trace_builder.hpp"

namespace ucca::corpus {

namespace {

std::string join(const std::vector<ConfigError>& errors) {
  std::string out = "invalid UCC configuration:";
  for (const auto& e : errors) out += " " + e.describe();
  return out;
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kCompleted: return "completed";
    case Outcome::kReset: return "reset";
    case Outcome::kFault: return "fault";
    case Outcome::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

ConfigInvalid::ConfigInvalid(std::vector<ConfigError> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

RunResult run_program(const ProgramImage& image, const UccConfig& config,
                      const RunOptions& options, const MemoryMap& map) {
  const CrImage cr = CrImage::encode(config);
  if (auto errors = validate_config(config, cr, map); !errors.empty()) {
    throw ConfigInvalid(std::move(errors));
  }
  MachineState state = load_program(image, map);
  cr.materialize(state.mem);

  // The monitor is wired from what the CR actually holds.
  const UccConfig wired = CrImage::decode(state.mem, cr.base, cr.capacity);
  const Monitor monitor(wired, options.mutation);
  MonitorState mon = monitor.initial_state();

  std::multimap<std::uint64_t, int> schedule;
  for (const Interrupt& i : options.schedule) schedule.emplace(i.step, i.irq);

  RunResult r;
  r.trace.regions = regions_of(monitor);
  auto record = [&](SignalSnapshot s) {
    s.step = r.snapshots.size();
    MonitorState next = mon;
    const Verdict v = monitor.observe(mon, s, next);
    s.reset = v.reset;
    mon = next;
    r.trace.rows.push_back(make_row(s, mon, v.reset));
    r.snapshots.push_back(s);
    r.verdicts.push_back(v);
    return v;
  };

  // Power-on: the reset routine's sentinel releases the monitor.
  {
    auto [fresh, sentinel] = perform_reset(state);
    state = std::move(fresh);
    record(sentinel);
  }

  while (true) {
    if (state.halted) {
      r.outcome = Outcome::kCompleted;
      break;
    }
    if (r.snapshots.size() >= options.max_steps) {
      r.outcome = Outcome::kBudgetExceeded;
      break;
    }
    std::optional<int> irq;
    if (auto it = schedule.find(r.snapshots.size()); it != schedule.end()) {
      irq = it->second;
    }
    const Transition t = plan_step(state, irq);
    const Verdict v = record(t.snapshot);
    if (v.reset) {
      r.resets.push_back({r.snapshots.back().step, v.causes.list()});
      auto [fresh, sentinel] = perform_reset(state);
      state = std::move(fresh);
      record(sentinel);
      if (options.mode == RunMode::kSingleShot) {
        r.outcome = Outcome::kReset;
        break;
      }
      continue;
    }
    if (t.fault) {
      r.outcome = Outcome::kFault;
      r.fault = t.fault;
      r.fault_message = t.fault_message;
      break;
    }
    commit(state, t);
  }
  r.final_state = std::move(state);
  return r;
}

}  // namespace ucca::corpus
