//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <stdexcept>

#include "ucca/hwmod.hpp"

namespace ucca {

std::string_view to_string(CauseKind k) {
  switch (k) {
    case CauseKind::kCrIntegrity: return "cr-integrity";
    case CauseKind::kRetIntegrity: return "ret-integrity";
    case CauseKind::kStackIntegrity: return "stack-integrity";
  }
  return "?";
}

std::optional<CauseKind> cause_kind_from_string(std::string_view s) {
  for (auto k : {CauseKind::kCrIntegrity, CauseKind::kRetIntegrity,
                 CauseKind::kStackIntegrity}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::string Cause::describe() const {
  std::string out(to_string(kind));
  if (kind != CauseKind::kCrIntegrity) {
    out += "(" + std::to_string(ucc) + ")";
  }
  return out;
}

bool CauseSet::has(const Cause& c) const {
  switch (c.kind) {
    case CauseKind::kCrIntegrity: return cr;
    case CauseKind::kRetIntegrity: return (ret >> c.ucc) & 1;
    case CauseKind::kStackIntegrity: return (stack >> c.ucc) & 1;
  }
  return false;
}

std::vector<Cause> CauseSet::list() const {
  std::vector<Cause> out;
  if (cr) out.push_back({CauseKind::kCrIntegrity, -1});
  for (int i = 0; i < static_cast<int>(kMaxUccs); ++i) {
    if ((ret >> i) & 1) out.push_back({CauseKind::kRetIntegrity, i});
    if ((stack >> i) & 1) out.push_back({CauseKind::kStackIntegrity, i});
  }
  return out;
}

Monitor::Monitor(const UccConfig& config, Mutation m)
    : Monitor(config.uccs,
              CrRegion{config.cr_base,
                       config.cr_base +
                           static_cast<Value>(4 * config.capacity) - 1},
              m) {}

Monitor::Monitor(std::vector<UccDefinition> uccs, CrRegion cr, Mutation m)
    : uccs_(std::move(uccs)), cr_(cr), mutation_(m) {
  if (uccs_.size() > kMaxUccs) {
    throw std::invalid_argument("too many UCCs for the monitor");
  }
}

MonitorState Monitor::initial_state() const {
  MonitorState s;
  s.n_ucc = static_cast<std::uint8_t>(uccs_.size());
  return s;
}

Verdict Monitor::observe(const MonitorState& state, const SignalSnapshot& now,
                         MonitorState& next) const {
  Verdict v;
  const SignalSnapshot* prev = state.prev ? &*state.prev : nullptr;
  next.n_ucc = state.n_ucc;

  next.cr = cr_step(state.cr, now, cr_, mutation_);
  bool any = next.cr == CrState::kReset;
  v.causes.cr = state.cr == CrState::kRun && next.cr == CrState::kReset;

  for (std::size_t i = 0; i < uccs_.size(); ++i) {
    next.ret[i] = ret_step(state.ret[i], now, prev, uccs_[i], mutation_);
    next.stack[i] = stack_step(state.stack[i], now, prev, uccs_[i], mutation_);
    const bool ret_reset = next.ret[i].state == FsmState::kReset;
    const bool stack_reset = next.stack[i].state == FsmState::kReset;
    if (ret_reset && state.ret[i].state != FsmState::kReset) {
      v.causes.ret |= 1u << i;
    }
    if (stack_reset && state.stack[i].state != FsmState::kReset) {
      v.causes.stack |= 1u << i;
    }
    any = any || ret_reset || stack_reset;
  }

  if (any) {
    // reset_ucca is global: every sub-module restarts together.
    next.cr = CrState::kReset;
    for (std::size_t i = 0; i < uccs_.size(); ++i) {
      next.ret[i].state = FsmState::kReset;
      next.stack[i].state = FsmState::kReset;
    }
  }
  next.reset_out = any;
  next.prev = now;
  v.reset = any;
  return v;
}

std::pair<MonitorState, Verdict> Monitor::observe(
    const MonitorState& state, const SignalSnapshot& now) const {
  MonitorState next = state;
  const Verdict v = observe(state, now, next);
  return {next, v};
}

}  // namespace ucca
