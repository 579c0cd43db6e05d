//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>

#include "ucca/scenario.hpp"

namespace ucca::corpus {

std::string Expectation::describe() const {
  return completes ? "completes" : "reset-at " + cause.describe();
}

std::string ScenarioResult::actual() const {
  switch (run.outcome) {
    case Outcome::kCompleted:
      return "completes";
    case Outcome::kReset: {
      std::string out = "reset-at";
      for (const Cause& c : run.resets.front().causes) out += " " + c.describe();
      return out;
    }
    case Outcome::kFault:
      return "fault: " + run.fault_message;
    case Outcome::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

bool ScenarioResult::specs_hold() const {
  return std::all_of(specs.begin(), specs.end(),
                     [](const SpecOutcome& s) { return s.result.holds; });
}

UccConfig resolve_config(const Scenario& s, const LabelMap& labels) {
  UccConfig c;
  c.cr_base = s.cr_base;
  for (const UccBounds& b : s.uccs) {
    c.uccs.push_back({evaluate(b.min, labels), evaluate(b.max, labels)});
  }
  return c;
}

ScenarioResult run_scenario(const Scenario& s, const ScenarioOptions& options) {
  ScenarioResult r;
  r.name = s.name;
  r.expected = s.expected;
  r.program = assemble(s.source);
  r.config = resolve_config(s, r.program.labels);

  RunOptions ro;
  ro.max_steps = s.max_steps;
  ro.mode = options.mode;
  ro.mutation = options.mutation;
  ro.schedule = options.schedule ? *options.schedule : s.schedule;
  r.run = run_program(r.program.image, r.config, ro);
  if (r.run.outcome == Outcome::kBudgetExceeded &&
      options.mode == RunMode::kSingleShot) {
    throw StepBudgetExceeded("scenario " + s.name + " exceeded " +
                             std::to_string(s.max_steps) + " steps");
  }

  for (const auto& spec : ltl::builtin_specs(std::max<std::size_t>(1, r.config.uccs.size()))) {
    r.specs.push_back({spec.id, spec.property, spec.ucc,
                       ltl::check(spec.formula, r.run.trace)});
  }

  if (s.expected.completes) {
    r.matches = r.run.outcome == Outcome::kCompleted;
  } else {
    r.matches = r.run.outcome == Outcome::kReset &&
                std::find(r.run.resets.front().causes.begin(),
                          r.run.resets.front().causes.end(),
                          s.expected.cause) != r.run.resets.front().causes.end();
  }
  return r;
}

const Scenario* find_scenario(std::string_view name) {
  for (const Scenario& s : scenarios()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace ucca::corpus
