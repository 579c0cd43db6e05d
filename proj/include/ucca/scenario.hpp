//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_SCENARIO_HPP
#define UCCA_SCENARIO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucca/assembler.hpp"
#include "ucca/runner.hpp"

namespace ucca::corpus {

// UCC bounds as assembler expressions over the scenario's labels.
struct UccBounds {
  std::string min;
  std::string max;
  bool operator==(const UccBounds&) const = default;
};

struct Expectation {
  bool completes = true;
  Cause cause{CauseKind::kCrIntegrity, -1};  // when !completes

  std::string describe() const;  // "completes" or "reset-at ret-integrity(0)"
  bool operator==(const Expectation&) const = default;
};

struct Scenario {
  std::string name;
  std::string description;
  std::string source;
  Address cr_base = 0x0100;
  std::vector<UccBounds> uccs;
  std::vector<Interrupt> schedule;
  Expectation expected;
  std::uint64_t max_steps = 2000;

  bool is_attack() const { return !expected.completes; }
};

class StepBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecOutcome {
  int id = 0;
  int property = 0;
  int ucc = -1;
  ltl::CheckResult result;
};

struct ScenarioResult {
  std::string name;
  Expectation expected;
  AsmResult program;
  UccConfig config;
  RunResult run;
  std::vector<SpecOutcome> specs;
  bool matches = false;

  std::string actual() const;
  bool specs_hold() const;
};

UccConfig resolve_config(const Scenario& s, const LabelMap& labels);

struct ScenarioOptions {
  RunMode mode = RunMode::kSingleShot;
  Mutation mutation = Mutation::kNone;
  // Replaces the scenario's own schedule when set.
  std::optional<std::vector<Interrupt>> schedule;
};

// Throws AsmError, ConfigInvalid or StepBudgetExceeded.
ScenarioResult run_scenario(const Scenario& s, const ScenarioOptions& options = {});

const std::vector<Scenario>& scenarios();
const Scenario* find_scenario(std::string_view name);

}  // namespace ucca::corpus

#endif  // UCCA_SCENARIO_HPP
