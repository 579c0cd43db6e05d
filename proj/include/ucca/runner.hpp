//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_RUNNER_HPP
#define UCCA_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucca/hwmod.hpp"
#include "ucca/isa.hpp"
#include "ucca/ltl.hpp"

namespace ucca::corpus {

struct Interrupt {
  std::uint64_t step = 0;  // snapshot index at which the request is raised
  int irq = 0;
  bool operator==(const Interrupt&) const = default;
};

enum class RunMode { kSingleShot, kContinuous };

struct RunOptions {
  std::uint64_t max_steps = 10'000;
  RunMode mode = RunMode::kSingleShot;
  Mutation mutation = Mutation::kNone;
  std::vector<Interrupt> schedule;
};

enum class Outcome { kCompleted, kReset, kFault, kBudgetExceeded };

std::string_view to_string(Outcome o);

struct ResetEvent {
  std::uint64_t step = 0;
  std::vector<Cause> causes;
};

struct RunResult {
  Outcome outcome = Outcome::kCompleted;
  ltl::Trace trace;
  std::vector<SignalSnapshot> snapshots;
  std::vector<Verdict> verdicts;
  std::vector<ResetEvent> resets;
  std::optional<FaultKind> fault;
  std::string fault_message;
  MachineState final_state;
};

class ConfigInvalid : public std::runtime_error {
 public:
  explicit ConfigInvalid(std::vector<ConfigError> errors);
  const std::vector<ConfigError>& errors() const { return errors_; }

 private:
  std::vector<ConfigError> errors_;
};

// Loads the image, materialises the CR, and runs emulator and monitor in
// lock step. A step whose snapshot draws a reset is never committed.
RunResult run_program(const ProgramImage& image, const UccConfig& config,
                      const RunOptions& options, const MemoryMap& map = {});

}  // namespace ucca::corpus

#endif  // UCCA_RUNNER_HPP
