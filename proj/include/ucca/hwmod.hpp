//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_HWMOD_HPP
#define UCCA_HWMOD_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ucca/isa.hpp"
#include "ucca/signals.hpp"

namespace ucca {

struct UccConfig {
  Address cr_base = 0x0100;
  std::size_t capacity = 8;
  std::vector<UccDefinition> uccs;

  bool operator==(const UccConfig&) const = default;
};

// Packed (r_min, r_max) word pairs, 4 bytes per slot, unused slots zero.
struct CrImage {
  Address base = 0x0100;
  std::size_t capacity = 8;
  std::vector<std::uint8_t> contents;

  Value lo() const { return base; }
  Value hi() const { return base + static_cast<Value>(4 * capacity) - 1; }
  bool contains(Value a) const { return a >= lo() && a <= hi(); }

  static CrImage encode(const UccConfig& config);
  // Reads every non-empty slot back out of emulator memory.
  static UccConfig decode(std::span<const std::uint8_t> mem, Address base,
                          std::size_t capacity);
  void materialize(std::vector<std::uint8_t>& mem) const;
};

enum class ConfigErrorKind {
  kPartialOverlap,
  kOutOfProgram,
  kContainsResetSentinel,
  kCrMisplaced,
  kInverted,
  kMisaligned,
  kCapacityExceeded,
};

struct ConfigError {
  ConfigErrorKind kind;
  int i = -1;
  int j = -1;

  std::string describe() const;
  bool operator==(const ConfigError&) const = default;
};

std::vector<ConfigError> validate_config(const UccConfig& config,
                                         const CrImage& cr,
                                         const MemoryMap& map = {});
std::vector<ConfigError> validate_config(const UccConfig& config,
                                         const MemoryMap& map = {});

enum class CrState : std::uint8_t { kRun, kReset };
enum class FsmState : std::uint8_t { kOut, kIn, kIrq, kReset };

std::string_view to_string(FsmState s);
std::string_view to_string(CrState s);

// Single-edit defects used to measure how sharp the specs are.
enum class Mutation : std::uint8_t {
  kNone,
  kFlipStackComparator,
  kSkipRetLatch,
  kSkipBpFreezeInIrq,
  kDropSpExitCheck,
  kDropCrCheck,
  kAllowFallThrough,
};

std::span<const Mutation> all_mutations();
std::string_view to_string(Mutation m);
std::optional<Mutation> mutation_from_string(std::string_view s);

struct CrRegion {
  Value lo = 0;
  Value hi = -1;
  bool contains(Value a) const { return a >= lo && a <= hi; }
};

struct RetFsm {
  FsmState state = FsmState::kReset;
  Value ret_exp = 0;
  bool operator==(const RetFsm&) const = default;
};

struct StackFsm {
  FsmState state = FsmState::kReset;
  Value bp = 0;
  bool operator==(const StackFsm&) const = default;
};

CrState cr_step(CrState s, const SignalSnapshot& now, const CrRegion& cr,
                Mutation m = Mutation::kNone);
RetFsm ret_step(RetFsm s, const SignalSnapshot& now,
                const SignalSnapshot* prev, const UccDefinition& ucc,
                Mutation m = Mutation::kNone);
StackFsm stack_step(StackFsm s, const SignalSnapshot& now,
                    const SignalSnapshot* prev, const UccDefinition& ucc,
                    Mutation m = Mutation::kNone);

struct MonitorState {
  CrState cr = CrState::kReset;
  std::uint8_t n_ucc = 0;
  std::array<RetFsm, kMaxUccs> ret{};
  std::array<StackFsm, kMaxUccs> stack{};
  std::optional<SignalSnapshot> prev;
  bool reset_out = true;

  bool operator==(const MonitorState&) const = default;
};

enum class CauseKind : std::uint8_t { kCrIntegrity, kRetIntegrity,
                                      kStackIntegrity };

struct Cause {
  CauseKind kind;
  int ucc = -1;  // -1 for cr-integrity

  std::string describe() const;  // "ret-integrity(1)"
  bool operator==(const Cause&) const = default;
};

std::string_view to_string(CauseKind k);
std::optional<CauseKind> cause_kind_from_string(std::string_view s);

// Compact cause set, cheap to produce on every step.
struct CauseSet {
  bool cr = false;
  std::uint32_t ret = 0;    // bit i: UCC i
  std::uint32_t stack = 0;

  bool empty() const { return !cr && ret == 0 && stack == 0; }
  bool has(const Cause& c) const;
  std::vector<Cause> list() const;
};

struct Verdict {
  bool reset = false;
  CauseSet causes;
};

class Monitor {
 public:
  explicit Monitor(const UccConfig& config, Mutation m = Mutation::kNone);
  Monitor(std::vector<UccDefinition> uccs, CrRegion cr,
          Mutation m = Mutation::kNone);

  MonitorState initial_state() const;
  // Pure transition: returns the verdict, writes the successor to `next`.
  Verdict observe(const MonitorState& state, const SignalSnapshot& now,
                  MonitorState& next) const;
  std::pair<MonitorState, Verdict> observe(const MonitorState& state,
                                           const SignalSnapshot& now) const;

  const std::vector<UccDefinition>& uccs() const { return uccs_; }
  const CrRegion& cr() const { return cr_; }
  Mutation mutation() const { return mutation_; }

 private:
  std::vector<UccDefinition> uccs_;
  CrRegion cr_;
  Mutation mutation_;
};

struct HardwareCost {
  std::uint64_t registers = 0;
  std::uint64_t luts = 0;
  bool operator==(const HardwareCost&) const = default;
};

// Linear model; registers exact, LUTs an estimate. Throws
// std::invalid_argument for zero regions.
HardwareCost estimate_hardware_cost(std::uint64_t n_ucc);
// Measured synthesis figures for 1..8 regions, nullopt elsewhere.
std::optional<HardwareCost> reported_hardware_cost(std::uint64_t n_ucc);

}  // namespace ucca

#endif  // UCCA_HWMOD_HPP
