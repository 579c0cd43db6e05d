//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_SIGNALS_HPP
#define UCCA_SIGNALS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

namespace ucca {

using Address = std::uint16_t;
using Word = std::uint16_t;

// Signal values in traces. Addresses are non-negative; an absent
// d_addr / op_ret is kNone.
using Value = std::int32_t;
inline constexpr Value kNone = -1;

inline constexpr std::size_t kMaxUccs = 16;

inline Value to_value(const std::optional<Address>& a) {
  return a ? static_cast<Value>(*a) : kNone;
}

// Per-instruction view of the core signals the monitor observes.
struct SignalSnapshot {
  std::uint64_t step = 0;
  Address pc = 0;
  std::optional<Address> d_addr;
  bool w_en = false;
  Address sp = 0;
  bool irq_jmp = false;
  std::optional<Address> op_ret;
  bool reset = false;

  bool operator==(const SignalSnapshot&) const = default;
};

struct UccDefinition {
  Address r_min = 0;
  Address r_max = 0;

  bool contains(Value pc) const { return pc >= r_min && pc <= r_max; }
  bool operator==(const UccDefinition&) const = default;
};

}  // namespace ucca

#endif  // UCCA_SIGNALS_HPP
