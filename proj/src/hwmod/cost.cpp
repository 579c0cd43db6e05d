//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <array>
#include <stdexcept>

#include "ucca/hwmod.hpp"

namespace ucca {

HardwareCost estimate_hardware_cost(std::uint64_t n_ucc) {
  if (n_ucc == 0) throw std::invalid_argument("zero-regions");
  return {35 * (n_ucc - 1) + 86, 62 * (n_ucc - 1) + 85};
}

std::optional<HardwareCost> reported_hardware_cost(std::uint64_t n_ucc) {
  static constexpr std::array<HardwareCost, 8> kTable = {{
      {86, 85}, {121, 145}, {156, 205}, {191, 265},
      {226, 327}, {261, 389}, {296, 450}, {331, 520},
  }};
  if (n_ucc == 0 || n_ucc > kTable.size()) return std::nullopt;
  return kTable[n_ucc - 1];
}

}  // namespace ucca
