//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <stdexcept>

#include "ucca/isa.hpp"

namespace ucca {

void MemoryMap::validate() const {
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  if (cr_base > cr_limit || ram_base > ram_limit || prog_base > prog_limit) {
    fail("memory map: empty region");
  }
  if (!(cr_limit < ram_base && ram_limit < prog_base && prog_limit < ivt_base)) {
    fail("memory map: regions must be ordered cr < ram < program < ivt");
  }
  if (ivt_base != 0x10000 - 2 * kIvtSlots) {
    fail("memory map: ivt must occupy the top 16 words");
  }
  if (stack_init != ram_limit + 1) {
    fail("memory map: stack_init must sit just above ram");
  }
  if ((cr_base | ram_base | stack_init | prog_base | ivt_base) & 1) {
    fail("memory map: region bases must be word aligned");
  }
}

}  // namespace ucca
