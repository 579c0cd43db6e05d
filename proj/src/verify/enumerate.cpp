//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <limits>

#include "ucca/verify.hpp"

namespace ucca::verify {

std::optional<std::uint64_t> sequence_count(std::size_t size,
                                            std::size_t depth) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    if (size != 0 && n > std::numeric_limits<std::uint64_t>::max() / size) {
      return std::nullopt;
    }
    n *= size;
  }
  return n;
}

TraceStream::TraceStream(const ReducedAlphabet& alphabet, std::size_t depth)
    : alphabet_(&alphabet), depth_(depth), digits_(depth, 0) {
  const auto n = sequence_count(alphabet.size(), depth);
  if (!n) throw BudgetExceeded("trace space overflows 64 bits");
  count_ = depth == 0 ? 0 : *n;
}

bool TraceStream::next(std::vector<SignalSnapshot>& out) {
  if (emitted_ >= count_) return false;
  if (emitted_ > 0) {
    for (std::size_t p = depth_; p-- > 0;) {
      if (++digits_[p] < alphabet_->size()) break;
      digits_[p] = 0;
    }
  }
  ++emitted_;
  out.resize(depth_);
  for (std::size_t p = 0; p < depth_; ++p) {
    out[p] = alphabet_->symbols[digits_[p]];
    out[p].step = p;
  }
  return true;
}

}  // namespace ucca::verify
