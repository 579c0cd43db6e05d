//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ucca/isa.hpp"

namespace ucca {

namespace {

void put_word(std::vector<std::uint8_t>& out, Word w) {
  out.push_back(static_cast<std::uint8_t>(w & 0xFF));
  out.push_back(static_cast<std::uint8_t>(w >> 8));
}

Word get_word(std::span<const std::uint8_t> bytes, std::size_t at) {
  return static_cast<Word>(bytes[at] | (bytes[at + 1] << 8));
}

}  // namespace

std::vector<std::uint8_t> ProgramImage::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(2 * (1 + ivt.size() + words.size()));
  put_word(out, entry);
  for (Address v : ivt) put_word(out, v);
  for (Word w : words) put_word(out, w);
  return out;
}

ProgramImage ProgramImage::parse(std::span<const std::uint8_t> bytes) {
  constexpr std::size_t kHeader = 2 * (1 + MemoryMap::kIvtSlots);
  if (bytes.size() < kHeader || bytes.size() % 2 != 0) {
    throw LoadError(LoadErrorKind::kMalformedImage,
                    "image shorter than header or of odd length");
  }
  ProgramImage img;
  img.entry = get_word(bytes, 0);
  for (int i = 0; i < MemoryMap::kIvtSlots; ++i) {
    img.ivt[i] = get_word(bytes, 2 + 2 * i);
  }
  for (std::size_t at = kHeader; at < bytes.size(); at += 2) {
    img.words.push_back(get_word(bytes, at));
  }
  return img;
}

}  // namespace ucca
