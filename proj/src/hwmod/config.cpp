//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <sstream>

#include "ucca/hwmod.hpp"

namespace ucca {

namespace {

void put(std::vector<std::uint8_t>& out, std::size_t at, Word w) {
  out[at] = static_cast<std::uint8_t>(w & 0xFF);
  out[at + 1] = static_cast<std::uint8_t>(w >> 8);
}

Word get(std::span<const std::uint8_t> mem, std::size_t at) {
  return static_cast<Word>(mem[at] | (mem[at + 1] << 8));
}

bool strictly_inside(const UccDefinition& inner, const UccDefinition& outer) {
  return inner.r_min >= outer.r_min && inner.r_max <= outer.r_max &&
         inner != outer;
}

}  // namespace

CrImage CrImage::encode(const UccConfig& config) {
  CrImage cr;
  cr.base = config.cr_base;
  cr.capacity = config.capacity;
  cr.contents.assign(4 * config.capacity, 0);
  for (std::size_t i = 0; i < config.uccs.size() && i < config.capacity; ++i) {
    put(cr.contents, 4 * i, config.uccs[i].r_min);
    put(cr.contents, 4 * i + 2, config.uccs[i].r_max);
  }
  return cr;
}

UccConfig CrImage::decode(std::span<const std::uint8_t> mem, Address base,
                          std::size_t capacity) {
  UccConfig config;
  config.cr_base = base;
  config.capacity = capacity;
  for (std::size_t i = 0; i < capacity; ++i) {
    const std::size_t at = base + 4 * i;
    const UccDefinition d{get(mem, at), get(mem, at + 2)};
    if (d.r_min == 0 && d.r_max == 0) continue;
    config.uccs.push_back(d);
  }
  return config;
}

void CrImage::materialize(std::vector<std::uint8_t>& mem) const {
  for (std::size_t i = 0; i < contents.size(); ++i) mem[base + i] = contents[i];
}

std::string ConfigError::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ConfigErrorKind::kPartialOverlap:
      os << "partial-overlap(" << i << ", " << j << ")";
      break;
    case ConfigErrorKind::kOutOfProgram:
      os << "out-of-program(" << i << ")";
      break;
    case ConfigErrorKind::kContainsResetSentinel:
      os << "contains-reset-sentinel(" << i << ")";
      break;
    case ConfigErrorKind::kCrMisplaced:
      os << "cr-misplaced";
      break;
    case ConfigErrorKind::kInverted:
      os << "inverted(" << i << ")";
      break;
    case ConfigErrorKind::kMisaligned:
      os << "misaligned(" << i << ")";
      break;
    case ConfigErrorKind::kCapacityExceeded:
      os << "capacity-exceeded";
      break;
  }
  return os.str();
}

std::vector<ConfigError> validate_config(const UccConfig& config,
                                         const CrImage& cr,
                                         const MemoryMap& map) {
  std::vector<ConfigError> errors;
  if (config.uccs.size() > config.capacity || config.capacity > kMaxUccs) {
    errors.push_back({ConfigErrorKind::kCapacityExceeded});
  }
  if ((cr.base & 1) || cr.capacity == 0 || !map.in_cr(cr.lo()) ||
      !map.in_cr(cr.hi())) {
    errors.push_back({ConfigErrorKind::kCrMisplaced});
  }
  const auto& u = config.uccs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int ii = static_cast<int>(i);
    if (u[i].contains(0)) {
      errors.push_back({ConfigErrorKind::kContainsResetSentinel, ii});
    }
    if (u[i].r_min > u[i].r_max) {
      errors.push_back({ConfigErrorKind::kInverted, ii});
    }
    if ((u[i].r_min | u[i].r_max) & 1) {
      errors.push_back({ConfigErrorKind::kMisaligned, ii});
    }
    if (!map.in_program(u[i].r_min) || !map.in_program(u[i].r_max)) {
      errors.push_back({ConfigErrorKind::kOutOfProgram, ii});
    }
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const bool disjoint =
          u[i].r_max < u[j].r_min || u[j].r_max < u[i].r_min;
      if (disjoint || strictly_inside(u[i], u[j]) ||
          strictly_inside(u[j], u[i])) {
        continue;
      }
      errors.push_back({ConfigErrorKind::kPartialOverlap,
                        static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return errors;
}

std::vector<ConfigError> validate_config(const UccConfig& config,
                                         const MemoryMap& map) {
  return validate_config(config, CrImage::encode(config), map);
}

}  // namespace ucca
