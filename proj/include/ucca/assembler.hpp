//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_ASSEMBLER_HPP
#define UCCA_ASSEMBLER_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ucca/isa.hpp"

namespace ucca::corpus {

enum class AsmErrorKind { kSyntax, kUndefinedLabel, kRegionOverflow };

class AsmError : public std::runtime_error {
 public:
  AsmError(AsmErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}
  AsmErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  AsmErrorKind kind_;
  std::size_t line_;
};

using LabelMap = std::map<std::string, Address, std::less<>>;

struct AsmResult {
  ProgramImage image;
  LabelMap labels;
  std::size_t instructions = 0;
};

AsmResult assemble(std::string_view source, const MemoryMap& map = {});

// Evaluates `label`, `0x1F`, `label + 4`, ...; throws AsmError.
Address evaluate(std::string_view expr, const LabelMap& labels,
                 std::size_t line = 0);

std::string disassemble(const Instruction& ins);
// Source text that reassembles to the identical image.
std::string disassemble(const ProgramImage& image, const MemoryMap& map = {});

// Copies n_bytes word by word: one pointer setup, then one MOV @Rp+, &dst
// per word.
std::string emit_marshal_stub(Address src, Address dst, std::size_t n_bytes,
                              Reg ptr = Reg::R5);

}  // namespace ucca::corpus

#endif  // UCCA_ASSEMBLER_HPP
