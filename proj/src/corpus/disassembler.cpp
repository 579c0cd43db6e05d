//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdio>
#include <sstream>

#include "ucca/assembler.hpp"

namespace ucca::corpus {

namespace {

std::string hex4(unsigned v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%04X", v & 0xFFFF);
  return buf;
}

}  // namespace

std::string disassemble(const Instruction& ins) {
  const std::string m(mnemonic(ins.op));
  const std::string s(reg_name(ins.src));
  const std::string d(reg_name(ins.dst));
  const std::string imm = hex4(ins.operand);
  switch (ins.op) {
    case Opcode::NOP:
    case Opcode::HALT:
    case Opcode::RET:
    case Opcode::RETI:
      return m;
    case Opcode::MOV_IMM: return m + " #" + imm + ", " + d;
    case Opcode::MOV_REG: return m + " " + s + ", " + d;
    case Opcode::MOV_STA: return m + " " + s + ", &" + imm;
    case Opcode::MOV_LDA: return m + " &" + imm + ", " + d;
    case Opcode::MOV_STI: return m + " " + s + ", @" + d;
    case Opcode::MOV_LDI: return m + " @" + s + ", " + d;
    case Opcode::MOV_CPY: return m + " @" + s + "+, &" + imm;
    case Opcode::PUSH_REG: return m + " " + s;
    case Opcode::PUSH_IMM: return m + " #" + imm;
    case Opcode::POP: return m + " " + d;
    case Opcode::CALL_IMM:
    case Opcode::JMP:
    case Opcode::JZ:
      return m + " #" + imm;
    case Opcode::CALL_REG:
    case Opcode::BR:
      return m + " " + s;
    case Opcode::ADD_REG:
    case Opcode::SUB_REG:
    case Opcode::CMP_REG:
      return m + " " + s + ", " + d;
    case Opcode::ADD_IMM:
    case Opcode::SUB_IMM:
    case Opcode::CMP_IMM:
      return m + " #" + imm + ", " + d;
  }
  return "???";
}

std::string disassemble(const ProgramImage& image, const MemoryMap& map) {
  std::ostringstream os;
  os << "        .org " << hex4(map.prog_base) << "\n";
  os << "        .entry " << hex4(image.entry) << "\n";
  for (int i = 0; i < MemoryMap::kIvtSlots; ++i) {
    if (image.ivt[i] != 0) os << "        .ivt " << i << ", " << hex4(image.ivt[i]) << "\n";
  }
  const auto& w = image.words;
  for (std::size_t k = 0; k < w.size();) {
    const Address addr = static_cast<Address>(map.prog_base + 2 * k);
    os << hex4(addr).replace(0, 2, "L_") << ":";
    if (k + 1 < w.size()) {
      const auto ins = decode(w[k], w[k + 1]);
      // Only print as an instruction when it re-encodes bit for bit.
      if (ins && encode(*ins) == std::array<Word, 2>{w[k], w[k + 1]}) {
        os << " " << disassemble(*ins) << "\n";
        k += 2;
        continue;
      }
      os << " .word " << hex4(w[k]) << ", " << hex4(w[k + 1]) << "\n";
      k += 2;
    } else {
      os << " .word " << hex4(w[k]) << "\n";
      k += 1;
    }
  }
  return os.str();
}

}  // namespace ucca::corpus
