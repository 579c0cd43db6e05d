//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <array>

#include "ucca/isa.hpp"

namespace ucca {

namespace {

struct OpInfo {
  Opcode op;
  std::string_view name;
};

constexpr std::array<OpInfo, 25> kOps = {{
    {Opcode::NOP, "NOP"},         {Opcode::HALT, "HALT"},
    {Opcode::MOV_IMM, "MOV"},     {Opcode::MOV_REG, "MOV"},
    {Opcode::MOV_STA, "MOV"},     {Opcode::MOV_LDA, "MOV"},
    {Opcode::MOV_STI, "MOV"},     {Opcode::MOV_LDI, "MOV"},
    {Opcode::MOV_CPY, "MOV"},     {Opcode::PUSH_REG, "PUSH"},
    {Opcode::PUSH_IMM, "PUSH"},   {Opcode::POP, "POP"},
    {Opcode::CALL_IMM, "CALL"},   {Opcode::CALL_REG, "CALL"},
    {Opcode::RET, "RET"},         {Opcode::RETI, "RETI"},
    {Opcode::JMP, "JMP"},         {Opcode::BR, "BR"},
    {Opcode::JZ, "JZ"},           {Opcode::ADD_REG, "ADD"},
    {Opcode::ADD_IMM, "ADD"},     {Opcode::SUB_REG, "SUB"},
    {Opcode::SUB_IMM, "SUB"},     {Opcode::CMP_REG, "CMP"},
    {Opcode::CMP_IMM, "CMP"},
}};

constexpr std::array<Opcode, kOps.size()> make_op_list() {
  std::array<Opcode, kOps.size()> out{};
  for (std::size_t i = 0; i < kOps.size(); ++i) out[i] = kOps[i].op;
  return out;
}

constexpr auto kOpList = make_op_list();

}  // namespace

bool is_valid_reg(int r) { return r >= 0 && r < kNumRegs && r != 3; }

std::string_view reg_name(Reg r) {
  static constexpr std::array<std::string_view, kNumRegs> kNames = {
      "PC", "SP", "SR", "R3", "R4", "R5", "R6",
      "R7", "R8", "R9", "R10", "R11", "R12"};
  return kNames[static_cast<int>(r)];
}

std::optional<Opcode> opcode_from_byte(std::uint8_t b) {
  for (const auto& info : kOps) {
    if (static_cast<std::uint8_t>(info.op) == b) return info.op;
  }
  return std::nullopt;
}

std::string_view mnemonic(Opcode op) {
  for (const auto& info : kOps) {
    if (info.op == op) return info.name;
  }
  return "???";
}

std::span<const Opcode> all_opcodes() { return kOpList; }

std::array<Word, 2> encode(const Instruction& ins) {
  const Word w0 = static_cast<Word>(
      (static_cast<unsigned>(ins.op) << 8) |
      ((static_cast<unsigned>(ins.src) & 0xF) << 4) |
      (static_cast<unsigned>(ins.dst) & 0xF));
  return {w0, ins.operand};
}

std::optional<Instruction> decode(Word w0, Word w1) {
  const auto op = opcode_from_byte(static_cast<std::uint8_t>(w0 >> 8));
  if (!op) return std::nullopt;
  const int src = (w0 >> 4) & 0xF;
  const int dst = w0 & 0xF;
  if (!is_valid_reg(src) || !is_valid_reg(dst)) return std::nullopt;
  return Instruction{*op, static_cast<Reg>(src), static_cast<Reg>(dst), w1};
}

}  // namespace ucca
