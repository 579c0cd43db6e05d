//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_ISA_HPP
#define UCCA_ISA_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ucca/signals.hpp"

namespace ucca {

struct MemoryMap {
  static constexpr int kIvtSlots = 16;

  Address cr_base = 0x0100;
  Address cr_limit = 0x01FF;
  Address ram_base = 0x0200;
  Address ram_limit = 0x09FF;
  Address stack_init = 0x0A00;
  Address prog_base = 0xC000;
  Address prog_limit = 0xFFDF;
  Address ivt_base = 0xFFE0;

  bool in_cr(Value a) const { return a >= cr_base && a <= cr_limit; }
  bool in_ram(Value a) const { return a >= ram_base && a <= ram_limit; }
  bool in_program(Value a) const { return a >= prog_base && a <= prog_limit; }
  bool in_ivt(Value a) const { return a >= ivt_base && a <= 0xFFFF; }
  std::size_t program_bytes() const {
    return static_cast<std::size_t>(prog_limit) - prog_base + 1;
  }

  // Throws std::invalid_argument when the region ordering is broken.
  void validate() const;

  bool operator==(const MemoryMap&) const = default;
};

enum class Reg : std::uint8_t {
  PC = 0,
  SP = 1,
  SR = 2,
  R4 = 4, R5, R6, R7, R8, R9, R10, R11, R12,
};

inline constexpr int kNumRegs = 13;

bool is_valid_reg(int r);
std::string_view reg_name(Reg r);

enum class Opcode : std::uint8_t {
  NOP = 0x01,
  HALT = 0x02,
  MOV_IMM = 0x10,    // MOV #imm, Rd
  MOV_REG = 0x11,    // MOV Rs, Rd
  MOV_STA = 0x12,    // MOV Rs, &abs
  MOV_LDA = 0x13,    // MOV &abs, Rd
  MOV_STI = 0x14,    // MOV Rs, @Rd
  MOV_LDI = 0x15,    // MOV @Rs, Rd
  MOV_CPY = 0x16,    // MOV @Rs+, &abs
  PUSH_REG = 0x20,
  PUSH_IMM = 0x21,
  POP = 0x22,
  CALL_IMM = 0x30,
  CALL_REG = 0x31,
  RET = 0x32,
  RETI = 0x33,
  JMP = 0x34,
  BR = 0x35,
  JZ = 0x36,
  ADD_REG = 0x40,
  ADD_IMM = 0x41,
  SUB_REG = 0x42,
  SUB_IMM = 0x43,
  CMP_REG = 0x44,
  CMP_IMM = 0x45,
};

struct Instruction {
  Opcode op = Opcode::NOP;
  Reg src = Reg::PC;
  Reg dst = Reg::PC;
  Word operand = 0;

  bool operator==(const Instruction&) const = default;
};

inline constexpr Address kInstructionBytes = 4;

std::optional<Opcode> opcode_from_byte(std::uint8_t b);
std::string_view mnemonic(Opcode op);
std::array<Word, 2> encode(const Instruction& ins);
// Returns nullopt for an undefined opcode or register field.
std::optional<Instruction> decode(Word w0, Word w1);
// Every defined opcode, in encoding order.
std::span<const Opcode> all_opcodes();

enum class FaultKind { kDecodeError, kUnalignedAccess, kHaltedMachine };

class MachineFault : public std::runtime_error {
 public:
  MachineFault(FaultKind kind, Address pc, const std::string& what)
      : std::runtime_error(what), kind_(kind), pc_(pc) {}
  FaultKind kind() const { return kind_; }
  Address pc() const { return pc_; }

 private:
  FaultKind kind_;
  Address pc_;
};

enum class LoadErrorKind {
  kImageTooLarge,
  kMisalignedEntry,
  kEntryOutsideProgram,
  kMalformedImage,
};

class LoadError : public std::runtime_error {
 public:
  LoadError(LoadErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  LoadErrorKind kind() const { return kind_; }

 private:
  LoadErrorKind kind_;
};

// Binary layout, little-endian words:
//   [entry][ivt slot 0..15][program words placed from prog_base]
struct ProgramImage {
  Address entry = 0;
  std::array<Address, MemoryMap::kIvtSlots> ivt{};
  std::vector<Word> words;

  std::vector<std::uint8_t> serialize() const;
  static ProgramImage parse(std::span<const std::uint8_t> bytes);

  bool operator==(const ProgramImage&) const = default;
};

struct MachineState {
  MemoryMap map;
  Address entry = 0;
  Address pc = 0;
  Address sp = 0;
  bool zflag = false;
  std::array<Word, 9> gpr{};  // R4..R12
  std::vector<std::uint8_t> mem = std::vector<std::uint8_t>(0x10000);
  bool halted = false;
  std::optional<int> pending_irq;

  Word reg(Reg r) const;
  void set_reg(Reg r, Word v);
  Word read_word(Address a) const;
  void write_word(Address a, Word v);

  bool operator==(const MachineState&) const = default;
};

// Everything one instruction does to architectural state. The single
// optional store makes the one-write-per-step property structural.
struct Effect {
  Address pc = 0;
  Address sp = 0;
  bool zflag = false;
  std::array<Word, 9> gpr{};
  std::optional<std::pair<Address, Word>> store;
  bool halt = false;
  bool consumed_irq = false;
};

struct Transition {
  SignalSnapshot snapshot;
  Effect effect;
  std::optional<FaultKind> fault;
  std::string fault_message;
};

MachineState load_program(const ProgramImage& image, const MemoryMap& map = {});
MachineState load_program(std::span<const std::uint8_t> image,
                          const MemoryMap& map = {});

// Computes the snapshot and effect of the next step without touching
// the state. A decode fault still yields the fetch-sampled snapshot.
Transition plan_step(const MachineState& state, std::optional<int> irq);
void commit(MachineState& state, const Transition& t);

// Value-semantics single step; throws MachineFault.
std::pair<MachineState, SignalSnapshot> step(MachineState state,
                                             std::optional<int> irq = {});

std::pair<MachineState, SignalSnapshot> perform_reset(const MachineState& state);

std::uint64_t estimate_marshal_cost(std::uint64_t n_bytes);

}  // namespace ucca

#endif  // UCCA_ISA_HPP
