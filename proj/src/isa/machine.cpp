//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <sstream>

#include "ucca/isa.hpp"

namespace ucca {

namespace {

std::string hex(unsigned v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase << v;
  return os.str();
}

// Raised inside the planner; converted to Transition::fault.
struct Trap {
  FaultKind kind;
  std::string message;
};

// Working register file for one step.
class Planner {
 public:
  explicit Planner(const MachineState& s) : s_(s) {
    e_.pc = s.pc;
    e_.sp = s.sp;
    e_.zflag = s.zflag;
    e_.gpr = s.gpr;
  }

  Word get(Reg r) const {
    switch (r) {
      case Reg::PC: return e_.pc;
      case Reg::SP: return e_.sp;
      case Reg::SR: return e_.zflag ? 0x0002 : 0x0000;
      default: return e_.gpr[static_cast<int>(r) - 4];
    }
  }

  void set(Reg r, Word v) {
    switch (r) {
      case Reg::PC:
        if (v & 1) trap(FaultKind::kUnalignedAccess, "odd PC " + hex(v));
        e_.pc = v;
        break;
      case Reg::SP:
        if (v & 1) trap(FaultKind::kUnalignedAccess, "odd SP " + hex(v));
        e_.sp = v;
        break;
      case Reg::SR:
        e_.zflag = (v & 0x0002) != 0;
        break;
      default:
        e_.gpr[static_cast<int>(r) - 4] = v;
    }
  }

  Word load(Address a) {
    check_aligned(a);
    snap_.d_addr = a;
    return s_.read_word(a);
  }

  void store(Address a, Word v) {
    check_aligned(a);
    snap_.d_addr = a;
    snap_.w_en = true;
    e_.store = std::make_pair(a, v);
  }

  void push(Word v) {
    const Address a = static_cast<Address>(e_.sp - 2);
    store(a, v);
    set(Reg::SP, a);
  }

  Word pop() {
    const Word v = load(e_.sp);
    set(Reg::SP, static_cast<Address>(e_.sp + 2));
    return v;
  }

  Transition interrupt(int irq) {
    if (irq < 0 || irq >= MemoryMap::kIvtSlots) {
      throw std::invalid_argument("irq number out of range: " +
                                  std::to_string(irq));
    }
    begin();
    return finish([&] {
      const Address from = s_.pc;
      push(from);
      snap_.irq_jmp = true;
      snap_.op_ret = from;
      e_.consumed_irq = true;
      set(Reg::PC, s_.read_word(
                       static_cast<Address>(s_.map.ivt_base + 2 * irq)));
    });
  }

  Transition instruction() {
    begin();
    const Address pc0 = s_.pc;
    const Address next = static_cast<Address>(pc0 + kInstructionBytes);
    const auto ins = decode(s_.read_word(pc0),
                            s_.read_word(static_cast<Address>(pc0 + 2)));
    if (!ins) {
      Transition t;
      t.snapshot = snap_;
      t.effect = e_;
      t.fault = FaultKind::kDecodeError;
      t.fault_message = "undefined instruction at " + hex(pc0);
      return t;
    }
    return finish([&] {
      e_.pc = next;
      const Word imm = ins->operand;
      switch (ins->op) {
        case Opcode::NOP:
          break;
        case Opcode::HALT:
          e_.halt = true;
          break;
        case Opcode::MOV_IMM:
          set(ins->dst, imm);
          break;
        case Opcode::MOV_REG:
          set(ins->dst, get(ins->src));
          break;
        case Opcode::MOV_STA:
          store(imm, get(ins->src));
          break;
        case Opcode::MOV_LDA:
          set(ins->dst, load(imm));
          break;
        case Opcode::MOV_STI:
          store(get(ins->dst), get(ins->src));
          break;
        case Opcode::MOV_LDI:
          set(ins->dst, load(get(ins->src)));
          break;
        case Opcode::MOV_CPY: {
          const Address from = get(ins->src);
          check_aligned(from);
          const Word v = s_.read_word(from);
          store(imm, v);
          set(ins->src, static_cast<Word>(from + 2));
          break;
        }
        case Opcode::PUSH_REG:
          push(get(ins->src));
          break;
        case Opcode::PUSH_IMM:
          push(imm);
          break;
        case Opcode::POP: {
          const Word v = pop();
          set(ins->dst, v);
          break;
        }
        case Opcode::CALL_IMM:
        case Opcode::CALL_REG: {
          const Word target =
              ins->op == Opcode::CALL_IMM ? imm : get(ins->src);
          push(next);
          snap_.op_ret = next;
          set(Reg::PC, target);
          break;
        }
        case Opcode::RET:
        case Opcode::RETI:
          set(Reg::PC, pop());
          break;
        case Opcode::JMP:
          set(Reg::PC, imm);
          break;
        case Opcode::BR:
          set(Reg::PC, get(ins->src));
          break;
        case Opcode::JZ:
          if (e_.zflag) set(Reg::PC, imm);
          break;
        case Opcode::ADD_REG:
        case Opcode::ADD_IMM:
        case Opcode::SUB_REG:
        case Opcode::SUB_IMM:
        case Opcode::CMP_REG:
        case Opcode::CMP_IMM: {
          const bool reg_form = ins->op == Opcode::ADD_REG ||
                                ins->op == Opcode::SUB_REG ||
                                ins->op == Opcode::CMP_REG;
          const Word x = reg_form ? get(ins->src) : imm;
          const Word d = get(ins->dst);
          const bool add = ins->op == Opcode::ADD_REG ||
                           ins->op == Opcode::ADD_IMM;
          const Word r = static_cast<Word>(add ? d + x : d - x);
          e_.zflag = r == 0;
          if (ins->op != Opcode::CMP_REG && ins->op != Opcode::CMP_IMM) {
            set(ins->dst, r);
          }
          break;
        }
      }
    });
  }

 private:
  [[noreturn]] static void trap(FaultKind k, std::string msg) {
    throw Trap{k, std::move(msg)};
  }

  static void check_aligned(Address a) {
    if (a & 1) trap(FaultKind::kUnalignedAccess, "odd data address " + hex(a));
  }

  void begin() {
    snap_ = SignalSnapshot{};
    snap_.pc = s_.pc;
    snap_.sp = s_.sp;
  }

  template <typename F>
  Transition finish(F&& body) {
    Transition t;
    try {
      body();
      t.effect = e_;
    } catch (const Trap& trap) {
      // Fetch-sampled view only: nothing observable happened.
      SignalSnapshot bare;
      bare.pc = s_.pc;
      bare.sp = s_.sp;
      snap_ = bare;
      t.fault = trap.kind;
      t.fault_message = trap.message;
    }
    t.snapshot = snap_;
    return t;
  }

  const MachineState& s_;
  Effect e_;
  SignalSnapshot snap_;
};

}  // namespace

Word MachineState::reg(Reg r) const {
  switch (r) {
    case Reg::PC: return pc;
    case Reg::SP: return sp;
    case Reg::SR: return zflag ? 0x0002 : 0x0000;
    default: return gpr[static_cast<int>(r) - 4];
  }
}

void MachineState::set_reg(Reg r, Word v) {
  switch (r) {
    case Reg::PC: pc = v; break;
    case Reg::SP: sp = v; break;
    case Reg::SR: zflag = (v & 0x0002) != 0; break;
    default: gpr[static_cast<int>(r) - 4] = v;
  }
}

Word MachineState::read_word(Address a) const {
  return static_cast<Word>(mem[a] | (mem[static_cast<Address>(a + 1)] << 8));
}

void MachineState::write_word(Address a, Word v) {
  mem[a] = static_cast<std::uint8_t>(v & 0xFF);
  mem[static_cast<Address>(a + 1)] = static_cast<std::uint8_t>(v >> 8);
}

MachineState load_program(const ProgramImage& image, const MemoryMap& map) {
  map.validate();
  if (image.words.size() * 2 > map.program_bytes()) {
    throw LoadError(LoadErrorKind::kImageTooLarge,
                    "image of " + std::to_string(image.words.size() * 2) +
                        " bytes exceeds program region");
  }
  if (image.entry & 1) {
    throw LoadError(LoadErrorKind::kMisalignedEntry,
                    "entry " + hex(image.entry) + " is not word aligned");
  }
  if (!map.in_program(image.entry)) {
    throw LoadError(LoadErrorKind::kEntryOutsideProgram,
                    "entry " + hex(image.entry) + " outside program region");
  }
  MachineState s;
  s.map = map;
  s.entry = image.entry;
  s.pc = image.entry;
  s.sp = map.stack_init;
  for (std::size_t i = 0; i < image.words.size(); ++i) {
    s.write_word(static_cast<Address>(map.prog_base + 2 * i), image.words[i]);
  }
  for (int i = 0; i < MemoryMap::kIvtSlots; ++i) {
    s.write_word(static_cast<Address>(map.ivt_base + 2 * i), image.ivt[i]);
  }
  return s;
}

MachineState load_program(std::span<const std::uint8_t> image,
                          const MemoryMap& map) {
  return load_program(ProgramImage::parse(image), map);
}

Transition plan_step(const MachineState& state, std::optional<int> irq) {
  if (state.halted) {
    throw MachineFault(FaultKind::kHaltedMachine, state.pc,
                       "step on halted machine");
  }
  if (!irq) irq = state.pending_irq;
  Planner p(state);
  return irq ? p.interrupt(*irq) : p.instruction();
}

void commit(MachineState& state, const Transition& t) {
  if (t.fault) {
    throw MachineFault(*t.fault, t.snapshot.pc, t.fault_message);
  }
  const Effect& e = t.effect;
  state.pc = e.pc;
  state.sp = e.sp;
  state.zflag = e.zflag;
  state.gpr = e.gpr;
  if (e.store && !state.map.in_cr(e.store->first)) {
    // CR is a read-only peripheral; the bus drops the write.
    state.write_word(e.store->first, e.store->second);
  }
  if (e.halt) state.halted = true;
  if (e.consumed_irq) state.pending_irq.reset();
}

std::pair<MachineState, SignalSnapshot> step(MachineState state,
                                             std::optional<int> irq) {
  const Transition t = plan_step(state, irq);
  commit(state, t);
  return {std::move(state), t.snapshot};
}

std::pair<MachineState, SignalSnapshot> perform_reset(
    const MachineState& state) {
  MachineState fresh = state;
  std::fill(fresh.mem.begin() + state.map.ram_base,
            fresh.mem.begin() + state.map.ram_limit + 1, 0);
  fresh.pc = state.entry;
  fresh.sp = state.map.stack_init;
  fresh.zflag = false;
  fresh.gpr.fill(0);
  fresh.halted = false;
  fresh.pending_irq.reset();

  SignalSnapshot sentinel;
  sentinel.pc = 0;
  sentinel.sp = state.map.stack_init;
  return {std::move(fresh), sentinel};
}

std::uint64_t estimate_marshal_cost(std::uint64_t n_bytes) {
  return n_bytes / 2 + n_bytes % 2;
}

}  // namespace ucca
