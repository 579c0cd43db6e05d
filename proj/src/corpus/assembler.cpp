//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <vector>

#include "ucca/assembler.hpp"

namespace ucca::corpus {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::optional<Reg> parse_reg(std::string_view s) {
  const std::string u = upper(trim(s));
  if (u == "PC") return Reg::PC;
  if (u == "SP") return Reg::SP;
  if (u == "SR") return Reg::SR;
  if (u.size() >= 2 && u[0] == 'R') {
    int n = 0;
    auto [p, ec] = std::from_chars(u.data() + 1, u.data() + u.size(), n);
    if (ec == std::errc() && p == u.data() + u.size() && is_valid_reg(n)) {
      return static_cast<Reg>(n);
    }
  }
  return std::nullopt;
}

std::optional<long> parse_number(std::string_view s) {
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
    base = 16;
  }
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

enum class OperandKind { kImm, kAbs, kReg, kInd, kPostInc, kBare };

struct Operand {
  OperandKind kind;
  Reg reg = Reg::PC;
  std::string expr;
};

Operand parse_operand(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.empty()) throw AsmError(AsmErrorKind::kSyntax, line, "empty operand");
  auto need_reg = [&](std::string_view r) {
    const auto reg = parse_reg(r);
    if (!reg) {
      throw AsmError(AsmErrorKind::kSyntax, line,
                     "expected register, got '" + std::string(r) + "'");
    }
    return *reg;
  };
  switch (text.front()) {
    case '#': return {OperandKind::kImm, Reg::PC, std::string(trim(text.substr(1)))};
    case '&': return {OperandKind::kAbs, Reg::PC, std::string(trim(text.substr(1)))};
    case '@':
      if (text.back() == '+') {
        return {OperandKind::kPostInc, need_reg(text.substr(1, text.size() - 2)), {}};
      }
      return {OperandKind::kInd, need_reg(text.substr(1)), {}};
    default:
      break;
  }
  if (const auto reg = parse_reg(text)) return {OperandKind::kReg, *reg, {}};
  return {OperandKind::kBare, Reg::PC, std::string(text)};
}

std::vector<std::string_view> split_operands(std::string_view s) {
  std::vector<std::string_view> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

struct Item {
  enum class Kind { kInstr, kWord, kIvt, kEntry };
  Kind kind;
  std::size_t line;
  Address addr;
  std::string mnemonic;
  std::vector<std::string_view> operands;
};

Instruction encode_item(const Item& it, const LabelMap& labels) {
  const std::size_t line = it.line;
  std::vector<Operand> ops;
  for (auto o : it.operands) ops.push_back(parse_operand(o, line));
  auto bad = [&]() -> AsmError {
    return AsmError(AsmErrorKind::kSyntax, line,
                    "invalid operands for " + it.mnemonic);
  };
  auto arity = [&](std::size_t n) {
    if (ops.size() != n) throw bad();
  };
  auto value = [&](const Operand& o) {
    return static_cast<Word>(evaluate(o.expr, labels, line));
  };
  auto is_target = [](const Operand& o) {
    return o.kind == OperandKind::kImm || o.kind == OperandKind::kBare;
  };

  const std::string& m = it.mnemonic;
  if (m == "NOP" || m == "HALT" || m == "RET" || m == "RETI") {
    arity(0);
    const Opcode op = m == "NOP" ? Opcode::NOP : m == "HALT" ? Opcode::HALT
                      : m == "RET" ? Opcode::RET : Opcode::RETI;
    return {op, Reg::PC, Reg::PC, 0};
  }
  if (m == "MOV") {
    arity(2);
    const Operand& s = ops[0];
    const Operand& d = ops[1];
    if (s.kind == OperandKind::kImm && d.kind == OperandKind::kReg) {
      return {Opcode::MOV_IMM, Reg::PC, d.reg, value(s)};
    }
    if (s.kind == OperandKind::kReg && d.kind == OperandKind::kReg) {
      return {Opcode::MOV_REG, s.reg, d.reg, 0};
    }
    if (s.kind == OperandKind::kReg && d.kind == OperandKind::kAbs) {
      return {Opcode::MOV_STA, s.reg, Reg::PC, value(d)};
    }
    if (s.kind == OperandKind::kAbs && d.kind == OperandKind::kReg) {
      return {Opcode::MOV_LDA, Reg::PC, d.reg, value(s)};
    }
    if (s.kind == OperandKind::kReg && d.kind == OperandKind::kInd) {
      return {Opcode::MOV_STI, s.reg, d.reg, 0};
    }
    if (s.kind == OperandKind::kInd && d.kind == OperandKind::kReg) {
      return {Opcode::MOV_LDI, s.reg, d.reg, 0};
    }
    if (s.kind == OperandKind::kPostInc && d.kind == OperandKind::kAbs) {
      return {Opcode::MOV_CPY, s.reg, Reg::PC, value(d)};
    }
    throw bad();
  }
  if (m == "PUSH") {
    arity(1);
    if (ops[0].kind == OperandKind::kReg) return {Opcode::PUSH_REG, ops[0].reg, Reg::PC, 0};
    if (ops[0].kind == OperandKind::kImm) return {Opcode::PUSH_IMM, Reg::PC, Reg::PC, value(ops[0])};
    throw bad();
  }
  if (m == "POP") {
    arity(1);
    if (ops[0].kind != OperandKind::kReg) throw bad();
    return {Opcode::POP, Reg::PC, ops[0].reg, 0};
  }
  if (m == "CALL" || m == "BR" || m == "JMP" || m == "JZ") {
    arity(1);
    const Operand& o = ops[0];
    if (o.kind == OperandKind::kReg && (m == "CALL" || m == "BR")) {
      return {m == "CALL" ? Opcode::CALL_REG : Opcode::BR, o.reg, Reg::PC, 0};
    }
    if (!is_target(o) || m == "BR") throw bad();
    const Opcode op = m == "CALL" ? Opcode::CALL_IMM : m == "JMP" ? Opcode::JMP
                                                                  : Opcode::JZ;
    return {op, Reg::PC, Reg::PC, value(o)};
  }
  if (m == "ADD" || m == "SUB" || m == "CMP") {
    arity(2);
    if (ops[1].kind != OperandKind::kReg) throw bad();
    const int base = m == "ADD" ? 0x40 : m == "SUB" ? 0x42 : 0x44;
    if (ops[0].kind == OperandKind::kReg) {
      return {static_cast<Opcode>(base), ops[0].reg, ops[1].reg, 0};
    }
    if (ops[0].kind == OperandKind::kImm) {
      return {static_cast<Opcode>(base + 1), Reg::PC, ops[1].reg, value(ops[0])};
    }
    throw bad();
  }
  throw AsmError(AsmErrorKind::kSyntax, line, "unknown mnemonic '" + m + "'");
}

}  // namespace

Address evaluate(std::string_view expr, const LabelMap& labels,
                 std::size_t line) {
  expr = trim(expr);
  if (expr.empty()) throw AsmError(AsmErrorKind::kSyntax, line, "empty expression");
  long total = 0;
  int sign = 1;
  std::size_t i = 0;
  bool expect_term = true;
  while (i < expr.size()) {
    const char c = expr[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (!expect_term && (c == '+' || c == '-')) {
      sign = c == '+' ? 1 : -1;
      expect_term = true;
      ++i;
    } else if (expect_term && std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < expr.size() && std::isalnum(static_cast<unsigned char>(expr[j]))) ++j;
      const auto v = parse_number(expr.substr(i, j - i));
      if (!v) {
        throw AsmError(AsmErrorKind::kSyntax, line,
                       "bad number '" + std::string(expr.substr(i, j - i)) + "'");
      }
      total += sign * *v;
      expect_term = false;
      i = j;
    } else if (expect_term && is_ident_start(c)) {
      std::size_t j = i;
      while (j < expr.size() && is_ident_char(expr[j])) ++j;
      const std::string_view name = expr.substr(i, j - i);
      const auto it = labels.find(name);
      if (it == labels.end()) {
        throw AsmError(AsmErrorKind::kUndefinedLabel, line,
                       "undefined label '" + std::string(name) + "'");
      }
      total += sign * static_cast<long>(it->second);
      expect_term = false;
      i = j;
    } else {
      throw AsmError(AsmErrorKind::kSyntax, line,
                     "bad expression '" + std::string(expr) + "'");
    }
  }
  if (expect_term) {
    throw AsmError(AsmErrorKind::kSyntax, line,
                   "incomplete expression '" + std::string(expr) + "'");
  }
  if (total < 0 || total > 0xFFFF) {
    throw AsmError(AsmErrorKind::kSyntax, line, "value out of 16-bit range");
  }
  return static_cast<Address>(total);
}

AsmResult assemble(std::string_view source, const MemoryMap& map) {
  AsmResult result;
  std::vector<Item> items;
  long lc = map.prog_base;
  std::optional<Address> first_instr;
  std::size_t line_no = 0;

  auto check_room = [&](long end, std::size_t line) {
    if (lc < map.prog_base || end > static_cast<long>(map.prog_limit) + 1) {
      throw AsmError(AsmErrorKind::kRegionOverflow, line,
                     "code outside program region");
    }
  };

  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view text = source.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto semi = text.find(';'); semi != std::string_view::npos) {
      text = text.substr(0, semi);
    }
    text = trim(text);

    // Leading labels.
    while (!text.empty() && is_ident_start(text.front()) && text.front() != '.') {
      std::size_t j = 0;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      if (j >= text.size() || text[j] != ':') break;
      const std::string name(text.substr(0, j));
      if (parse_reg(name)) {
        throw AsmError(AsmErrorKind::kSyntax, line_no,
                       "register name used as label '" + name + "'");
      }
      if (!result.labels.emplace(name, static_cast<Address>(lc)).second) {
        throw AsmError(AsmErrorKind::kSyntax, line_no,
                       "duplicate label '" + name + "'");
      }
      text = trim(text.substr(j + 1));
    }
    if (text.empty()) continue;

    std::size_t j = 0;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string head = upper(text.substr(0, j));
    const std::string_view rest = trim(text.substr(j));
    const auto operands = split_operands(rest);

    if (head == ".ORG") {
      if (operands.size() != 1) throw AsmError(AsmErrorKind::kSyntax, line_no, ".org takes one operand");
      lc = evaluate(operands[0], result.labels, line_no);
      if (lc & 1) throw AsmError(AsmErrorKind::kSyntax, line_no, ".org address must be even");
      check_room(lc, line_no);
    } else if (head == ".EQU") {
      if (operands.size() != 2) throw AsmError(AsmErrorKind::kSyntax, line_no, ".equ takes name, value");
      const std::string name(operands[0]);
      if (name.empty() || !is_ident_start(name[0]) ||
          !result.labels.emplace(name, evaluate(operands[1], result.labels, line_no)).second) {
        throw AsmError(AsmErrorKind::kSyntax, line_no, "bad or duplicate .equ name");
      }
    } else if (head == ".WORD") {
      if (operands.empty()) throw AsmError(AsmErrorKind::kSyntax, line_no, ".word needs values");
      check_room(lc + 2 * static_cast<long>(operands.size()), line_no);
      items.push_back({Item::Kind::kWord, line_no, static_cast<Address>(lc), {}, operands});
      lc += 2 * static_cast<long>(operands.size());
    } else if (head == ".IVT") {
      if (operands.size() != 2) throw AsmError(AsmErrorKind::kSyntax, line_no, ".ivt takes slot, handler");
      items.push_back({Item::Kind::kIvt, line_no, 0, {}, operands});
    } else if (head == ".ENTRY") {
      if (operands.size() != 1) throw AsmError(AsmErrorKind::kSyntax, line_no, ".entry takes one operand");
      items.push_back({Item::Kind::kEntry, line_no, 0, {}, operands});
    } else if (!head.empty() && head[0] == '.') {
      throw AsmError(AsmErrorKind::kSyntax, line_no, "unknown directive " + head);
    } else {
      check_room(lc + kInstructionBytes, line_no);
      if (!first_instr) first_instr = static_cast<Address>(lc);
      items.push_back({Item::Kind::kInstr, line_no, static_cast<Address>(lc), head, operands});
      lc += kInstructionBytes;
      ++result.instructions;
    }
  }

  // Second pass: every label is known.
  std::map<Address, Word> words;
  std::optional<Address> entry;
  ProgramImage& img = result.image;
  for (const Item& it : items) {
    switch (it.kind) {
      case Item::Kind::kInstr: {
        const auto enc = encode(encode_item(it, result.labels));
        words[it.addr] = enc[0];
        words[static_cast<Address>(it.addr + 2)] = enc[1];
        break;
      }
      case Item::Kind::kWord:
        for (std::size_t k = 0; k < it.operands.size(); ++k) {
          words[static_cast<Address>(it.addr + 2 * k)] =
              evaluate(it.operands[k], result.labels, it.line);
        }
        break;
      case Item::Kind::kIvt: {
        const Address slot = evaluate(it.operands[0], result.labels, it.line);
        if (slot >= MemoryMap::kIvtSlots) {
          throw AsmError(AsmErrorKind::kSyntax, it.line, "ivt slot out of range");
        }
        img.ivt[slot] = evaluate(it.operands[1], result.labels, it.line);
        break;
      }
      case Item::Kind::kEntry:
        entry = evaluate(it.operands[0], result.labels, it.line);
        break;
    }
  }
  if (!entry) {
    if (auto it = result.labels.find("start"); it != result.labels.end()) {
      entry = it->second;
    } else {
      entry = first_instr.value_or(map.prog_base);
    }
  }
  img.entry = *entry;
  if (!words.empty()) {
    const std::size_t n = (words.rbegin()->first - map.prog_base) / 2 + 1;
    img.words.assign(n, 0);
    for (const auto& [addr, w] : words) img.words[(addr - map.prog_base) / 2] = w;
  }
  return result;
}

std::string emit_marshal_stub(Address src, Address dst, std::size_t n_bytes,
                              Reg ptr) {
  char buf[64];
  std::string out;
  std::snprintf(buf, sizeof buf, "        MOV #0x%04X, %s\n", src,
                std::string(reg_name(ptr)).c_str());
  out += buf;
  const std::uint64_t n = estimate_marshal_cost(n_bytes);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::snprintf(buf, sizeof buf, "        MOV @%s+, &0x%04X\n",
                  std::string(reg_name(ptr)).c_str(),
                  static_cast<unsigned>(dst + 2 * k));
    out += buf;
  }
  return out;
}

}  // namespace ucca::corpus
