//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_LTL_HPP
#define UCCA_LTL_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ucca/signals.hpp"

namespace ucca::ltl {

enum class SignalId : std::uint8_t {
  kPc, kSp, kDAddr, kWEn, kIrqJmp, kOpRet, kReset, kRetExp, kBp,
};

bool is_boolean(SignalId s);
bool is_indexed(SignalId s);
std::string_view signal_name(SignalId s);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind : std::uint8_t { kSignal, kConst, kNext, kPrev };

  Kind kind = Kind::kConst;
  SignalId signal = SignalId::kPc;
  int index = 0;       // UCC index for ret_exp / bp
  Value constant = 0;  // kNone allowed
  TermPtr inner;

  static TermPtr sig(SignalId s, int index = 0);
  static TermPtr lit(Value v);
  static TermPtr next(TermPtr t);
  static TermPtr prev(TermPtr t);
};

bool equal(const Term& a, const Term& b);

enum class Cmp : std::uint8_t { kEq, kNe, kGe };

struct Region {
  enum class Kind : std::uint8_t { kUcc, kCr };
  Kind kind = Kind::kUcc;
  int index = 0;
  bool operator==(const Region&) const = default;
};

enum class Op : std::uint8_t {
  kTrue, kFalse, kCompare, kMember, kBool,
  kNot, kAnd, kOr, kImplies, kG, kX, kY, kW,
};

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::kTrue;
  Cmp cmp = Cmp::kEq;
  TermPtr lhs;  // also the subject of kMember / kBool
  TermPtr rhs;
  Region region;
  Formula a;    // operand; left of binary operators
  Formula b;    // right of binary operators
};

Formula f_true();
Formula f_false();
Formula compare(TermPtr lhs, Cmp cmp, TermPtr rhs);
Formula member(TermPtr t, Region r);
Formula boolean(SignalId s);
Formula lnot(Formula a);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula always(Formula a);
Formula next(Formula a);
Formula prev(Formula a);
Formula weak_until(Formula a, Formula b);

bool equal(const Formula& a, const Formula& b);
int depth(const Formula& f);

// Fully parenthesised; parse_formula(print(f)) is structurally f.
std::string print(const Formula& f);
std::string print(const Term& t);

enum class ParseErrorKind { kSyntax, kUnknownSignal, kUnknownRegion };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t pos, const std::string& what)
      : std::runtime_error(what), kind_(kind), pos_(pos) {}
  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return pos_; }

 private:
  ParseErrorKind kind_;
  std::size_t pos_;
};

// UCC / register indices must be below n_ucc.
Formula parse_formula(std::string_view text, std::size_t n_ucc = kMaxUccs);

struct TraceRow {
  std::uint64_t step = 0;
  Value pc = 0;
  Value sp = 0;
  Value d_addr = kNone;
  bool w_en = false;
  bool irq_jmp = false;
  Value op_ret = kNone;
  bool reset = false;
  std::array<Value, kMaxUccs> ret_exp{};
  std::array<Value, kMaxUccs> bp{};
  std::array<std::uint8_t, kMaxUccs> ret_state{};    // FsmState
  std::array<std::uint8_t, kMaxUccs> stack_state{};  // FsmState
  std::uint8_t cr_state = 0;                         // CrState

  Value get(SignalId s, int index) const;
  bool operator==(const TraceRow&) const = default;
};

struct Regions {
  std::vector<UccDefinition> uccs;
  Value cr_lo = 0;
  Value cr_hi = -1;

  bool in_cr(Value a) const { return a >= cr_lo && a <= cr_hi; }
  bool operator==(const Regions&) const = default;
};

struct Trace {
  Regions regions;
  std::vector<TraceRow> rows;

  std::size_t size() const { return rows.size(); }
  bool operator==(const Trace&) const = default;
};

struct CheckResult {
  bool holds = true;
  std::size_t witness = 0;  // meaningful when !holds
  bool operator==(const CheckResult&) const = default;
};

// Compiled evaluator; reusable scratch makes repeated checks cheap.
class Evaluator {
 public:
  explicit Evaluator(const Formula& f);

  // Truth value at every position; throws std::out_of_range for i >= n.
  bool eval(const Trace& trace, std::size_t i);
  CheckResult check(const Trace& trace);

 private:
  struct Slot {
    Op op;
    Cmp cmp;
    std::vector<std::int8_t> lhs_path;  // +1 next, -1 prev, outermost first
    std::vector<std::int8_t> rhs_path;
    const Term* lhs_base = nullptr;
    const Term* rhs_base = nullptr;
    Region region;
    int a = -1;
    int b = -1;
  };

  void run(const Trace& trace);
  std::uint64_t* row(int slot) { return &bits_[slot * words_]; }

  Formula root_;
  std::vector<Slot> slots_;
  std::size_t words_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

bool eval(const Formula& f, const Trace& trace, std::size_t i);
CheckResult check(const Formula& f, const Trace& trace);

// Naive recursive reading of the semantics, no sharing.
bool brute_oracle(const Formula& f, const Trace& trace, std::size_t i = 0);

struct BuiltinSpec {
  int id = 0;        // 1-based position in the catalog
  int property = 0;  // 1..13, shared across UCCs
  int ucc = -1;      // -1 for the CR property
  std::string name;
  std::string text;
  Formula formula;
  std::string note;
};

std::vector<BuiltinSpec> builtin_specs(std::size_t n_ucc);

}  // namespace ucca::ltl

#endif  // UCCA_LTL_HPP
