//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>

#include "ucca/ltl.hpp"

namespace ucca::ltl {

namespace {

Formula make(Op op, Formula a = nullptr, Formula b = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

void require(const Formula& f) {
  if (!f) throw std::invalid_argument("null formula operand");
}

void require(const TermPtr& t) {
  if (!t) throw std::invalid_argument("null term operand");
}

}  // namespace

bool is_boolean(SignalId s) {
  return s == SignalId::kWEn || s == SignalId::kIrqJmp ||
         s == SignalId::kReset;
}

bool is_indexed(SignalId s) {
  return s == SignalId::kRetExp || s == SignalId::kBp;
}

std::string_view signal_name(SignalId s) {
  switch (s) {
    case SignalId::kPc: return "pc";
    case SignalId::kSp: return "sp";
    case SignalId::kDAddr: return "d_addr";
    case SignalId::kWEn: return "w_en";
    case SignalId::kIrqJmp: return "irq_jmp";
    case SignalId::kOpRet: return "op_ret";
    case SignalId::kReset: return "reset";
    case SignalId::kRetExp: return "ret_exp";
    case SignalId::kBp: return "bp";
  }
  return "?";
}

TermPtr Term::sig(SignalId s, int index) {
  if (index < 0 || index >= static_cast<int>(kMaxUccs) ||
      (!is_indexed(s) && index != 0)) {
    throw std::invalid_argument("bad signal index");
  }
  auto t = std::make_shared<Term>();
  t->kind = Kind::kSignal;
  t->signal = s;
  t->index = index;
  return t;
}

TermPtr Term::lit(Value v) {
  if (v < kNone || v > 0xFFFF) throw std::invalid_argument("bad constant");
  auto t = std::make_shared<Term>();
  t->kind = Kind::kConst;
  t->constant = v;
  return t;
}

TermPtr Term::next(TermPtr inner) {
  require(inner);
  auto t = std::make_shared<Term>();
  t->kind = Kind::kNext;
  t->inner = std::move(inner);
  return t;
}

TermPtr Term::prev(TermPtr inner) {
  require(inner);
  auto t = std::make_shared<Term>();
  t->kind = Kind::kPrev;
  t->inner = std::move(inner);
  return t;
}

bool equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Term::Kind::kSignal:
      return a.signal == b.signal && a.index == b.index;
    case Term::Kind::kConst:
      return a.constant == b.constant;
    case Term::Kind::kNext:
    case Term::Kind::kPrev:
      return equal(*a.inner, *b.inner);
  }
  return false;
}

Formula f_true() { return make(Op::kTrue); }
Formula f_false() { return make(Op::kFalse); }

Formula compare(TermPtr lhs, Cmp cmp, TermPtr rhs) {
  require(lhs);
  require(rhs);
  auto n = std::make_shared<Node>();
  n->op = Op::kCompare;
  n->cmp = cmp;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

Formula member(TermPtr t, Region r) {
  require(t);
  auto n = std::make_shared<Node>();
  n->op = Op::kMember;
  n->lhs = std::move(t);
  n->region = r;
  return n;
}

Formula boolean(SignalId s) {
  if (!is_boolean(s)) throw std::invalid_argument("signal is not boolean");
  auto n = std::make_shared<Node>();
  n->op = Op::kBool;
  n->lhs = Term::sig(s);
  return n;
}

Formula lnot(Formula a) { require(a); return make(Op::kNot, std::move(a)); }
Formula always(Formula a) { require(a); return make(Op::kG, std::move(a)); }
Formula next(Formula a) { require(a); return make(Op::kX, std::move(a)); }
Formula prev(Formula a) { require(a); return make(Op::kY, std::move(a)); }

Formula land(Formula a, Formula b) {
  require(a); require(b);
  return make(Op::kAnd, std::move(a), std::move(b));
}

Formula lor(Formula a, Formula b) {
  require(a); require(b);
  return make(Op::kOr, std::move(a), std::move(b));
}

Formula implies(Formula a, Formula b) {
  require(a); require(b);
  return make(Op::kImplies, std::move(a), std::move(b));
}

Formula weak_until(Formula a, Formula b) {
  require(a); require(b);
  return make(Op::kW, std::move(a), std::move(b));
}

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b || a->op != b->op) return false;
  switch (a->op) {
    case Op::kTrue:
    case Op::kFalse:
      return true;
    case Op::kCompare:
      return a->cmp == b->cmp && equal(*a->lhs, *b->lhs) &&
             equal(*a->rhs, *b->rhs);
    case Op::kMember:
      return a->region == b->region && equal(*a->lhs, *b->lhs);
    case Op::kBool:
      return equal(*a->lhs, *b->lhs);
    case Op::kNot:
    case Op::kG:
    case Op::kX:
    case Op::kY:
      return equal(a->a, b->a);
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies:
    case Op::kW:
      return equal(a->a, b->a) && equal(a->b, b->b);
  }
  return false;
}

int depth(const Formula& f) {
  if (!f) return 0;
  return 1 + std::max(depth(f->a), depth(f->b));
}

Value TraceRow::get(SignalId s, int index) const {
  switch (s) {
    case SignalId::kPc: return pc;
    case SignalId::kSp: return sp;
    case SignalId::kDAddr: return d_addr;
    case SignalId::kWEn: return w_en ? 1 : 0;
    case SignalId::kIrqJmp: return irq_jmp ? 1 : 0;
    case SignalId::kOpRet: return op_ret;
    case SignalId::kReset: return reset ? 1 : 0;
    case SignalId::kRetExp: return ret_exp[index];
    case SignalId::kBp: return bp[index];
  }
  return 0;
}

}  // namespace ucca::ltl
