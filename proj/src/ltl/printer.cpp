//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdio>

#include "ucca/ltl.hpp"

namespace ucca::ltl {

std::string print(const Term& t) {
  switch (t.kind) {
    case Term::Kind::kSignal: {
      std::string s(signal_name(t.signal));
      if (is_indexed(t.signal)) s += std::to_string(t.index);
      return s;
    }
    case Term::Kind::kConst: {
      if (t.constant == kNone) return "none";
      char buf[16];
      std::snprintf(buf, sizeof buf, "0x%04X", static_cast<unsigned>(t.constant));
      return buf;
    }
    case Term::Kind::kNext:
      return "X(" + print(*t.inner) + ")";
    case Term::Kind::kPrev:
      return "Y(" + print(*t.inner) + ")";
  }
  return "?";
}

std::string print(const Formula& f) {
  switch (f->op) {
    case Op::kTrue: return "true";
    case Op::kFalse: return "false";
    case Op::kCompare: {
      const char* c = f->cmp == Cmp::kEq ? " = " : f->cmp == Cmp::kNe ? " != "
                                                                      : " >= ";
      return print(*f->lhs) + c + print(*f->rhs);
    }
    case Op::kMember:
      return print(*f->lhs) + " in " +
             (f->region.kind == Region::Kind::kCr
                  ? std::string("CR")
                  : "UCC" + std::to_string(f->region.index));
    case Op::kBool: return print(*f->lhs);
    case Op::kNot: return "!(" + print(f->a) + ")";
    case Op::kG: return "G(" + print(f->a) + ")";
    case Op::kX: return "X(" + print(f->a) + ")";
    case Op::kY: return "Y(" + print(f->a) + ")";
    case Op::kAnd: return "(" + print(f->a) + " & " + print(f->b) + ")";
    case Op::kOr: return "(" + print(f->a) + " | " + print(f->b) + ")";
    case Op::kImplies: return "(" + print(f->a) + " -> " + print(f->b) + ")";
    case Op::kW: return "(" + print(f->a) + " W " + print(f->b) + ")";
  }
  return "?";
}

}  // namespace ucca::ltl
