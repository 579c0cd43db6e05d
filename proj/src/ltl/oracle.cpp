//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ucca/ltl.hpp"

namespace ucca::ltl {

namespace {

enum class Def { kYes, kPast, kFuture };

Def term_at(const Term& t, const Trace& tr, long i, Value& out) {
  switch (t.kind) {
    case Term::Kind::kConst:
      out = t.constant;
      return Def::kYes;
    case Term::Kind::kSignal:
      out = tr.rows[i].get(t.signal, t.index);
      return Def::kYes;
    case Term::Kind::kNext:
      if (i + 1 >= static_cast<long>(tr.size())) return Def::kFuture;
      return term_at(*t.inner, tr, i + 1, out);
    case Term::Kind::kPrev:
      if (i == 0) return Def::kPast;
      return term_at(*t.inner, tr, i - 1, out);
  }
  return Def::kYes;
}

bool holds(const Node& f, const Trace& tr, long i) {
  const long n = static_cast<long>(tr.size());
  switch (f.op) {
    case Op::kTrue:
      return true;
    case Op::kFalse:
      return false;
    case Op::kCompare: {
      Value l = 0, r = 0;
      const Def dl = term_at(*f.lhs, tr, i, l);
      const Def dr = term_at(*f.rhs, tr, i, r);
      if (dl == Def::kPast || dr == Def::kPast) return false;
      if (dl == Def::kFuture || dr == Def::kFuture) return true;
      if (f.cmp == Cmp::kEq) return l == r;
      if (f.cmp == Cmp::kNe) return l != r;
      return l >= r;
    }
    case Op::kMember: {
      Value v = 0;
      const Def d = term_at(*f.lhs, tr, i, v);
      if (d == Def::kPast) return false;
      if (d == Def::kFuture) return true;
      if (f.region.kind == Region::Kind::kCr) {
        return v >= tr.regions.cr_lo && v <= tr.regions.cr_hi;
      }
      if (f.region.index >= static_cast<int>(tr.regions.uccs.size())) {
        throw std::out_of_range("undeclared region");
      }
      const UccDefinition& u = tr.regions.uccs[f.region.index];
      return v >= u.r_min && v <= u.r_max;
    }
    case Op::kBool: {
      Value v = 0;
      term_at(*f.lhs, tr, i, v);
      return v != 0;
    }
    case Op::kNot:
      return !holds(*f.a, tr, i);
    case Op::kAnd:
      return holds(*f.a, tr, i) && holds(*f.b, tr, i);
    case Op::kOr:
      return holds(*f.a, tr, i) || holds(*f.b, tr, i);
    case Op::kImplies:
      return !holds(*f.a, tr, i) || holds(*f.b, tr, i);
    case Op::kG:
      for (long j = i; j < n; ++j) {
        if (!holds(*f.a, tr, j)) return false;
      }
      return true;
    case Op::kX:
      return i + 1 >= n ? true : holds(*f.a, tr, i + 1);
    case Op::kY:
      return i == 0 ? false : holds(*f.a, tr, i - 1);
    case Op::kW:
      for (long j = i; j < n; ++j) {
        if (holds(*f.b, tr, j)) return true;
        if (!holds(*f.a, tr, j)) return false;
      }
      return true;
  }
  return false;
}

}  // namespace

bool brute_oracle(const Formula& f, const Trace& trace, std::size_t i) {
  if (i >= trace.size()) throw std::out_of_range("position-out-of-range");
  return holds(*f, trace, static_cast<long>(i));
}

}  // namespace ucca::ltl
