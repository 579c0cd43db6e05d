//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <bit>

#include "ucca/ltl.hpp"

namespace ucca::ltl {

namespace {

enum class Status { kValue, kPast, kFuture };

const Term* flatten(const Term* t, std::vector<std::int8_t>& path) {
  while (t->kind == Term::Kind::kNext || t->kind == Term::Kind::kPrev) {
    path.push_back(t->kind == Term::Kind::kNext ? 1 : -1);
    t = t->inner.get();
  }
  return t;
}

Status resolve(const std::vector<std::int8_t>& path, const Term* base,
               const Trace& trace, std::size_t i, Value& out) {
  long j = static_cast<long>(i);
  const long n = static_cast<long>(trace.size());
  for (std::int8_t s : path) {
    j += s;
    if (j < 0) return Status::kPast;
    if (j >= n) return Status::kFuture;
  }
  out = base->kind == Term::Kind::kConst
            ? base->constant
            : trace.rows[j].get(base->signal, base->index);
  return Status::kValue;
}

bool in_region(const Trace& trace, const Region& r, Value v) {
  if (r.kind == Region::Kind::kCr) return trace.regions.in_cr(v);
  if (r.index >= static_cast<int>(trace.regions.uccs.size())) {
    throw std::out_of_range("formula references undeclared region UCC" +
                            std::to_string(r.index));
  }
  return trace.regions.uccs[r.index].contains(v);
}

bool compare_values(Cmp c, Value l, Value r) {
  switch (c) {
    case Cmp::kEq: return l == r;
    case Cmp::kNe: return l != r;
    case Cmp::kGe: return l >= r;
  }
  return false;
}

inline bool get_bit(const std::uint64_t* w, std::size_t i) {
  return (w[i >> 6] >> (i & 63)) & 1;
}

inline void set_bit(std::uint64_t* w, std::size_t i, bool v) {
  const std::uint64_t m = std::uint64_t{1} << (i & 63);
  if (v) w[i >> 6] |= m; else w[i >> 6] &= ~m;
}

}  // namespace

Evaluator::Evaluator(const Formula& f) : root_(f) {
  if (!f) throw std::invalid_argument("null formula");
  // Post-order so every operand precedes its parent.
  struct Frame {
    const Node* node;
    bool expanded;
  };
  std::vector<Frame> stack{{f.get(), false}};
  std::vector<std::pair<const Node*, int>> done;  // node -> slot
  auto slot_of = [&](const Node* n) {
    for (auto it = done.rbegin(); it != done.rend(); ++it) {
      if (it->first == n) return it->second;
    }
    return -1;
  };
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    const Node* n = fr.node;
    if (!fr.expanded) {
      stack.push_back({n, true});
      if (n->b) stack.push_back({n->b.get(), false});
      if (n->a) stack.push_back({n->a.get(), false});
      continue;
    }
    Slot s;
    s.op = n->op;
    s.cmp = n->cmp;
    s.region = n->region;
    if (n->lhs) s.lhs_base = flatten(n->lhs.get(), s.lhs_path);
    if (n->rhs) s.rhs_base = flatten(n->rhs.get(), s.rhs_path);
    if (n->a) s.a = slot_of(n->a.get());
    if (n->b) s.b = slot_of(n->b.get());
    done.emplace_back(n, static_cast<int>(slots_.size()));
    slots_.push_back(std::move(s));
  }
}

void Evaluator::run(const Trace& trace) {
  n_ = trace.size();
  if (n_ == 0) throw std::invalid_argument("empty trace");
  words_ = (n_ + 63) / 64;
  bits_.assign(slots_.size() * words_, 0);
  const std::uint64_t last_mask =
      (n_ % 64 == 0) ? ~std::uint64_t{0} : (std::uint64_t{1} << (n_ % 64)) - 1;
  auto mask = [&](std::size_t w) {
    return w + 1 == words_ ? last_mask : ~std::uint64_t{0};
  };

  for (std::size_t k = 0; k < slots_.size(); ++k) {
    const Slot& s = slots_[k];
    std::uint64_t* r = row(static_cast<int>(k));
    const std::uint64_t* a = s.a >= 0 ? row(s.a) : nullptr;
    const std::uint64_t* b = s.b >= 0 ? row(s.b) : nullptr;
    switch (s.op) {
      case Op::kTrue:
        for (std::size_t w = 0; w < words_; ++w) r[w] = mask(w);
        break;
      case Op::kFalse:
        break;
      case Op::kCompare:
        for (std::size_t i = 0; i < n_; ++i) {
          Value l = 0;
          Value rv = 0;
          const Status sl = resolve(s.lhs_path, s.lhs_base, trace, i, l);
          const Status sr = resolve(s.rhs_path, s.rhs_base, trace, i, rv);
          bool v;
          if (sl == Status::kPast || sr == Status::kPast) {
            v = false;
          } else if (sl == Status::kFuture || sr == Status::kFuture) {
            v = true;
          } else {
            v = compare_values(s.cmp, l, rv);
          }
          set_bit(r, i, v);
        }
        break;
      case Op::kMember:
        for (std::size_t i = 0; i < n_; ++i) {
          Value l = 0;
          const Status st = resolve(s.lhs_path, s.lhs_base, trace, i, l);
          const bool v = st == Status::kPast     ? false
                         : st == Status::kFuture ? true
                                                 : in_region(trace, s.region, l);
          set_bit(r, i, v);
        }
        break;
      case Op::kBool:
        for (std::size_t i = 0; i < n_; ++i) {
          set_bit(r, i, trace.rows[i].get(s.lhs_base->signal, 0) != 0);
        }
        break;
      case Op::kNot:
        for (std::size_t w = 0; w < words_; ++w) r[w] = ~a[w] & mask(w);
        break;
      case Op::kAnd:
        for (std::size_t w = 0; w < words_; ++w) r[w] = a[w] & b[w];
        break;
      case Op::kOr:
        for (std::size_t w = 0; w < words_; ++w) r[w] = a[w] | b[w];
        break;
      case Op::kImplies:
        for (std::size_t w = 0; w < words_; ++w) r[w] = (~a[w] | b[w]) & mask(w);
        break;
      case Op::kX:
        for (std::size_t w = 0; w < words_; ++w) {
          r[w] = (a[w] >> 1) | (w + 1 < words_ ? a[w + 1] << 63 : 0);
        }
        set_bit(r, n_ - 1, true);
        break;
      case Op::kY:
        for (std::size_t w = 0; w < words_; ++w) {
          r[w] = ((a[w] << 1) | (w > 0 ? a[w - 1] >> 63 : 0)) & mask(w);
        }
        break;
      case Op::kG: {
        // True exactly above the last position where the operand fails.
        std::size_t from = 0;
        for (std::size_t w = words_; w-- > 0;) {
          const std::uint64_t zeros = ~a[w] & mask(w);
          if (zeros) {
            from = w * 64 + (63 - std::countl_zero(zeros)) + 1;
            break;
          }
        }
        for (std::size_t i = from; i < n_; ++i) set_bit(r, i, true);
        break;
      }
      case Op::kW: {
        bool carry = true;
        for (std::size_t i = n_; i-- > 0;) {
          carry = get_bit(b, i) || (get_bit(a, i) && carry);
          set_bit(r, i, carry);
        }
        break;
      }
    }
  }
}

bool Evaluator::eval(const Trace& trace, std::size_t i) {
  if (i >= trace.size()) throw std::out_of_range("position-out-of-range");
  run(trace);
  return get_bit(row(static_cast<int>(slots_.size()) - 1), i);
}

CheckResult Evaluator::check(const Trace& trace) {
  run(trace);
  const int top = static_cast<int>(slots_.size()) - 1;
  if (slots_[top].op != Op::kG) {
    return get_bit(row(top), 0) ? CheckResult{} : CheckResult{false, 0};
  }
  const std::uint64_t* body = row(slots_[top].a);
  for (std::size_t w = 0; w < words_; ++w) {
    const std::uint64_t m = w + 1 == words_ && n_ % 64
                                ? (std::uint64_t{1} << (n_ % 64)) - 1
                                : ~std::uint64_t{0};
    const std::uint64_t zeros = ~body[w] & m;
    if (zeros) {
      return {false, w * 64 + static_cast<std::size_t>(std::countr_zero(zeros))};
    }
  }
  return {};
}

bool eval(const Formula& f, const Trace& trace, std::size_t i) {
  return Evaluator(f).eval(trace, i);
}

CheckResult check(const Formula& f, const Trace& trace) {
  return Evaluator(f).check(trace);
}

}  // namespace ucca::ltl
