//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ucca/ltl.hpp"

namespace ucca::ltl {

namespace {

enum class Tok {
  kIdent, kNumber, kLParen, kRParen, kNot, kAnd, kOr, kArrow,
  kEq, kNe, kGe, kEnd,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto emit = [&](Tok k, std::size_t len) {
    out.push_back({k, s.substr(i, len), i});
    i += len;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_')) {
        ++j;
      }
      emit(Tok::kIdent, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) {
        ++j;
      }
      emit(Tok::kNumber, j - i);
    } else if (c == '(') {
      emit(Tok::kLParen, 1);
    } else if (c == ')') {
      emit(Tok::kRParen, 1);
    } else if (c == '&') {
      emit(Tok::kAnd, 1);
    } else if (c == '|') {
      emit(Tok::kOr, 1);
    } else if (c == '=') {
      emit(Tok::kEq, 1);
    } else if (s.substr(i, 2) == "->") {
      emit(Tok::kArrow, 2);
    } else if (s.substr(i, 2) == "!=") {
      emit(Tok::kNe, 2);
    } else if (s.substr(i, 2) == ">=") {
      emit(Tok::kGe, 2);
    } else if (c == '!') {
      emit(Tok::kNot, 1);
    } else {
      throw ParseError(ParseErrorKind::kSyntax, i,
                       "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::kEnd, {}, s.size()});
  return out;
}

// Parses an optional decimal suffix; nullopt when malformed.
std::optional<int> suffix_index(std::string_view rest) {
  if (rest.empty()) return 0;
  int v = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc() || p != rest.data() + rest.size()) return std::nullopt;
  return v;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t n_ucc)
      : toks_(lex(text)), n_ucc_(n_ucc) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::kEnd) fail("unexpected token '" + text() + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  std::string text() const { return std::string(peek().text); }
  bool is_ident(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::kIdent && peek(ahead).text == s;
  }
  [[noreturn]] void fail(const std::string& msg,
                         ParseErrorKind k = ParseErrorKind::kSyntax) const {
    throw ParseError(k, peek().pos,
                     msg + " at offset " + std::to_string(peek().pos));
  }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::kArrow) {
      ++pos_;
      return implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::kOr) {
      ++pos_;
      f = lor(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = until();
    while (peek().kind == Tok::kAnd) {
      ++pos_;
      f = land(f, until());
    }
    return f;
  }

  Formula until() {
    Formula lhs = unary();
    if (is_ident("W")) {
      ++pos_;
      return weak_until(lhs, until());
    }
    return lhs;
  }

  Formula unary() {
    if (peek().kind == Tok::kNot) {
      ++pos_;
      return lnot(unary());
    }
    if (is_ident("G")) {
      ++pos_;
      return always(unary());
    }
    if ((is_ident("X") || is_ident("Y")) && peek(1).kind == Tok::kLParen) {
      // Term-level X(...) / Y(...) when a comparator or `in` follows.
      const std::size_t save = pos_;
      try {
        TermPtr t = term();
        if (starts_atom_tail()) return atom_tail(t);
      } catch (const ParseError&) {
        // Not a term; the operator reading reports any real error.
      }
      pos_ = save;
    }
    if (is_ident("X")) {
      ++pos_;
      return next(unary());
    }
    if (is_ident("Y")) {
      ++pos_;
      return prev(unary());
    }
    return primary();
  }

  Formula primary() {
    if (peek().kind == Tok::kLParen) {
      ++pos_;
      Formula f = implication();
      expect(Tok::kRParen, "')'");
      return f;
    }
    if (is_ident("true")) {
      ++pos_;
      return f_true();
    }
    if (is_ident("false")) {
      ++pos_;
      return f_false();
    }
    const Token start = peek();
    TermPtr t = term();
    if (starts_atom_tail()) return atom_tail(t);
    if (t->kind == Term::Kind::kSignal && is_boolean(t->signal)) {
      return boolean(t->signal);
    }
    throw ParseError(ParseErrorKind::kSyntax, start.pos,
                     "term '" + print(*t) +
                         "' needs a comparator or region at offset " +
                         std::to_string(start.pos));
  }

  bool starts_atom_tail() const {
    const Tok k = peek().kind;
    return k == Tok::kEq || k == Tok::kNe || k == Tok::kGe || is_ident("in");
  }

  Formula atom_tail(TermPtr lhs) {
    const Tok k = peek().kind;
    if (is_ident("in")) {
      ++pos_;
      return member(lhs, region());
    }
    ++pos_;
    TermPtr rhs = term();
    const Cmp c = k == Tok::kEq ? Cmp::kEq : k == Tok::kNe ? Cmp::kNe : Cmp::kGe;
    return compare(lhs, c, rhs);
  }

  Region region() {
    if (peek().kind != Tok::kIdent) fail("expected region");
    const std::string_view id = peek().text;
    if (id == "CR") {
      ++pos_;
      return {Region::Kind::kCr, 0};
    }
    if (id.substr(0, 3) == "UCC") {
      const auto idx = suffix_index(id.substr(3));
      if (idx && *idx < static_cast<int>(n_ucc_)) {
        ++pos_;
        return {Region::Kind::kUcc, *idx};
      }
    }
    fail("unknown region '" + std::string(id) + "'",
         ParseErrorKind::kUnknownRegion);
  }

  TermPtr term() {
    const Token& t = peek();
    if (t.kind == Tok::kNumber) {
      ++pos_;
      return number(t);
    }
    if (t.kind != Tok::kIdent) fail("expected term");
    if ((t.text == "X" || t.text == "Y") && peek(1).kind == Tok::kLParen) {
      const bool is_next = t.text == "X";
      pos_ += 2;
      TermPtr inner = term();
      expect(Tok::kRParen, "')'");
      return is_next ? Term::next(inner) : Term::prev(inner);
    }
    if (t.text == "none") {
      ++pos_;
      return Term::lit(kNone);
    }
    ++pos_;
    return signal(t);
  }

  TermPtr number(const Token& t) {
    std::string_view s = t.text;
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      s.remove_prefix(2);
      base = 16;
    }
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc() || p != s.data() + s.size() || v > 0xFFFF) {
      throw ParseError(ParseErrorKind::kSyntax, t.pos,
                       "bad number '" + std::string(t.text) + "'");
    }
    return Term::lit(static_cast<Value>(v));
  }

  TermPtr signal(const Token& t) {
    static constexpr SignalId kPlain[] = {
        SignalId::kPc, SignalId::kSp, SignalId::kDAddr, SignalId::kWEn,
        SignalId::kIrqJmp, SignalId::kOpRet, SignalId::kReset};
    for (SignalId s : kPlain) {
      if (signal_name(s) == t.text) return Term::sig(s);
    }
    for (SignalId s : {SignalId::kRetExp, SignalId::kBp}) {
      const std::string_view name = signal_name(s);
      if (t.text.substr(0, name.size()) != name) continue;
      const auto idx = suffix_index(t.text.substr(name.size()));
      if (idx && *idx < static_cast<int>(n_ucc_)) return Term::sig(s, *idx);
    }
    throw ParseError(ParseErrorKind::kUnknownSignal, t.pos,
                     "unknown signal '" + std::string(t.text) +
                         "' at offset " + std::to_string(t.pos));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t n_ucc_;
};

}  // namespace

Formula parse_formula(std::string_view text, std::size_t n_ucc) {
  return Parser(text, n_ucc).parse();
}

}  // namespace ucca::ltl
