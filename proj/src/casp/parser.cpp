// Copyright 2026 The casp-schemas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "casp/parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

#include "casp/error.hpp"

namespace casp {
namespace {

enum class Tok {
  name,
  integer,
  kw_not,
  if_,      // :-
  dot,      // .
  range,    // ..
  comma,
  lbrace,
  rbrace,
  kw_var,    // #var
  kw_false,  // #false
  rel,
  plus,
  minus,
  star,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
  Rel rel = Rel::eq;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::end, {}, line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        lex_name(t);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        t.kind = Tok::integer;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (c == '#') {
        lex_hash(t);
      } else if (starts_with(":-")) {
        advance(2);
        t.kind = Tok::if_;
      } else if (starts_with("..")) {
        advance(2);
        t.kind = Tok::range;
      } else {
        advance();
        switch (c) {
          case '.': t.kind = Tok::dot; break;
          case ',': t.kind = Tok::comma; break;
          case '{': t.kind = Tok::lbrace; break;
          case '}': t.kind = Tok::rbrace; break;
          case '+': t.kind = Tok::plus; break;
          case '-': t.kind = Tok::minus; break;
          case '*': t.kind = Tok::star; break;
          default:
            throw ParseError(ErrorKind::syntax, t.line, t.col, std::string("unexpected character '") + c + "'");
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  // NAME := ident | ident "(" arg ("," arg)* ")" with args made of [A-Za-z0-9_-].
  void lex_name(Token& t) {
    std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
    if (pos_ < src_.size() && src_[pos_] == '(') {
      advance();
      bool expect_arg = true;
      for (;;) {
        if (pos_ >= src_.size()) throw ParseError(ErrorKind::syntax, line_, col_, "unterminated argument list");
        char c = src_[pos_];
        if (ident_char(c) || c == '-') {
          while (pos_ < src_.size() && (ident_char(src_[pos_]) || src_[pos_] == '-')) advance();
          expect_arg = false;
        } else if (c == ',' && !expect_arg) {
          advance();
          expect_arg = true;
        } else if (c == ')' && !expect_arg) {
          advance();
          break;
        } else {
          throw ParseError(ErrorKind::syntax, line_, col_, "malformed argument list");
        }
      }
    }
    t.text = std::string(src_.substr(start, pos_ - start));
    t.kind = t.text == "not" ? Tok::kw_not : Tok::name;
  }

  void lex_hash(Token& t) {
    static constexpr std::pair<std::string_view, Rel> kRels[] = {
        {"#<=", Rel::le}, {"#>=", Rel::ge}, {"#!=", Rel::ne}, {"#<", Rel::lt}, {"#>", Rel::gt}, {"#=", Rel::eq},
    };
    for (const auto& [tok, rel] : kRels) {
      if (starts_with(tok)) {
        advance(tok.size());
        t.kind = Tok::rel;
        t.rel = rel;
        t.text = std::string(tok);
        return;
      }
    }
    std::size_t start = pos_;
    advance();
    while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
    t.text = std::string(src_.substr(start, pos_ - start));
    if (t.text == "#var") {
      t.kind = Tok::kw_var;
    } else if (t.text == "#false") {
      t.kind = Tok::kw_false;
    } else {
      throw ParseError(ErrorKind::syntax, t.line, t.col, "unknown directive '" + t.text + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct AstTerm {
  std::int64_t coef;
  std::string var;  // empty for a constant
  int line;
  int col;
};

struct AstCexpr {
  std::vector<AstTerm> lhs;
  Rel rel;
  std::vector<AstTerm> rhs;
};

struct AstAtom {
  bool is_cexpr = false;
  std::string name;
  AstCexpr cexpr;
  int line = 0;
  int col = 0;
};

struct AstLit {
  int nots = 0;
  AstAtom atom;
};

struct AstRule {
  std::optional<AstAtom> head;  // empty: falsum
  bool choice = false;
  std::vector<AstLit> body;
};

struct AstDecl {
  std::string name;
  std::int64_t lo;
  std::int64_t hi;
  int line;
  int col;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  void run(std::vector<AstDecl>& decls, std::vector<AstRule>& rules) {
    while (peek().kind != Tok::end) {
      if (peek().kind == Tok::kw_var) {
        decls.push_back(parse_decl());
      } else {
        rules.push_back(parse_rule());
      }
    }
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(ErrorKind::syntax, t.line, t.col, msg);
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    return next();
  }

  std::int64_t parse_int_text(const Token& t, bool negative) const {
    std::uint64_t mag = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), mag);
    if (ec != std::errc{} || mag > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      fail(t, "integer out of range");
    }
    auto v = static_cast<std::int64_t>(mag);
    return negative ? -v : v;
  }

  std::int64_t parse_signed_int() {
    bool neg = false;
    if (peek().kind == Tok::minus) {
      next();
      neg = true;
    }
    return parse_int_text(expect(Tok::integer, "integer"), neg);
  }

  AstDecl parse_decl() {
    const Token& kw = next();
    const Token& name = expect(Tok::name, "variable name");
    AstDecl d{name.text, 0, 0, kw.line, kw.col};
    d.lo = parse_signed_int();
    expect(Tok::range, "'..'");
    d.hi = parse_signed_int();
    expect(Tok::dot, "'.'");
    return d;
  }

  AstRule parse_rule() {
    AstRule r;
    if (peek().kind == Tok::lbrace) {
      next();
      const Token& n = expect(Tok::name, "atom name in choice");
      AstAtom a;
      a.name = n.text;
      a.line = n.line;
      a.col = n.col;
      r.head = a;
      r.choice = true;
      expect(Tok::rbrace, "'}'");
      expect(Tok::dot, "'.'");
      return r;
    }
    if (peek().kind == Tok::if_) {
      next();
      parse_body(r.body);
      expect(Tok::dot, "'.'");
      return r;
    }
    if (peek().kind == Tok::kw_false) {
      next();
    } else {
      AstAtom head = parse_atom();
      if (head.is_cexpr) {
        throw ParseError(ErrorKind::constraint_in_head, head.line, head.col, "constraint atom in rule head");
      }
      r.head = std::move(head);
    }
    if (peek().kind == Tok::if_) {
      next();
      parse_body(r.body);
    }
    expect(Tok::dot, "'.'");
    return r;
  }

  void parse_body(std::vector<AstLit>& body) {
    body.push_back(parse_lit());
    while (peek().kind == Tok::comma) {
      next();
      body.push_back(parse_lit());
    }
  }

  AstLit parse_lit() {
    AstLit l;
    if (peek().kind == Tok::kw_not) {
      next();
      l.nots = 1;
      if (peek().kind == Tok::kw_not) {
        next();
        l.nots = 2;
      }
    }
    l.atom = parse_atom();
    return l;
  }

  static bool starts_term(Tok k) { return k == Tok::name || k == Tok::integer || k == Tok::minus; }

  // atom := NAME | linexp REL linexp
  AstAtom parse_atom() {
    const Token& first = peek();
    AstAtom a;
    a.line = first.line;
    a.col = first.col;
    if (first.kind == Tok::name && peek(1).kind != Tok::rel && peek(1).kind != Tok::plus &&
        peek(1).kind != Tok::minus) {
      a.name = next().text;
      return a;
    }
    if (!starts_term(first.kind)) fail(first, "expected atom");
    a.is_cexpr = true;
    a.cexpr.lhs = parse_linexp();
    if (peek().kind != Tok::rel) fail(peek(), "expected relation (#<, #<=, #>, #>=, #=, #!=)");
    a.cexpr.rel = next().rel;
    a.cexpr.rhs = parse_linexp();
    return a;
  }

  // linexp := ["-"] term (("+"|"-") term)*
  std::vector<AstTerm> parse_linexp() {
    std::vector<AstTerm> out;
    bool neg = false;
    if (peek().kind == Tok::minus) {
      next();
      neg = true;
    }
    out.push_back(parse_term(neg));
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      neg = next().kind == Tok::minus;
      out.push_back(parse_term(neg));
    }
    return out;
  }

  // term := INT | INT "*" NAME | NAME
  AstTerm parse_term(bool negative) {
    const Token& t = peek();
    if (t.kind == Tok::name) {
      next();
      return AstTerm{negative ? -1 : 1, t.text, t.line, t.col};
    }
    if (t.kind != Tok::integer) fail(t, "expected term");
    next();
    std::int64_t v = parse_int_text(t, negative);
    if (peek().kind == Tok::star) {
      next();
      const Token& n = expect(Tok::name, "variable name after '*'");
      return AstTerm{v, n.text, n.line, n.col};
    }
    return AstTerm{v, {}, t.line, t.col};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

LinExpr resolve(const std::vector<AstTerm>& terms, const ProgramBuilder& b) {
  LinExpr e;
  for (const auto& t : terms) {
    if (t.var.empty()) {
      e.terms.push_back(LinTerm{t.coef, std::nullopt});
      continue;
    }
    auto idx = b.find_var(t.var);
    if (!idx) {
      throw ParseError(ErrorKind::undeclared_variable, t.line, t.col, "undeclared constraint variable '" + t.var + "'");
    }
    e.terms.push_back(LinTerm{t.coef, *idx});
  }
  return e;
}

AtomId intern(const AstAtom& a, ProgramBuilder& b) {
  if (!a.is_cexpr) return b.atom(a.name);
  ConstraintExpr c{resolve(a.cexpr.lhs, b), a.cexpr.rel, resolve(a.cexpr.rhs, b)};
  try {
    return b.constraint_atom(std::move(c));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.kind(), a.line, a.col, e.what());
  }
}

}  // namespace

Program parse_program(std::string_view text) {
  std::vector<AstDecl> decls;
  std::vector<AstRule> rules;
  Parser(Lexer(text).run()).run(decls, rules);

  ProgramBuilder b;
  for (const auto& d : decls) {
    try {
      b.declare_var(d.name, d.lo, d.hi);
    } catch (const Error& e) {
      throw ParseError(e.kind(), d.line, d.col, e.what());
    }
  }
  // Atoms are interned head, positive, negative, double-negative, so that
  // the canonical printer reproduces the same ids.
  for (const auto& r : rules) {
    Rule rule;
    if (r.head) rule.head = intern(*r.head, b);
    if (r.choice) rule.negneg.push_back(*rule.head);
    for (int nots = 0; nots <= 2; ++nots) {
      for (const auto& l : r.body) {
        if (l.nots != nots) continue;
        AtomId id = intern(l.atom, b);
        (nots == 0 ? rule.pos : nots == 1 ? rule.neg : rule.negneg).push_back(id);
      }
    }
    try {
      b.add_rule(std::move(rule));
    } catch (const Error& e) {
      int line = r.head ? r.head->line : (r.body.empty() ? 0 : r.body.front().atom.line);
      int col = r.head ? r.head->col : (r.body.empty() ? 0 : r.body.front().atom.col);
      throw ParseError(e.kind(), line, col, e.what());
    }
  }
  return std::move(b).build();
}

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& d : p.decls()) {
    out += "#var " + d.name + " " + std::to_string(d.lo) + ".." + std::to_string(d.hi) + ".\n";
  }
  for (const auto& r : p.rules()) {
    out += r.head ? p.atom(*r.head).name : std::string("#false");
    bool first = true;
    auto emit = [&](const std::vector<AtomId>& atoms, const char* prefix) {
      for (AtomId a : atoms) {
        out += first ? " :- " : ", ";
        first = false;
        out += prefix;
        out += p.atom(a).name;
      }
    };
    emit(r.pos, "");
    emit(r.neg, "not ");
    emit(r.negneg, "not not ");
    out += ".\n";
  }
  return out;
}

}  // namespace casp
