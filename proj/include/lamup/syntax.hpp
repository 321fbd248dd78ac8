#pragma once

#include <cassert>
#include <charconv>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lamup/debruijn.hpp"
#include "lamup/freevars.hpp"
#include "lamup/term.hpp"

namespace lamup {

// Half-open byte range [start, end) into the input that was being parsed.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : std::runtime_error(message + " at " + std::to_string(span.start) +
                           ".." + std::to_string(span.end)),
        message_(message),
        span_(span) {}

  const std::string& message() const { return message_; }
  SourceSpan span() const { return span_; }

 private:
  std::string message_;
  SourceSpan span_;
};

// ---------------------------------------------------------------------------
// Concrete syntax.
//
//   term    ::= '\' VAR '.' term | app          (named terms)
//   term    ::= '\' '.' term | app              (de Bruijn terms)
//   app     ::= operand+                        (left-associative)
//   operand ::= '^'* atom
//   atom    ::= VAR | '(' term ')' | '1'        ('1' in de Bruijn terms only)
//
// '^' binds tightest and stacks. Lambda bodies extend as far right as
// possible. Output is ASCII; the lexer also accepts the aliases U+03BB for
// '\', U+2191 for '^', and '1' U+0332 for '1'. '#' starts a comment that
// runs to the end of the line. Contexts are 'nil' or comma-separated names;
// renamings are '{y x}' optionally followed by '_' and comma-separated
// lifts, outermost first.
// ---------------------------------------------------------------------------

namespace detail {

enum class Tok {
  Lambda,
  Dot,
  Up,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  One,
  Ident,
  End,
};

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

inline bool ident_head(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline bool ident_tail(char c) {
  return ident_head(c) || (c >= '0' && c <= '9') || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { next(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

  std::size_t size() const { return src_.size(); }

 private:
  void next() {
    for (;;) {
      while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      tok_ = Token{Tok::End, {}, {start, start}};
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '\\':
        return single(Tok::Lambda, start);
      case '.':
        return single(Tok::Dot, start);
      case '^':
        return single(Tok::Up, start);
      case '(':
        return single(Tok::LParen, start);
      case ')':
        return single(Tok::RParen, start);
      case '{':
        return single(Tok::LBrace, start);
      case '}':
        return single(Tok::RBrace, start);
      case ',':
        return single(Tok::Comma, start);
      default:
        break;
    }
    if (starts_with(start, "\xce\xbb")) {  // U+03BB
      pos_ = start + 2;
      return token(Tok::Lambda, start);
    }
    if (starts_with(start, "\xe2\x86\x91")) {  // U+2191
      pos_ = start + 3;
      return token(Tok::Up, start);
    }
    if (c == '1') {
      std::size_t end = start + 1;
      if (starts_with(end, "\xcc\xb2")) end += 2;  // U+0332 combining line
      if (end < src_.size() && ident_tail(src_[end])) {
        throw ParseError("malformed token", {start, end + 1});
      }
      pos_ = end;
      return token(Tok::One, start);
    }
    if (ident_head(c)) {
      std::size_t end = start + 1;
      while (end < src_.size() && ident_tail(src_[end])) ++end;
      pos_ = end;
      return token(Tok::Ident, start);
    }
    throw ParseError("unexpected character", {start, start + char_len(start)});
  }

  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  bool starts_with(std::size_t at, std::string_view bytes) const {
    return src_.substr(at).starts_with(bytes);
  }

  std::size_t char_len(std::size_t at) const {
    unsigned char c = static_cast<unsigned char>(src_[at]);
    std::size_t n = c < 0x80 ? 1 : c < 0xe0 ? 2 : c < 0xf0 ? 3 : 4;
    return std::min(n, src_.size() - at);
  }

  void single(Tok kind, std::size_t start) {
    pos_ = start + 1;
    token(kind, start);
  }

  void token(Tok kind, std::size_t start) {
    tok_ = Token{kind, src_.substr(start, pos_ - start), {start, pos_}};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::One:
      return "token '1'";
    default:
      return "token '" + std::string(t.text) + "'";
  }
}

// Converts an identifier token to a VarName; the lexer guarantees the
// character set, so only the reserved word needs a check.
inline VarName to_var(const Token& t) {
  assert(t.kind == Tok::Ident);
  if (t.text == "nil") throw ParseError("reserved word 'nil'", t.span);
  return VarName(std::string(t.text));
}

// Shared recursive-descent parser; Ops supplies the constructors. Named
// terms require a binder after '\' and reject '1'; de Bruijn terms require
// '.' directly after '\' and accept '1'.
template <typename Ops>
class TermParser {
 public:
  using Value = typename Ops::Value;

  explicit TermParser(std::string_view src) : lx_(src) {}

  Value parse() {
    if (lx_.peek().kind == Tok::End) {
      throw ParseError("empty input", {0, lx_.size()});
    }
    Value v = parse_term();
    const Token& t = lx_.peek();
    if (t.kind == Tok::RParen) {
      throw ParseError("unbalanced parenthesis", t.span);
    }
    if (t.kind != Tok::End) {
      throw ParseError("unexpected " + describe(t), t.span);
    }
    return v;
  }

 private:
  Value parse_term() {
    if (lx_.peek().kind == Tok::Lambda) {
      lx_.take();
      if constexpr (Ops::named) {
        Token b = expect(Tok::Ident, "binder name");
        VarName binder = to_var(b);
        expect(Tok::Dot, "'.'");
        return Ops::lam(std::move(binder), parse_term());
      } else {
        expect(Tok::Dot, "'.'");
        return Ops::lam(parse_term());
      }
    }
    return parse_app();
  }

  Value parse_app() {
    Value acc = parse_operand();
    while (starts_operand(lx_.peek().kind)) {
      acc = Ops::app(std::move(acc), parse_operand());
    }
    return acc;
  }

  static bool starts_operand(Tok k) {
    return k == Tok::Up || k == Tok::Ident || k == Tok::LParen ||
           (!Ops::named && k == Tok::One);
  }

  Value parse_operand() {
    std::size_t ups = 0;
    while (lx_.peek().kind == Tok::Up) {
      lx_.take();
      ++ups;
    }
    Value v = parse_atom();
    for (; ups > 0; --ups) v = Ops::up(std::move(v));
    return v;
  }

  Value parse_atom() {
    Token t = lx_.take();
    switch (t.kind) {
      case Tok::Ident:
        return Ops::var(to_var(t));
      case Tok::One:
        if constexpr (!Ops::named) return Ops::one();
        throw ParseError("unexpected token '1'", t.span);
      case Tok::LParen: {
        Value v = parse_term();
        if (lx_.peek().kind != Tok::RParen) {
          throw ParseError("unbalanced parenthesis", lx_.peek().span);
        }
        lx_.take();
        return v;
      }
      default:
        throw ParseError("unexpected " + describe(t), t.span);
    }
  }

  Token expect(Tok kind, const std::string& what) {
    const Token& t = lx_.peek();
    if (t.kind != kind) {
      throw ParseError("expected " + what + ", found " + describe(t), t.span);
    }
    return lx_.take();
  }

  Lexer lx_;
};

struct TermOps {
  using Value = Term;
  static constexpr bool named = true;
  static Value var(VarName v) { return Term::var(std::move(v)); }
  static Value app(Value f, Value a) {
    return Term::app(std::move(f), std::move(a));
  }
  static Value lam(VarName b, Value m) {
    return Term::lam(std::move(b), std::move(m));
  }
  static Value up(Value m) { return Term::up(std::move(m)); }
};

struct DbOps {
  using Value = DbTerm;
  static constexpr bool named = false;
  static Value var(VarName v) { return DbTerm::var(std::move(v)); }
  static Value one() { return DbTerm::one(); }
  static Value app(Value f, Value a) {
    return DbTerm::app(std::move(f), std::move(a));
  }
  static Value lam(Value m) { return DbTerm::lam(std::move(m)); }
  static Value up(Value m) { return DbTerm::up(std::move(m)); }
};

}  // namespace detail

inline Term parse_term(std::string_view text) {
  return detail::TermParser<detail::TermOps>(text).parse();
}

inline DbTerm parse_dbterm(std::string_view text) {
  return detail::TermParser<detail::DbOps>(text).parse();
}

// 'nil' or the empty string is the empty context; otherwise a comma-
// separated list of names, outermost first.
inline Context parse_context(std::string_view text) {
  detail::Lexer lx(text);
  if (lx.peek().kind == detail::Tok::End) return Context{};
  detail::Token first = lx.peek();
  if (first.kind == detail::Tok::Ident && first.text == "nil") {
    lx.take();
    const detail::Token& t = lx.peek();
    if (t.kind != detail::Tok::End) {
      throw ParseError("reserved word 'nil'", first.span);
    }
    return Context{};
  }
  Context g;
  for (;;) {
    const detail::Token& t = lx.peek();
    if (t.kind != detail::Tok::Ident) {
      throw ParseError("expected variable name, found " + detail::describe(t),
                       t.span);
    }
    g.push_back(detail::to_var(lx.take()));
    if (lx.peek().kind != detail::Tok::Comma) break;
    lx.take();
  }
  const detail::Token& t = lx.peek();
  if (t.kind != detail::Tok::End) {
    throw ParseError("unexpected " + detail::describe(t), t.span);
  }
  return g;
}

// '{y x}' or '{y x}_g1,...,gn'. The separator '_' fuses with the first lift
// name into one identifier, so the lift list is recovered from it.
inline Renaming parse_renaming(std::string_view text) {
  detail::Lexer lx(text);
  auto expect = [&](detail::Tok kind, const std::string& what) {
    const detail::Token& t = lx.peek();
    if (t.kind != kind) {
      throw ParseError("expected " + what + ", found " + detail::describe(t),
                       t.span);
    }
    return lx.take();
  };
  expect(detail::Tok::LBrace, "'{'");
  VarName target = detail::to_var(expect(detail::Tok::Ident, "target name"));
  VarName source = detail::to_var(expect(detail::Tok::Ident, "source name"));
  expect(detail::Tok::RBrace, "'}'");
  Renaming f{std::move(target), std::move(source)};
  if (lx.peek().kind == detail::Tok::End) return f;

  detail::Token sep = expect(detail::Tok::Ident, "'_' and lift names");
  if (sep.text.front() != '_') {
    throw ParseError("expected '_' before lift names", sep.span);
  }
  std::string_view rest = sep.text.substr(1);
  if (!rest.empty()) {
    if (rest == "nil") throw ParseError("reserved word 'nil'", sep.span);
    if (!VarName::valid(rest)) {
      throw ParseError("invalid lift name", {sep.span.start + 1, sep.span.end});
    }
    f.lifts.push_back(VarName(std::string(rest)));
  } else {
    f.lifts.push_back(detail::to_var(expect(detail::Tok::Ident, "lift name")));
  }
  while (lx.peek().kind == detail::Tok::Comma) {
    lx.take();
    f.lifts.push_back(detail::to_var(expect(detail::Tok::Ident, "lift name")));
  }
  const detail::Token& t = lx.peek();
  if (t.kind != detail::Tok::End) {
    throw ParseError("unexpected " + detail::describe(t), t.span);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Printing. Minimal parentheses, with one deliberate extra: a '^'-headed
// operand in function position keeps its parentheses, so an application
// reads '(^f) x' rather than '^f x'. Both forms parse to the same tree;
// printing always chooses the first, and reprinting printed output is a
// fixed point.
// ---------------------------------------------------------------------------

namespace detail {

enum class Pos { Top, Head, Arg, UpInner };

template <typename T>
void print_rec(std::string& out, const T& m, Pos pos);

template <typename T>
bool lam_root(const T& m) {
  return m.kind() == T::Kind::Lam;
}

template <typename T>
void print_lam(std::string& out, const T& m, Pos pos) {
  bool parens = pos != Pos::Top;
  if (parens) out += '(';
  out += '\\';
  if constexpr (std::is_same_v<T, Term>) out += m.binder().str();
  out += '.';
  if (!lam_root(m.body())) out += ' ';
  print_rec(out, m.body(), Pos::Top);
  if (parens) out += ')';
}

template <typename T>
void print_app(std::string& out, const T& m, Pos pos) {
  bool parens = pos == Pos::Arg || pos == Pos::UpInner;
  if (parens) out += '(';
  print_rec(out, m.fun(), Pos::Head);
  out += ' ';
  print_rec(out, m.arg(), Pos::Arg);
  if (parens) out += ')';
}

template <typename T>
void print_up(std::string& out, const T& m, Pos pos) {
  bool parens = pos == Pos::Head;
  if (parens) out += '(';
  out += '^';
  print_rec(out, m.inner(), Pos::UpInner);
  if (parens) out += ')';
}

template <>
inline void print_rec<Term>(std::string& out, const Term& m, Pos pos) {
  switch (m.kind()) {
    case Term::Kind::Var:
      out += m.var_name().str();
      return;
    case Term::Kind::App:
      return print_app(out, m, pos);
    case Term::Kind::Lam:
      return print_lam(out, m, pos);
    case Term::Kind::Up:
      return print_up(out, m, pos);
  }
}

template <>
inline void print_rec<DbTerm>(std::string& out, const DbTerm& m, Pos pos) {
  switch (m.kind()) {
    case DbTerm::Kind::Var:
      out += m.var_name().str();
      return;
    case DbTerm::Kind::One:
      out += '1';
      return;
    case DbTerm::Kind::App:
      return print_app(out, m, pos);
    case DbTerm::Kind::Lam:
      return print_lam(out, m, pos);
    case DbTerm::Kind::Up:
      return print_up(out, m, pos);
  }
}

}  // namespace detail

inline std::string print_term(const Term& m) {
  std::string out;
  detail::print_rec(out, m, detail::Pos::Top);
  return out;
}

inline std::string print_dbterm(const DbTerm& m) {
  std::string out;
  detail::print_rec(out, m, detail::Pos::Top);
  return out;
}

inline std::string print_context(const Context& g) {
  if (g.empty()) return "nil";
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) out += ',';
    out += g[i].str();
  }
  return out;
}

inline std::string print_renaming(const Renaming& f) {
  std::string out = "{" + f.target.str() + " " + f.source.str() + "}";
  if (!f.lifts.empty()) {
    out += '_';
    for (std::size_t i = 0; i < f.lifts.size(); ++i) {
      if (i > 0) out += ',';
      out += f.lifts[i].str();
    }
  }
  return out;
}

// Nonempty levels as 'i:{a,b}' groups separated by spaces, names in
// lexicographic order; the all-empty sequence prints as '{}'.
inline std::string print_fvseq(const FvSeq& f) {
  if (f.all_empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < f.depth(); ++i) {
    if (f.level(i).empty()) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
    out += ":{";
    bool first = true;
    for (const VarName& v : f.level(i)) {
      if (!first) out += ',';
      first = false;
      out += v.str();
    }
    out += '}';
  }
  return out;
}

// Inverse of print_fvseq: '{}' or space-separated 'i:{a,b}' groups with
// strictly increasing levels.
inline FvSeq parse_fvseq(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    for (;;) {
      while (pos < text.size() &&
             (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
              text[pos] == '\r')) {
        ++pos;
      }
      if (pos < text.size() && text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
        continue;
      }
      return;
    }
  };
  auto expect_char = [&](char c, const std::string& what) {
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError("expected " + what, {pos, std::min(pos + 1, text.size())});
    }
    ++pos;
  };

  skip_ws();
  if (pos >= text.size()) throw ParseError("empty input", {0, text.size()});
  if (text[pos] == '{') {
    ++pos;
    expect_char('}', "'}'");
    skip_ws();
    if (pos != text.size()) {
      throw ParseError("unexpected trailing input", {pos, text.size()});
    }
    return FvSeq{};
  }

  std::vector<FvSeq::Level> levels;
  std::size_t last_level = 0;
  bool have_level = false;
  while (pos < text.size()) {
    std::size_t start = pos;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos) {
      throw ParseError("expected level number",
                       {start, std::min(start + 1, text.size())});
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    if (have_level && value <= last_level) {
      throw ParseError("levels must be strictly increasing", {start, pos});
    }
    last_level = value;
    have_level = true;
    expect_char(':', "':'");
    expect_char('{', "'{'");
    if (levels.size() <= value) levels.resize(value + 1);
    for (;;) {
      skip_ws();
      std::size_t name_start = pos;
      while (pos < text.size() && detail::ident_tail(text[pos])) ++pos;
      std::string_view name = text.substr(name_start, pos - name_start);
      if (name.empty() || !VarName::valid(name)) {
        throw ParseError("expected variable name",
                         {name_start, std::min(pos + 1, text.size())});
      }
      levels[value].insert(VarName(std::string(name)));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect_char('}', "'}'");
    skip_ws();
  }
  return FvSeq(std::move(levels));
}

// One node per line, premises indented two further spaces:
//   RULE: G |- M
inline std::string print_derivation(const Derivation& d) {
  std::string out;
  auto rec = [&](auto&& self, const Derivation& node, std::size_t depth) -> void {
    out.append(2 * depth, ' ');
    out += rule_name(node.rule);
    out += ": ";
    out += print_context(node.context);
    out += " ⊢ ";
    out += print_term(node.subject);
    out += '\n';
    for (const Derivation& p : node.premises) self(self, p, depth + 1);
  };
  rec(rec, d, 0);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const VarName& v) {
  return os << v.str();
}

inline std::ostream& operator<<(std::ostream& os, const Term& m) {
  return os << print_term(m);
}

inline std::ostream& operator<<(std::ostream& os, const DbTerm& m) {
  return os << print_dbterm(m);
}

inline std::ostream& operator<<(std::ostream& os, const Context& g) {
  return os << print_context(g);
}

inline std::ostream& operator<<(std::ostream& os, const Renaming& f) {
  return os << print_renaming(f);
}

inline std::ostream& operator<<(std::ostream& os, const FvSeq& f) {
  return os << print_fvseq(f);
}

}  // namespace lamup
