#include "ad2mcrl2/expr/ast.hpp"

#include <cctype>

namespace ad2mcrl2::expr {
namespace {

bool is_id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

enum class Tok { kIdent, kDot, kEq, kNeq, kNot, kAnd, kOr, kLParen, kRParen, kAssign, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kDot: return "'.'";
    case Tok::kEq: return "'=='";
    case Tok::kNeq: return "'!='";
    case Tok::kNot: return "'!'";
    case Tok::kAnd: return "'&&'";
    case Tok::kOr: return "'||'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kAssign: return "':='";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](char a, char b) { return i + 1 < text.size() && text[i] == a && text[i + 1] == b; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (is_id_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_id_char(text[j])) ++j;
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), i});
      i = j;
    } else if (two('=', '=')) {
      out.push_back({Tok::kEq, "==", i});
      i += 2;
    } else if (two('!', '=')) {
      out.push_back({Tok::kNeq, "!=", i});
      i += 2;
    } else if (two('&', '&')) {
      out.push_back({Tok::kAnd, "&&", i});
      i += 2;
    } else if (two('|', '|')) {
      out.push_back({Tok::kOr, "||", i});
      i += 2;
    } else if (two(':', '=')) {
      out.push_back({Tok::kAssign, ":=", i});
      i += 2;
    } else if (c == '!') {
      out.push_back({Tok::kNot, "!", i++});
    } else if (c == '.') {
      out.push_back({Tok::kDot, ".", i++});
    } else if (c == '(') {
      out.push_back({Tok::kLParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::kRParen, ")", i++});
    } else {
      throw SyntaxError(std::string("illegal character '") + c + "'", i);
    }
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  Token expect(Tok k) {
    if (!at(k)) {
      throw SyntaxError(std::string("expected ") + describe(k) + ", found " + describe(peek().kind),
                        peek().offset);
    }
    return take();
  }

  void expect_end() {
    if (!at(Tok::kEnd)) {
      throw SyntaxError(std::string("unexpected ") + describe(peek().kind), peek().offset);
    }
  }

  VarRef var_ref() {
    VarRef ref;
    ref.segments.push_back(identifier());
    while (at(Tok::kDot)) {
      take();
      ref.segments.push_back(identifier());
    }
    return ref;
  }

  // or := and ('||' and)*
  Guard disjunction() {
    Guard g = conjunction();
    while (at(Tok::kOr)) {
      take();
      g = Guard::disj(std::move(g), conjunction());
    }
    return g;
  }

  // and := unary ('&&' unary)*
  Guard conjunction() {
    Guard g = unary();
    while (at(Tok::kAnd)) {
      take();
      g = Guard::conj(std::move(g), unary());
    }
    return g;
  }

  Guard unary() {
    if (at(Tok::kNot)) {
      take();
      return Guard::negate(unary());
    }
    if (at(Tok::kLParen)) {
      take();
      Guard g = disjunction();
      expect(Tok::kRParen);
      return g;
    }
    VarRef lhs = var_ref();
    if (at(Tok::kEq)) {
      take();
      return Guard::eq(std::move(lhs), var_ref());
    }
    if (at(Tok::kNeq)) {
      take();
      return Guard::neq(std::move(lhs), var_ref());
    }
    throw SyntaxError("expected '==' or '!=' after operand", peek().offset);
  }

 private:
  std::string identifier() {
    const Token t = expect(Tok::kIdent);
    if (t.text == "else") throw SyntaxError("'else' cannot be combined with other terms", t.offset);
    return t.text;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_id_start(s.front())) return false;
  for (char c : s) {
    if (!is_id_char(c)) return false;
  }
  return true;
}

VarRef parse_var_ref(std::string_view text) {
  if (trim(text).empty()) throw SyntaxError("empty variable reference", 0);
  Parser p(lex(text));
  VarRef ref = p.var_ref();
  p.expect_end();
  return ref;
}

Assignment parse_assignment(std::string_view text) {
  Parser p(lex(text));
  if (p.at(Tok::kEnd)) throw SyntaxError("empty assignment", 0);
  Assignment asg;
  asg.target = p.var_ref();
  p.expect(Tok::kAssign);
  if (p.at(Tok::kEnd)) throw SyntaxError("missing right-hand side", p.peek().offset);
  asg.value = p.var_ref();
  p.expect_end();
  return asg;
}

Guard parse_guard(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) return Guard::empty();
  if (body == "else") return Guard::otherwise();
  Parser p(lex(text));
  Guard g = p.disjunction();
  p.expect_end();
  return g;
}

std::string to_string(const VarRef& ref) {
  std::string out;
  for (std::size_t i = 0; i < ref.segments.size(); ++i) {
    if (i) out += '.';
    out += ref.segments[i];
  }
  return out;
}

std::string to_string(const Assignment& asg) {
  return to_string(asg.target) + " := " + to_string(asg.value);
}

namespace {

int precedence(const Guard& g) {
  switch (g.kind) {
    case Guard::Kind::kOr: return 1;
    case Guard::Kind::kAnd: return 2;
    default: return 3;
  }
}

void print(const Guard& g, std::string& out) {
  using K = Guard::Kind;
  switch (g.kind) {
    case K::kEmpty: return;
    case K::kElse: out += "else"; return;
    case K::kEq: out += to_string(g.lhs) + " == " + to_string(g.rhs); return;
    case K::kNeq: out += to_string(g.lhs) + " != " + to_string(g.rhs); return;
    case K::kNot:
      out += '!';
      if (g.operands[0].kind == K::kNot) {
        print(g.operands[0], out);
      } else {
        out += '(';
        print(g.operands[0], out);
        out += ')';
      }
      return;
    case K::kAnd:
    case K::kOr: {
      const int prec = precedence(g);
      // Left-associative: the left operand may share the precedence level,
      // the right one may not.
      const bool wrap_left = precedence(g.operands[0]) < prec;
      const bool wrap_right = precedence(g.operands[1]) <= prec;
      if (wrap_left) out += '(';
      print(g.operands[0], out);
      if (wrap_left) out += ')';
      out += g.kind == K::kAnd ? " && " : " || ";
      if (wrap_right) out += '(';
      print(g.operands[1], out);
      if (wrap_right) out += ')';
      return;
    }
  }
}

void collect(const Guard& g, std::vector<const VarRef*>& out) {
  if (g.is_comparison()) {
    out.push_back(&g.lhs);
    out.push_back(&g.rhs);
    return;
  }
  for (const Guard& op : g.operands) collect(op, out);
}

}  // namespace

std::string to_string(const Guard& guard) {
  std::string out;
  print(guard, out);
  return out;
}

std::vector<const VarRef*> guard_refs(const Guard& guard) {
  std::vector<const VarRef*> out;
  collect(guard, out);
  return out;
}

}  // namespace ad2mcrl2::expr
