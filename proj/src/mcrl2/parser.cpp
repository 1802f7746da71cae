#include <cctype>
#include <set>

#include "ad2mcrl2/mcrl2/ast.hpp"

namespace ad2mcrl2::mcrl2 {

namespace {

struct Tok {
  enum Kind { kId, kPunct, kEnd } kind;
  std::string text;
  std::size_t offset;
};

bool id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Tok> lex(std::string_view s) {
  static const char* two[] = {"==", "!=", "&&", "||", "->"};
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '%') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (id_start(c)) {
      const std::size_t b = i;
      while (i < s.size() && id_char(s[i])) ++i;
      out.push_back({Tok::kId, std::string(s.substr(b, i - b)), b});
    } else {
      bool done = false;
      for (const char* t : two) {
        if (s.substr(i, 2) == t) {
          out.push_back({Tok::kPunct, t, i});
          i += 2;
          done = true;
          break;
        }
      }
      if (done) continue;
      if (std::string_view("!(),:;#|.=").find(c) == std::string_view::npos) {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      out.push_back({Tok::kPunct, std::string(1, c), i});
      ++i;
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

const std::set<std::string> kSections = {"sort", "map", "var", "eqn", "act", "proc", "init"};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Spec spec() {
    Spec out;
    std::vector<VarDecl> vars;  // pending var block for the next eqn section
    while (peek().kind != Tok::kEnd) {
      const std::string kw = ident();
      if (!kSections.count(kw)) fail("section keyword expected, got '" + kw + "'");
      if (kw != "init" && !at_decl()) fail("empty '" + kw + "' section");
      if (kw == "sort") {
        while (at_decl()) out.sorts.push_back(sort_decl());
      } else if (kw == "map") {
        while (at_decl()) out.maps.push_back(map_decl());
      } else if (kw == "var") {
        vars.clear();
        while (at_decl()) {
          auto more = var_list(";");
          vars.insert(vars.end(), more.begin(), more.end());
        }
      } else if (kw == "eqn") {
        while (at_decl()) {
          EqnDecl e;
          e.vars = vars;
          e.lhs = expr();
          expect("=");
          e.rhs = expr();
          expect(";");
          out.eqns.push_back(std::move(e));
        }
        vars.clear();
      } else if (kw == "act") {
        while (at_decl()) act_decls(out.acts);
      } else if (kw == "proc") {
        while (at_decl()) out.procs.push_back(proc_decl());
      } else {
        out.init = proc_call();
        expect(";");
      }
    }
    return out;
  }

  Expr whole_expr() {
    Expr e = expr();
    if (peek().kind != Tok::kEnd) fail("trailing input");
    return e;
  }

 private:
  const Tok& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool is(const char* p, std::size_t k = 0) const {
    return peek(k).kind == Tok::kPunct && peek(k).text == p;
  }
  bool is_word(const char* w) const { return peek().kind == Tok::kId && peek().text == w; }
  bool at_decl() const { return peek().kind == Tok::kId && !kSections.count(peek().text); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().offset); }

  void expect(const char* p) {
    if (!is(p)) fail(std::string("expected '") + p + "'");
    ++pos_;
  }
  bool accept(const char* p) {
    if (!is(p)) return false;
    ++pos_;
    return true;
  }
  std::string ident() {
    if (peek().kind != Tok::kId) fail("identifier expected");
    return toks_[pos_++].text;
  }
  void keyword(const char* w) {
    if (!is_word(w)) fail(std::string("expected '") + w + "'");
    ++pos_;
  }

  SortDecl sort_decl() {
    SortDecl s;
    s.name = ident();
    expect("=");
    keyword("struct");
    do {
      Constructor c;
      c.name = ident();
      if (accept("(")) {
        do {
          Projection p;
          p.name = ident();
          expect(":");
          p.sort = ident();
          c.projections.push_back(std::move(p));
        } while (accept(","));
        expect(")");
      }
      s.constructors.push_back(std::move(c));
    } while (accept("|"));
    expect(";");
    return s;
  }

  MapDecl map_decl() {
    MapDecl m;
    m.name = ident();
    expect(":");
    std::vector<std::string> sorts{ident()};
    while (accept("#")) sorts.push_back(ident());
    if (accept("->")) {
      m.domain = std::move(sorts);
      m.codomain = ident();
    } else if (sorts.size() == 1) {
      m.codomain = sorts[0];
    } else {
      fail("expected '->'");
    }
    expect(";");
    return m;
  }

  // `x, y : S, z : T` up to `end`.
  std::vector<VarDecl> var_list(const char* end) {
    std::vector<VarDecl> out;
    while (true) {
      std::vector<std::string> names{ident()};
      while (accept(",")) names.push_back(ident());
      expect(":");
      const std::string sort = ident();
      for (auto& n : names) out.push_back({std::move(n), sort});
      if (accept(end)) return out;
      expect(",");
    }
  }

  void act_decls(std::vector<ActDecl>& out) {
    std::vector<std::string> names{ident()};
    while (accept(",")) names.push_back(ident());
    std::vector<std::string> sorts;
    if (accept(":")) {
      sorts.push_back(ident());
      while (accept("#")) sorts.push_back(ident());
    }
    expect(";");
    for (auto& n : names) out.push_back({std::move(n), sorts});
  }

  ProcDecl proc_decl() {
    ProcDecl p;
    p.name = ident();
    if (accept("(")) {
      while (true) {
        std::vector<std::string> names{ident()};
        while (accept(",")) names.push_back(ident());
        expect(":");
        const std::string sort = ident();
        for (auto& n : names) p.params.push_back({std::move(n), sort});
        if (accept(")")) break;
        expect(",");
      }
    }
    expect("=");
    if (is_word("sum")) {
      ++pos_;
      p.body.sum = var_list(".");
    }
    p.body.condition = expr();
    expect("->");
    if (is_word("tau")) {
      ++pos_;
    } else {
      do {
        Action a;
        a.name = ident();
        if (accept("(")) {
          a.args = expr_list();
        }
        p.body.actions.push_back(std::move(a));
      } while (accept("|"));
    }
    expect(".");
    p.body.next = proc_call();
    expect(";");
    return p;
  }

  ProcCall proc_call() {
    ProcCall c;
    c.name = ident();
    if (!accept("(")) return c;
    if (peek().kind == Tok::kId && is("=", 1)) {
      do {
        std::string n = ident();
        expect("=");
        c.updates.emplace_back(std::move(n), expr());
      } while (accept(","));
      expect(")");
    } else {
      c.args = expr_list();
    }
    return c;
  }

  // After '(' up to and including ')'.
  std::vector<Expr> expr_list() {
    std::vector<Expr> out;
    do out.push_back(expr());
    while (accept(","));
    expect(")");
    return out;
  }

  Expr expr() {
    Expr lhs = conj();
    if (accept("||")) return Expr::or_(std::move(lhs), expr());
    return lhs;
  }
  Expr conj() {
    Expr lhs = cmp();
    if (accept("&&")) return Expr::and_(std::move(lhs), conj());
    return lhs;
  }
  Expr cmp() {
    Expr lhs = unary();
    if (accept("==")) return Expr::eq(std::move(lhs), unary());
    if (accept("!=")) return Expr::neq(std::move(lhs), unary());
    return lhs;
  }
  Expr unary() {
    if (accept("!")) return Expr::not_(unary());
    return primary();
  }
  Expr primary() {
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    if (is_word("true")) {
      ++pos_;
      return Expr::true_();
    }
    if (is_word("if") && is("(", 1)) {
      pos_ += 2;
      Expr c = expr();
      expect(",");
      Expr t = expr();
      expect(",");
      Expr e = expr();
      expect(")");
      return Expr::if_(std::move(c), std::move(t), std::move(e));
    }
    std::string name = ident();
    if (accept("(")) return Expr::apply(std::move(name), expr_list());
    return Expr::var(std::move(name));
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Spec parse_mcrl2_subset(std::string_view text) { return Parser(text).spec(); }

Expr parse_expr(std::string_view text) { return Parser(text).whole_expr(); }

}  // namespace ad2mcrl2::mcrl2
