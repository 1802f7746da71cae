#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Abstract syntax for the emitted mCRL2 subset.
namespace ad2mcrl2::mcrl2 {

struct Expr {
  enum class Kind { kName, kApply, kIf, kEq, kNeq, kNot, kAnd, kOr, kTrue };

  Kind kind = Kind::kTrue;
  std::string name;         // kName, kApply
  std::vector<Expr> args;   // operands in source order

  static Expr true_() { return {}; }
  static Expr var(std::string n) { return {Kind::kName, std::move(n), {}}; }
  // Nullary applications collapse to names.
  static Expr apply(std::string f, std::vector<Expr> xs) {
    if (xs.empty()) return var(std::move(f));
    return {Kind::kApply, std::move(f), std::move(xs)};
  }
  static Expr if_(Expr c, Expr t, Expr e) { return {Kind::kIf, {}, {std::move(c), std::move(t), std::move(e)}}; }
  static Expr eq(Expr a, Expr b) { return {Kind::kEq, {}, {std::move(a), std::move(b)}}; }
  static Expr neq(Expr a, Expr b) { return {Kind::kNeq, {}, {std::move(a), std::move(b)}}; }
  static Expr not_(Expr a) { return {Kind::kNot, {}, {std::move(a)}}; }
  static Expr and_(Expr a, Expr b) { return {Kind::kAnd, {}, {std::move(a), std::move(b)}}; }
  static Expr or_(Expr a, Expr b) { return {Kind::kOr, {}, {std::move(a), std::move(b)}}; }

  bool is_binary() const {
    return kind == Kind::kEq || kind == Kind::kNeq || kind == Kind::kAnd || kind == Kind::kOr;
  }

  bool operator==(const Expr&) const = default;
};

struct Projection {
  std::string name;
  std::string sort;
  bool operator==(const Projection&) const = default;
};

struct Constructor {
  std::string name;
  std::vector<Projection> projections;
  bool operator==(const Constructor&) const = default;
};

// `name = struct c1 | c2(p : S) ...;`
struct SortDecl {
  std::string name;
  std::vector<Constructor> constructors;
  bool operator==(const SortDecl&) const = default;
};

struct MapDecl {
  std::string name;
  std::vector<std::string> domain;
  std::string codomain;
  bool operator==(const MapDecl&) const = default;
};

struct VarDecl {
  std::string name;
  std::string sort;
  bool operator==(const VarDecl&) const = default;
};

struct EqnDecl {
  std::vector<VarDecl> vars;
  Expr lhs;
  Expr rhs;
  bool operator==(const EqnDecl&) const = default;
};

struct ActDecl {
  std::string name;
  std::vector<std::string> sorts;
  bool operator==(const ActDecl&) const = default;
};

struct Action {
  std::string name;
  std::vector<Expr> args;
  bool operator==(const Action&) const = default;
};

// `P`, `P(e1, e2)` or `P(x = e1, y = e2)`.
struct ProcCall {
  std::string name;
  std::vector<Expr> args;
  std::vector<std::pair<std::string, Expr>> updates;
  bool operator==(const ProcCall&) const = default;
};

// `sum vars . condition -> actions . recursion`; an empty action list is tau.
struct ProcBody {
  std::vector<VarDecl> sum;
  Expr condition;
  std::vector<Action> actions;
  ProcCall next;
  bool operator==(const ProcBody&) const = default;
};

struct ProcDecl {
  std::string name;
  std::vector<VarDecl> params;
  ProcBody body;
  bool operator==(const ProcDecl&) const = default;
};

struct Spec {
  std::vector<SortDecl> sorts;
  std::vector<MapDecl> maps;
  std::vector<EqnDecl> eqns;
  std::vector<ActDecl> acts;
  std::vector<ProcDecl> procs;
  std::optional<ProcCall> init;
  bool operator==(const Spec&) const = default;
};

std::string to_string(const Expr& e);
std::string pretty_print(const Spec& spec);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses the subset written by pretty_print. Also accepts free-form
// whitespace, `if (`, unparenthesised operands and comma-separated sum and
// var lists.
Spec parse_mcrl2_subset(std::string_view text);
Expr parse_expr(std::string_view text);

// Right-nested && chain flattened into its conjuncts.
std::vector<Expr> conjuncts(const Expr& e);

}  // namespace ad2mcrl2::mcrl2
