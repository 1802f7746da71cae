#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ad2mcrl2::expr {

// Dotted reference `a.b.c`. Every segment matches [a-zA-Z_][a-zA-Z_0-9']*.
struct VarRef {
  std::vector<std::string> segments;

  bool operator==(const VarRef&) const = default;
};

// `target := value` written as a flow name.
struct Assignment {
  VarRef target;
  VarRef value;

  bool operator==(const Assignment&) const = default;
};

// Flow guard. Else and Empty only ever occur as a whole guard.
struct Guard {
  enum class Kind { kEmpty, kElse, kEq, kNeq, kNot, kAnd, kOr };

  Kind kind = Kind::kEmpty;
  VarRef lhs;                   // kEq / kNeq
  VarRef rhs;                   // kEq / kNeq
  std::vector<Guard> operands;  // kNot: 1, kAnd / kOr: 2

  static Guard empty() { return {}; }
  static Guard otherwise() { return {Kind::kElse, {}, {}, {}}; }
  static Guard eq(VarRef a, VarRef b) { return {Kind::kEq, std::move(a), std::move(b), {}}; }
  static Guard neq(VarRef a, VarRef b) { return {Kind::kNeq, std::move(a), std::move(b), {}}; }
  static Guard negate(Guard g) { return {Kind::kNot, {}, {}, {std::move(g)}}; }
  static Guard conj(Guard a, Guard b) { return {Kind::kAnd, {}, {}, {std::move(a), std::move(b)}}; }
  static Guard disj(Guard a, Guard b) { return {Kind::kOr, {}, {}, {std::move(a), std::move(b)}}; }

  bool is_comparison() const { return kind == Kind::kEq || kind == Kind::kNeq; }

  bool operator==(const Guard&) const = default;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

bool is_identifier(std::string_view s);

VarRef parse_var_ref(std::string_view text);
Assignment parse_assignment(std::string_view text);
Guard parse_guard(std::string_view text);

std::string to_string(const VarRef& ref);
std::string to_string(const Assignment& asg);
// Canonical text; parse_guard(to_string(g)) == g.
std::string to_string(const Guard& guard);

// Comparison leaves of a guard in left-to-right order.
std::vector<const VarRef*> guard_refs(const Guard& guard);

}  // namespace ad2mcrl2::expr
