#pragma once

#include <array>
#include <compare>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ad2mcrl2 {

// ---------------------------------------------------------------------------
// Edge labels: P parent, T block-type link, L enumeration link, E reverse
// object-flow visibility. The enumerator order is the tie-break order used by
// resolution.
enum class Label : std::uint8_t { P, T, L, E };

char to_char(Label l);
std::string to_string(const std::vector<Label>& path);

struct ScopeId {
  std::uint32_t value = 0;
  auto operator<=>(const ScopeId&) const = default;
};

// ---------------------------------------------------------------------------
// Semantic types carried by declarations.

struct EnumType {
  std::string id;
  std::string name;
  ScopeId scope;
  bool operator==(const EnumType&) const = default;
};

struct BlockType {
  std::string id;
  std::string name;
  ScopeId scope;
  bool operator==(const BlockType&) const = default;
};

struct ActType {
  std::string id;
  ScopeId scope;
  bool operator==(const ActType&) const = default;
};

using ValueType = std::variant<EnumType, BlockType>;

struct ParamType {
  std::string id;
  std::string name;
  ValueType inner;
  ScopeId scope;
  bool operator==(const ParamType&) const = default;
};

struct BoolType {
  bool operator==(const BoolType&) const = default;
};

using SemanticType = std::variant<EnumType, BlockType, ActType, ParamType, BoolType>;

std::string to_string(const SemanticType& t);
// Value types compare by declaring element id.
bool same_type(const SemanticType& a, const SemanticType& b);
// ENUM / BLOCK scope, or nullopt for ACT / PARAM / BOOL.
std::optional<ScopeId> type_scope(const SemanticType& t);
std::optional<ValueType> as_value_type(const SemanticType& t);
SemanticType widen(const ValueType& t);

// ---------------------------------------------------------------------------

// `origin` is the xmi:id of the model element the declaration stands for.
struct Declaration {
  std::string name;
  SemanticType type;
  std::string origin;
  bool operator==(const Declaration&) const = default;
};

// Regular expression over the label alphabet, compiled to a DFA.
// Syntax: labels P T L E, postfix * + ?, alternation |, parentheses. The
// empty string, "e" and "ε" denote the empty word.
class PathQuery {
 public:
  explicit PathQuery(std::string_view pattern);

  const std::string& pattern() const { return pattern_; }
  int start() const { return 0; }
  // -1 when there is no transition.
  int step(int state, Label l) const { return delta_[static_cast<std::size_t>(state)][static_cast<std::size_t>(l)]; }
  bool accepting(int state) const { return accepting_[static_cast<std::size_t>(state)]; }
  bool matches(const std::vector<Label>& word) const;
  std::size_t state_count() const { return accepting_.size(); }

 private:
  std::string pattern_;
  std::vector<std::array<int, 4>> delta_;
  std::vector<bool> accepting_;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateDeclaration : public GraphError {
 public:
  using GraphError::GraphError;
};

struct Edge {
  ScopeId from;
  Label label;
  ScopeId to;
  bool operator==(const Edge&) const = default;
};

struct Resolution {
  std::vector<Label> path;
  Declaration decl;
  ScopeId scope;  // where decl lives
};

class ScopeGraph {
 public:
  ScopeId fresh_scope();

  // Throws GraphError for unknown scopes, a second outgoing P edge, a P cycle
  // or an E cycle.
  void add_edge(ScopeId from, Label label, ScopeId to);

  // Throws DuplicateDeclaration when `name` is already declared in `scope`.
  void declare(ScopeId scope, std::string name, SemanticType type, std::string origin);

  // Declarations named `name` reachable from `start` along a path whose label
  // word matches `query`, one entry per declaration, ordered by path length
  // and then label order.
  std::vector<Resolution> resolve(ScopeId start, const PathQuery& query,
                                  std::string_view name) const;

  bool contains(ScopeId s) const { return s.value < decls_.size(); }
  std::size_t scope_count() const { return decls_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Declaration>& declarations(ScopeId s) const;
  std::vector<Edge> out_edges(ScopeId s) const;
  ScopeId root() const { return ScopeId{0}; }

  // Every scope reaches the root via P edges only. Empty when the invariant
  // holds, otherwise the offending scopes.
  std::vector<ScopeId> detached_scopes() const;

  // One node per scope, labelled with its declarations.
  std::string to_dot() const;

  bool operator==(const ScopeGraph&) const = default;

 private:
  bool reaches(ScopeId from, Label label, ScopeId to) const;

  std::vector<std::vector<Declaration>> decls_;
  std::vector<std::vector<std::size_t>> out_;  // scope -> indices into edges_
  std::vector<Edge> edges_;
};

}  // namespace ad2mcrl2
