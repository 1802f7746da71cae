#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ad2mcrl2/check/diagnostic.hpp"
#include "ad2mcrl2/check/model_index.hpp"
#include "ad2mcrl2/expr/ast.hpp"
#include "ad2mcrl2/scope_graph.hpp"
#include "ad2mcrl2/xmi/ast.hpp"

namespace ad2mcrl2::check {

// Query used for the value side of assignments and for guard operands:
// backwards along object flows, then optionally through type links into an
// enumeration scope.
inline constexpr const char* kValueQuery = "E*(T*L)?";
// Query used to resolve type references to the root scope.
inline constexpr const char* kTypeQuery = "P*";

// Declarations chosen for each segment of a VarRef.
struct ResolvedRef {
  std::vector<Declaration> steps;

  const Declaration& head() const { return steps.front(); }
  const SemanticType& type() const { return steps.back().type; }
};

struct FlowTyping {
  std::optional<ResolvedRef> target;
  std::optional<ResolvedRef> value;
  std::vector<ResolvedRef> guard_refs;  // same order as expr::guard_refs
};

enum class ActivityKind { kLeaf, kGlue };

// Decision chain of a leaf activity, in evaluation order.
struct LeafShape {
  std::string output;               // ActivityParameter id
  std::vector<std::string> inputs;  // ActivityParameter ids, declaration order
  std::vector<std::string> guarded_flows;
  std::string default_flow;
};

struct OutputBinding {
  std::optional<std::string> whole;           // flow id binding `out := v`
  std::map<std::string, std::string> fields;  // property id -> flow id binding `out.f := v`
};

struct GlueShape {
  std::vector<std::string> inputs;      // ActivityParameter ids
  std::vector<std::string> outputs;     // ActivityParameter ids
  std::vector<std::string> attributes;  // Attribute ids
  std::vector<std::string> calls;       // CallBehaviour ids, document order
  std::vector<std::string> call_order;  // topological, ties by document order
  std::vector<std::string> writes;      // WriteVariable ids, document order
  std::map<std::string, std::string> pin_binding;  // input pin id -> flow id
  std::map<std::string, OutputBinding> output_binding;
};

// Result of a successful check. Copies share the underlying document.
struct TypedModel {
  std::shared_ptr<const xmi::XmiDocument> doc;
  std::shared_ptr<const ModelIndex> index;
  ScopeGraph graph;
  std::map<std::string, ScopeId> elem_scope;
  std::map<std::string, SemanticType> elem_type;
  std::map<std::string, FlowTyping> flow_typing;
  std::map<std::string, ActivityKind> activity_kind;
  std::map<std::string, LeafShape> leaves;
  std::map<std::string, GlueShape> glues;

  // Value type of a parameter, pin, attribute, property or literal. Throws
  // std::out_of_range for other ids.
  ValueType value_type(const std::string& element_id) const;
  ScopeId scope_of(const std::string& element_id) const { return elem_scope.at(element_id); }
};

struct CheckResult {
  std::optional<TypedModel> model;  // present iff there are no errors
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

struct CheckOptions {
  // Activity name checked and emitted as a glue process even when it has no
  // calls, writes or attributes.
  std::optional<std::string> entry;
};

CheckResult check_document(xmi::XmiDocument doc, const CheckOptions& options = {});

// Resolves `ref` from `scope`: the head with `head_query`, every further
// segment with an empty query in the scope of the previous segment's block
// type. On failure returns nullopt and sets `error`.
std::optional<ResolvedRef> resolve_ref(const ScopeGraph& graph, ScopeId scope,
                                       const PathQuery& head_query, const expr::VarRef& ref,
                                       std::string& error);

// Type of a guard expression; BOOL for well-typed comparisons and
// connectives. Records resolved operands in `refs` (guard_refs order).
std::optional<SemanticType> type_of_expr(const ScopeGraph& graph, ScopeId scope,
                                         const PathQuery& head_query, const expr::Guard& guard,
                                         std::vector<ResolvedRef>& refs, std::string& error);

}  // namespace ad2mcrl2::check
