#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ad2mcrl2/check/checker.hpp"
#include "ad2mcrl2/mcrl2/ast.hpp"
#include "ad2mcrl2/mcrl2/names.hpp"

namespace ad2mcrl2::mcrl2 {

// Emits from a checked model; all names come from the table, nothing is
// resolved again.
class Emitter {
 public:
  explicit Emitter(const check::TypedModel& tm);
  Emitter(const check::TypedModel& tm, NameTable names);

  const NameTable& names() const { return names_; }

  std::string sort_name(const ValueType& t) const;
  std::string sort_of(const std::string& element_id) const;

  // ENUM and BLOCK declarations of the root scope, in document order.
  std::vector<SortDecl> emit_sorts() const;
  std::pair<MapDecl, EqnDecl> emit_leaf_map(const xmi::Activity& a) const;
  std::pair<std::vector<ActDecl>, ProcDecl> emit_glue_process(const xmi::Activity& a) const;
  // Attribute defaults of glue activity `a`, positionally.
  ProcCall initial_call(const xmi::Activity& a) const;

  // Sorts, every leaf map, every glue process. `entry` names the glue
  // activity to instantiate in init; without it the only glue activity is
  // used when there is exactly one.
  Spec assemble_spec(const std::optional<std::string>& entry = std::nullopt) const;

  // Value side of the assignment on `flow_id`, with dot access compiled to
  // projections.
  Expr flow_value(const std::string& flow_id) const;
  Expr guard_expr(const std::string& flow_id) const;
  Expr compile_ref(const check::ResolvedRef& ref) const;

 private:
  const check::TypedModel& tm_;
  NameTable names_;
};

}  // namespace ad2mcrl2::mcrl2
