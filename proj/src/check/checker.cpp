#include "ad2mcrl2/check/checker.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ad2mcrl2::check {

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string type_name(const SemanticType& t) {
  if (const auto* e = std::get_if<EnumType>(&t)) return e->name;
  if (const auto* b = std::get_if<BlockType>(&t)) return b->name;
  return to_string(t);
}

bool is_value(const SemanticType& t) {
  return std::holds_alternative<EnumType>(t) || std::holds_alternative<BlockType>(t);
}

}  // namespace

ValueType TypedModel::value_type(const std::string& element_id) const {
  const SemanticType& t = elem_type.at(element_id);
  if (const auto* p = std::get_if<ParamType>(&t)) return p->inner;
  if (auto v = as_value_type(t)) return *v;
  throw std::out_of_range("element " + element_id + " has no value type");
}

std::optional<ResolvedRef> resolve_ref(const ScopeGraph& graph, ScopeId scope,
                                       const PathQuery& head_query, const expr::VarRef& ref,
                                       std::string& error) {
  if (ref.segments.empty()) {
    error = "empty reference";
    return std::nullopt;
  }
  ResolvedRef out;
  const auto hits = graph.resolve(scope, head_query, ref.segments[0]);
  if (hits.empty()) {
    error = "unresolved name " + quote(ref.segments[0]);
    return std::nullopt;
  }
  if (hits.size() > 1) {
    error = "ambiguous name " + quote(ref.segments[0]) + " (" + std::to_string(hits.size()) +
            " declarations)";
    return std::nullopt;
  }
  out.steps.push_back(hits[0].decl);
  static const PathQuery local("");
  for (std::size_t i = 1; i < ref.segments.size(); ++i) {
    const SemanticType& prev = out.steps.back().type;
    const std::string& owner = ref.segments[i - 1];
    if (std::holds_alternative<EnumType>(prev)) {
      error = "dot access on enumeration value " + quote(owner);
      return std::nullopt;
    }
    const auto* block = std::get_if<BlockType>(&prev);
    if (!block) {
      error = quote(owner) + " does not denote a value";
      return std::nullopt;
    }
    const auto fields = graph.resolve(block->scope, local, ref.segments[i]);
    if (fields.size() != 1) {
      error = "block " + block->name + " has no property " + quote(ref.segments[i]);
      return std::nullopt;
    }
    out.steps.push_back(fields[0].decl);
  }
  if (!is_value(out.type())) {
    error = quote(expr::to_string(ref)) + " does not denote a value";
    return std::nullopt;
  }
  return out;
}

std::optional<SemanticType> type_of_expr(const ScopeGraph& graph, ScopeId scope,
                                         const PathQuery& head_query, const expr::Guard& guard,
                                         std::vector<ResolvedRef>& refs, std::string& error) {
  using K = expr::Guard::Kind;
  switch (guard.kind) {
    case K::kEmpty:
    case K::kElse:
      error = "guard is not an expression";
      return std::nullopt;
    case K::kEq:
    case K::kNeq: {
      auto lhs = resolve_ref(graph, scope, head_query, guard.lhs, error);
      if (!lhs) return std::nullopt;
      auto rhs = resolve_ref(graph, scope, head_query, guard.rhs, error);
      if (!rhs) return std::nullopt;
      if (!same_type(lhs->type(), rhs->type())) {
        error = "cannot compare " + quote(expr::to_string(guard.lhs)) + " : " +
                type_name(lhs->type()) + " with " + quote(expr::to_string(guard.rhs)) + " : " +
                type_name(rhs->type());
        return std::nullopt;
      }
      refs.push_back(std::move(*lhs));
      refs.push_back(std::move(*rhs));
      return BoolType{};
    }
    case K::kNot:
    case K::kAnd:
    case K::kOr:
      for (const auto& op : guard.operands) {
        auto t = type_of_expr(graph, scope, head_query, op, refs, error);
        if (!t) return std::nullopt;
        if (!std::holds_alternative<BoolType>(*t)) {
          error = "boolean operand expected";
          return std::nullopt;
        }
      }
      return BoolType{};
  }
  error = "unknown guard";
  return std::nullopt;
}

namespace {

struct ParamSplit {
  std::vector<const xmi::ActivityParameter*> inputs;
  std::vector<const xmi::ActivityParameter*> outputs;
};

// A parameter is an output when some flow of the activity targets it.
ParamSplit split_params(const xmi::Activity& a) {
  std::set<std::string> targets;
  for (const auto& f : a.flows) targets.insert(f.target);
  ParamSplit out;
  for (const auto& n : a.nodes) {
    if (const auto* p = std::get_if<xmi::ActivityParameter>(&n)) {
      (targets.count(p->id) ? out.outputs : out.inputs).push_back(p);
    }
  }
  return out;
}

class Checker {
 public:
  Checker(xmi::XmiDocument doc, const CheckOptions& options)
      : doc_(std::make_shared<const xmi::XmiDocument>(std::move(doc))),
        index_(std::make_shared<const ModelIndex>(*doc_)),
        options_(options),
        type_query_(kTypeQuery),
        value_query_(kValueQuery),
        local_query_(""),
        parent_query_("P") {}

  CheckResult run() {
    tm_.doc = doc_;
    tm_.index = index_;
    const ScopeId root = graph().fresh_scope();
    for (const auto* e : index_->enumerations()) check_enumeration(*e, root);
    for (const auto* b : index_->blocks()) declare_block(*b, root);
    for (const auto* a : index_->activities()) declare_activity(*a, root);
    for (const auto* b : index_->blocks()) check_block(*b);
    check_block_recursion();
    for (const auto* a : index_->activities()) classify(*a);
    for (const auto* a : index_->activities()) scope_activity(*a);
    for (const auto* a : index_->activities()) check_activity(*a);

    CheckResult result;
    sort_diagnostics(diags_);
    result.diagnostics = std::move(diags_);
    if (!has_errors(result.diagnostics)) result.model = std::move(tm_);
    return result;
  }

 private:
  ScopeGraph& graph() { return tm_.graph; }

  void error(const std::string& rule, const std::string& id, const std::string& message) {
    Diagnostic d;
    d.rule = rule;
    d.message = message;
    const auto it = doc_->spans.find(id);
    d.span = it != doc_->spans.end() ? it->second : SourceSpan{0, 0, id};
    if (!d.span.xmi_id) d.span.xmi_id = id;
    diags_.push_back(std::move(d));
  }

  ScopeId child_scope(ScopeId parent) {
    const ScopeId s = graph().fresh_scope();
    graph().add_edge(s, Label::P, parent);
    return s;
  }

  bool declare(const std::string& rule, const std::string& id, ScopeId scope, const std::string& name,
               SemanticType type, const std::string& origin) {
    try {
      graph().declare(scope, name, std::move(type), origin);
      return true;
    } catch (const DuplicateDeclaration&) {
      error(rule, id, "duplicate declaration of " + quote(name));
      return false;
    }
  }

  // Resolves a type reference with P* and requires an ENUM or BLOCK.
  std::optional<ValueType> resolve_type(const std::string& rule, const std::string& id, ScopeId scope,
                                        const std::string& type_ref) {
    if (type_ref.empty()) {
      error(rule, id, "missing type reference");
      return std::nullopt;
    }
    const auto hits = graph().resolve(scope, type_query_, type_ref);
    if (hits.empty()) {
      error(rule, id, "unresolved type reference " + quote(type_ref));
      return std::nullopt;
    }
    if (hits.size() > 1) {
      error(rule, id, "ambiguous type reference " + quote(type_ref));
      return std::nullopt;
    }
    auto v = as_value_type(hits[0].decl.type);
    if (!v) error(rule, id, "type reference " + quote(type_ref) + " is not an enumeration or block");
    return v;
  }

  void link_type(ScopeId from, const ValueType& t) {
    if (const auto* e = std::get_if<EnumType>(&t)) {
      graph().add_edge(from, Label::L, e->scope);
    } else {
      graph().add_edge(from, Label::T, std::get<BlockType>(t).scope);
    }
  }

  // --- pass A -------------------------------------------------------------

  void check_enumeration(const xmi::Enumeration& e, ScopeId root) {
    const ScopeId s = child_scope(root);
    const EnumType t{e.id, e.name, s};
    tm_.elem_scope[e.id] = s;
    tm_.elem_type[e.id] = t;
    declare("Enumeration", e.id, root, e.id, t, e.id);
    if (e.literals.empty()) error("Enumeration", e.id, "enumeration " + e.name + " has no literals");
    for (const auto& lit : e.literals) {
      tm_.elem_type[lit.id] = t;
      if (!expr::is_identifier(lit.name)) {
        error("Enumeration", lit.id, "literal name " + quote(lit.name) + " is not an identifier");
        continue;
      }
      if (!declare("Enumeration", lit.id, s, lit.name, t, lit.id)) continue;
    }
  }

  void declare_block(const xmi::Block& b, ScopeId root) {
    const ScopeId s = child_scope(root);
    const BlockType t{b.id, b.name, s};
    tm_.elem_scope[b.id] = s;
    tm_.elem_type[b.id] = t;
    declare("Block", b.id, root, b.id, t, b.id);
  }

  void declare_activity(const xmi::Activity& a, ScopeId root) {
    const ScopeId s = child_scope(root);
    tm_.elem_scope[a.id] = s;
    tm_.elem_type[a.id] = ActType{a.id, s};
    declare("Activity", a.id, root, a.id, ActType{a.id, s}, a.id);
  }

  // --- pass B -------------------------------------------------------------

  void check_block(const xmi::Block& b) {
    const ScopeId s = tm_.elem_scope.at(b.id);
    for (const auto& p : b.properties) {
      if (!expr::is_identifier(p.name)) {
        error("Property", p.id, "property name " + quote(p.name) + " is not an identifier");
        continue;
      }
      auto t = resolve_type("Property", p.id, s, p.type);
      if (!t) continue;
      link_type(s, *t);
      tm_.elem_type[p.id] = widen(*t);
      declare("Property", p.id, s, p.name, widen(*t), p.id);
    }
  }

  // A block containing itself, directly or not, has no finite values.
  void check_block_recursion() {
    std::map<std::string, int> state;
    std::function<bool(const xmi::Block&)> visit = [&](const xmi::Block& b) {
      int& st = state[b.id];
      if (st == 1) return true;
      if (st == 2) return false;
      st = 1;
      for (const auto& p : b.properties) {
        if (const auto* inner = index_->block(p.type); inner && visit(*inner)) {
          state[b.id] = 2;
          return true;
        }
      }
      state[b.id] = 2;
      return false;
    };
    for (const auto* b : index_->blocks()) {
      state.clear();
      if (visit(*b)) error("Block", b->id, "block " + b->name + " contains itself");
    }
  }

  // --- pass C -------------------------------------------------------------

  void classify(const xmi::Activity& a) {
    bool glue = !a.attributes.empty() || (options_.entry && *options_.entry == a.name);
    for (const auto& n : a.nodes) {
      if (std::holds_alternative<xmi::CallBehaviour>(n) ||
          std::holds_alternative<xmi::WriteVariable>(n)) {
        glue = true;
      }
    }
    tm_.activity_kind[a.id] = glue ? ActivityKind::kGlue : ActivityKind::kLeaf;
  }

  void check_pin(const xmi::Pin& pin, ScopeId s_a) {
    const ScopeId s = child_scope(s_a);
    tm_.elem_scope[pin.id] = s;
    if (!expr::is_identifier(pin.name)) {
      error("Pin", pin.id, "pin name " + quote(pin.name) + " is not an identifier");
      return;
    }
    auto t = resolve_type("Pin", pin.id, s, pin.type);
    if (!t) return;
    link_type(s, *t);
    tm_.elem_type[pin.id] = ParamType{pin.id, pin.name, *t, s};
    declare("Pin", pin.id, s, pin.name, widen(*t), pin.id);
  }

  // Attributes, parameters, nodes and pins of every activity are scoped
  // before any flow is checked, so calls can see their callee's signature.
  void scope_activity(const xmi::Activity& a) {
    const ScopeId s_a = tm_.elem_scope.at(a.id);

    for (const auto& attr : a.attributes) {
      const ScopeId s = child_scope(s_a);
      tm_.elem_scope[attr.id] = s;
      if (!expr::is_identifier(attr.name)) {
        error("Attribute", attr.id, "attribute name " + quote(attr.name) + " is not an identifier");
        continue;
      }
      auto t = resolve_type("Attribute", attr.id, s, attr.type);
      if (!t) continue;
      const auto* et = std::get_if<EnumType>(&*t);
      if (!et) {
        error("Attribute", attr.id, "attribute " + attr.name + " must have an enumeration type");
        continue;
      }
      link_type(s, *t);
      tm_.elem_type[attr.id] = *et;
      declare("Attribute", attr.id, s, attr.name, *et, attr.id);
      declare("Attribute", attr.id, s_a, attr.name, *et, attr.id);
      if (graph().resolve(et->scope, local_query_, attr.default_value).size() != 1) {
        error("Attribute", attr.id,
              "default value " + quote(attr.default_value) + " is not a literal of " + et->name);
      }
    }

    for (const auto& n : a.nodes) {
      const std::string& id = xmi::node_id(n);
      if (const auto* p = std::get_if<xmi::ActivityParameter>(&n)) {
        const ScopeId s = child_scope(s_a);
        tm_.elem_scope[id] = s;
        if (!expr::is_identifier(p->name)) {
          error("ActivityParameter", id, "parameter name " + quote(p->name) + " is not an identifier");
          continue;
        }
        auto t = resolve_type("ActivityParameter", id, s, p->type);
        if (!t) continue;
        link_type(s, *t);
        const ParamType pt{id, p->name, *t, s};
        tm_.elem_type[id] = pt;
        declare("ActivityParameter", id, s, p->name, widen(*t), id);
        declare("ActivityParameter", id, s_a, id, pt, id);
        continue;
      }
      const ScopeId s = child_scope(s_a);
      tm_.elem_scope[id] = s;
      if (const auto* call = std::get_if<xmi::CallBehaviour>(&n)) {
        for (const auto& pin : call->pins) check_pin(pin, s_a);
        const auto hits = graph().resolve(s, type_query_, call->behaviour);
        if (hits.size() != 1 || !std::holds_alternative<ActType>(hits[0].decl.type)) {
          error("CallBehaviour", id,
                "behaviour reference " + quote(call->behaviour) + " does not name an activity");
        } else {
          tm_.elem_type[id] = hits[0].decl.type;
        }
      } else if (const auto* wv = std::get_if<xmi::WriteVariable>(&n)) {
        check_pin(wv->pin, s_a);
      }
    }
  }

  void check_activity(const xmi::Activity& a) {
    const ScopeId s_a = tm_.elem_scope.at(a.id);

    // Flow scopes and E edges first, so that every E* query below sees the
    // whole diagram.
    for (const auto& f : a.flows) {
      const ScopeId s_f = child_scope(s_a);
      tm_.elem_scope[f.id] = s_f;
      if (f.kind == xmi::FlowKind::kControl) {
        if (f.assignment) error("Assignment", f.id, "control flows cannot carry an assignment");
        continue;
      }
      const auto src = endpoint_scope(a, f.source);
      const auto dst = endpoint_scope(a, f.target);
      if (!src || !dst) {
        error("ObjectFlow", f.id, "object flow endpoint is not a value node of activity " + a.name);
        continue;
      }
      try {
        graph().add_edge(s_f, Label::E, *src);
        graph().add_edge(*dst, Label::E, s_f);
      } catch (const GraphError&) {
        error("ObjectFlow", f.id, "object flows form a cycle");
      }
    }

    for (const auto& f : a.flows) {
      if (f.kind != xmi::FlowKind::kObject) continue;
      const auto src = endpoint_scope(a, f.source);
      const auto dst = endpoint_scope(a, f.target);
      if (!src || !dst) continue;
      FlowTyping& ft = tm_.flow_typing[f.id];
      if (f.assignment) {
        std::string err;
        ft.target = resolve_ref(graph(), *dst, local_query_, f.assignment->target, err);
        if (!ft.target) error("Assignment", f.id, "target of " + quote(expr::to_string(*f.assignment)) + ": " + err);
        ft.value = resolve_ref(graph(), *src, value_query_, f.assignment->value, err);
        // A bare literal of the target's own enumeration is always in reach,
        // even when no input carries that enumeration.
        if (!ft.value && ft.target && f.assignment->value.segments.size() == 1) {
          if (const auto* et = std::get_if<EnumType>(&ft.target->type())) {
            std::string ignored;
            ft.value = resolve_ref(graph(), et->scope, local_query_, f.assignment->value, ignored);
          }
        }
        if (!ft.value) error("Assignment", f.id, "value of " + quote(expr::to_string(*f.assignment)) + ": " + err);
        if (ft.target && ft.value && !same_type(ft.target->type(), ft.value->type())) {
          error("Assignment", f.id,
                "cannot assign " + type_name(ft.value->type()) + " to " +
                    quote(expr::to_string(f.assignment->target)) + " : " + type_name(ft.target->type()));
        }
      }
      if (f.guard_expr.kind != expr::Guard::Kind::kEmpty && f.guard_expr.kind != expr::Guard::Kind::kElse) {
        std::string err;
        if (!type_of_expr(graph(), *src, value_query_, f.guard_expr, ft.guard_refs, err)) {
          error("Guard", f.id, "guard " + quote(expr::to_string(f.guard_expr)) + ": " + err);
        }
      }
    }

    if (tm_.activity_kind.at(a.id) == ActivityKind::kLeaf) {
      check_leaf(a);
    } else {
      check_glue(a);
    }
  }

  // Scope of a node, pin or attribute of `a` that can carry object flows.
  std::optional<ScopeId> endpoint_scope(const xmi::Activity& a, const std::string& id) const {
    if (const auto* n = index_->node(id)) {
      if (n->activity != &a) return std::nullopt;
      if (std::holds_alternative<xmi::ActivityInitial>(*n->node) ||
          std::holds_alternative<xmi::ActivityFinal>(*n->node) ||
          std::holds_alternative<xmi::CallBehaviour>(*n->node) ||
          std::holds_alternative<xmi::WriteVariable>(*n->node)) {
        return std::nullopt;
      }
    } else if (const auto* p = index_->pin(id)) {
      if (p->activity != &a) return std::nullopt;
    } else if (const auto* at = index_->attribute(id)) {
      if (at->activity != &a) return std::nullopt;
    } else {
      return std::nullopt;
    }
    const auto it = tm_.elem_scope.find(id);
    if (it == tm_.elem_scope.end()) return std::nullopt;
    return it->second;
  }

  bool is_decision(const std::string& id) const {
    const auto* n = index_->node(id);
    return n && std::holds_alternative<xmi::DecisionNode>(*n->node);
  }

  // Assignment target must be exactly the parameter `param`.
  bool targets_whole(const xmi::Flow& f, const std::string& param) const {
    const auto it = tm_.flow_typing.find(f.id);
    return it != tm_.flow_typing.end() && it->second.target && it->second.target->steps.size() == 1 &&
           it->second.target->head().origin == param;
  }

  // --- leaf ---------------------------------------------------------------

  void check_leaf(const xmi::Activity& a) {
    using K = expr::Guard::Kind;
    const ParamSplit params = split_params(a);
    if (params.outputs.size() != 1) {
      error("LeafActivity", a.id,
            "leaf activity " + a.name + " must have exactly one output parameter, found " +
                std::to_string(params.outputs.size()));
      return;
    }
    LeafShape shape;
    const std::string& out = params.outputs[0]->id;
    shape.output = out;
    for (const auto* p : params.inputs) shape.inputs.push_back(p->id);

    std::vector<const xmi::DecisionNode*> decisions;
    for (const auto& n : a.nodes) {
      if (const auto* d = std::get_if<xmi::DecisionNode>(&n)) decisions.push_back(d);
    }

    bool ok = true;
    auto require_output_assignment = [&](const xmi::Flow& f) {
      if (f.target != out) {
        error("LeafActivity", f.id, "value flow must target the output parameter");
        ok = false;
      } else if (!f.assignment) {
        error("Assignment", f.id, "flow into the output parameter carries no assignment");
        ok = false;
      } else if (!targets_whole(f, out)) {
        error("Assignment", f.id, "assignment must target the output parameter");
        ok = false;
      }
    };

    for (const auto& f : a.flows) {
      if (f.kind != xmi::FlowKind::kObject) continue;
      if (f.source == out) {
        error("ActivityParameter", f.id, "output parameter cannot be a flow source");
        ok = false;
      }
      if (f.target == out && !decisions.empty() && !is_decision(f.source)) {
        error("LeafActivity", f.id, "output parameter bound outside the decision chain");
        ok = false;
      }
      if (is_decision(f.target) && f.guard_expr.kind != K::kEmpty &&
          !(f.guard_expr.kind == K::kElse && is_decision(f.source))) {
        error("DecisionNode", f.id, "only else flows may lead to a decision node");
        ok = false;
      }
    }

    if (decisions.empty()) {
      std::vector<const xmi::Flow*> into;
      for (const auto& f : a.flows) {
        if (f.kind == xmi::FlowKind::kObject && f.target == out) into.push_back(&f);
      }
      if (into.size() != 1 || into[0]->guard_expr.kind != K::kEmpty) {
        error("LeafActivity", a.id,
              "leaf activity without decision nodes needs exactly one unguarded flow into its output");
        return;
      }
      require_output_assignment(*into[0]);
      shape.default_flow = into[0]->id;
      if (ok) tm_.leaves[a.id] = std::move(shape);
      return;
    }

    // Per decision node: its guarded exit and its continuation.
    struct Exit {
      const xmi::Flow* guarded = nullptr;
      const xmi::Flow* rest = nullptr;  // else flow or the single unguarded flow
    };
    std::map<std::string, Exit> exits;
    std::set<std::string> else_targets;
    for (const auto* d : decisions) {
      std::vector<const xmi::Flow*> outs;
      for (const auto& f : a.flows) {
        if (f.kind == xmi::FlowKind::kObject && f.source == d->id) outs.push_back(&f);
      }
      Exit e;
      if (outs.size() == 1 && outs[0]->guard_expr.kind == K::kEmpty) {
        e.rest = outs[0];
        require_output_assignment(*outs[0]);
      } else if (outs.size() == 2) {
        const bool else0 = outs[0]->guard_expr.kind == K::kElse;
        const bool else1 = outs[1]->guard_expr.kind == K::kElse;
        const xmi::Flow* g = else0 ? outs[1] : outs[0];
        if (else0 == else1 || g->guard_expr.kind == K::kEmpty) {
          error("DecisionNode", d->id,
                else0 && else1 ? "decision node has two else flows"
                : g->guard_expr.kind == K::kEmpty ? "decision node mixes an unguarded flow with others"
                                                  : "decision node has two guarded flows and no else flow");
          ok = false;
          continue;
        }
        e.guarded = g;
        e.rest = else0 ? outs[0] : outs[1];
        require_output_assignment(*g);
        if (is_decision(e.rest->target)) {
          if (e.rest->assignment) {
            error("Assignment", e.rest->id, "else flow between decision nodes cannot carry an assignment");
            ok = false;
          }
          else_targets.insert(e.rest->target);
        } else {
          require_output_assignment(*e.rest);
        }
      } else {
        error("DecisionNode", d->id,
              "decision node must have one unguarded flow, or one guarded flow and one else flow");
        ok = false;
        continue;
      }
      exits[d->id] = e;
    }
    if (!ok) return;

    std::vector<const xmi::DecisionNode*> heads;
    for (const auto* d : decisions) {
      if (!else_targets.count(d->id)) heads.push_back(d);
    }
    if (heads.empty()) {
      error("DecisionNode", decisions[0]->id, "decision chain is cyclic");
      return;
    }
    if (heads.size() > 1) {
      error("DecisionNode", heads[1]->id, "decision chain has more than one entry node");
      return;
    }
    std::set<std::string> seen;
    std::string at = heads[0]->id;
    while (true) {
      if (!seen.insert(at).second) {
        error("DecisionNode", at, "decision chain is cyclic");
        return;
      }
      const Exit& e = exits.at(at);
      if (e.guarded) shape.guarded_flows.push_back(e.guarded->id);
      if (is_decision(e.rest->target)) {
        at = e.rest->target;
        continue;
      }
      shape.default_flow = e.rest->id;
      break;
    }
    if (seen.size() != decisions.size()) {
      for (const auto* d : decisions) {
        if (!seen.count(d->id)) {
          error("DecisionNode", d->id, "decision node is not part of the decision chain");
          return;
        }
      }
    }
    tm_.leaves[a.id] = std::move(shape);
  }

  // --- glue ---------------------------------------------------------------

  void check_glue(const xmi::Activity& a) {
    GlueShape shape;
    bool ok = true;
    const ParamSplit params = split_params(a);
    for (const auto* p : params.inputs) shape.inputs.push_back(p->id);
    for (const auto* p : params.outputs) shape.outputs.push_back(p->id);
    for (const auto& attr : a.attributes) shape.attributes.push_back(attr.id);

    std::map<std::string, std::vector<const xmi::Flow*>> into;
    for (const auto& f : a.flows) {
      if (f.kind == xmi::FlowKind::kObject) into[f.target].push_back(&f);
    }

    std::set<std::string> out_pins;  // call result pins
    std::map<std::string, std::string> out_pin_owner;
    for (const auto& n : a.nodes) {
      if (const auto* d = std::get_if<xmi::DecisionNode>(&n)) {
        error("GlueActivity", d->id, "decision nodes are not supported in glue activities");
        ok = false;
      } else if (const auto* call = std::get_if<xmi::CallBehaviour>(&n)) {
        shape.calls.push_back(call->id);
        for (const auto& pin : call->pins) {
          if (pin.direction == xmi::PinDirection::kOutput) {
            out_pins.insert(pin.id);
            out_pin_owner[pin.id] = call->id;
          }
        }
      } else if (const auto* wv = std::get_if<xmi::WriteVariable>(&n)) {
        shape.writes.push_back(wv->id);
      }
    }

    for (const auto& f : a.flows) {
      if (f.kind != xmi::FlowKind::kObject) continue;
      const bool src_ok = index_->attribute(f.source) || out_pins.count(f.source) ||
                          std::any_of(params.inputs.begin(), params.inputs.end(),
                                      [&](const auto* p) { return p->id == f.source; });
      if (!src_ok) {
        error("ObjectFlow", f.id, "glue flows start at an input parameter, attribute or call result");
        ok = false;
      }
      if (index_->attribute(f.target)) {
        error("Attribute", f.id, "attributes are only written through WriteVariable nodes");
        ok = false;
      } else if (out_pins.count(f.target)) {
        error("ObjectFlow", f.id, "call result pins cannot be flow targets");
        ok = false;
      }
      if (f.guard_expr.kind != expr::Guard::Kind::kEmpty) {
        error("Guard", f.id, "glue flows cannot be guarded");
        ok = false;
      }
    }

    auto bind_pin = [&](const xmi::Pin& pin) -> bool {
      const auto it = into.find(pin.id);
      const std::size_t count = it == into.end() ? 0 : it->second.size();
      if (count == 0) {
        error("Pin", pin.id, "unbound pin " + quote(pin.name));
        return false;
      }
      if (count > 1) {
        error("Pin", pin.id, "pin " + quote(pin.name) + " is bound more than once");
        return false;
      }
      const xmi::Flow& f = *it->second[0];
      if (!f.assignment) {
        error("Assignment", f.id, "flow into pin " + quote(pin.name) + " carries no assignment");
        return false;
      }
      if (!targets_whole(f, pin.id)) {
        error("Assignment", f.id, "assignment must target pin " + quote(pin.name));
        return false;
      }
      shape.pin_binding[pin.id] = f.id;
      return true;
    };

    std::map<std::string, std::set<std::string>> deps;  // call -> calls it reads from
    for (const auto& n : a.nodes) {
      const auto* call = std::get_if<xmi::CallBehaviour>(&n);
      if (!call) continue;
      ok = check_call(*call, bind_pin, into, out_pin_owner, deps[call->id]) && ok;
    }

    std::map<std::string, std::string> written;
    for (const auto& n : a.nodes) {
      const auto* wv = std::get_if<xmi::WriteVariable>(&n);
      if (!wv) continue;
      if (!bind_pin(wv->pin)) ok = false;
      const auto hits = graph().resolve(tm_.elem_scope.at(wv->id), parent_query_, wv->name);
      const xmi::Attribute* attr = hits.size() == 1 ? (index_->attribute(hits[0].decl.origin)
                                                            ? index_->attribute(hits[0].decl.origin)->attribute
                                                            : nullptr)
                                                      : nullptr;
      if (!attr) {
        error("WriteVariable", wv->id, "write to undeclared attribute " + quote(wv->name));
        ok = false;
        continue;
      }
      if (written.count(attr->id)) {
        error("WriteVariable", wv->id, "attribute " + quote(wv->name) + " is written more than once");
        ok = false;
        continue;
      }
      written[attr->id] = wv->id;
      tm_.elem_type[wv->id] = hits[0].decl.type;
      const auto pt = tm_.elem_type.find(wv->pin.id);
      if (pt != tm_.elem_type.end() && !same_type(widen(std::get<ParamType>(pt->second).inner),
                                                  hits[0].decl.type)) {
        error("WriteVariable", wv->id, "pin type does not match attribute " + quote(wv->name));
        ok = false;
      }
    }

    for (const auto* p : params.outputs) {
      ok = check_output_binding(*p, into[p->id], shape.output_binding[p->id]) && ok;
    }

    // Call order: Kahn's algorithm, smallest document index first.
    std::vector<std::string> order;
    std::set<std::string> done;
    while (order.size() < shape.calls.size()) {
      bool progressed = false;
      for (const auto& c : shape.calls) {
        if (done.count(c)) continue;
        const auto& d = deps[c];
        if (std::all_of(d.begin(), d.end(), [&](const std::string& x) { return done.count(x) > 0; })) {
          order.push_back(c);
          done.insert(c);
          progressed = true;
          break;
        }
      }
      if (!progressed) {
        for (const auto& c : shape.calls) {
          if (!done.count(c)) {
            error("GlueActivity", c, "behaviour calls depend on each other cyclically");
            break;
          }
        }
        ok = false;
        break;
      }
    }
    shape.call_order = std::move(order);
    if (ok) tm_.glues[a.id] = std::move(shape);
  }

  template <typename BindPin>
  bool check_call(const xmi::CallBehaviour& call, BindPin& bind_pin,
                  const std::map<std::string, std::vector<const xmi::Flow*>>& into,
                  const std::map<std::string, std::string>& out_pin_owner,
                  std::set<std::string>& deps) {
    bool ok = true;
    for (const auto& pin : call.pins) {
      if (pin.direction == xmi::PinDirection::kInput && !bind_pin(pin)) ok = false;
    }
    for (const auto& pin : call.pins) {
      if (pin.direction != xmi::PinDirection::kInput) continue;
      const auto it = into.find(pin.id);
      if (it == into.end()) continue;
      for (const auto* f : it->second) {
        const auto o = out_pin_owner.find(f->source);
        if (o != out_pin_owner.end()) deps.insert(o->second);
      }
    }

    const xmi::Activity* callee = index_->activity(call.behaviour);
    if (!callee) return false;  // reported during scoping
    if (tm_.activity_kind.at(callee->id) != ActivityKind::kLeaf) {
      error("CallBehaviour", call.id, "called activity " + callee->name + " is not a leaf activity");
      return false;
    }
    const ParamSplit sig = split_params(*callee);
    std::vector<const xmi::Pin*> outs;
    std::set<std::string> matched;
    for (const auto& pin : call.pins) {
      if (pin.direction == xmi::PinDirection::kOutput) {
        outs.push_back(&pin);
        continue;
      }
      const auto p = std::find_if(sig.inputs.begin(), sig.inputs.end(),
                                  [&](const auto* x) { return x->name == pin.name; });
      if (p == sig.inputs.end()) {
        error("Pin", pin.id, "activity " + callee->name + " has no input parameter " + quote(pin.name));
        ok = false;
        continue;
      }
      if (!matched.insert((*p)->id).second) {
        error("Pin", pin.id, "input parameter " + quote(pin.name) + " is bound by two pins");
        ok = false;
        continue;
      }
      if (!same_param_type(pin.id, (*p)->id)) {
        error("Pin", pin.id, "pin " + quote(pin.name) + " does not match the type of the parameter");
        ok = false;
      }
    }
    for (const auto* p : sig.inputs) {
      if (!matched.count(p->id)) {
        error("CallBehaviour", call.id, "no pin for input parameter " + quote(p->name) + " of " + callee->name);
        ok = false;
      }
    }
    if (outs.size() != 1) {
      error("CallBehaviour", call.id, "call must have exactly one result pin");
      return false;
    }
    if (sig.outputs.size() == 1 && !same_param_type(outs[0]->id, sig.outputs[0]->id)) {
      error("Pin", outs[0]->id, "result pin does not match the output type of " + callee->name);
      ok = false;
    }
    return ok;
  }

  bool same_param_type(const std::string& a, const std::string& b) const {
    const auto ta = tm_.elem_type.find(a);
    const auto tb = tm_.elem_type.find(b);
    if (ta == tm_.elem_type.end() || tb == tm_.elem_type.end()) return true;  // reported elsewhere
    const auto* pa = std::get_if<ParamType>(&ta->second);
    const auto* pb = std::get_if<ParamType>(&tb->second);
    return pa && pb && same_type(widen(pa->inner), widen(pb->inner));
  }

  bool check_output_binding(const xmi::ActivityParameter& p, const std::vector<const xmi::Flow*>& flows,
                            OutputBinding& binding) {
    bool ok = true;
    for (const auto* f : flows) {
      if (!f->assignment) {
        error("Assignment", f->id, "flow into output " + quote(p.name) + " carries no assignment");
        ok = false;
        continue;
      }
      const auto& ft = tm_.flow_typing[f->id];
      if (!ft.target) {
        ok = false;
        continue;
      }
      if (ft.target->head().origin != p.id || ft.target->steps.size() > 2) {
        error("OutputBinding", f->id, "assignment must target output " + quote(p.name) + " or one of its fields");
        ok = false;
        continue;
      }
      if (ft.target->steps.size() == 1) {
        if (binding.whole || !binding.fields.empty()) {
          error("OutputBinding", f->id, "output " + quote(p.name) + " is bound more than once");
          ok = false;
        }
        binding.whole = f->id;
      } else {
        const std::string& field = ft.target->steps[1].origin;
        if (binding.whole || binding.fields.count(field)) {
          error("OutputBinding", f->id,
                "field " + quote(ft.target->steps[1].name) + " of " + quote(p.name) + " is bound more than once");
          ok = false;
        }
        binding.fields[field] = f->id;
      }
    }
    if (!ok || binding.whole) return ok;
    const auto t = tm_.elem_type.find(p.id);
    if (t == tm_.elem_type.end()) return false;
    const auto& inner = std::get<ParamType>(t->second).inner;
    const auto* bt = std::get_if<BlockType>(&inner);
    if (!bt) {
      error("OutputBinding", p.id, "unbound output " + quote(p.name));
      return false;
    }
    for (const auto& prop : index_->block(bt->id)->properties) {
      if (!binding.fields.count(prop.id)) {
        error("OutputBinding", p.id, "unbound output field " + quote(p.name + "." + prop.name));
        ok = false;
      }
    }
    return ok;
  }

  std::shared_ptr<const xmi::XmiDocument> doc_;
  std::shared_ptr<const ModelIndex> index_;
  CheckOptions options_;
  PathQuery type_query_;
  PathQuery value_query_;
  PathQuery local_query_;
  PathQuery parent_query_;
  TypedModel tm_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

CheckResult check_document(xmi::XmiDocument doc, const CheckOptions& options) {
  return Checker(std::move(doc), options).run();
}

}  // namespace ad2mcrl2::check
