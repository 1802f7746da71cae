#include "ad2mcrl2/mcrl2/emitter.hpp"

#include <algorithm>
#include <stdexcept>

namespace ad2mcrl2::mcrl2 {

namespace {

const xmi::ActivityParameter& param(const check::TypedModel& tm, const std::string& id) {
  return std::get<xmi::ActivityParameter>(*tm.index->node(id)->node);
}

}  // namespace

Emitter::Emitter(const check::TypedModel& tm) : tm_(tm), names_(build_name_table(tm)) {}

Emitter::Emitter(const check::TypedModel& tm, NameTable names) : tm_(tm), names_(std::move(names)) {}

std::string Emitter::sort_name(const ValueType& t) const {
  return names_.at(std::visit([](const auto& v) { return v.id; }, t));
}

std::string Emitter::sort_of(const std::string& element_id) const {
  return sort_name(tm_.value_type(element_id));
}

std::vector<SortDecl> Emitter::emit_sorts() const {
  std::vector<SortDecl> out;
  xmi::for_each_element(tm_.doc->root, [&](const auto& elem) {
    using T = std::decay_t<decltype(elem)>;
    if constexpr (std::is_same_v<T, xmi::Enumeration>) {
      SortDecl s{names_.at(elem.id), {}};
      for (const auto& lit : elem.literals) s.constructors.push_back({names_.at(lit.id), {}});
      out.push_back(std::move(s));
    } else if constexpr (std::is_same_v<T, xmi::Block>) {
      Constructor c{names_.at(elem.id), {}};
      for (const auto& p : elem.properties) c.projections.push_back({names_.at(p.id), sort_of(p.id)});
      out.push_back({names_.at(elem.id), {std::move(c)}});
    }
  });
  return out;
}

Expr Emitter::compile_ref(const check::ResolvedRef& ref) const {
  Expr e = Expr::var(names_.at(ref.steps[0].origin));
  for (std::size_t i = 1; i < ref.steps.size(); ++i) {
    e = Expr::apply(names_.at(ref.steps[i].origin), {std::move(e)});
  }
  return e;
}

Expr Emitter::flow_value(const std::string& flow_id) const {
  const auto& ft = tm_.flow_typing.at(flow_id);
  if (!ft.value) throw std::logic_error("flow " + flow_id + " has no assignment");
  return compile_ref(*ft.value);
}

Expr Emitter::guard_expr(const std::string& flow_id) const {
  using K = expr::Guard::Kind;
  const auto& refs = tm_.flow_typing.at(flow_id).guard_refs;
  std::size_t next = 0;
  auto go = [&](const auto& self, const expr::Guard& g) -> Expr {
    switch (g.kind) {
      case K::kEq:
      case K::kNeq: {
        Expr l = compile_ref(refs.at(next++));
        Expr r = compile_ref(refs.at(next++));
        return g.kind == K::kEq ? Expr::eq(std::move(l), std::move(r)) : Expr::neq(std::move(l), std::move(r));
      }
      case K::kNot: return Expr::not_(self(self, g.operands[0]));
      case K::kAnd: {
        Expr l = self(self, g.operands[0]);
        return Expr::and_(std::move(l), self(self, g.operands[1]));
      }
      case K::kOr: {
        Expr l = self(self, g.operands[0]);
        return Expr::or_(std::move(l), self(self, g.operands[1]));
      }
      default: return Expr::true_();
    }
  };
  return go(go, tm_.index->flow(flow_id)->flow->guard_expr);
}

std::pair<MapDecl, EqnDecl> Emitter::emit_leaf_map(const xmi::Activity& a) const {
  const check::LeafShape& shape = tm_.leaves.at(a.id);
  MapDecl m;
  m.name = names_.at(map_key(a.id));
  m.codomain = sort_of(shape.output);
  EqnDecl e;
  std::vector<Expr> args;
  for (const auto& in : shape.inputs) {
    m.domain.push_back(sort_of(in));
    e.vars.push_back({names_.at(in), sort_of(in)});
    args.push_back(Expr::var(names_.at(in)));
  }
  e.lhs = Expr::apply(m.name, std::move(args));
  Expr body = flow_value(shape.default_flow);
  for (auto it = shape.guarded_flows.rbegin(); it != shape.guarded_flows.rend(); ++it) {
    body = Expr::if_(guard_expr(*it), flow_value(*it), std::move(body));
  }
  e.rhs = std::move(body);
  return {std::move(m), std::move(e)};
}

std::pair<std::vector<ActDecl>, ProcDecl> Emitter::emit_glue_process(const xmi::Activity& a) const {
  const check::GlueShape& shape = tm_.glues.at(a.id);
  std::vector<ActDecl> acts;
  for (const auto& n : a.nodes) {
    if (const auto* p = std::get_if<xmi::ActivityParameter>(&n)) {
      acts.push_back({names_.at(p->id), {sort_of(p->id)}});
    }
  }

  ProcDecl proc;
  proc.name = names_.at(a.id);
  for (const auto& attr : shape.attributes) proc.params.push_back({names_.at(attr), sort_of(attr)});

  // Summation: one result per call, then the inputs, bound in reverse.
  std::vector<VarDecl> sum;
  std::vector<Expr> conds;
  for (const auto& call_id : shape.calls) {
    const auto& call = std::get<xmi::CallBehaviour>(*tm_.index->node(call_id)->node);
    const xmi::Activity& callee = *tm_.index->activity(call.behaviour);
    const check::LeafShape& sig = tm_.leaves.at(callee.id);
    const xmi::Pin* result = nullptr;
    for (const auto& pin : call.pins) {
      if (pin.direction == xmi::PinDirection::kOutput) result = &pin;
    }
    sum.push_back({names_.at(result->id), sort_of(result->id)});
    std::vector<Expr> args;
    for (const auto& in : sig.inputs) {
      const std::string& pname = param(tm_, in).name;
      const auto pin = std::find_if(call.pins.begin(), call.pins.end(), [&](const xmi::Pin& p) {
        return p.direction == xmi::PinDirection::kInput && p.name == pname;
      });
      args.push_back(flow_value(shape.pin_binding.at(pin->id)));
    }
    conds.push_back(Expr::eq(Expr::var(names_.at(result->id)),
                             Expr::apply(names_.at(map_key(callee.id)), std::move(args))));
  }
  for (const auto& in : shape.inputs) sum.push_back({names_.at(in), sort_of(in)});
  std::reverse(sum.begin(), sum.end());
  proc.body.sum = std::move(sum);

  Expr cond = Expr::true_();
  for (auto it = conds.rbegin(); it != conds.rend(); ++it) cond = Expr::and_(std::move(*it), std::move(cond));
  proc.body.condition = std::move(cond);

  for (const auto& out : shape.outputs) {
    const check::OutputBinding& b = shape.output_binding.at(out);
    Expr value;
    if (b.whole) {
      value = flow_value(*b.whole);
    } else {
      const auto& bt = std::get<BlockType>(tm_.value_type(out));
      std::vector<Expr> fields;
      for (const auto& prop : tm_.index->block(bt.id)->properties) fields.push_back(flow_value(b.fields.at(prop.id)));
      value = Expr::apply(names_.at(bt.id), std::move(fields));
    }
    proc.body.actions.push_back({names_.at(out), {std::move(value)}});
  }
  for (const auto& in : shape.inputs) {
    proc.body.actions.push_back({names_.at(in), {Expr::var(names_.at(in))}});
  }

  proc.body.next.name = proc.name;
  for (const auto& w : shape.writes) {
    const auto& wv = std::get<xmi::WriteVariable>(*tm_.index->node(w)->node);
    const auto hits = std::find_if(a.attributes.begin(), a.attributes.end(),
                                   [&](const xmi::Attribute& at) { return at.name == wv.name; });
    proc.body.next.updates.emplace_back(names_.at(hits->id), flow_value(shape.pin_binding.at(wv.pin.id)));
  }
  return {std::move(acts), std::move(proc)};
}

ProcCall Emitter::initial_call(const xmi::Activity& a) const {
  ProcCall c;
  c.name = names_.at(a.id);
  for (const auto& attr : a.attributes) {
    const auto& et = std::get<EnumType>(tm_.value_type(attr.id));
    const xmi::Enumeration* e = tm_.index->enumeration(et.id);
    const auto lit = std::find_if(e->literals.begin(), e->literals.end(),
                                  [&](const xmi::EnumerationLiteral& l) { return l.name == attr.default_value; });
    c.args.push_back(Expr::var(names_.at(lit->id)));
  }
  return c;
}

Spec Emitter::assemble_spec(const std::optional<std::string>& entry) const {
  Spec spec;
  spec.sorts = emit_sorts();
  std::vector<const xmi::Activity*> glue;
  for (const auto* a : tm_.index->activities()) {
    if (tm_.leaves.count(a->id)) {
      auto [m, e] = emit_leaf_map(*a);
      spec.maps.push_back(std::move(m));
      spec.eqns.push_back(std::move(e));
    } else if (tm_.glues.count(a->id)) {
      auto [acts, proc] = emit_glue_process(*a);
      spec.acts.insert(spec.acts.end(), acts.begin(), acts.end());
      spec.procs.push_back(std::move(proc));
      glue.push_back(a);
    }
  }
  const xmi::Activity* init = nullptr;
  if (entry) {
    for (const auto* a : glue) {
      if (a->name == *entry) init = a;
    }
    if (!init) throw std::invalid_argument("no glue activity named " + *entry);
  } else if (glue.size() == 1) {
    init = glue[0];
  }
  if (init) spec.init = initial_call(*init);
  return spec;
}

}  // namespace ad2mcrl2::mcrl2
