#include "ad2mcrl2/oracle/semantics.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ad2mcrl2::oracle {

bool operator<(const Value& a, const Value& b) {
  return std::tie(a.type_id, a.literal, a.fields) < std::tie(b.type_id, b.literal, b.fields);
}

std::string to_string(const Value& v) {
  if (v.fields.empty() && !v.literal.empty()) return v.literal;
  std::string out = v.type_id + "(";
  for (std::size_t i = 0; i < v.fields.size(); ++i) out += (i ? ", " : "") + to_string(v.fields[i]);
  return out + ")";
}

Domains::Domains(const xmi::XmiDocument& doc) : index_(doc) {}

std::uint64_t Domains::count(const std::string& type_id, std::uint64_t cap) const {
  if (const auto* e = index_.enumeration(type_id)) return std::min<std::uint64_t>(e->literals.size(), cap);
  const auto* b = index_.block(type_id);
  if (!b) throw std::invalid_argument("unknown type " + type_id);
  std::uint64_t n = 1;
  for (const auto& p : b->properties) {
    const std::uint64_t k = count(p.type, cap);
    if (k != 0 && n > cap / k) return cap;
    n *= k;
  }
  return std::min(n, cap);
}

std::vector<Value> Domains::all(const std::string& type_id) const {
  std::vector<Value> out;
  if (const auto* e = index_.enumeration(type_id)) {
    for (const auto& l : e->literals) out.push_back({type_id, l.name, {}});
    return out;
  }
  const auto* b = index_.block(type_id);
  if (!b) throw std::invalid_argument("unknown type " + type_id);
  out.push_back({type_id, {}, {}});
  for (const auto& p : b->properties) {
    const std::vector<Value> dom = all(p.type);
    std::vector<Value> next;
    for (const auto& partial : out) {
      for (const auto& v : dom) {
        Value w = partial;
        w.fields.push_back(v);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

Value Domains::random(const std::string& type_id, std::mt19937_64& rng) const {
  if (const auto* e = index_.enumeration(type_id)) {
    std::uniform_int_distribution<std::size_t> pick(0, e->literals.size() - 1);
    return {type_id, e->literals[pick(rng)].name, {}};
  }
  const auto* b = index_.block(type_id);
  if (!b) throw std::invalid_argument("unknown type " + type_id);
  Value v{type_id, {}, {}};
  for (const auto& p : b->properties) v.fields.push_back(random(p.type, rng));
  return v;
}

std::string declared_type(const check::ModelIndex& index, const std::string& id) {
  if (const auto* n = index.node(id)) {
    if (const auto* p = std::get_if<xmi::ActivityParameter>(n->node)) return p->type;
  }
  if (const auto* p = index.pin(id)) return p->pin->type;
  if (const auto* a = index.attribute(id)) return a->attribute->type;
  throw std::invalid_argument("element " + id + " has no declared type");
}

namespace {

std::set<std::string> flow_targets(const xmi::Activity& a) {
  std::set<std::string> out;
  for (const auto& f : a.flows) out.insert(f.target);
  return out;
}

}  // namespace

std::vector<const xmi::ActivityParameter*> input_parameters(const xmi::Activity& a) {
  const auto targets = flow_targets(a);
  std::vector<const xmi::ActivityParameter*> out;
  for (const auto& n : a.nodes) {
    const auto* p = std::get_if<xmi::ActivityParameter>(&n);
    if (p && !targets.count(p->id)) out.push_back(p);
  }
  return out;
}

std::vector<const xmi::ActivityParameter*> output_parameters(const xmi::Activity& a) {
  const auto targets = flow_targets(a);
  std::vector<const xmi::ActivityParameter*> out;
  for (const auto& n : a.nodes) {
    const auto* p = std::get_if<xmi::ActivityParameter>(&n);
    if (p && targets.count(p->id)) out.push_back(p);
  }
  return out;
}

namespace {

using Env = std::map<std::string, Value>;  // visible name -> value

class Evaluator {
 public:
  explicit Evaluator(const check::ModelIndex& index) : index_(index) {}

  // Variables first; otherwise an enumeration literal, disambiguated by
  // `expected` when several enumerations share the name.
  Value ref(const expr::VarRef& r, const Env& env, const std::optional<std::string>& expected) const {
    Value v;
    const std::string& head = r.segments.at(0);
    if (auto it = env.find(head); it != env.end()) {
      v = it->second;
    } else {
      std::vector<const xmi::Enumeration*> hits;
      for (const auto* e : index_.enumerations()) {
        for (const auto& l : e->literals) {
          if (l.name == head) hits.push_back(e);
        }
      }
      if (hits.size() > 1 && expected) {
        hits.erase(std::remove_if(hits.begin(), hits.end(),
                                  [&](const xmi::Enumeration* e) { return e->id != *expected; }),
                   hits.end());
      }
      if (hits.size() != 1) throw std::runtime_error("cannot evaluate " + head);
      v = {hits[0]->id, head, {}};
    }
    for (std::size_t i = 1; i < r.segments.size(); ++i) {
      const auto* b = index_.block(v.type_id);
      if (!b) throw std::runtime_error("field access on non-block value");
      const auto p = std::find_if(b->properties.begin(), b->properties.end(),
                                  [&](const xmi::Property& x) { return x.name == r.segments[i]; });
      if (p == b->properties.end()) throw std::runtime_error("no field " + r.segments[i]);
      Value f = v.fields.at(static_cast<std::size_t>(p - b->properties.begin()));
      v = std::move(f);
    }
    return v;
  }

  bool guard(const expr::Guard& g, const Env& env) const {
    using K = expr::Guard::Kind;
    switch (g.kind) {
      case K::kEmpty:
      case K::kElse: return true;
      case K::kEq:
      case K::kNeq: {
        Value l, r;
        if (env.count(g.lhs.segments[0]) || !env.count(g.rhs.segments[0])) {
          l = ref(g.lhs, env, std::nullopt);
          r = ref(g.rhs, env, l.type_id);
        } else {
          r = ref(g.rhs, env, std::nullopt);
          l = ref(g.lhs, env, r.type_id);
        }
        return (l == r) == (g.kind == K::kEq);
      }
      case K::kNot: return !guard(g.operands[0], env);
      case K::kAnd: return guard(g.operands[0], env) && guard(g.operands[1], env);
      case K::kOr: return guard(g.operands[0], env) || guard(g.operands[1], env);
    }
    return false;
  }

 private:
  const check::ModelIndex& index_;
};

bool is_decision(const xmi::Activity& a, const std::string& id) {
  return std::any_of(a.nodes.begin(), a.nodes.end(), [&](const xmi::ActivityNode& n) {
    const auto* d = std::get_if<xmi::DecisionNode>(&n);
    return d && d->id == id;
  });
}

}  // namespace

Value eval_leaf(const xmi::Activity& a, const Valuation& inputs, const check::TypedModel& tm) {
  const check::ModelIndex& index = *tm.index;
  const Evaluator ev(index);
  Env env;
  for (const auto* p : input_parameters(a)) env[p->name] = inputs.at(p->id);
  const auto outs = output_parameters(a);
  if (outs.size() != 1) throw std::runtime_error("leaf activity without a single output");
  const std::string out_type = outs[0]->type;

  auto value_of = [&](const xmi::Flow& f) { return ev.ref(f.assignment.value().value, env, out_type); };

  std::vector<std::string> decisions;
  for (const auto& n : a.nodes) {
    if (const auto* d = std::get_if<xmi::DecisionNode>(&n)) decisions.push_back(d->id);
  }
  if (decisions.empty()) {
    for (const auto& f : a.flows) {
      if (f.kind == xmi::FlowKind::kObject && f.target == outs[0]->id) return value_of(f);
    }
    throw std::runtime_error("leaf activity without a value flow");
  }

  // Entry: the decision node reached by control from the initial node, else
  // the one no else flow leads to.
  std::string at;
  for (const auto& f : a.flows) {
    const auto* src = index.node(f.source);
    if (f.kind == xmi::FlowKind::kControl && src && std::holds_alternative<xmi::ActivityInitial>(*src->node) &&
        is_decision(a, f.target)) {
      at = f.target;
    }
  }
  if (at.empty()) {
    std::set<std::string> continued;
    for (const auto& f : a.flows) {
      if (f.kind == xmi::FlowKind::kObject && is_decision(a, f.source) && is_decision(a, f.target)) {
        continued.insert(f.target);
      }
    }
    for (const auto& d : decisions) {
      if (!continued.count(d)) {
        at = d;
        break;
      }
    }
  }

  for (std::size_t steps = 0; steps <= decisions.size(); ++steps) {
    const xmi::Flow* rest = nullptr;
    for (const auto& f : a.flows) {
      if (f.kind != xmi::FlowKind::kObject || f.source != at) continue;
      if (f.guard_expr.kind == expr::Guard::Kind::kEmpty || f.guard_expr.kind == expr::Guard::Kind::kElse) {
        rest = &f;
      } else if (ev.guard(f.guard_expr, env)) {
        return value_of(f);
      }
    }
    if (!rest) throw std::runtime_error("decision node without default");
    if (!is_decision(a, rest->target)) return value_of(*rest);
    at = rest->target;
  }
  throw std::runtime_error("decision chain does not terminate");
}

GlueState initial_state(const xmi::Activity& a, const check::TypedModel&) {
  GlueState st;
  for (const auto& attr : a.attributes) st[attr.id] = {attr.type, attr.default_value, {}};
  return st;
}

GlueStep step_glue(const xmi::Activity& a, const GlueState& state, const Valuation& inputs,
                   const check::TypedModel& tm) {
  const check::ModelIndex& index = *tm.index;
  const Evaluator ev(index);

  // Value and visible name of every possible flow source.
  std::map<std::string, std::pair<std::string, Value>> known;
  for (const auto* p : input_parameters(a)) known[p->id] = {p->name, inputs.at(p->id)};
  for (const auto& attr : a.attributes) known[attr.id] = {attr.name, state.at(attr.id)};

  std::map<std::string, const xmi::Flow*> into;  // pin id -> binding flow
  for (const auto& f : a.flows) {
    if (f.kind == xmi::FlowKind::kObject) into[f.target] = &f;
  }
  auto bound = [&](const xmi::Flow& f, const std::string& type) {
    const auto& src = known.at(f.source);
    return ev.ref(f.assignment.value().value, Env{{src.first, src.second}}, type);
  };

  std::vector<const xmi::CallBehaviour*> pending;
  for (const auto& n : a.nodes) {
    if (const auto* c = std::get_if<xmi::CallBehaviour>(&n)) pending.push_back(c);
  }
  while (!pending.empty()) {
    auto ready = std::find_if(pending.begin(), pending.end(), [&](const xmi::CallBehaviour* c) {
      return std::all_of(c->pins.begin(), c->pins.end(), [&](const xmi::Pin& p) {
        return p.direction == xmi::PinDirection::kOutput || known.count(into.at(p.id)->source);
      });
    });
    if (ready == pending.end()) throw std::runtime_error("cyclic calls");
    const xmi::CallBehaviour& call = **ready;
    pending.erase(ready);
    const xmi::Activity& callee = *index.activity(call.behaviour);
    Valuation args;
    const xmi::Pin* result = nullptr;
    for (const auto& pin : call.pins) {
      if (pin.direction == xmi::PinDirection::kOutput) {
        result = &pin;
        continue;
      }
      for (const auto* p : input_parameters(callee)) {
        if (p->name == pin.name) args[p->id] = bound(*into.at(pin.id), pin.type);
      }
    }
    known[result->id] = {result->name, eval_leaf(callee, args, tm)};
  }

  GlueStep out;
  for (const auto* p : output_parameters(a)) {
    const auto* block = index.block(p->type);
    Value v{p->type, {}, {}};
    if (block) v.fields.resize(block->properties.size());
    for (const auto& f : a.flows) {
      if (f.kind != xmi::FlowKind::kObject || f.target != p->id) continue;
      const auto& target = f.assignment->target.segments;
      if (target.size() == 1) {
        v = bound(f, p->type);
        continue;
      }
      const auto prop = std::find_if(block->properties.begin(), block->properties.end(),
                                     [&](const xmi::Property& x) { return x.name == target[1]; });
      v.fields[static_cast<std::size_t>(prop - block->properties.begin())] = bound(f, prop->type);
    }
    out.outputs[p->id] = std::move(v);
  }

  out.state = state;
  for (const auto& n : a.nodes) {
    const auto* wv = std::get_if<xmi::WriteVariable>(&n);
    if (!wv) continue;
    for (const auto& attr : a.attributes) {
      if (attr.name == wv->name) out.state[attr.id] = bound(*into.at(wv->pin.id), attr.type);
    }
  }
  return out;
}

}  // namespace ad2mcrl2::oracle
