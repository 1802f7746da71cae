#include "ad2mcrl2/oracle/mcrl2_eval.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace ad2mcrl2::oracle {

using mcrl2::Expr;
using K = Expr::Kind;

bool operator<(const Term& a, const Term& b) { return std::tie(a.head, a.args) < std::tie(b.head, b.args); }

std::string to_string(const Term& t) {
  if (t.args.empty()) return t.head;
  std::string out = t.head + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? ", " : "") + to_string(t.args[i]);
  return out + ")";
}

namespace {

const Term kTrue{"true", {}};
const Term kFalse{"false", {}};

Term boolean(bool b) { return b ? kTrue : kFalse; }

bool truth(const Term& t) {
  if (t == kTrue) return true;
  if (t == kFalse) return false;
  throw EvalError("boolean expected, got " + to_string(t));
}

}  // namespace

Mcrl2Model::Mcrl2Model(const mcrl2::Spec& spec) : spec_(spec) {
  for (const auto& s : spec.sorts) {
    sorts_[s.name] = &s;
    for (const auto& c : s.constructors) {
      constructors_[c.name] = s.name;
      for (std::size_t i = 0; i < c.projections.size(); ++i) {
        projections_[c.projections[i].name].push_back({c.name, i});
      }
    }
  }
  for (const auto& e : spec.eqns) equations_[e.lhs.name] = &e;
}

Term Mcrl2Model::eval(const Expr& e, const TermEnv& env) const {
  switch (e.kind) {
    case K::kTrue: return kTrue;
    case K::kName: {
      if (auto it = env.find(e.name); it != env.end()) return it->second;
      if (constructors_.count(e.name)) return {e.name, {}};
      if (auto eq = equations_.find(e.name); eq != equations_.end() && eq->second->vars.empty()) {
        return eval(eq->second->rhs, {});
      }
      throw EvalError("unbound name " + e.name);
    }
    case K::kApply: {
      std::vector<Term> args;
      for (const auto& a : e.args) args.push_back(eval(a, env));
      if (constructors_.count(e.name)) return {e.name, std::move(args)};
      if (auto p = projections_.find(e.name); p != projections_.end()) {
        if (args.size() != 1) throw EvalError("projection " + e.name + " takes one argument");
        for (const auto& proj : p->second) {
          if (proj.constructor == args[0].head) return args[0].args.at(proj.index);
        }
        throw EvalError("projection " + e.name + " applied to " + to_string(args[0]));
      }
      if (auto eq = equations_.find(e.name); eq != equations_.end()) {
        const mcrl2::EqnDecl& d = *eq->second;
        if (d.lhs.args.size() != args.size()) throw EvalError("arity mismatch for " + e.name);
        TermEnv local;
        for (std::size_t i = 0; i < args.size(); ++i) local[d.lhs.args[i].name] = std::move(args[i]);
        return eval(d.rhs, local);
      }
      throw EvalError("unknown function " + e.name);
    }
    case K::kIf: return truth(eval(e.args[0], env)) ? eval(e.args[1], env) : eval(e.args[2], env);
    case K::kEq: return boolean(eval(e.args[0], env) == eval(e.args[1], env));
    case K::kNeq: return boolean(eval(e.args[0], env) != eval(e.args[1], env));
    case K::kNot: return boolean(!truth(eval(e.args[0], env)));
    case K::kAnd: {
      const bool a = truth(eval(e.args[0], env));
      const bool b = truth(eval(e.args[1], env));
      return boolean(a && b);
    }
    case K::kOr: {
      const bool a = truth(eval(e.args[0], env));
      const bool b = truth(eval(e.args[1], env));
      return boolean(a || b);
    }
  }
  throw EvalError("unknown expression");
}

std::vector<Term> Mcrl2Model::values(const std::string& sort) const {
  auto it = sorts_.find(sort);
  if (it == sorts_.end()) throw EvalError("unknown sort " + sort);
  std::vector<Term> out;
  for (const auto& c : it->second->constructors) {
    std::vector<Term> partial{{c.name, {}}};
    for (const auto& p : c.projections) {
      const auto dom = values(p.sort);
      std::vector<Term> next;
      for (const auto& t : partial) {
        for (const auto& v : dom) {
          Term w = t;
          w.args.push_back(v);
          next.push_back(std::move(w));
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

Term to_term(const Value& v, const check::ModelIndex& index, const mcrl2::NameTable& names) {
  if (const auto* e = index.enumeration(v.type_id)) {
    for (const auto& l : e->literals) {
      if (l.name == v.literal) return {names.at(l.id), {}};
    }
    throw EvalError("literal " + v.literal + " not in " + e->name);
  }
  Term t{names.at(v.type_id), {}};
  for (const auto& f : v.fields) t.args.push_back(to_term(f, index, names));
  return t;
}

Value from_term(const Term& t, const check::ModelIndex& index, const mcrl2::NameTable& names) {
  const std::string key = names.key_of(t.head);
  if (const auto* lit = index.literal(key)) return {lit->enumeration->id, lit->literal->name, {}};
  const auto* b = index.block(key);
  if (!b) throw EvalError("term " + to_string(t) + " names no value");
  Value v{b->id, {}, {}};
  for (const auto& a : t.args) v.fields.push_back(from_term(a, index, names));
  return v;
}

namespace {

void free_names(const Expr& e, std::set<std::string>& out) {
  if (e.kind == K::kName) out.insert(e.name);
  for (const auto& a : e.args) free_names(a, out);
}

}  // namespace

SolvedStep solve_step(const Mcrl2Model& model, const mcrl2::ProcDecl& proc, const TermEnv& state,
                      const TermEnv& given) {
  TermEnv env;
  for (const auto& p : proc.params) {
    auto it = state.find(p.name);
    if (it == state.end()) throw EvalError("no value for parameter " + p.name);
    env[p.name] = it->second;
  }
  std::map<std::string, std::string> unknown;  // summation variable -> sort
  SolvedStep out;
  for (const auto& v : proc.body.sum) {
    if (auto it = given.find(v.name); it != given.end()) {
      env[v.name] = it->second;
      out.sum[v.name] = it->second;
    } else {
      unknown[v.name] = v.sort;
    }
  }

  const std::vector<Expr> cs = mcrl2::conjuncts(proc.body.condition);
  while (!unknown.empty()) {
    bool progressed = false;
    for (const auto& c : cs) {
      if (c.kind != K::kEq || c.args[0].kind != K::kName || !unknown.count(c.args[0].name)) continue;
      std::set<std::string> deps;
      free_names(c.args[1], deps);
      if (std::any_of(deps.begin(), deps.end(), [&](const std::string& n) { return unknown.count(n) > 0; })) {
        continue;
      }
      const std::string o = c.args[0].name;
      std::vector<Term> sat;
      for (const auto& candidate : model.values(unknown.at(o))) {
        TermEnv trial = env;
        trial[o] = candidate;
        if (truth(model.eval(c, trial))) sat.push_back(candidate);
      }
      if (sat.size() != 1) {
        throw EvalError(std::to_string(sat.size()) + " values satisfy the conjunct for " + o);
      }
      env[o] = sat[0];
      out.sum[o] = sat[0];
      unknown.erase(o);
      progressed = true;
    }
    if (!progressed) throw EvalError("summation variables not determined by the condition");
  }
  if (!truth(model.eval(proc.body.condition, env))) throw EvalError("condition does not hold");

  for (const auto& a : proc.body.actions) {
    if (a.args.size() != 1) throw EvalError("action " + a.name + " expects one argument");
    out.actions.emplace_back(a.name, model.eval(a.args[0], env));
  }
  for (const auto& p : proc.params) out.next[p.name] = env.at(p.name);
  for (const auto& [name, value] : proc.body.next.updates) out.next[name] = model.eval(value, env);
  return out;
}

}  // namespace ad2mcrl2::oracle
