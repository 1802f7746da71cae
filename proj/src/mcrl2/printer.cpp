#include <sstream>

#include "ad2mcrl2/mcrl2/ast.hpp"

namespace ad2mcrl2::mcrl2 {

namespace {

using K = Expr::Kind;

std::string print(const Expr& e, bool nested);

std::string chain(const Expr& e, K kind, const char* op) {
  std::string out;
  const Expr* at = &e;
  while (at->kind == kind) {
    out += print(at->args[0], true) + " " + op + " ";
    at = &at->args[1];
  }
  return out + print(*at, true);
}

std::string print(const Expr& e, bool nested) {
  auto wrap = [&](std::string s) { return nested ? "(" + s + ")" : s; };
  switch (e.kind) {
    case K::kTrue: return "true";
    case K::kName: return e.name;
    case K::kApply: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += print(e.args[i], true);
      }
      return out + ")";
    }
    case K::kIf:
      return "if(" + print(e.args[0], true) + ", " + print(e.args[1], true) + ", " +
             print(e.args[2], true) + ")";
    case K::kEq: return wrap(print(e.args[0], true) + " == " + print(e.args[1], true));
    case K::kNeq: return wrap(print(e.args[0], true) + " != " + print(e.args[1], true));
    case K::kNot: return "!" + print(e.args[0], true);
    case K::kAnd: return wrap(chain(e, K::kAnd, "&&"));
    case K::kOr: return wrap(chain(e, K::kOr, "||"));
  }
  return "";
}

std::string join_sorts(const std::vector<std::string>& sorts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < sorts.size(); ++i) out += (i ? sep : "") + sorts[i];
  return out;
}

std::string var_list(const std::vector<VarDecl>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i].name + " : " + vars[i].sort;
  return out;
}

void print_call(std::ostream& os, const ProcCall& call, const std::string& indent) {
  os << call.name;
  if (!call.updates.empty()) {
    os << "(\n";
    for (std::size_t i = 0; i < call.updates.size(); ++i) {
      os << indent << "  " << call.updates[i].first << " = " << print(call.updates[i].second, false)
         << (i + 1 < call.updates.size() ? ",\n" : "\n");
    }
    os << indent << ")";
  } else if (!call.args.empty()) {
    os << "(";
    for (std::size_t i = 0; i < call.args.size(); ++i) os << (i ? ", " : "") << print(call.args[i], true);
    os << ")";
  }
}

void print_proc(std::ostream& os, const ProcDecl& p) {
  os << "  " << p.name;
  if (!p.params.empty()) {
    os << "(\n";
    for (std::size_t i = 0; i < p.params.size(); ++i) {
      os << "    " << p.params[i].name << " : " << p.params[i].sort
         << (i + 1 < p.params.size() ? ",\n" : "\n");
    }
    os << "  )";
  }
  os << " =\n";
  const ProcBody& b = p.body;
  if (!b.sum.empty()) {
    os << "    sum\n";
    for (std::size_t i = 0; i < b.sum.size(); ++i) {
      os << "      " << b.sum[i].name << " : " << b.sum[i].sort << (i + 1 < b.sum.size() ? ",\n" : "\n");
    }
    os << "    . ";
  } else {
    os << "    ";
  }
  const std::vector<Expr> cs = conjuncts(b.condition);
  if (cs.size() > 1) {
    os << "(\n";
    for (std::size_t i = 0; i < cs.size(); ++i) os << "      " << (i ? "&& " : "") << print(cs[i], true) << "\n";
    os << "    )";
  } else {
    os << print(b.condition, true);
  }
  os << "\n    -> ";
  if (b.actions.empty()) os << "tau";
  for (std::size_t i = 0; i < b.actions.size(); ++i) {
    const Action& a = b.actions[i];
    if (i) os << "\n     | ";
    os << a.name;
    if (!a.args.empty()) {
      os << "(";
      for (std::size_t j = 0; j < a.args.size(); ++j) os << (j ? ", " : "") << print(a.args[j], true);
      os << ")";
    }
  }
  os << "\n    . ";
  print_call(os, b.next, "    ");
  os << ";\n";
}

}  // namespace

std::string to_string(const Expr& e) { return print(e, false); }

std::vector<Expr> conjuncts(const Expr& e) {
  std::vector<Expr> out;
  const Expr* at = &e;
  while (at->kind == K::kAnd) {
    out.push_back(at->args[0]);
    at = &at->args[1];
  }
  out.push_back(*at);
  return out;
}

std::string pretty_print(const Spec& spec) {
  std::ostringstream os;
  bool first = true;
  auto section = [&](const char* kw) {
    if (!first) os << "\n";
    first = false;
    os << kw << "\n";
  };
  if (!spec.sorts.empty()) {
    section("sort");
    for (const SortDecl& s : spec.sorts) {
      os << "  " << s.name << " = struct ";
      for (std::size_t i = 0; i < s.constructors.size(); ++i) {
        const Constructor& c = s.constructors[i];
        os << (i ? " | " : "") << c.name;
        if (!c.projections.empty()) {
          os << "(";
          for (std::size_t j = 0; j < c.projections.size(); ++j) {
            os << (j ? ", " : "") << c.projections[j].name << " : " << c.projections[j].sort;
          }
          os << ")";
        }
      }
      os << ";\n";
    }
  }
  if (!spec.maps.empty()) {
    section("map");
    for (const MapDecl& m : spec.maps) {
      os << "  " << m.name << " : ";
      if (!m.domain.empty()) os << join_sorts(m.domain, " # ") << " -> ";
      os << m.codomain << ";\n";
    }
  }
  for (const EqnDecl& e : spec.eqns) {
    if (!e.vars.empty()) {
      section("var");
      os << "  " << var_list(e.vars) << ";\n";
      os << "eqn\n";
    } else {
      section("eqn");
    }
    os << "  " << print(e.lhs, false) << " = " << print(e.rhs, false) << ";\n";
  }
  if (!spec.acts.empty()) {
    section("act");
    for (const ActDecl& a : spec.acts) {
      os << "  " << a.name;
      if (!a.sorts.empty()) os << " : " << join_sorts(a.sorts, " # ");
      os << ";\n";
    }
  }
  if (!spec.procs.empty()) {
    section("proc");
    for (const ProcDecl& p : spec.procs) print_proc(os, p);
  }
  if (spec.init) {
    if (!first) os << "\n";
    os << "init ";
    print_call(os, *spec.init, "");
    os << ";\n";
  }
  return os.str();
}

}  // namespace ad2mcrl2::mcrl2
