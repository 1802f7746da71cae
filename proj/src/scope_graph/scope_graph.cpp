#include "ad2mcrl2/scope_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ad2mcrl2 {

char to_char(Label l) {
  switch (l) {
    case Label::P: return 'P';
    case Label::T: return 'T';
    case Label::L: return 'L';
    case Label::E: return 'E';
  }
  return '?';
}

std::string to_string(const std::vector<Label>& path) {
  std::string out;
  for (Label l : path) out += to_char(l);
  return out;
}

namespace {

std::string scope_name(ScopeId s) { return "s" + std::to_string(s.value); }

struct TypePrinter {
  std::string operator()(const EnumType& t) const {
    return "ENUM(" + t.id + "," + t.name + "," + scope_name(t.scope) + ")";
  }
  std::string operator()(const BlockType& t) const {
    return "BLOCK(" + t.id + "," + t.name + "," + scope_name(t.scope) + ")";
  }
  std::string operator()(const ActType& t) const {
    return "ACT(" + t.id + "," + scope_name(t.scope) + ")";
  }
  std::string operator()(const ParamType& t) const {
    return "PARAM(" + t.id + "," + t.name + "," + std::visit(*this, t.inner) + "," +
           scope_name(t.scope) + ")";
  }
  std::string operator()(const BoolType&) const { return "BOOL"; }
};

}  // namespace

std::string to_string(const SemanticType& t) { return std::visit(TypePrinter{}, t); }

bool same_type(const SemanticType& a, const SemanticType& b) {
  if (a.index() != b.index()) return false;
  if (const auto* e = std::get_if<EnumType>(&a)) return e->id == std::get<EnumType>(b).id;
  if (const auto* bl = std::get_if<BlockType>(&a)) return bl->id == std::get<BlockType>(b).id;
  return a == b;
}

std::optional<ScopeId> type_scope(const SemanticType& t) {
  if (const auto* e = std::get_if<EnumType>(&t)) return e->scope;
  if (const auto* b = std::get_if<BlockType>(&t)) return b->scope;
  return std::nullopt;
}

std::optional<ValueType> as_value_type(const SemanticType& t) {
  if (const auto* e = std::get_if<EnumType>(&t)) return *e;
  if (const auto* b = std::get_if<BlockType>(&t)) return *b;
  return std::nullopt;
}

SemanticType widen(const ValueType& t) {
  return std::visit([](const auto& v) -> SemanticType { return v; }, t);
}

ScopeId ScopeGraph::fresh_scope() {
  decls_.emplace_back();
  out_.emplace_back();
  return ScopeId{static_cast<std::uint32_t>(decls_.size() - 1)};
}

bool ScopeGraph::reaches(ScopeId from, Label label, ScopeId to) const {
  std::vector<ScopeId> work{from};
  std::set<ScopeId> seen{from};
  while (!work.empty()) {
    const ScopeId s = work.back();
    work.pop_back();
    if (s == to) return true;
    for (std::size_t e : out_[s.value]) {
      if (edges_[e].label == label && seen.insert(edges_[e].to).second) work.push_back(edges_[e].to);
    }
  }
  return false;
}

void ScopeGraph::add_edge(ScopeId from, Label label, ScopeId to) {
  if (!contains(from) || !contains(to)) {
    throw GraphError("edge " + scope_name(from) + " -" + to_char(label) + "-> " + scope_name(to) +
                     " references an unknown scope");
  }
  if (label == Label::P) {
    for (std::size_t e : out_[from.value]) {
      if (edges_[e].label == Label::P) {
        throw GraphError(scope_name(from) + " already has a parent scope");
      }
    }
  }
  if ((label == Label::P || label == Label::E) && reaches(to, label, from)) {
    throw GraphError(std::string("edge ") + scope_name(from) + " -" + to_char(label) + "-> " +
                     scope_name(to) + " closes a cycle");
  }
  out_[from.value].push_back(edges_.size());
  edges_.push_back({from, label, to});
}

void ScopeGraph::declare(ScopeId scope, std::string name, SemanticType type, std::string origin) {
  if (!contains(scope)) throw GraphError("declaration in unknown scope " + scope_name(scope));
  if (name.empty()) throw GraphError("empty declaration name");
  auto& here = decls_[scope.value];
  if (std::any_of(here.begin(), here.end(), [&](const Declaration& d) { return d.name == name; })) {
    throw DuplicateDeclaration("duplicate declaration of '" + name + "' in " + scope_name(scope));
  }
  here.push_back({std::move(name), std::move(type), std::move(origin)});
}

const std::vector<Declaration>& ScopeGraph::declarations(ScopeId s) const {
  if (!contains(s)) throw GraphError("unknown scope " + scope_name(s));
  return decls_[s.value];
}

std::vector<Edge> ScopeGraph::out_edges(ScopeId s) const {
  std::vector<Edge> out;
  for (std::size_t e : out_.at(s.value)) out.push_back(edges_[e]);
  return out;
}

std::vector<Resolution> ScopeGraph::resolve(ScopeId start, const PathQuery& query,
                                            std::string_view name) const {
  if (!contains(start)) throw GraphError("resolve from unknown scope " + scope_name(start));

  struct Item {
    ScopeId scope;
    int state;
    std::vector<Label> path;
  };
  // Breadth-first over (scope, automaton state), one layer per path length.
  // Parents with equal words can sit in different scopes, so each new layer is
  // sorted by path before deduplication; the first visit of a product state
  // then carries the shortest, label-least path.
  std::vector<Resolution> out;
  std::set<std::pair<std::uint32_t, std::size_t>> found;
  std::set<std::pair<std::uint32_t, int>> visited{{start.value, query.start()}};
  std::vector<Item> layer{{start, query.start(), {}}};
  while (!layer.empty()) {
    std::vector<Item> next;
    for (const Item& item : layer) {
      if (query.accepting(item.state)) {
        const auto& here = decls_[item.scope.value];
        for (std::size_t i = 0; i < here.size(); ++i) {
          if (here[i].name == name && found.insert({item.scope.value, i}).second) {
            out.push_back({item.path, here[i], item.scope});
          }
        }
      }
      for (std::size_t e : out_[item.scope.value]) {
        const Edge& edge = edges_[e];
        const int q = query.step(item.state, edge.label);
        if (q < 0 || visited.count({edge.to.value, q})) continue;
        std::vector<Label> path = item.path;
        path.push_back(edge.label);
        next.push_back({edge.to, q, std::move(path)});
      }
    }
    std::stable_sort(next.begin(), next.end(), [](const Item& a, const Item& b) { return a.path < b.path; });
    layer.clear();
    for (Item& item : next) {
      if (visited.insert({item.scope.value, item.state}).second) layer.push_back(std::move(item));
    }
  }
  return out;
}

std::vector<ScopeId> ScopeGraph::detached_scopes() const {
  std::vector<ScopeId> out;
  for (std::uint32_t i = 0; i < decls_.size(); ++i) {
    if (!reaches(ScopeId{i}, Label::P, root())) out.push_back(ScopeId{i});
  }
  return out;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string ScopeGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph scope_graph {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::uint32_t i = 0; i < decls_.size(); ++i) {
    os << "  s" << i << " [label=\"s" << i;
    for (const Declaration& d : decls_[i]) os << "\\n" << escape(d.name + " : " + to_string(d.type));
    os << "\"];\n";
  }
  for (const Edge& e : edges_) {
    os << "  s" << e.from.value << " -> s" << e.to.value << " [label=\"" << to_char(e.label)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ad2mcrl2
