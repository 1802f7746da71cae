#include "ad2mcrl2/mcrl2/names.hpp"

#include <cctype>
#include <stdexcept>

namespace ad2mcrl2::mcrl2 {

namespace {

const std::set<std::string_view> kReserved = {
    "sort",  "cons",  "map",   "var",    "eqn",    "act",   "proc",  "init",  "glob",  "struct",
    "sum",   "if",    "true",  "false",  "whr",    "end",   "lambda", "forall", "exists", "div",
    "mod",   "in",    "Bool",  "Pos",    "Nat",    "Int",   "Real",  "List",  "Set",   "Bag",
    "FSet",  "FBag",  "delta", "tau",    "block",  "allow", "hide",  "rename", "comm",  "val",
    "min",   "max",   "succ",  "pred",   "abs",    "head",  "tail",  "rhead", "rtail", "count",
    "exp",   "nu",    "mu",    "pbes",   "nil",    "dist",  "ceil",  "floor", "round", "Pos2Nat",
    "Nat2Pos", "Int2Nat", "Int2Pos", "Real2Int", "Real2Nat", "Real2Pos"};

}  // namespace

bool is_reserved(std::string_view word) { return kReserved.count(word) > 0; }

std::string sanitize(std::string_view raw) {
  std::string out;
  for (char c : raw) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    out += ok ? c : '_';
  }
  if (out.empty() || !(std::isalpha(static_cast<unsigned char>(out[0])) || out[0] == '_')) {
    out.insert(out.begin(), '_');
  }
  return out;
}

const std::string& NameTable::uniquify(const std::string& key, std::string_view raw) {
  if (auto it = by_key_.find(key); it != by_key_.end()) return it->second;
  std::string base = sanitize(raw);
  if (is_reserved(base)) base += '\'';
  std::string name = base;
  for (int n = 2; by_name_.count(name); ++n) name = base + std::to_string(n);
  by_name_[name] = key;
  return by_key_[key] = name;
}

const std::string& NameTable::at(const std::string& key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) throw std::out_of_range("no emitted name for " + key);
  return it->second;
}

std::string NameTable::key_of(const std::string& emitted) const {
  auto it = by_name_.find(emitted);
  return it == by_name_.end() ? std::string() : it->second;
}

std::string map_key(const std::string& activity_id) { return activity_id + "#map"; }

NameTable build_name_table(const check::TypedModel& tm) {
  NameTable t;
  xmi::for_each_element(tm.doc->root, [&](const auto& elem) {
    using T = std::decay_t<decltype(elem)>;
    if constexpr (std::is_same_v<T, xmi::Enumeration>) {
      t.uniquify(elem.id, elem.name);
      for (const auto& lit : elem.literals) t.uniquify(lit.id, lit.name);
    } else if constexpr (std::is_same_v<T, xmi::Block>) {
      t.uniquify(elem.id, elem.name);
      for (const auto& p : elem.properties) t.uniquify(p.id, p.name);
    } else if constexpr (std::is_same_v<T, xmi::Activity>) {
      const auto leaf = tm.leaves.find(elem.id);
      if (leaf != tm.leaves.end()) {
        const auto* out = std::get_if<xmi::ActivityParameter>(tm.index->node(leaf->second.output)->node);
        t.uniquify(map_key(elem.id), "compute_" + out->name);
      } else {
        t.uniquify(elem.id, elem.name);
        for (const auto& attr : elem.attributes) t.uniquify(attr.id, attr.name);
      }
      for (const auto& n : elem.nodes) {
        if (const auto* p = std::get_if<xmi::ActivityParameter>(&n)) {
          if (leaf == tm.leaves.end() || p->id != leaf->second.output) t.uniquify(p->id, p->name);
        }
      }
      for (const auto& n : elem.nodes) {
        if (const auto* call = std::get_if<xmi::CallBehaviour>(&n)) {
          for (const auto& pin : call->pins) {
            if (pin.direction == xmi::PinDirection::kOutput) t.uniquify(pin.id, pin.name);
          }
        }
      }
    }
  });
  return t;
}

}  // namespace ad2mcrl2::mcrl2
