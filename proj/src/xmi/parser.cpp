#include "ad2mcrl2/xmi/parser.hpp"

#include <algorithm>
#include <set>
#include <string_view>

namespace ad2mcrl2::xmi {
namespace {

struct XmlAttr {
  std::string name;
  std::string value;
  std::size_t begin;
  std::size_t end;
};

struct XmlElement {
  std::string tag;
  std::vector<XmlAttr> attrs;
  std::vector<XmlElement> children;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// ---------------------------------------------------------------------------
// Token stream -> generic element tree.

class TreeBuilder {
 public:
  explicit TreeBuilder(const std::vector<Token>& toks) : toks_(toks) {}

  XmlElement document() {
    if (toks_.empty()) throw error("empty document", 0, 0);
    XmlElement root = element();
    if (pos_ != toks_.size()) {
      const Token& t = toks_[pos_];
      throw error("content after the root element", t.begin, t.end);
    }
    return root;
  }

 private:
  ParseError error(const std::string& msg, std::size_t b, std::size_t e) const {
    return ParseError("XmiSyntax", msg, {b, e, std::nullopt});
  }

  const Token& expect(TokenKind kind) {
    if (pos_ >= toks_.size()) {
      const std::size_t at = toks_.empty() ? 0 : toks_.back().end;
      throw error(std::string("expected ") + to_string(kind) + " before end of input", at, at);
    }
    const Token& t = toks_[pos_];
    if (t.kind != kind) {
      throw error(std::string("expected ") + to_string(kind) + ", found " + to_string(t.kind) +
                      " '" + t.text + "'",
                  t.begin, t.end);
    }
    ++pos_;
    return t;
  }

  bool at(TokenKind kind) const { return pos_ < toks_.size() && toks_[pos_].kind == kind; }

  XmlElement element() {
    XmlElement el;
    el.begin = expect(TokenKind::kOpen).begin;
    el.tag = expect(TokenKind::kTag).text;
    while (at(TokenKind::kProperty)) {
      const Token& name = toks_[pos_++];
      expect(TokenKind::kEquals);
      if (!at(TokenKind::kString) && !at(TokenKind::kNumber)) {
        const Token& t = pos_ < toks_.size() ? toks_[pos_] : name;
        throw error("expected quoted value for property '" + name.text + "'", t.begin, t.end);
      }
      const Token& value = toks_[pos_++];
      el.attrs.push_back({name.text, value.text, name.begin, value.end});
    }
    if (at(TokenKind::kSelfClose)) {
      el.end = toks_[pos_++].end;
      return el;
    }
    expect(TokenKind::kClose);
    while (at(TokenKind::kOpen)) el.children.push_back(element());
    expect(TokenKind::kOpenClose);
    const Token& closing = expect(TokenKind::kTag);
    if (closing.text != el.tag) {
      throw error("closing tag </" + closing.text + "> does not match <" + el.tag + ">",
                  closing.begin, closing.end);
    }
    el.end = expect(TokenKind::kClose).end;
    return el;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Element tree -> abstract constructors.

struct PropSpec {
  std::string_view name;
  bool required;
};

using Schema = std::vector<PropSpec>;

const Schema kNamedSchema = {{"xmi:type", true}, {"xmi:id", true}, {"name", true},
                             {"visibility", false}};
const Schema kLiteralSchema = {{"xmi:type", true}, {"xmi:id", true}, {"name", true},
                               {"visibility", false}};
const Schema kCallSchema = {{"xmi:type", true},    {"xmi:id", true},  {"name", true},
                            {"visibility", false}, {"behavior", true}};
const Schema kEdgeSchema = {{"xmi:type", true},    {"xmi:id", true}, {"name", false},
                            {"visibility", false}, {"source", true}, {"target", true}};
const Schema kIdrefSchema = {{"xmi:idref", true}};
const Schema kValueSchema = {{"xmi:type", true}, {"xmi:id", true}, {"value", true}};
const Schema kModelSchema = {{"xmi:type", true}, {"xmi:id", false}, {"name", true},
                             {"visibility", false}};

bool skipped(std::string_view tag) {
  return tag == "xmi:Extension" || tag == "xmi:Documentation" || tag == "diagram" ||
         tag == "diagrams" || tag == "ownedComment";
}

class Converter {
 public:
  XmiDocument convert(const XmlElement& root) {
    if (root.tag != "xmi:XMI") {
      throw ParseError("XmiSyntax", "root element must be <xmi:XMI>, found <" + root.tag + ">",
                       span(root));
    }
    const XmlElement* model = nullptr;
    for (const XmlElement& child : root.children) {
      if (skipped(child.tag)) continue;
      if (child.tag != "uml:Model") unsupported(child, "inside <xmi:XMI>");
      if (model) throw ParseError("XmiSyntax", "more than one <uml:Model>", span(child));
      model = &child;
    }
    if (!model) throw ParseError("XmiSyntax", "missing <uml:Model>", span(root));
    read_props(*model, kModelSchema);

    const XmlElement* root_pkg = nullptr;
    for (const XmlElement& child : model->children) {
      if (skipped(child.tag)) continue;
      if (child.tag != "packagedElement" || type_of(child) != "uml:Package") {
        unsupported(child, "directly inside <uml:Model>");
      }
      if (root_pkg) {
        throw ParseError("XmiSyntax", "<uml:Model> must contain exactly one root package",
                         span(child));
      }
      root_pkg = &child;
    }
    if (!root_pkg) throw ParseError("XmiSyntax", "<uml:Model> has no root package", span(*model));

    XmiDocument doc;
    doc.root = package(*root_pkg);
    check_references();
    doc.spans = std::move(spans_);
    return doc;
  }

 private:
  static SourceSpan span(const XmlElement& el, std::optional<std::string> id = std::nullopt) {
    return {el.begin, el.end, std::move(id)};
  }

  [[noreturn]] static void unsupported(const XmlElement& el, const std::string& where) {
    std::string what = "<" + el.tag;
    if (const std::string t = type_of(el); !t.empty()) what += " xmi:type=\"" + t + "\"";
    what += ">";
    throw ParseError("UnsupportedConstruct", "unsupported construct " + what + " " + where,
                     span(el));
  }

  static std::string type_of(const XmlElement& el) {
    for (const XmlAttr& a : el.attrs) {
      if (a.name == "xmi:type") return a.value;
    }
    return {};
  }

  static std::string id_of(const XmlElement& el) {
    for (const XmlAttr& a : el.attrs) {
      if (a.name == "xmi:id") return a.value;
    }
    return {};
  }

  // Checks that the properties follow `schema` in order and returns them by name.
  std::map<std::string, std::string> read_props(const XmlElement& el, const Schema& schema) {
    std::map<std::string, std::string> out;
    std::optional<std::string> id;
    if (std::string i = id_of(el); !i.empty()) id = i;
    std::size_t next = 0;
    for (const XmlAttr& a : el.attrs) {
      const SourceSpan at{a.begin, a.end, id};
      std::size_t j = next;
      while (j < schema.size() && schema[j].name != a.name) ++j;
      if (j == schema.size()) {
        const bool earlier = std::any_of(schema.begin(), schema.begin() + next,
                                         [&](const PropSpec& p) { return p.name == a.name; });
        if (earlier) {
          throw ParseError("PropertyOrder",
                           "property '" + a.name + "' of <" + el.tag + "> is out of order", at);
        }
        throw ParseError("XmiSyntax", "unexpected property '" + a.name + "' on <" + el.tag + ">",
                         at);
      }
      for (std::size_t k = next; k < j; ++k) {
        if (schema[k].required) {
          const bool later = std::any_of(el.attrs.begin(), el.attrs.end(), [&](const XmlAttr& b) {
            return b.name == schema[k].name;
          });
          throw ParseError(later ? "PropertyOrder" : "MissingProperty",
                           later ? "property '" + std::string(schema[k].name) + "' of <" + el.tag +
                                       "> is out of order"
                                 : "missing required property '" + std::string(schema[k].name) +
                                       "' on <" + el.tag + ">",
                           at);
        }
      }
      out[a.name] = a.value;
      next = j + 1;
    }
    for (std::size_t k = next; k < schema.size(); ++k) {
      if (schema[k].required) {
        throw ParseError("MissingProperty",
                         "missing required property '" + std::string(schema[k].name) + "' on <" +
                             el.tag + ">",
                         span(el, id));
      }
    }
    return out;
  }

  std::string register_id(const XmlElement& el, const std::string& id) {
    if (id.empty()) throw ParseError("MissingProperty", "empty xmi:id on <" + el.tag + ">", span(el));
    if (spans_.count(id)) {
      throw ParseError("DuplicateId", "duplicate xmi:id \"" + id + "\"", span(el, id));
    }
    spans_[id] = span(el, id);
    return id;
  }

  // Type references are left to the checker, which reports them against the
  // owning element's rule.
  std::string idref(const XmlElement& el, bool structural = true) {
    std::string ref = read_props(el, kIdrefSchema).at("xmi:idref");
    if (structural) refs_.push_back({ref, span(el)});
    return ref;
  }

  Package package(const XmlElement& el) {
    auto props = read_props(el, kNamedSchema);
    Package pkg;
    pkg.id = register_id(el, props["xmi:id"]);
    pkg.name = props["name"];
    for (const XmlElement& child : el.children) {
      if (skipped(child.tag)) continue;
      if (child.tag != "packagedElement") unsupported(child, "inside package");
      const std::string type = type_of(child);
      if (type == "uml:Package") {
        pkg.children.emplace_back(Box<Package>(package(child)));
      } else if (type == "uml:Enumeration") {
        pkg.children.emplace_back(enumeration(child));
      } else if (type == "uml:Class") {
        pkg.children.emplace_back(block(child));
      } else if (type == "uml:Activity") {
        pkg.children.emplace_back(activity(child));
      } else {
        unsupported(child, "inside package");
      }
    }
    return pkg;
  }

  Enumeration enumeration(const XmlElement& el) {
    auto props = read_props(el, kNamedSchema);
    Enumeration e;
    e.id = register_id(el, props["xmi:id"]);
    e.name = props["name"];
    for (const XmlElement& child : el.children) {
      if (skipped(child.tag)) continue;
      if (child.tag != "ownedLiteral" || type_of(child) != "uml:EnumerationLiteral") {
        unsupported(child, "inside enumeration");
      }
      auto lp = read_props(child, kLiteralSchema);
      e.literals.push_back({register_id(child, lp["xmi:id"]), lp["name"]});
    }
    return e;
  }

  // Returns the idref of the single <type> child; other children are handed
  // to `other`.
  template <typename Fn>
  std::string typed_children(const XmlElement& el, Fn&& other) {
    std::optional<std::string> type;
    for (const XmlElement& child : el.children) {
      if (skipped(child.tag)) continue;
      if (child.tag == "type") {
        if (type) throw ParseError("XmiSyntax", "duplicate <type> on <" + el.tag + ">", span(child));
        type = idref(child, false);
      } else {
        other(child);
      }
    }
    if (!type) {
      throw ParseError("MissingProperty", "missing <type> on <" + el.tag + ">",
                       span(el, id_of(el)));
    }
    return *type;
  }

  Block block(const XmlElement& el) {
    auto props = read_props(el, kNamedSchema);
    Block b;
    b.id = register_id(el, props["xmi:id"]);
    b.name = props["name"];
    for (const XmlElement& child : el.children) {
      if (skipped(child.tag)) continue;
      if (child.tag != "ownedAttribute" || type_of(child) != "uml:Property") {
        unsupported(child, "inside block");
      }
      auto pp = read_props(child, kNamedSchema);
      Property p;
      p.id = register_id(child, pp["xmi:id"]);
      p.name = pp["name"];
      p.type = typed_children(child, [&](const XmlElement& c) { unsupported(c, "inside property"); });
      b.properties.push_back(std::move(p));
    }
    return b;
  }

  Attribute attribute(const XmlElement& el) {
    auto props = read_props(el, kNamedSchema);
    Attribute a;
    a.id = register_id(el, props["xmi:id"]);
    a.name = props["name"];
    std::optional<std::string> def;
    a.type = typed_children(el, [&](const XmlElement& c) {
      if (c.tag != "defaultValue" || type_of(c) != "uml:LiteralString") {
        unsupported(c, "inside attribute");
      }
      if (def) throw ParseError("XmiSyntax", "duplicate <defaultValue>", span(c));
      auto dp = read_props(c, kValueSchema);
      register_id(c, dp["xmi:id"]);
      def = dp["value"];
    });
    if (!def) {
      throw ParseError("MissingProperty", "attribute '" + a.name + "' has no <defaultValue>",
                       span(el, a.id));
    }
    a.default_value = *def;
    return a;
  }

  bool flow_ref(const XmlElement& child, FlowRefs& flows) {
    if (child.tag == "incoming") {
      flows.incoming.push_back(idref(child));
      return true;
    }
    if (child.tag == "outgoing") {
      flows.outgoing.push_back(idref(child));
      return true;
    }
    return false;
  }

  Pin pin(const XmlElement& el, PinDirection dir) {
    const std::string expected = dir == PinDirection::kInput ? "uml:InputPin" : "uml:OutputPin";
    if (type_of(el) != expected) unsupported(el, "as pin");
    auto props = read_props(el, kNamedSchema);
    Pin p;
    p.id = register_id(el, props["xmi:id"]);
    p.name = props["name"];
    p.direction = dir;
    p.type = typed_children(el, [&](const XmlElement& c) {
      if (!flow_ref(c, p.flows)) unsupported(c, "inside pin");
    });
    return p;
  }

  ActivityNode node(const XmlElement& el) {
    const std::string type = type_of(el);
    if (type == "uml:CallBehaviorAction") {
      auto props = read_props(el, kCallSchema);
      CallBehaviour call;
      call.id = register_id(el, props["xmi:id"]);
      call.name = props["name"];
      call.behaviour = props["behavior"];
      for (const XmlElement& c : el.children) {
        if (skipped(c.tag) || flow_ref(c, call.flows)) continue;
        if (c.tag == "argument") {
          call.pins.push_back(pin(c, PinDirection::kInput));
        } else if (c.tag == "result") {
          call.pins.push_back(pin(c, PinDirection::kOutput));
        } else {
          unsupported(c, "inside call behaviour action");
        }
      }
      return call;
    }
    auto props = read_props(el, kNamedSchema);
    const std::string id = register_id(el, props["xmi:id"]);
    const std::string name = props["name"];
    if (type == "uml:AddStructuralFeatureValueAction") {
      WriteVariable wv;
      wv.id = id;
      wv.name = name;
      std::optional<Pin> value;
      for (const XmlElement& c : el.children) {
        if (skipped(c.tag) || flow_ref(c, wv.flows)) continue;
        if (c.tag != "value") unsupported(c, "inside write-variable action");
        if (value) throw ParseError("XmiSyntax", "duplicate <value> pin", span(c));
        value = pin(c, PinDirection::kInput);
      }
      if (!value) throw ParseError("MissingProperty", "write-variable action has no <value> pin", span(el, id));
      wv.pin = std::move(*value);
      return wv;
    }
    if (type == "uml:ActivityParameterNode") {
      ActivityParameter ap;
      ap.id = id;
      ap.name = name;
      ap.type = typed_children(el, [&](const XmlElement& c) {
        if (!flow_ref(c, ap.flows)) unsupported(c, "inside activity parameter");
      });
      return ap;
    }
    FlowRefs flows;
    for (const XmlElement& c : el.children) {
      if (skipped(c.tag) || flow_ref(c, flows)) continue;
      unsupported(c, "inside activity node");
    }
    if (type == "uml:InitialNode") return ActivityInitial{id, name, flows};
    if (type == "uml:ActivityFinalNode") return ActivityFinal{id, name, flows};
    if (type == "uml:DecisionNode") return DecisionNode{id, name, flows};
    unsupported(el, "inside activity");
  }

  Flow edge(const XmlElement& el) {
    const std::string type = type_of(el);
    if (type != "uml:ObjectFlow" && type != "uml:ControlFlow") unsupported(el, "inside activity");
    auto props = read_props(el, kEdgeSchema);
    Flow f;
    f.id = register_id(el, props["xmi:id"]);
    f.kind = type == "uml:ObjectFlow" ? FlowKind::kObject : FlowKind::kControl;
    f.name = props["name"];
    f.source = props["source"];
    f.target = props["target"];
    refs_.push_back({f.source, span(el, f.id)});
    refs_.push_back({f.target, span(el, f.id)});
    bool has_guard = false;
    for (const XmlElement& c : el.children) {
      if (skipped(c.tag)) continue;
      if (c.tag != "guard" || type_of(c) != "uml:LiteralString") unsupported(c, "inside flow");
      if (has_guard) throw ParseError("XmiSyntax", "duplicate <guard>", span(c));
      auto gp = read_props(c, kValueSchema);
      register_id(c, gp["xmi:id"]);
      f.guard = gp["value"];
      has_guard = true;
    }
    return f;
  }

  Activity activity(const XmlElement& el) {
    auto props = read_props(el, kNamedSchema);
    Activity a;
    a.id = register_id(el, props["xmi:id"]);
    a.name = props["name"];
    for (const XmlElement& child : el.children) {
      if (skipped(child.tag)) continue;
      if (child.tag == "ownedAttribute" && type_of(child) == "uml:Property") {
        a.attributes.push_back(attribute(child));
      } else if (child.tag == "node") {
        a.nodes.push_back(node(child));
      } else if (child.tag == "edge") {
        a.flows.push_back(edge(child));
      } else {
        unsupported(child, "inside activity '" + a.name + "'");
      }
    }
    return a;
  }

  void check_references() const {
    for (const auto& [ref, at] : refs_) {
      if (!spans_.count(ref)) {
        throw ParseError("UnresolvedReference", "reference to unknown xmi:id \"" + ref + "\"", at);
      }
    }
  }

  std::map<std::string, SourceSpan> spans_;
  std::vector<std::pair<std::string, SourceSpan>> refs_;
};

}  // namespace

const std::string& node_id(const ActivityNode& node) {
  return std::visit([](const auto& n) -> const std::string& { return n.id; }, node);
}

const FlowRefs& node_flows(const ActivityNode& node) {
  return std::visit([](const auto& n) -> const FlowRefs& { return n.flows; }, node);
}

XmiDocument parse_document(const std::vector<Token>& tokens) {
  const XmlElement root = TreeBuilder(tokens).document();
  return Converter().convert(root);
}

XmiDocument parse_flow_annotations(XmiDocument doc) {
  for_each_element(doc.root, [&](auto& elem) {
    using T = std::decay_t<decltype(elem)>;
    if constexpr (std::is_same_v<T, Activity>) {
      for (Flow& f : elem.flows) {
        const auto it = doc.spans.find(f.id);
        const SourceSpan at = it != doc.spans.end() ? it->second : SourceSpan{0, 0, f.id};
        try {
          f.assignment.reset();
          if (!f.name.empty()) f.assignment = expr::parse_assignment(f.name);
        } catch (const expr::SyntaxError& e) {
          throw ParseError("FlowAnnotation",
                           "flow " + f.id + ": bad assignment '" + f.name + "': " + e.what(), at);
        }
        try {
          f.guard_expr = expr::parse_guard(f.guard);
        } catch (const expr::SyntaxError& e) {
          throw ParseError("FlowAnnotation",
                           "flow " + f.id + ": bad guard '" + f.guard + "': " + e.what(), at);
        }
      }
    }
  });
  return doc;
}

XmiDocument load_document(std::string_view text) {
  std::vector<Token> tokens;
  try {
    tokens = tokenize(text);
  } catch (const LexError& e) {
    throw ParseError("XmiSyntax", e.what(), e.span());
  }
  return parse_flow_annotations(parse_document(tokens));
}

}  // namespace ad2mcrl2::xmi
