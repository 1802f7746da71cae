#include "support.hpp"

#include <algorithm>
#include <iterator>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "ad2mcrl2/xmi/parser.hpp"

namespace ad2mcrl2::testing {

std::string corpus_path(const std::string& name) { return std::string(AD2MCRL2_CORPUS_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string corpus_text(const std::string& name) { return read_text(corpus_path(name)); }

check::TypedModel typed_corpus(const std::string& name, check::CheckOptions opts) {
  auto result = check::check_document(xmi::load_document(corpus_text(name)), opts);
  if (!result.ok()) {
    std::string msg = name + " is not well-typed:";
    for (const auto& d : result.diagnostics) msg += "\n  " + check::format_text(d);
    throw std::runtime_error(msg);
  }
  return std::move(*result.model);
}

std::vector<std::string> error_rules(std::string_view text, check::CheckOptions opts) {
  xmi::XmiDocument doc;
  try {
    doc = xmi::load_document(text);
  } catch (const xmi::ParseError& e) {
    return {e.rule()};
  }
  std::vector<std::string> out;
  for (const auto& d : check::check_document(std::move(doc), opts).diagnostics) {
    if (d.severity == check::Severity::kError) out.push_back(d.rule);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Debug printer.

namespace {

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Printer {
 public:
  std::string run(const xmi::XmiDocument& doc) {
    line("<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    line("<xmi:XMI xmi:version=\"2.1\">");
    ++depth_;
    line("<uml:Model xmi:type=\"uml:Model\" name=\"EA_Model\">");
    ++depth_;
    package(doc.root);
    --depth_;
    line("</uml:Model>");
    --depth_;
    line("</xmi:XMI>");
    return out_.str();
  }

 private:
  void line(const std::string& s) { out_ << std::string(2 * depth_, ' ') << s << "\n"; }

  static std::string named(const std::string& type, const std::string& id, const std::string& name) {
    return "xmi:type=\"" + type + "\" xmi:id=\"" + esc(id) + "\" name=\"" + esc(name) + "\"";
  }

  void open(const std::string& tag, const std::string& props, bool empty) {
    line("<" + tag + " " + props + (empty ? "/>" : ">"));
    if (!empty) ++depth_;
  }

  void close(const std::string& tag) {
    --depth_;
    line("</" + tag + ">");
  }

  void type_ref(const std::string& id) { line("<type xmi:idref=\"" + esc(id) + "\"/>"); }

  void refs(const xmi::FlowRefs& f) {
    for (const auto& r : f.incoming) line("<incoming xmi:idref=\"" + esc(r) + "\"/>");
    for (const auto& r : f.outgoing) line("<outgoing xmi:idref=\"" + esc(r) + "\"/>");
  }

  void package(const xmi::Package& p) {
    open("packagedElement", named("uml:Package", p.id, p.name), p.children.empty());
    if (p.children.empty()) return;
    for (const auto& c : p.children) {
      std::visit([&](const auto& e) { element(e); }, c);
    }
    close("packagedElement");
  }

  void element(const Box<xmi::Package>& p) { package(*p); }

  void element(const xmi::Enumeration& e) {
    open("packagedElement", named("uml:Enumeration", e.id, e.name), e.literals.empty());
    if (e.literals.empty()) return;
    for (const auto& l : e.literals) {
      line("<ownedLiteral " + named("uml:EnumerationLiteral", l.id, l.name) + "/>");
    }
    close("packagedElement");
  }

  void element(const xmi::Block& b) {
    open("packagedElement", named("uml:Class", b.id, b.name), b.properties.empty());
    if (b.properties.empty()) return;
    for (const auto& p : b.properties) {
      open("ownedAttribute", named("uml:Property", p.id, p.name), false);
      type_ref(p.type);
      close("ownedAttribute");
    }
    close("packagedElement");
  }

  void pin(const std::string& tag, const xmi::Pin& p) {
    const char* type = p.direction == xmi::PinDirection::kInput ? "uml:InputPin" : "uml:OutputPin";
    open(tag, named(type, p.id, p.name), false);
    type_ref(p.type);
    refs(p.flows);
    close(tag);
  }

  void node(const xmi::ActivityNode& n) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, xmi::ActivityParameter>) {
            open("node", named("uml:ActivityParameterNode", v.id, v.name), false);
            type_ref(v.type);
            refs(v.flows);
            close("node");
          } else if constexpr (std::is_same_v<T, xmi::CallBehaviour>) {
            open("node", named("uml:CallBehaviorAction", v.id, v.name) + " behavior=\"" + esc(v.behaviour) + "\"",
                 false);
            for (const auto& p : v.pins) pin(p.direction == xmi::PinDirection::kInput ? "argument" : "result", p);
            refs(v.flows);
            close("node");
          } else if constexpr (std::is_same_v<T, xmi::WriteVariable>) {
            open("node", named("uml:AddStructuralFeatureValueAction", v.id, v.name), false);
            pin("value", v.pin);
            refs(v.flows);
            close("node");
          } else {
            const char* type = std::is_same_v<T, xmi::ActivityInitial> ? "uml:InitialNode"
                               : std::is_same_v<T, xmi::ActivityFinal> ? "uml:ActivityFinalNode"
                                                                       : "uml:DecisionNode";
            const bool empty = v.flows.incoming.empty() && v.flows.outgoing.empty();
            open("node", named(type, v.id, v.name), empty);
            if (empty) return;
            refs(v.flows);
            close("node");
          }
        },
        n);
  }

  void element(const xmi::Activity& a) {
    const bool empty = a.attributes.empty() && a.nodes.empty() && a.flows.empty();
    open("packagedElement", named("uml:Activity", a.id, a.name), empty);
    if (empty) return;
    for (const auto& at : a.attributes) {
      open("ownedAttribute", named("uml:Property", at.id, at.name), false);
      type_ref(at.type);
      line("<defaultValue xmi:type=\"uml:LiteralString\" xmi:id=\"" + esc(at.id) + "_dv\" value=\"" +
           esc(at.default_value) + "\"/>");
      close("ownedAttribute");
    }
    for (const auto& n : a.nodes) node(n);
    for (const auto& f : a.flows) {
      std::string props = std::string("xmi:type=\"") +
                          (f.kind == xmi::FlowKind::kObject ? "uml:ObjectFlow" : "uml:ControlFlow") +
                          "\" xmi:id=\"" + esc(f.id) + "\"";
      if (!f.name.empty()) props += " name=\"" + esc(f.name) + "\"";
      props += " source=\"" + esc(f.source) + "\" target=\"" + esc(f.target) + "\"";
      open("edge", props, f.guard.empty());
      if (f.guard.empty()) continue;
      line("<guard xmi:type=\"uml:LiteralString\" xmi:id=\"" + esc(f.id) + "_g\" value=\"" + esc(f.guard) + "\"/>");
      close("edge");
    }
    close("packagedElement");
  }

  std::ostringstream out_;
  int depth_ = 0;
};

}  // namespace

std::string print_xmi(const xmi::XmiDocument& doc) { return Printer().run(doc); }

// ---------------------------------------------------------------------------
// Text edits.

std::string replace_once(const std::string& text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  if (at == std::string::npos) throw std::logic_error("edit site not found: " + from);
  if (text.find(from, at + 1) != std::string::npos) throw std::logic_error("edit site not unique: " + from);
  return text.substr(0, at) + to + text.substr(at + from.size());
}

std::string id_named(const std::string& text, const std::string& name) {
  const std::regex re("xmi:id=\"([^\"]+)\" name=\"" + std::regex_replace(name, std::regex(R"([.^$|()\[\]{}*+?\\])"), R"(\$&)") + "\"");
  std::smatch m;
  if (!std::regex_search(text, m, re)) throw std::logic_error("no element named " + name);
  return m[1];
}

namespace {

// [begin, end) of whole lines covering [from, to).
std::pair<std::size_t, std::size_t> widen_to_lines(const std::string& text, std::size_t from, std::size_t to) {
  const std::size_t b = text.rfind('\n', from);
  std::size_t e = text.find('\n', to);
  return {b == std::string::npos ? 0 : b + 1, e == std::string::npos ? text.size() : e + 1};
}

}  // namespace

std::string remove_element(const std::string& text, const std::string& id) {
  const auto at = text.find("xmi:id=\"" + id + "\"");
  if (at == std::string::npos) throw std::logic_error("no element with id " + id);
  const auto start = text.rfind('<', at);
  const auto name_end = text.find_first_of(" \t\n/>", start + 1);
  const std::string tag = text.substr(start + 1, name_end - start - 1);
  const auto head_end = text.find('>', at);
  std::size_t end = head_end + 1;
  if (text[head_end - 1] != '/') {
    int depth = 1;
    std::size_t pos = head_end + 1;
    while (depth > 0) {
      const auto open = text.find("<" + tag, pos);
      const auto close = text.find("</" + tag + ">", pos);
      if (close == std::string::npos) throw std::logic_error("unterminated element " + id);
      if (open != std::string::npos && open < close) {
        const auto oe = text.find('>', open);
        if (text[oe - 1] != '/') ++depth;
        pos = oe + 1;
      } else {
        --depth;
        pos = close + tag.size() + 3;
      }
    }
    end = pos;
  }
  const auto [b, e] = widen_to_lines(text, start, end - 1);
  return text.substr(0, b) + text.substr(e);
}

std::string remove_edge(const std::string& text, const std::string& edge_id) {
  std::string out = remove_element(text, edge_id);
  for (const char* kind : {"incoming", "outgoing"}) {
    const std::string ref = std::string("<") + kind + " xmi:idref=\"" + edge_id + "\"/>";
    for (auto at = out.find(ref); at != std::string::npos; at = out.find(ref)) {
      const auto [b, e] = widen_to_lines(out, at, at + ref.size() - 1);
      out.erase(b, e - b);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mutations.

namespace {

// Replaces the first occurrence of `from` after `anchor`.
std::string replace_after(const std::string& text, const std::string& anchor, const std::string& from,
                          const std::string& to) {
  const auto a = text.find(anchor);
  if (a == std::string::npos) throw std::logic_error("anchor not found: " + anchor);
  const auto at = text.find(from, a);
  if (at == std::string::npos) throw std::logic_error("edit site not found after anchor: " + from);
  return text.substr(0, at) + to + text.substr(at + from.size());
}

std::string edge_named(const std::string& text, const std::string& label) { return id_named(text, label); }

std::string retype(const std::string& text, const std::string& element_name, const std::string& new_type) {
  const std::string anchor = "name=\"" + element_name + "\"";
  const auto a = text.find(anchor);
  if (a == std::string::npos) throw std::logic_error("no element named " + element_name);
  const auto t = text.find("<type xmi:idref=\"", a);
  const auto q = text.find('"', t + 17);
  return text.substr(0, t + 17) + id_named(text, new_type) + text.substr(q);
}

std::vector<Mutation> build() {
  const std::string od = "overdruk.xmi";
  std::vector<Mutation> m;
  m.push_back({"deleted literal used as an assigned value", od, "Assignment",
               [](const std::string& t) { return remove_element(t, id_named(t, "ONBEKEND")); }});
  m.push_back({"deleted literal used in guards", od, "Guard",
               [](const std::string& t) { return remove_element(t, id_named(t, "BEPAALD")); }});
  m.push_back({"deleted literal used as attribute default", od, "Attribute",
               [](const std::string& t) { return remove_element(t, id_named(t, "IN_RUST")); }});
  m.push_back({"deleted enumeration referenced by a property", od, "Property",
               [](const std::string& t) { return remove_element(t, id_named(t, "eFaalstatus")); }});
  m.push_back({"property retargeted to another enumeration", od, "Guard",
               [](const std::string& t) { return retype(t, "bepaaldheid4", "eBedieningswijze"); }});
  m.push_back({"property retargeted to an activity", od, "Property",
               [](const std::string& t) { return retype(t, "bepaaldheid5", "Disabled"); }});
  m.push_back({"duplicate literal name", od, "Enumeration", [](const std::string& t) {
                 return replace_once(t, "name=\"ONBEPAALD\"", "name=\"BEPAALD\"");
               }});
  m.push_back({"decision node with two guarded flows", od, "DecisionNode", [](const std::string& t) {
                 return replace_after(t, "name=\"StatusMtkLuiken\"", "value=\"else\"",
                                      "value=\"sml_luikenGesloten == NEE\"");
               }});
  m.push_back({"decision node with two else flows", od, "DecisionNode", [](const std::string& t) {
                 return replace_once(t, "value=\"sml_observeerbaar == NEE\"", "value=\"else\"");
               }});
  m.push_back({"assignment across enumerations", od, "Assignment", [](const std::string& t) {
                 return replace_once(t, "name=\"bedieningswijze2 := HAND\"", "name=\"bedieningswijze2 := BEPAALD\"");
               }});
  m.push_back({"guard compares across enumerations", od, "Guard", [](const std::string& t) {
                 return replace_once(t, "value=\"setOpHand.bepaaldheid5 == BEPAALD\"",
                                     "value=\"setOpHand.bepaaldheid5 == HAND\"");
               }});
  m.push_back({"write to undeclared attribute", od, "WriteVariable", [](const std::string& t) {
                 return replace_after(t, "AddStructuralFeatureValueAction", "name=\"enabled3\"", "name=\"enabled9\"");
               }});
  m.push_back({"write-variable pin of another enumeration", od, "WriteVariable", [](const std::string& t) {
                 const std::string wv = "AddStructuralFeatureValueAction\" xmi:id=\"";
                 const auto a = t.find(wv);
                 if (a == std::string::npos) throw std::logic_error("no write-variable node");
                 const auto tt = t.find("<type xmi:idref=\"", a);
                 const auto q = t.find('"', tt + 17);
                 return t.substr(0, tt + 17) + id_named(t, "eLinksRechtsUit") + t.substr(q);
               }});
  m.push_back({"cyclic decision chain", od, "DecisionNode", [](const std::string& t) {
                 const std::string flow = edge_named(t, "statusmtkluiken := OPEN");
                 const std::string out = id_named(t, "statusmtkluiken");
                 const std::string d1 = id_named(t.substr(t.find("name=\"StatusMtkLuiken\"")), "D1");
                 std::string r = replace_once(t, " name=\"statusmtkluiken := OPEN\"", "");
                 return replace_after(r, "xmi:id=\"" + flow + "\"", "target=\"" + out + "\"", "target=\"" + d1 + "\"");
               }});
  m.push_back({"duplicate xmi:id", od, "DuplicateId", [](const std::string& t) {
                 return replace_once(t, "xmi:id=\"" + id_named(t, "ONBEPAALD") + "\"",
                                     "xmi:id=\"" + id_named(t, "BEPAALD") + "\"");
               }});
  m.push_back({"reordered properties on a node", od, "PropertyOrder", [](const std::string& t) {
                 const std::string id = id_named(t, "D1");
                 return replace_after(t, "xmi:id=\"" + id + "\" name=\"D1\"", "xmi:id=\"" + id + "\" name=\"D1\"",
                                      "name=\"D1\" xmi:id=\"" + id + "\"");
               }});
  m.push_back({"reordered source and target on a flow", od, "PropertyOrder", [](const std::string& t) {
                 static const std::regex re("source=\"([^\"]+)\" target=\"([^\"]+)\"");
                 return std::regex_replace(t, re, "target=\"$2\" source=\"$1\"",
                                           std::regex_constants::format_first_only);
               }});
  m.push_back({"unbound call pin", od, "Pin",
               [](const std::string& t) { return remove_edge(t, edge_named(t, "dis_enabled := new_enabled")); }});
  m.push_back({"unbound output field", od, "OutputBinding", [](const std::string& t) {
                 return remove_edge(t, edge_named(t, "bedtk_BF.storingInterneCommunicatie := GEEN_STORING"));
               }});
  m.push_back({"dangling behaviour reference", od, "CallBehaviour", [](const std::string& t) {
                 static const std::regex re("behavior=\"[^\"]+\"");
                 return std::regex_replace(t, re, "behavior=\"EAID_9999\"", std::regex_constants::format_first_only);
               }});
  return m;
}

}  // namespace

const std::vector<Mutation>& mutations() {
  static const std::vector<Mutation> all = build();
  return all;
}

// ---------------------------------------------------------------------------
// Builders.

ActivityBuilder::ActivityBuilder(std::function<std::string()> ids, std::string name) : ids_(std::move(ids)) {
  act_.id = ids_();
  act_.name = std::move(name);
}

std::string ActivityBuilder::initial() {
  act_.nodes.emplace_back(xmi::ActivityInitial{ids_(), "ActivityInitial", {}});
  return xmi::node_id(act_.nodes.back());
}

std::string ActivityBuilder::final_node() {
  act_.nodes.emplace_back(xmi::ActivityFinal{ids_(), "ActivityFinal", {}});
  return xmi::node_id(act_.nodes.back());
}

std::string ActivityBuilder::decision(const std::string& name) {
  act_.nodes.emplace_back(xmi::DecisionNode{ids_(), name, {}});
  return xmi::node_id(act_.nodes.back());
}

std::string ActivityBuilder::param(const std::string& name, const std::string& type_id) {
  act_.nodes.emplace_back(xmi::ActivityParameter{ids_(), name, type_id, {}});
  return xmi::node_id(act_.nodes.back());
}

std::string ActivityBuilder::attribute(const std::string& name, const std::string& type_id,
                                       const std::string& default_value) {
  act_.attributes.push_back({ids_(), name, type_id, default_value});
  return act_.attributes.back().id;
}

std::vector<std::string> ActivityBuilder::call(const std::string& name, const std::string& behaviour_id,
                                               const std::vector<std::pair<std::string, std::string>>& args,
                                               const std::pair<std::string, std::string>& result) {
  xmi::CallBehaviour c{ids_(), name, behaviour_id, {}, {}};
  std::vector<std::string> pins;
  for (const auto& [pname, ptype] : args) {
    c.pins.push_back({ids_(), pname, ptype, xmi::PinDirection::kInput, {}});
    pins.push_back(c.pins.back().id);
  }
  c.pins.push_back({ids_(), result.first, result.second, xmi::PinDirection::kOutput, {}});
  pins.push_back(c.pins.back().id);
  act_.nodes.emplace_back(std::move(c));
  return pins;
}

std::string ActivityBuilder::write(const std::string& attribute, const std::string& pin_name,
                                   const std::string& pin_type) {
  const std::string wid = ids_();
  xmi::WriteVariable w{wid, attribute, {ids_(), pin_name, pin_type, xmi::PinDirection::kInput, {}}, {}};
  act_.nodes.emplace_back(w);
  return w.pin.id;
}

xmi::FlowRefs& ActivityBuilder::refs(const std::string& id) {
  for (auto& n : act_.nodes) {
    if (xmi::node_id(n) == id) return std::visit([](auto& v) -> xmi::FlowRefs& { return v.flows; }, n);
    if (auto* c = std::get_if<xmi::CallBehaviour>(&n)) {
      for (auto& p : c->pins) {
        if (p.id == id) return p.flows;
      }
    }
    if (auto* w = std::get_if<xmi::WriteVariable>(&n); w && w->pin.id == id) return w->pin.flows;
  }
  throw std::logic_error("no node or pin " + id);
}

std::string ActivityBuilder::flow(const std::string& source, const std::string& target, const std::string& name,
                                  const std::string& guard) {
  xmi::Flow f;
  f.id = ids_();
  f.kind = xmi::FlowKind::kObject;
  f.name = name;
  f.guard = guard;
  f.source = source;
  f.target = target;
  // Attributes are flow endpoints without reference lists.
  auto is_attr = [&](const std::string& id) {
    return std::any_of(act_.attributes.begin(), act_.attributes.end(), [&](const auto& a) { return a.id == id; });
  };
  if (!is_attr(source)) refs(source).outgoing.push_back(f.id);
  if (!is_attr(target)) refs(target).incoming.push_back(f.id);
  act_.flows.push_back(f);
  return f.id;
}

std::string ActivityBuilder::control(const std::string& source, const std::string& target) {
  const std::string id = flow(source, target);
  act_.flows.back().kind = xmi::FlowKind::kControl;
  return id;
}

DocBuilder::DocBuilder() : root_id_(next_id()) {}

std::string DocBuilder::enumeration(const std::string& name, const std::vector<std::string>& literals) {
  xmi::Enumeration e{next_id(), name, {}};
  for (const auto& l : literals) e.literals.push_back({next_id(), l});
  items_.emplace_back(e);
  return e.id;
}

std::string DocBuilder::block(const std::string& name, const std::vector<std::pair<std::string, std::string>>& props) {
  xmi::Block b{next_id(), name, {}};
  for (const auto& [pname, ptype] : props) b.properties.push_back({next_id(), pname, ptype});
  items_.emplace_back(b);
  return b.id;
}

ActivityBuilder& DocBuilder::activity(const std::string& name) {
  auto a = std::make_shared<ActivityBuilder>([this] { return next_id(); }, name);
  items_.emplace_back(a);
  return *a;
}

xmi::XmiDocument DocBuilder::build() const {
  xmi::XmiDocument doc;
  doc.root = {root_id_, "Root", {}};
  for (const auto& item : items_) {
    if (const auto* a = std::get_if<std::shared_ptr<ActivityBuilder>>(&item)) {
      doc.root.children.emplace_back((*a)->activity());
    } else if (const auto* e = std::get_if<xmi::Enumeration>(&item)) {
      doc.root.children.emplace_back(*e);
    } else {
      doc.root.children.emplace_back(std::get<xmi::Block>(item));
    }
  }
  return xmi::parse_flow_annotations(std::move(doc));
}

xmi::XmiDocument mini_model() {
  DocBuilder b;
  const std::string es = b.enumeration("eS", {"A", "B"});
  const std::string pair = b.block("Pair", {{"first", es}, {"second", es}});

  auto& flip = b.activity("Flip");
  {
    const auto init = flip.initial();
    const auto x = flip.param("x", es);
    const auto y = flip.param("y", es);
    const auto d = flip.decision("D1");
    flip.control(init, d);
    flip.flow(x, d);
    flip.flow(d, y, "y := B", "x == A");
    flip.flow(d, y, "y := A", "else");
  }
  auto& keep = b.activity("Keep");
  {
    const auto init = keep.initial();
    const auto p = keep.param("p", pair);
    const auto old = keep.param("old", es);
    const auto k = keep.param("k", es);
    const auto d = keep.decision("D1");
    keep.control(init, d);
    keep.flow(p, d);
    keep.flow(old, d);
    keep.flow(d, k, "k := p.first", "p.first == p.second");
    keep.flow(d, k, "k := old", "else");
  }
  auto& top = b.activity("Top");
  {
    const auto mem = top.attribute("mem", es, "A");
    const auto inp = top.param("inp", pair);
    const auto outp = top.param("outp", pair);
    const auto c1 = top.call("call_Flip", flip.id(), {{"x", es}}, {"flipped", es});
    const auto c2 = top.call("call_Keep", keep.id(), {{"p", pair}, {"old", es}}, {"kept", es});
    const auto w = top.write("mem", "value", es);
    top.flow(inp, c1[0], "x := inp.first");
    top.flow(inp, c2[0], "p := inp");
    top.flow(mem, c2[1], "old := mem");
    top.flow(c1[1], outp, "outp.first := flipped");
    top.flow(c2[2], outp, "outp.second := kept");
    top.flow(c2[2], w, "value := kept");
  }
  return b.build();
}

namespace {

void collect(const mcrl2::Expr& e, std::set<std::string>& out) {
  if (!e.name.empty()) out.insert(e.name);
  for (const auto& a : e.args) collect(a, out);
}

template <typename T>
std::string join(const T& items) {
  std::string out;
  for (const auto& i : items) out += (out.empty() ? "" : ", ") + i;
  return out;
}

template <typename T>
void diff_sets(const std::string& what, const std::multiset<T>& emitted, const std::multiset<T>& reference,
               std::vector<std::string>& out) {
  std::vector<T> missing, extra;
  std::set_difference(reference.begin(), reference.end(), emitted.begin(), emitted.end(), std::back_inserter(missing));
  std::set_difference(emitted.begin(), emitted.end(), reference.begin(), reference.end(), std::back_inserter(extra));
  if (!missing.empty()) out.push_back(what + " missing: " + join(missing));
  if (!extra.empty()) out.push_back(what + " extra: " + join(extra));
}

}  // namespace

std::set<std::string> identifiers(const mcrl2::ProcDecl& proc) {
  std::set<std::string> out{proc.name};
  for (const auto& p : proc.params) out.insert({p.name, p.sort});
  for (const auto& v : proc.body.sum) out.insert({v.name, v.sort});
  collect(proc.body.condition, out);
  for (const auto& a : proc.body.actions) {
    out.insert(a.name);
    for (const auto& x : a.args) collect(x, out);
  }
  out.insert(proc.body.next.name);
  for (const auto& x : proc.body.next.args) collect(x, out);
  for (const auto& [n, x] : proc.body.next.updates) {
    out.insert(n);
    collect(x, out);
  }
  return out;
}

GlueComparison compare_glue(const mcrl2::ProcDecl& emitted, const mcrl2::ProcDecl& reference,
                            const mcrl2::NameTable& names) {
  GlueComparison c;
  const auto& ref = reference.body;
  const auto& got = emitted.body;
  c.params = reference.params.size();
  c.sum_vars = ref.sum.size();
  c.conjuncts = mcrl2::conjuncts(ref.condition).size();
  c.actions = ref.actions.size();
  c.updates = ref.next.updates.size();

  std::vector<std::string> unaligned;
  for (const auto& id : identifiers(reference)) {
    if (names.key_of(id).empty() && id.rfind("compute_", 0) != 0) unaligned.push_back(id);
  }
  if (!unaligned.empty()) c.differences.push_back("identifiers without a model element: " + join(unaligned));

  if (emitted.name != reference.name) c.differences.push_back("process name " + emitted.name);
  auto decls = [](const std::vector<mcrl2::VarDecl>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.name + " : " + v.sort);
    return out;
  };
  if (decls(emitted.params) != decls(reference.params)) {
    c.differences.push_back("parameters [" + join(decls(emitted.params)) + "] vs [" + join(decls(reference.params)) + "]");
  }
  auto as_set = [](const std::vector<std::string>& v) { return std::multiset<std::string>(v.begin(), v.end()); };
  diff_sets("sum variable", as_set(decls(got.sum)), as_set(decls(ref.sum)), c.differences);

  auto exprs = [](const std::vector<mcrl2::Expr>& es) {
    std::multiset<std::string> out;
    for (const auto& e : es) out.insert(mcrl2::to_string(e));
    return out;
  };
  diff_sets("conjunct", exprs(mcrl2::conjuncts(got.condition)), exprs(mcrl2::conjuncts(ref.condition)), c.differences);

  auto actions = [](const std::vector<mcrl2::Action>& as) {
    std::multiset<std::string> out;
    for (const auto& a : as) out.insert(mcrl2::to_string(mcrl2::Expr::apply(a.name, a.args)));
    return out;
  };
  diff_sets("action", actions(got.actions), actions(ref.actions), c.differences);

  auto updates = [](const mcrl2::ProcCall& call) {
    std::multiset<std::string> out;
    for (const auto& [n, e] : call.updates) out.insert(n + " = " + mcrl2::to_string(e));
    return out;
  };
  if (got.next.name != ref.next.name) c.differences.push_back("recursion target " + got.next.name);
  diff_sets("update", updates(got.next), updates(ref.next), c.differences);
  return c;
}

}  // namespace ad2mcrl2::testing
