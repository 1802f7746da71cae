#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ad2mcrl2/xmi/lexer.hpp"
#include "ad2mcrl2/xmi/parser.hpp"
#include "support.hpp"

namespace ad2mcrl2 {
namespace {

using testing::corpus_text;
using testing::print_xmi;
using xmi::TokenKind;

std::string envelope(const std::string& root_body) {
  return "<?xml version=\"1.0\"?>\n<xmi:XMI xmi:version=\"2.1\">\n<uml:Model xmi:type=\"uml:Model\" name=\"M\">\n"
         "<packagedElement xmi:type=\"uml:Package\" xmi:id=\"P0\" name=\"Root\">\n" +
         root_body + "\n</packagedElement>\n</uml:Model>\n</xmi:XMI>\n";
}

std::string activity(const std::string& body) {
  return "<packagedElement xmi:type=\"uml:Activity\" xmi:id=\"A1\" name=\"Act\">\n" + body + "\n</packagedElement>";
}

std::string parse_rule(const std::string& text) {
  try {
    xmi::load_document(text);
  } catch (const xmi::ParseError& e) {
    return e.rule();
  }
  return "";
}

// ---------------------------------------------------------------------------
// tokenize

TEST(Lexer, PropertyWithString) {
  auto toks = xmi::tokenize(R"(name="ActivityInitial")");
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_EQ(toks[0].kind, TokenKind::kProperty);
  EXPECT_EQ(toks[0].text, "name");
  EXPECT_EQ(toks[1].kind, TokenKind::kEquals);
  EXPECT_EQ(toks[2].kind, TokenKind::kString);
  EXPECT_EQ(toks[2].text, "ActivityInitial");
}

TEST(Lexer, EmptyInputGivesNoTokens) {
  EXPECT_TRUE(xmi::tokenize("").empty());
  EXPECT_TRUE(xmi::tokenize("  \n\t ").empty());
}

TEST(Lexer, NamespacedProperty) {
  auto toks = xmi::tokenize(R"(xmi:id="EAID_1")");
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_EQ(toks[0], (xmi::Token{TokenKind::kProperty, "xmi:id", 0, 6}));
  EXPECT_EQ(toks[2].text, "EAID_1");
  EXPECT_EQ(toks[2].begin, 7u);
  EXPECT_EQ(toks[2].end, 15u);
}

TEST(Lexer, TagsAndPunctuation) {
  auto toks = xmi::tokenize("<a x=\"2.1\"><b/></a>");
  std::vector<TokenKind> kinds;
  for (const auto& t : toks) kinds.push_back(t.kind);
  EXPECT_EQ(kinds, (std::vector<TokenKind>{TokenKind::kOpen, TokenKind::kTag, TokenKind::kProperty,
                                           TokenKind::kEquals, TokenKind::kNumber, TokenKind::kClose,
                                           TokenKind::kOpen, TokenKind::kTag, TokenKind::kSelfClose,
                                           TokenKind::kOpenClose, TokenKind::kTag, TokenKind::kClose}));
}

TEST(Lexer, EntitiesDecoded) {
  auto toks = xmi::tokenize(R"(v="a &amp;&amp; b &lt; &gt; &quot;x&quot; &apos;")");
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_EQ(toks[2].text, "a && b < > \"x\" &apos;");
}

TEST(Lexer, PrologAndCommentsSkipped) {
  auto toks = xmi::tokenize("<?xml version=\"1.0\"?><!-- <not a tag> --><a/>");
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_EQ(toks[1].text, "a");
}

TEST(Lexer, UnterminatedStringCarriesSpan) {
  try {
    xmi::tokenize("<a name=\"oops");
    FAIL() << "expected LexError";
  } catch (const xmi::LexError& e) {
    EXPECT_EQ(e.span().begin, 8u);
    EXPECT_EQ(e.span().end, 13u);
  }
}

TEST(Lexer, IllegalCharacter) {
  try {
    xmi::tokenize("<a> ; </a>");
    FAIL() << "expected LexError";
  } catch (const xmi::LexError&) {
  }
  EXPECT_THROW(xmi::tokenize("<a #/>"), xmi::LexError);
}

// ---------------------------------------------------------------------------
// parse_document

TEST(Parser, InitialNodeSnippet) {
  const std::string text = envelope(activity(R"(
<node xmi:type="uml:InitialNode"
      xmi:id="EAID_1"
      name="ActivityInitial"
      visibility="public">
    <outgoing xmi:idref="EAID_2"/>
</node>
<node xmi:type="uml:ActivityFinalNode" xmi:id="EAID_3" name="ActivityFinal">
    <incoming xmi:idref="EAID_2"/>
</node>
<edge xmi:type="uml:ControlFlow" xmi:id="EAID_2" source="EAID_1" target="EAID_3"/>)"));
  auto doc = xmi::load_document(text);
  ASSERT_EQ(doc.root.children.size(), 1u);
  const auto& act = std::get<xmi::Activity>(doc.root.children[0]);
  ASSERT_EQ(act.nodes.size(), 2u);
  const auto& init = std::get<xmi::ActivityInitial>(act.nodes[0]);
  EXPECT_EQ(init.id, "EAID_1");
  EXPECT_EQ(init.name, "ActivityInitial");
  EXPECT_EQ(init.flows.outgoing, std::vector<std::string>{"EAID_2"});
  EXPECT_TRUE(init.flows.incoming.empty());
  ASSERT_TRUE(doc.spans.count("EAID_1"));
  EXPECT_LT(doc.spans.at("EAID_1").begin, doc.spans.at("EAID_1").end);
}

TEST(Parser, EmptyRootPackage) {
  const std::string text =
      "<xmi:XMI xmi:version=\"2.1\"><uml:Model xmi:type=\"uml:Model\" name=\"M\">"
      "<packagedElement xmi:type=\"uml:Package\" xmi:id=\"EAPK_1\" name=\"Empty\" visibility=\"public\"/>"
      "</uml:Model></xmi:XMI>";
  auto doc = xmi::load_document(text);
  EXPECT_EQ(doc.root.id, "EAPK_1");
  EXPECT_EQ(doc.root.name, "Empty");
  EXPECT_TRUE(doc.root.children.empty());
}

TEST(Parser, ExtensionSectionsSkipped) {
  std::string with_ext = envelope("");
  with_ext.insert(with_ext.rfind("</xmi:XMI>"),
                  "<xmi:Extension extender=\"EA\"><elements><element idref=\"x\"><geometry/></element></elements>"
                  "<diagrams/></xmi:Extension>\n");
  EXPECT_NO_THROW(xmi::load_document(with_ext));
}

TEST(Parser, FlowAnnotationsParsed) {
  const std::string text = envelope(activity(R"(
<node xmi:type="uml:ActivityParameterNode" xmi:id="N1" name="a">
  <type xmi:idref="T"/>
  <outgoing xmi:idref="F1"/>
  <outgoing xmi:idref="F2"/>
</node>
<node xmi:type="uml:ActivityParameterNode" xmi:id="N2" name="b">
  <type xmi:idref="T"/>
  <incoming xmi:idref="F1"/>
  <incoming xmi:idref="F2"/>
</node>
<edge xmi:type="uml:ObjectFlow" xmi:id="F1" name="new_stand2 := setAutobedieningsStand" source="N1" target="N2">
  <guard xmi:type="uml:LiteralString" xmi:id="G1" value="else"/>
</edge>
<edge xmi:type="uml:ObjectFlow" xmi:id="F2" source="N1" target="N2"/>)"));
  auto doc = xmi::load_document(text);
  const auto& act = std::get<xmi::Activity>(doc.root.children[0]);
  ASSERT_EQ(act.flows.size(), 2u);
  ASSERT_TRUE(act.flows[0].assignment.has_value());
  EXPECT_EQ(act.flows[0].assignment->target.segments, std::vector<std::string>{"new_stand2"});
  EXPECT_EQ(act.flows[0].assignment->value.segments, std::vector<std::string>{"setAutobedieningsStand"});
  EXPECT_EQ(act.flows[0].guard_expr.kind, expr::Guard::Kind::kElse);
  EXPECT_FALSE(act.flows[1].assignment.has_value());
  EXPECT_EQ(act.flows[1].guard_expr.kind, expr::Guard::Kind::kEmpty);
}

struct RuleCase {
  const char* name;
  std::string text;
  const char* rule;
};

std::vector<RuleCase> rule_cases() {
  const std::string param = R"(<node xmi:type="uml:ActivityParameterNode" xmi:id="N1" name="a"><type xmi:idref="T"/></node>)";
  return {
      {"MismatchedClose", envelope("<packagedElement xmi:type=\"uml:Enumeration\" xmi:id=\"E\" name=\"E\"></packagedX>"),
       "XmiSyntax"},
      {"LexicalError", envelope("<packagedElement xmi:type=\"uml:Enumeration\" xmi:id=\"E\" name=\"E\"/> stray"),
       "XmiSyntax"},
      {"NotXmiRoot", "<foo/>", "XmiSyntax"},
      {"ReorderedProperties", envelope("<packagedElement xmi:id=\"E\" xmi:type=\"uml:Enumeration\" name=\"E\"/>"),
       "PropertyOrder"},
      {"MissingId", envelope("<packagedElement xmi:type=\"uml:Enumeration\" name=\"E\"/>"), "MissingProperty"},
      {"MissingFlowTarget",
       envelope(activity(param + R"(<edge xmi:type="uml:ObjectFlow" xmi:id="F" source="N1"/>)")),
       "MissingProperty"},
      {"DuplicateId",
       envelope("<packagedElement xmi:type=\"uml:Enumeration\" xmi:id=\"E\" name=\"E\"/>"
                "<packagedElement xmi:type=\"uml:Enumeration\" xmi:id=\"E\" name=\"F\"/>"),
       "DuplicateId"},
      {"DanglingFlowEndpoint",
       envelope(activity(param + R"(<edge xmi:type="uml:ObjectFlow" xmi:id="F" source="N1" target="NOPE"/>)")),
       "UnresolvedReference"},
      {"DanglingOutgoing",
       envelope(activity(R"(<node xmi:type="uml:InitialNode" xmi:id="I" name="ActivityInitial"><outgoing xmi:idref="NOPE"/></node>)")),
       "UnresolvedReference"},
      {"ForkNode",
       envelope(activity(R"(<node xmi:type="uml:ForkNode" xmi:id="K" name="Fork"/>)")),
       "UnsupportedConstruct"},
      {"BadAssignment",
       envelope(activity(param + R"(<edge xmi:type="uml:ObjectFlow" xmi:id="F" name="a := " source="N1" target="N1"/>)")),
       "FlowAnnotation"},
      {"BadGuard",
       envelope(activity(param + R"(<edge xmi:type="uml:ObjectFlow" xmi:id="F" source="N1" target="N1"><guard xmi:type="uml:LiteralString" xmi:id="G" value="else &amp;&amp; a == b"/></edge>)")),
       "FlowAnnotation"},
  };
}

class ParserRules : public ::testing::TestWithParam<RuleCase> {};

TEST_P(ParserRules, ReportsRule) { EXPECT_EQ(parse_rule(GetParam().text), GetParam().rule); }

INSTANTIATE_TEST_SUITE_P(All, ParserRules, ::testing::ValuesIn(rule_cases()),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Parser, UnsupportedConstructNamesTagAndSpan) {
  const std::string text = envelope(activity(R"(<node xmi:type="uml:ForkNode" xmi:id="K" name="Fork"/>)"));
  try {
    xmi::load_document(text);
    FAIL();
  } catch (const xmi::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("ForkNode"), std::string::npos) << e.what();
    EXPECT_EQ(text.substr(e.span().begin, 5), "<node");
  }
}

TEST(Parser, FlowAnnotationErrorNamesFlow) {
  const std::string text = envelope(activity(
      R"(<node xmi:type="uml:ActivityParameterNode" xmi:id="N1" name="a"><type xmi:idref="T"/></node>)"
      R"(<edge xmi:type="uml:ObjectFlow" xmi:id="FLOW_7" name="a := " source="N1" target="N1"/>)"));
  try {
    xmi::load_document(text);
    FAIL();
  } catch (const xmi::ParseError& e) {
    EXPECT_EQ(e.span().xmi_id, std::optional<std::string>("FLOW_7"));
  }
}

TEST(Parser, TypeReferencesNotClosureChecked) {
  // Unresolved types are reported by the checker with spans, not here.
  const std::string text = envelope(
      R"(<packagedElement xmi:type="uml:Class" xmi:id="B" name="B"><ownedAttribute xmi:type="uml:Property" xmi:id="P" name="p"><type xmi:idref="MISSING"/></ownedAttribute></packagedElement>)");
  EXPECT_NO_THROW(xmi::load_document(text));
}

TEST(Parser, Deterministic) {
  const std::string text = corpus_text("overdruk.xmi");
  auto a = xmi::load_document(text);
  auto b = xmi::load_document(text);
  EXPECT_EQ(a.root, b.root);
  EXPECT_EQ(a.spans, b.spans);
}

TEST(Parser, SpansCoverEveryElement) {
  auto doc = xmi::load_document(corpus_text("overdruk.xmi"));
  std::size_t checked = 0;
  xmi::for_each_element(doc.root, [&](const auto& e) {
    ASSERT_TRUE(doc.spans.count(e.id)) << e.id;
    EXPECT_LE(doc.spans.at(e.id).begin, doc.spans.at(e.id).end);
    ++checked;
  });
  EXPECT_GT(checked, 30u);
}

// ---------------------------------------------------------------------------
// Constructor coverage: every abstract constructor occurs in the corpus.

TEST(Parser, CorpusCoversEveryConstructor) {
  std::set<std::string> seen;
  for (const char* file : {"bdd.xmi", "leaf_bedieningswijze.xmi", "overdruk.xmi", "echo.xmi"}) {
    auto doc = xmi::load_document(corpus_text(file));
    std::function<void(const xmi::Package&, bool)> walk = [&](const xmi::Package& p, bool nested) {
      seen.insert(nested ? "Package(nested)" : "Package");
      for (const auto& c : p.children) {
        if (const auto* sub = std::get_if<Box<xmi::Package>>(&c)) walk(**sub, true);
      }
    };
    walk(doc.root, false);
    xmi::for_each_element(doc.root, [&](const auto& e) {
      using T = std::decay_t<decltype(e)>;
      if constexpr (std::is_same_v<T, xmi::Enumeration>) {
        seen.insert("Enumeration");
        if (!e.literals.empty()) seen.insert("EnumerationLiteral");
      } else if constexpr (std::is_same_v<T, xmi::Block>) {
        seen.insert("Block");
        if (!e.properties.empty()) seen.insert("Property");
      } else {
        seen.insert("Activity");
        if (!e.attributes.empty()) seen.insert("Attribute");
        for (const auto& n : e.nodes) {
          std::visit(
              [&](const auto& v) {
                using N = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<N, xmi::ActivityParameter>) seen.insert("ActivityParameter");
                if constexpr (std::is_same_v<N, xmi::ActivityInitial>) seen.insert("ActivityInitial");
                if constexpr (std::is_same_v<N, xmi::ActivityFinal>) seen.insert("ActivityFinal");
                if constexpr (std::is_same_v<N, xmi::DecisionNode>) seen.insert("DecisionNode");
                if constexpr (std::is_same_v<N, xmi::CallBehaviour>) {
                  seen.insert("CallBehaviour");
                  for (const auto& p : v.pins) {
                    seen.insert(p.direction == xmi::PinDirection::kInput ? "InputPin" : "OutputPin");
                  }
                }
                if constexpr (std::is_same_v<N, xmi::WriteVariable>) seen.insert("WriteVariable");
              },
              n);
        }
        for (const auto& f : e.flows) {
          seen.insert(f.kind == xmi::FlowKind::kObject ? "ObjectFlow" : "ControlFlow");
          if (f.assignment) seen.insert("Assignment");
          if (f.guard_expr.kind == expr::Guard::Kind::kElse) seen.insert("ElseGuard");
          if (f.guard_expr.is_comparison() || f.guard_expr.kind == expr::Guard::Kind::kOr ||
              f.guard_expr.kind == expr::Guard::Kind::kAnd || f.guard_expr.kind == expr::Guard::Kind::kNot) {
            seen.insert("GuardExpr");
          }
        }
      }
    });
  }
  const std::set<std::string> expected = {
      "Package", "Package(nested)", "Enumeration", "EnumerationLiteral", "Block", "Property",
      "Activity", "Attribute", "ActivityParameter", "ActivityInitial", "ActivityFinal",
      "DecisionNode", "CallBehaviour", "InputPin", "OutputPin", "WriteVariable",
      "ObjectFlow", "ControlFlow", "Assignment", "ElseGuard", "GuardExpr"};
  for (const auto& c : expected) EXPECT_TRUE(seen.count(c)) << "no corpus input exercises " << c;
}

// ---------------------------------------------------------------------------
// Round trip through the debug printer.

TEST(RoundTrip, CorpusDocuments) {
  for (const char* file : {"bdd.xmi", "leaf_bedieningswijze.xmi", "overdruk.xmi", "echo.xmi"}) {
    auto doc = xmi::parse_document(xmi::tokenize(corpus_text(file)));
    auto again = xmi::parse_document(xmi::tokenize(print_xmi(doc)));
    EXPECT_EQ(doc.root, again.root) << file;
  }
}

class RandomDocs {
 public:
  explicit RandomDocs(std::uint64_t seed) : rng_(seed) {}

  xmi::XmiDocument make() {
    next_id_ = 0;
    xmi::XmiDocument doc;
    doc.root = package(0);
    return doc;
  }

 private:
  std::string id() { return "R" + std::to_string(++next_id_); }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin() { return pick(2) == 0; }

  std::string name() {
    static const char* kParts[] = {"stand", "Bed & Co", "x<y>", "\"q\"", "enabled", "a_b'", "Z9"};
    std::string n = kParts[pick(7)];
    if (coin()) n += std::to_string(pick(100));
    return n;
  }

  std::string ident() {
    static const char* kIds[] = {"a", "b", "old_x", "setOp.f", "x'", "HAND"};
    return kIds[pick(6)];
  }

  std::string guard() {
    switch (pick(4)) {
      case 0: return "";
      case 1: return "else";
      case 2: return ident() + " == " + ident();
      default: return "!(" + ident() + " != " + ident() + ") && " + ident() + " == " + ident();
    }
  }

  xmi::Package package(int depth) {
    xmi::Package p{id(), name(), {}};
    const int n = pick(4);
    for (int i = 0; i < n; ++i) {
      switch (depth < 2 ? pick(4) : 1 + pick(3)) {
        case 0: p.children.emplace_back(Box<xmi::Package>(package(depth + 1))); break;
        case 1: {
          xmi::Enumeration e{id(), name(), {}};
          for (int k = pick(3); k > 0; --k) e.literals.push_back({id(), name()});
          p.children.emplace_back(e);
          break;
        }
        case 2: {
          xmi::Block b{id(), name(), {}};
          for (int k = pick(3); k > 0; --k) b.properties.push_back({id(), name(), "T" + std::to_string(pick(5))});
          p.children.emplace_back(b);
          break;
        }
        default: p.children.emplace_back(act()); break;
      }
    }
    return p;
  }

  xmi::Activity act() {
    xmi::Activity a{id(), name(), {}, {}, {}};
    for (int k = pick(3); k > 0; --k) a.attributes.push_back({id(), name(), "T1", "LIT" + std::to_string(pick(3))});
    // Endpoints: (node index, pin index or -1).
    std::vector<std::pair<std::size_t, int>> ends;
    const int nodes = 1 + pick(5);
    for (int k = 0; k < nodes; ++k) {
      switch (pick(6)) {
        case 0: a.nodes.emplace_back(xmi::ActivityParameter{id(), name(), "T2", {}}); break;
        case 1: a.nodes.emplace_back(xmi::ActivityInitial{id(), "ActivityInitial", {}}); break;
        case 2: a.nodes.emplace_back(xmi::ActivityFinal{id(), "ActivityFinal", {}}); break;
        case 3: a.nodes.emplace_back(xmi::DecisionNode{id(), name(), {}}); break;
        case 4: {
          xmi::CallBehaviour c{id(), name(), "B" + std::to_string(pick(3)), {}, {}};
          for (int q = pick(3); q > 0; --q) {
            c.pins.push_back({id(), name(), "T3", xmi::PinDirection::kInput, {}});
          }
          c.pins.push_back({id(), name(), "T4", xmi::PinDirection::kOutput, {}});
          for (std::size_t q = 0; q < c.pins.size(); ++q) ends.emplace_back(a.nodes.size(), static_cast<int>(q));
          a.nodes.emplace_back(std::move(c));
          continue;
        }
        default: {
          xmi::WriteVariable w{id(), name(), {id(), name(), "T5", xmi::PinDirection::kInput, {}}, {}};
          ends.emplace_back(a.nodes.size(), 0);
          a.nodes.emplace_back(std::move(w));
          continue;
        }
      }
      ends.emplace_back(a.nodes.size() - 1, -1);
    }
    auto refs_of = [&](std::pair<std::size_t, int> end) -> xmi::FlowRefs& {
      auto& node = a.nodes[end.first];
      if (end.second < 0) {
        return std::visit([](auto& n) -> xmi::FlowRefs& { return n.flows; }, node);
      }
      if (auto* c = std::get_if<xmi::CallBehaviour>(&node)) return c->pins[static_cast<std::size_t>(end.second)].flows;
      return std::get<xmi::WriteVariable>(node).pin.flows;
    };
    auto end_id = [&](std::pair<std::size_t, int> end) -> std::string {
      auto& node = a.nodes[end.first];
      if (end.second < 0) return xmi::node_id(node);
      if (auto* c = std::get_if<xmi::CallBehaviour>(&node)) return c->pins[static_cast<std::size_t>(end.second)].id;
      return std::get<xmi::WriteVariable>(node).pin.id;
    };
    for (int k = pick(5); k > 0; --k) {
      auto src = ends[static_cast<std::size_t>(pick(static_cast<int>(ends.size())))];
      auto dst = ends[static_cast<std::size_t>(pick(static_cast<int>(ends.size())))];
      xmi::Flow f;
      f.id = id();
      f.kind = coin() ? xmi::FlowKind::kObject : xmi::FlowKind::kControl;
      if (coin()) f.name = ident() + " := " + ident();
      f.guard = guard();
      f.source = end_id(src);
      f.target = end_id(dst);
      refs_of(src).outgoing.push_back(f.id);
      refs_of(dst).incoming.push_back(f.id);
      a.flows.push_back(std::move(f));
    }
    return a;
  }

  std::mt19937_64 rng_;
  int next_id_ = 0;
};

TEST(RoundTrip, RandomDocuments) {
  RandomDocs gen(7);
  for (int i = 0; i < 100; ++i) {
    const auto doc = gen.make();
    const std::string text = print_xmi(doc);
    xmi::XmiDocument parsed;
    ASSERT_NO_THROW(parsed = xmi::parse_document(xmi::tokenize(text))) << text;
    EXPECT_EQ(parsed.root, doc.root) << text;
    // The annotated form also survives: annotations are a function of the raw text.
    EXPECT_EQ(xmi::load_document(text).root, xmi::parse_flow_annotations(doc).root);
  }
}

}  // namespace
}  // namespace ad2mcrl2
