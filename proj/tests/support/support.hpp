#pragma once

#include <functional>
#include <set>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ad2mcrl2/check/checker.hpp"
#include "ad2mcrl2/mcrl2/ast.hpp"
#include "ad2mcrl2/mcrl2/names.hpp"
#include "ad2mcrl2/xmi/ast.hpp"

namespace ad2mcrl2::testing {

std::string corpus_path(const std::string& name);
std::string read_text(const std::string& path);
std::string corpus_text(const std::string& name);

// Parse and check; throws std::runtime_error on parse failure or diagnostics.
check::TypedModel typed_corpus(const std::string& name, check::CheckOptions opts = {});

// Rule names of every error the front end and the checker report for `text`.
// A parse failure contributes its single rule.
std::vector<std::string> error_rules(std::string_view text, check::CheckOptions opts = {});

// Debug printer: renders an abstract document in the accepted XMI subset.
// Attribute default values and guards get derived ids (`<owner>_dv`,
// `<flow>_g`).
std::string print_xmi(const xmi::XmiDocument& doc);

// Single-point edits of a corpus file. `apply` throws std::logic_error when
// the edit site is missing, so a stale mutation cannot silently pass.
struct Mutation {
  std::string name;
  std::string base;  // corpus file name
  std::string rule;  // rule the mutant must violate
  std::function<std::string(const std::string&)> apply;
};

const std::vector<Mutation>& mutations();

// Text helpers shared by mutation and unit tests.
std::string replace_once(const std::string& text, const std::string& from, const std::string& to);
// xmi:id of the first element whose name property equals `name`.
std::string id_named(const std::string& text, const std::string& name);
// Drops an edge element and every incoming/outgoing reference to it.
std::string remove_edge(const std::string& text, const std::string& edge_id);
// Drops the (possibly multi-line) element whose start tag carries `id`.
std::string remove_element(const std::string& text, const std::string& id);

// Builds small documents directly as ASTs. Ids are B1, B2, ... in creation
// order; flows keep the incoming/outgoing lists of their endpoints in sync.
class ActivityBuilder {
 public:
  ActivityBuilder(std::function<std::string()> ids, std::string name);

  const std::string& id() const { return act_.id; }
  std::string initial();
  std::string final_node();
  std::string decision(const std::string& name);
  std::string param(const std::string& name, const std::string& type_id);
  std::string attribute(const std::string& name, const std::string& type_id, const std::string& default_value);
  // Returns the pin ids: arguments in order, then the result pin.
  std::vector<std::string> call(const std::string& name, const std::string& behaviour_id,
                                const std::vector<std::pair<std::string, std::string>>& args,
                                const std::pair<std::string, std::string>& result);
  // Returns the value pin id.
  std::string write(const std::string& attribute, const std::string& pin_name, const std::string& pin_type);
  std::string flow(const std::string& source, const std::string& target, const std::string& name = "",
                   const std::string& guard = "");
  std::string control(const std::string& source, const std::string& target);

  const xmi::Activity& activity() const { return act_; }

 private:
  xmi::FlowRefs& refs(const std::string& id);

  std::function<std::string()> ids_;
  xmi::Activity act_;
};

class DocBuilder {
 public:
  DocBuilder();
  DocBuilder(const DocBuilder&) = delete;  // activities hold a pointer back for ids
  DocBuilder& operator=(const DocBuilder&) = delete;

  std::string enumeration(const std::string& name, const std::vector<std::string>& literals);
  std::string block(const std::string& name, const std::vector<std::pair<std::string, std::string>>& props);
  ActivityBuilder& activity(const std::string& name);
  std::string next_id() { return "B" + std::to_string(++counter_); }

  // Flow annotations parsed; no spans.
  xmi::XmiDocument build() const;

 private:
  using Item = std::variant<xmi::Enumeration, xmi::Block, std::shared_ptr<ActivityBuilder>>;
  int counter_ = 0;
  std::string root_id_;
  std::vector<Item> items_;
};

// Two leaves (Flip: eS -> eS, Keep: Pair x eS -> eS) and a glue activity Top
// with one attribute, a BLOCK input and a BLOCK output assembled per field.
xmi::XmiDocument mini_model();

// Every identifier occurring in a process declaration (sorts included).
std::set<std::string> identifiers(const mcrl2::ProcDecl& proc);

// Structural comparison of an emitted glue process with a reference one.
// Alignment: each reference identifier must be an emitted name of some model
// element. Parameters compare as lists, the other components as sets.
struct GlueComparison {
  std::size_t params = 0, sum_vars = 0, conjuncts = 0, actions = 0, updates = 0;  // reference counts
  std::vector<std::string> differences;
  bool equal() const { return differences.empty(); }
};
GlueComparison compare_glue(const mcrl2::ProcDecl& emitted, const mcrl2::ProcDecl& reference,
                            const mcrl2::NameTable& names);

}  // namespace ad2mcrl2::testing
