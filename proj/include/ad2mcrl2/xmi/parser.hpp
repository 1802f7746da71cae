#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ad2mcrl2/source_span.hpp"
#include "ad2mcrl2/xmi/ast.hpp"
#include "ad2mcrl2/xmi/lexer.hpp"

namespace ad2mcrl2::xmi {

// Front-end failure. `rule` names the violated check: XmiSyntax,
// PropertyOrder, MissingProperty, DuplicateId, UnresolvedReference,
// UnsupportedConstruct or FlowAnnotation.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string rule, const std::string& message, SourceSpan span)
      : std::runtime_error(message), rule_(std::move(rule)), span_(std::move(span)) {}
  const std::string& rule() const { return rule_; }
  const SourceSpan& span() const { return span_; }

 private:
  std::string rule_;
  SourceSpan span_;
};

// Builds the abstract-constructor tree. Properties of recognised elements must
// appear in the exporter's fixed order. Extension and diagram sections are
// skipped. Structural references (flow source/target, incoming/outgoing) must
// resolve; type and behaviour references are left to the type checker.
XmiDocument parse_document(const std::vector<Token>& tokens);

// Parses every flow name as an Assignment and every guard as a GuardExpr.
XmiDocument parse_flow_annotations(XmiDocument doc);

// tokenize + parse_document + parse_flow_annotations. LexError is rethrown as
// ParseError with rule XmiSyntax.
XmiDocument load_document(std::string_view text);

}  // namespace ad2mcrl2::xmi
