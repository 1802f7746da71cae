#pragma once

#include <string>
#include <vector>

#include "ad2mcrl2/source_span.hpp"

namespace ad2mcrl2::check {

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string rule;
  std::string message;
  SourceSpan span;

  bool operator==(const Diagnostic&) const = default;
};

// ERROR <rule> at <xmi:id> (<begin>-<end>): <message>
std::string format_text(const Diagnostic& d);
// {"severity","rule","xmi_id","start","end","message"} on one line.
std::string format_json(const Diagnostic& d);

// Document order (span begin), then rule name, then message.
void sort_diagnostics(std::vector<Diagnostic>& diags);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace ad2mcrl2::check
