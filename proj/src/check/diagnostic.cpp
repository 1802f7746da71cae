#include "ad2mcrl2/check/diagnostic.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

namespace ad2mcrl2::check {

namespace {

const char* severity_name(Severity s) { return s == Severity::kError ? "error" : "warning"; }

}  // namespace

std::string format_text(const Diagnostic& d) {
  std::string out = d.severity == Severity::kError ? "ERROR " : "WARNING ";
  out += d.rule + " at " + d.span.xmi_id.value_or("-") + " (" + std::to_string(d.span.begin) + "-" +
         std::to_string(d.span.end) + "): " + d.message;
  return out;
}

std::string format_json(const Diagnostic& d) {
  nlohmann::ordered_json j;
  j["severity"] = severity_name(d.severity);
  j["rule"] = d.rule;
  j["xmi_id"] = d.span.xmi_id ? nlohmann::ordered_json(*d.span.xmi_id) : nlohmann::ordered_json();
  j["start"] = d.span.begin;
  j["end"] = d.span.end;
  j["message"] = d.message;
  return j.dump();
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.span.begin, a.rule, a.message) < std::tie(b.span.begin, b.rule, b.message);
  });
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

}  // namespace ad2mcrl2::check
