#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace ad2mcrl2::cli {

enum class Mode { kTranslate, kCheck, kSelfcheck };
enum class DiagFormat { kText, kJsonLines };

struct RunConfig {
  std::string input_path;
  std::optional<std::string> output_path;  // stdout when absent
  Mode mode = Mode::kTranslate;
  std::optional<std::string> scope_graph_dot;
  std::optional<std::string> entry_process;
  DiagFormat diag_format = DiagFormat::kText;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;

// Parse, check, then translate / report / self-check. Payload goes to `out`
// (or the output file), diagnostics and summaries to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Command-line front end: parses arguments, then calls run.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ad2mcrl2::cli
