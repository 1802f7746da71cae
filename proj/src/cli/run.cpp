#include "ad2mcrl2/cli/run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ad2mcrl2/check/checker.hpp"
#include "ad2mcrl2/mcrl2/emitter.hpp"
#include "ad2mcrl2/oracle/selfcheck.hpp"
#include "ad2mcrl2/xmi/parser.hpp"

namespace ad2mcrl2::cli {

namespace {

void report(const check::Diagnostic& d, DiagFormat fmt, std::ostream& err) {
  err << (fmt == DiagFormat::kJsonLines ? check::format_json(d) : check::format_text(d)) << "\n";
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "ad2mcrl2: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.input_path, std::ios::binary);
  if (!in) {
    err << "ad2mcrl2: cannot read " << cfg.input_path << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  xmi::XmiDocument doc;
  try {
    doc = xmi::load_document(buf.str());
  } catch (const xmi::ParseError& e) {
    report({check::Severity::kError, e.rule(), e.what(), e.span()}, cfg.diag_format, err);
    return kExitDiagnostics;
  }

  if (cfg.entry_process) {
    bool found = false;
    xmi::for_each_element(doc.root, [&](const auto& elem) {
      if constexpr (std::is_same_v<std::decay_t<decltype(elem)>, xmi::Activity>) {
        found = found || elem.name == *cfg.entry_process;
      }
    });
    if (!found) {
      err << "ad2mcrl2: no activity named " << *cfg.entry_process << "\n";
      return kExitUsage;
    }
  }

  check::CheckOptions opts;
  opts.entry = cfg.entry_process;
  const check::CheckResult result = check::check_document(std::move(doc), opts);
  for (const auto& d : result.diagnostics) report(d, cfg.diag_format, err);
  if (!result.ok()) return kExitDiagnostics;
  const check::TypedModel& tm = *result.model;

  if (cfg.scope_graph_dot && !write_file(*cfg.scope_graph_dot, tm.graph.to_dot(), err)) return kExitUsage;

  switch (cfg.mode) {
    case Mode::kCheck:
      return kExitOk;
    case Mode::kTranslate: {
      const mcrl2::Emitter emitter(tm);
      const std::string text = mcrl2::pretty_print(emitter.assemble_spec(cfg.entry_process));
      if (cfg.output_path) return write_file(*cfg.output_path, text, err) ? kExitOk : kExitUsage;
      out << text;
      return kExitOk;
    }
    case Mode::kSelfcheck: {
      const oracle::SelfcheckReport rep = oracle::selfcheck(tm);
      std::ostringstream os;
      auto line = [&](const char* kind, const oracle::SweepResult& r) {
        os << (r.mismatches ? "FAIL " : "PASS ") << kind << " " << r.activity << ": " << r.cases << " cases"
           << (r.exhaustive ? " (exhaustive)" : " (sampled)") << ", " << r.mismatches << " mismatches\n";
        for (const auto& f : r.failures) os << "  " << f << "\n";
      };
      for (const auto& r : rep.leaves) line("leaf", r);
      for (const auto& r : rep.glues) line("glue", r);
      os << (rep.ok() ? "selfcheck passed: " : "selfcheck failed: ") << rep.cases() << " cases, "
         << rep.mismatches() << " mismatches\n";
      if (cfg.output_path) {
        if (!write_file(*cfg.output_path, os.str(), err)) return kExitUsage;
      } else {
        out << os.str();
      }
      return rep.ok() ? kExitOk : kExitDiagnostics;
    }
  }
  return kExitOk;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translate restricted activity diagrams (XMI 2.1) to mCRL2", "ad2mcrl2"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string diag = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input_path, "Input .xmi file")->required();
    sub->add_option("--entry", cfg.entry_process, "Glue activity to instantiate in init");
    sub->add_option("--scope-graph-dot", cfg.scope_graph_dot, "Write the scope graph in DOT format");
    sub->add_option("--diag", diag, "Diagnostic format")->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* translate = app.add_subcommand("translate", "Check and emit mCRL2");
  add_common(translate);
  translate->add_option("-o,--output", cfg.output_path, "Output .mcrl2 file (default stdout)");
  CLI::App* check_cmd = app.add_subcommand("check", "Check only, write nothing");
  add_common(check_cmd);
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Compare emitted code with the reference semantics");
  add_common(selfcheck);
  selfcheck->add_option("-o,--output", cfg.output_path, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (translate->parsed()) cfg.mode = Mode::kTranslate;
  if (check_cmd->parsed()) cfg.mode = Mode::kCheck;
  if (selfcheck->parsed()) cfg.mode = Mode::kSelfcheck;
  cfg.diag_format = diag == "json" ? DiagFormat::kJsonLines : DiagFormat::kText;
  return run(cfg, out, err);
}

}  // namespace ad2mcrl2::cli
