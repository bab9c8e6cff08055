#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "arc/arch.hpp"
#include "arc/frontend.hpp"
#include "arc/graph_export.hpp"
#include "arc/parser.hpp"
#include "arc/sim.hpp"

namespace arc::cli {

namespace {

struct Options {
  std::vector<std::string> files;
  std::string root;
  std::string format = "dot";
  std::string stimuli;
  std::size_t maxSteps = 10000;
  std::string trace = "boundary";
};

void print_diagnostics(const Diagnostics& diags, std::ostream& err) {
  for (const Diagnostic& d : diags) err << format(d) << '\n';
}

// Reads and compiles the sources; returns nullopt (with `status` set) when a
// file cannot be read.
std::optional<Program> load(const Options& opt, std::ostream& err, int& status) {
  std::vector<SourceFile> files;
  for (const std::string& path : opt.files) {
    auto text = read_file(path);
    if (!text) {
      err << "error: cannot read '" << path << "'\n";
      status = kUsage;
      return std::nullopt;
    }
    files.push_back(SourceFile{path, std::move(*text)});
  }
  return compile(files);
}

// Elaborates and flattens `root`, appending diagnostics.
struct Built {
  ElaborateResult elab;
  FlattenResult flat;
};

Built build(const std::string& root, const Program& prog, Diagnostics& diags) {
  Built b{elaborate(root, prog), {}};
  diags.insert(diags.end(), b.elab.diagnostics.begin(), b.elab.diagnostics.end());
  if (b.elab.ok()) {
    b.flat = flatten(b.elab.architecture);
    diags.insert(diags.end(), b.flat.diagnostics.begin(), b.flat.diagnostics.end());
  }
  return b;
}

int cmd_check(const Options& opt, std::ostream& err) {
  int status = kSuccess;
  auto prog = load(opt, err, status);
  if (!prog) return status;
  Diagnostics diags = prog->diagnostics;
  if (!opt.root.empty()) {
    if (!prog->component(opt.root)) {
      print_diagnostics(diags, err);
      err << "error: unknown root component '" << opt.root << "'\n";
      return kUsage;
    }
    build(opt.root, *prog, diags);
  } else {
    for (const auto& [name, rc] : prog->components) {
      if (rc.kind == ComponentKind::Structural) build(name, *prog, diags);
    }
  }
  normalize(diags);
  print_diagnostics(diags, err);
  return has_errors(diags) ? kDiagnostics : kSuccess;
}

// Shared front half of `graph` and `run`: compile, check the root, elaborate.
std::optional<Built> prepare(const Options& opt, std::ostream& err, int& status, Program& prog_out) {
  auto prog = load(opt, err, status);
  if (!prog) return std::nullopt;
  prog_out = std::move(*prog);
  Diagnostics diags = prog_out.diagnostics;
  if (!prog_out.component(opt.root)) {
    print_diagnostics(diags, err);
    err << "error: unknown root component '" << opt.root << "'\n";
    status = kUsage;
    return std::nullopt;
  }
  Built b = build(opt.root, prog_out, diags);
  normalize(diags);
  print_diagnostics(diags, err);
  if (has_errors(diags)) {
    status = kDiagnostics;
    return std::nullopt;
  }
  return b;
}

int cmd_graph(const Options& opt, std::ostream& out, std::ostream& err) {
  int status = kSuccess;
  Program prog;
  auto built = prepare(opt, err, status, prog);
  if (!built) return status;
  out << export_graph(built->elab.architecture, opt.format == "json" ? GraphFormat::Json : GraphFormat::Dot);
  return kSuccess;
}

int cmd_run(const Options& opt, std::ostream& out, std::ostream& err) {
  int status = kSuccess;
  Program prog;
  auto built = prepare(opt, err, status, prog);
  if (!built) return status;

  std::vector<Stimulus> parsed;
  if (!opt.stimuli.empty()) {
    auto text = read_file(opt.stimuli);
    if (!text) {
      err << "error: cannot read '" << opt.stimuli << "'\n";
      return kUsage;
    }
    StimulusResult sr = parse_stimulus(*text, opt.stimuli);
    print_diagnostics(sr.diagnostics, err);
    if (!sr.ok()) return kDiagnostics;
    parsed = std::move(sr.stimuli);
  }

  const ElaboratedArchitecture& ea = built->elab.architecture;
  std::vector<StimulusValue> stimuli;
  try {
    stimuli = stimulus_values(parsed, prog.symbols);
    for (std::size_t i = 0; i < stimuli.size(); ++i) {
      try {
        check_stimulus(ea, stimuli[i].first, stimuli[i].second);
      } catch (const UsageError& e) {
        throw UsageError("stimulus line " + std::to_string(parsed[i].line) + ": " + e.what());
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  RunConfig cfg;
  cfg.maxSteps = opt.maxSteps;
  cfg.verbosity = opt.trace == "full" ? TraceVerbosity::Full : TraceVerbosity::Boundary;
  RunResult result = run(ea, built->flat.table, stimuli, cfg);
  out << serialize(result.trace(), cfg.verbosity);
  out.flush();
  if (result.error) {
    err << (result.error->kind == RunError::Kind::Divergence ? "error: divergence: " : "error: runtime fault: ")
        << result.error->message << '\n';
    return kRuntime;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compiler and simulator for component-and-connector architecture models", "arcc"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Parse and check .arc sources");
  check->add_option("files", opt.files, ".arc source files")->required();
  check->add_option("--root", opt.root, "Elaborate only this component (default: every structural one)");

  auto* graph = app.add_subcommand("graph", "Print the elaborated architecture of a root component");
  graph->add_option("files", opt.files, ".arc source files")->required();
  graph->add_option("--root", opt.root, "Root component type")->required();
  graph->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();

  auto* runc = app.add_subcommand("run", "Simulate a root component on a stimulus file");
  runc->add_option("files", opt.files, ".arc source files")->required();
  runc->add_option("--root", opt.root, "Root component type")->required();
  runc->add_option("--stimuli", opt.stimuli, "Stimulus file: one '<port> <literal>' per line (default: none)");
  runc->add_option("--max-steps", opt.maxSteps, "Abort with exit code 3 after this many steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  runc->add_option("--trace", opt.trace, "Trace verbosity: boundary = INJECT/SYSTEM_OUT only, full = every event")
      ->check(CLI::IsMember({"boundary", "full"}))
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("arcc");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  if (check->parsed()) return cmd_check(opt, err);
  if (graph->parsed()) return cmd_graph(opt, out, err);
  return cmd_run(opt, out, err);
}

}  // namespace arc::cli
