// qpc: analyze two-basis gate-error tables, bound and model the process
// fidelity, and simulate tables from a known process matrix.
//
// Exit codes: 0 success (warnings allowed), 1 schema/validation failure,
// 2 infeasible summary (the worst-case model cannot exist).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "qpc/channel_oracle.hpp"
#include "qpc/errors.hpp"
#include "qpc/json_io.hpp"
#include "qpc/report.hpp"
#include "qpc/version.hpp"

namespace {

struct AnalyzeArgs {
  std::string input = "-";
  std::string targets_path;
  std::string model = "both";
  std::string format = "md";
  std::string out = "-";
  bool rounded_summaries = false;
  bool strict = false;
};

struct SimulateArgs {
  std::string chi_path;
  std::string gate = "identity";
  long shots = 0;
  std::uint64_t seed = 0;
  std::string out = "-";
};

struct BoundsArgs {
  std::string input = "-";
  std::string out = "-";
  bool rounded_summaries = false;
  bool strict = false;
};

void write_text(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw qpc::ValidationError("cannot open file for writing: " + path);
  }
  out << text;
}

qpc::ErrorTableSet load_tables(const std::string& path, bool strict) {
  const auto tol = strict ? qpc::TableTolerances::strict()
                          : qpc::TableTolerances{};
  return qpc::tables_from_json(qpc::load_json(path), tol);
}

int run_analyze(const AnalyzeArgs& args) {
  qpc::AnalysisOptions opts;
  opts.model = qpc::parse_model_choice(args.model);
  opts.rounded_summaries = args.rounded_summaries;
  opts.strict = args.strict;
  opts.input_path = args.input;
  if (!args.targets_path.empty()) {
    opts.targets = qpc::targets_from_json(qpc::load_json(args.targets_path));
  }

  const qpc::ErrorTableSet tables = load_tables(args.input, args.strict);
  const qpc::AnalysisReport report = qpc::analyze(tables, opts);
  for (const std::string& diag : report.diagnostics) {
    std::cerr << "warning: " << diag << "\n";
  }

  if (args.format == "json") {
    write_text(qpc::report_to_json(report).dump(2) + "\n", args.out);
  } else {
    write_text(qpc::render_markdown(report), args.out);
  }
  return 0;
}

int run_simulate(const SimulateArgs& args) {
  const qpc::FullProcessMatrix chi =
      qpc::process_matrix_from_json(qpc::load_json(args.chi_path));

  qpc::GateSpec gate;
  if (args.gate == "identity") {
    gate = qpc::identity_gate(chi.n_qubits);
  } else if (args.gate == "cnot") {
    if (chi.n_qubits != 2) {
      throw qpc::ValidationError("gate cnot needs a 2-qubit process matrix, "
                                 "got " + std::to_string(chi.n_qubits) +
                                 " qubits");
    }
    gate = qpc::cnot_gate();
  } else {
    throw qpc::ValidationError("unknown gate \"" + args.gate +
                               "\" (expected identity or cnot)");
  }

  qpc::ErrorTableSet tables = qpc::generate_tables(chi, gate);
  std::string metadata = "simulated: gate=" + gate.name();
  if (args.shots > 0) {
    tables = qpc::sample_tables(tables, args.shots, args.seed);
    metadata += ", shots=" + std::to_string(args.shots) +
                ", seed=" + std::to_string(args.seed);
  } else {
    metadata += ", exact";
  }
  tables.metadata = metadata;
  qpc::save_json(qpc::tables_to_json(tables), args.out);
  return 0;
}

int run_bounds(const BoundsArgs& args) {
  const qpc::ErrorTableSet tables = load_tables(args.input, args.strict);
  qpc::ComplementarySummary summary = qpc::summarize(tables);
  if (args.rounded_summaries) {
    summary = qpc::rounded_summary(summary);
  }
  const qpc::FidelityBounds bounds = qpc::process_fidelity_bounds(summary);
  write_text(qpc::render_bounds(bounds), args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gate characterization from complementary Z- and X-basis error "
      "statistics"};
  app.set_version_flag("--version", std::string("qpc ") + qpc::kVersion);
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Summaries, fidelity bounds, noise models, target report");
  analyze->add_option("--input", analyze_args.input,
                      "Error-table JSON file, '-' for stdin");
  analyze->add_option("--targets", analyze_args.targets_path,
                      "JSON file with custom stabilizer targets");
  analyze->add_option("--model", analyze_args.model,
                      "worst-case, statistical, or both (default both)");
  analyze->add_flag("--rounded-summaries", analyze_args.rounded_summaries,
                    "Round summaries to 3 decimals before modeling");
  analyze->add_flag("--strict", analyze_args.strict,
                    "Require rows normalized to 1e-9 instead of 2e-3");
  analyze->add_option("--format", analyze_args.format,
                      "Output format: md or json (default md)")
      ->check(CLI::IsMember({"md", "json"}));
  analyze->add_option("--out", analyze_args.out,
                      "Output file, '-' for stdout");

  SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Generate error tables from a process-matrix file");
  simulate->add_option("--chi", simulate_args.chi_path,
                       "Process-matrix JSON (diagonal or full)")
      ->required();
  simulate->add_option("--gate", simulate_args.gate,
                       "Ideal gate: identity or cnot (default identity)");
  simulate->add_option("--shots", simulate_args.shots,
                       "Multinomial shots per input row (0 = exact)");
  simulate->add_option("--seed", simulate_args.seed, "Sampling seed");
  simulate->add_option("--out", simulate_args.out,
                       "Output file, '-' for stdout");

  BoundsArgs bounds_args;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Print only the process-fidelity interval");
  bounds->add_option("--input", bounds_args.input,
                     "Error-table JSON file, '-' for stdin");
  bounds->add_flag("--rounded-summaries", bounds_args.rounded_summaries,
                   "Round summaries to 3 decimals first");
  bounds->add_flag("--strict", bounds_args.strict,
                   "Require rows normalized to 1e-9 instead of 2e-3");
  bounds->add_option("--out", bounds_args.out, "Output file, '-' for stdout");

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (simulate->parsed()) return run_simulate(simulate_args);
    if (bounds->parsed()) return run_bounds(bounds_args);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const qpc::InfeasibleSummaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qpc::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
