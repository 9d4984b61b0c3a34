#include <doctest.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <string>

#include "qpc/errors.hpp"
#include "qpc/json_io.hpp"
#include "qpc/report.hpp"

using namespace qpc;
using nlohmann::json;

namespace {

ErrorTableSet benchmark_tables() {
  return tables_from_json(
      load_json(std::string(QPC_DATA_DIR) + "/oka05_cnot.json"));
}

ErrorTableSet infeasible_tables() {
  return tables_from_json(
      load_json(std::string(QPC_TEST_DATA_DIR) + "/infeasible_tables.json"));
}

// The machine-readable block at the end of a Markdown report.
json extract_json_block(const std::string& md) {
  const std::string open = "```json\n";
  const auto start = md.find(open);
  REQUIRE(start != std::string::npos);
  const auto end = md.find("\n```", start + open.size());
  REQUIRE(end != std::string::npos);
  return json::parse(md.substr(start + open.size(), end - start - open.size()));
}

}  // namespace

TEST_CASE("model-choice names parse and print") {
  CHECK(parse_model_choice("worst-case") == ModelChoice::WorstCase);
  CHECK(parse_model_choice("statistical") == ModelChoice::Statistical);
  CHECK(parse_model_choice("both") == ModelChoice::Both);
  CHECK(to_string(ModelChoice::WorstCase) == "worst-case");
  CHECK(to_string(ModelChoice::Statistical) == "statistical");
  CHECK(to_string(ModelChoice::Both) == "both");
  CHECK_THROWS_WITH_AS(parse_model_choice("bogus"),
                       doctest::Contains("bogus"), ValidationError);
  CHECK_THROWS_AS(parse_model_choice(""), ValidationError);
}

TEST_CASE("a full analysis of the benchmark tables") {
  AnalysisOptions opts;
  opts.input_path = "oka05_cnot.json";
  const AnalysisReport r = analyze(benchmark_tables(), opts);

  CHECK(r.n_qubits == 2);
  CHECK(r.summary.p_z(0) == doctest::Approx(0.85300).epsilon(1e-12));
  CHECK(r.summary.p_x(0) == doctest::Approx(0.86725).epsilon(1e-12));
  CHECK(r.bounds.lower == doctest::Approx(0.72025).epsilon(1e-12));
  CHECK(r.bounds.upper == doctest::Approx(0.85300).epsilon(1e-12));
  CHECK_FALSE(r.bounds.vacuous_lower);

  REQUIRE(r.models.size() == 2);
  REQUIRE(r.worst_case_model() != nullptr);
  REQUIRE(r.statistical_model() != nullptr);
  CHECK(r.worst_case_model()->model_tag == kModelWorstCase);
  CHECK(r.statistical_model()->model_tag == kModelStatistical);
  CHECK(r.worst_case_model()->values(0, 0) ==
        doctest::Approx(0.72025).epsilon(1e-12));
  CHECK(r.statistical_model()->values(0, 0) ==
        doctest::Approx(0.825156527246).epsilon(1e-9));

  REQUIRE(r.targets.size() == 4);
  CHECK(r.targets[0].target.name == "zx_eigenstates");
  CHECK(r.targets[0].worst_case_value ==
        doctest::Approx(0.84225).epsilon(1e-12));
  CHECK(r.targets[0].statistical_value ==
        doctest::Approx(0.874164200377).epsilon(1e-9));
  for (const TargetFidelityReport& t : r.targets) {
    CHECK(t.contributions.size() == 4);
  }

  CHECK(r.process_fidelity_estimate ==
        doctest::Approx(0.82515625).epsilon(1e-12));
  CHECK(r.average_fidelity == doctest::Approx(0.860125).epsilon(1e-12));

  // The relayed model diagnostics: the benchmark's 3-decimal rows force a
  // renormalization, and the summary masses are off 1 by 2.5e-4.
  REQUIRE(r.diagnostics.size() == 2);
  CHECK(r.diagnostics[0].find("renormalized") != std::string::npos);
  CHECK(r.diagnostics[1].find("marginals deviate") != std::string::npos);

  CHECK(r.input_path == "oka05_cnot.json");
  CHECK(r.source_metadata.find("entangling-gate benchmark") !=
        std::string::npos);
  CHECK(r.flags.find("--model both") != std::string::npos);
}

TEST_CASE("requesting one model skips the other") {
  AnalysisOptions opts;
  opts.model = ModelChoice::WorstCase;
  const AnalysisReport r = analyze(benchmark_tables(), opts);
  REQUIRE(r.models.size() == 1);
  CHECK(r.worst_case_model() != nullptr);
  CHECK(r.statistical_model() == nullptr);
  REQUIRE(r.targets.size() == 4);
  CHECK(std::isnan(r.targets[0].statistical_value));
  CHECK_FALSE(std::isnan(r.targets[0].worst_case_value));

  const std::string md = render_markdown(r);
  CHECK(md.find("worst-case") != std::string::npos);
  CHECK(md.find("| statistical |") == std::string::npos);

  const json j = report_to_json(r);
  REQUIRE(j["targets"].size() == 4);
  CHECK(j["targets"][0].contains("worst_case"));
  CHECK_FALSE(j["targets"][0].contains("statistical"));
  CHECK(j["models"].size() == 1);
}

TEST_CASE("infeasible summaries only break the worst-case model") {
  AnalysisOptions stat_only;
  stat_only.model = ModelChoice::Statistical;
  const AnalysisReport r = analyze(infeasible_tables(), stat_only);
  REQUIRE(r.models.size() == 1);
  CHECK(r.statistical_model() != nullptr);
  CHECK(r.bounds.vacuous_lower);
  CHECK(r.bounds.lower == 0.0);
  // The vacuous lower bound is called out.
  bool mentioned = false;
  for (const std::string& d : r.diagnostics) {
    if (d.find("vacuous") != std::string::npos) mentioned = true;
  }
  CHECK(mentioned);

  CHECK_THROWS_AS(analyze(infeasible_tables(), AnalysisOptions{}),
                  InfeasibleSummaryError);
}

TEST_CASE("the rounded-summaries flag reproduces published-table analyses") {
  AnalysisOptions opts;
  opts.rounded_summaries = true;
  const AnalysisReport r = analyze(benchmark_tables(), opts);
  CHECK(r.summary.p_z(0) == doctest::Approx(0.853).epsilon(1e-15));
  CHECK(r.summary.p_x(1) == doctest::Approx(0.034).epsilon(1e-15));
  CHECK(r.bounds.lower == doctest::Approx(0.720).epsilon(1e-12));
  CHECK(r.targets[0].statistical_value ==
        doctest::Approx(0.873965628357).epsilon(1e-9));
  CHECK(r.flags.find("--rounded-summaries") != std::string::npos);
}

TEST_CASE("markdown and json renderers agree") {
  AnalysisOptions opts;
  opts.input_path = "oka05_cnot.json";
  const AnalysisReport r = analyze(benchmark_tables(), opts);
  const std::string md = render_markdown(r);
  const json inline_block = extract_json_block(md);
  const json direct = report_to_json(r);
  CHECK(inline_block == direct);
}

TEST_CASE("markdown carries the tables a reader checks first") {
  AnalysisOptions opts;
  opts.input_path = "oka05_cnot.json";
  const std::string md = render_markdown(analyze(benchmark_tables(), opts));

  CHECK(md.find("0.720 ≤ F_qp ≤ 0.853") != std::string::npos);
  // Model tables end in an exact Sum row/column.
  CHECK(md.find("| Sum |") != std::string::npos);
  CHECK(md.find("1.0000") != std::string::npos);
  // Summary row at three decimals.
  CHECK(md.find("| 0.853 |") != std::string::npos);
  CHECK(md.find("| 0.867 |") != std::string::npos);
  // Target fidelities, both models, three decimals.
  CHECK(md.find("| zx_eigenstates | II IX ZI ZX | 0.842 | 0.874 |") !=
        std::string::npos);
  CHECK(md.find("| bell_from_xz | II XX ZZ YY | 0.793 | 0.850 |") !=
        std::string::npos);
  CHECK(md.find("0.825") != std::string::npos);
  CHECK(md.find("0.860") != std::string::npos);
}

TEST_CASE("bounds render with the vacuous flag spelled out") {
  FidelityBounds informative{0.72025, 0.853, false};
  const std::string a = render_bounds(informative);
  CHECK(a.find("0.720 ≤ F_qp ≤ 0.853") != std::string::npos);
  CHECK(a.find("informative") != std::string::npos);

  FidelityBounds vacuous{0.0, 0.6, true};
  const std::string b = render_bounds(vacuous);
  CHECK(b.find("0.000 ≤ F_qp ≤ 0.600") != std::string::npos);
  CHECK(b.find("vacuous") != std::string::npos);
}

TEST_CASE("custom targets replace the presets") {
  AnalysisOptions opts;
  opts.targets = targets_from_json(
      load_json(std::string(QPC_TEST_DATA_DIR) + "/custom_targets.json"));
  const AnalysisReport r = analyze(benchmark_tables(), opts);
  REQUIRE(r.targets.size() == 2);
  CHECK(r.targets[0].target.name == "bell_pairs");
  CHECK(r.targets[1].target.name == "local_zx");
  CHECK(r.flags.find("--targets") != std::string::npos);

  const std::string md = render_markdown(r);
  CHECK(md.find("bell_pairs") != std::string::npos);
  CHECK(md.find("zx_eigenstates") == std::string::npos);
}

TEST_CASE("presets only apply to two-qubit data") {
  ComplementarySummary s;
  s.n_qubits = 1;
  s.p_z = Eigen::Vector2d{0.9, 0.1};
  s.p_x = Eigen::Vector2d{0.85, 0.15};
  const AnalysisReport r = analyze_summary(s, AnalysisOptions{});
  CHECK(r.n_qubits == 1);
  CHECK(r.targets.empty());
  CHECK(r.models.size() == 2);
  CHECK(r.bounds.lower == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("the json report exposes the full pipeline provenance") {
  AnalysisOptions opts;
  opts.input_path = "oka05_cnot.json";
  const json j = report_to_json(analyze(benchmark_tables(), opts));

  CHECK(j["tool"]["name"] == "qpc");
  CHECK(j["tool"]["version"].is_string());
  CHECK(j["provenance"]["input"] == "oka05_cnot.json");
  CHECK(j["provenance"]["flags"].is_string());
  CHECK(j["n_qubits"] == 2);
  for (const char* key : {"p_z", "p_x", "fidelity_z", "fidelity_x"}) {
    CHECK(j["summary"].contains(key));
  }
  CHECK(j["summary"]["fidelity_z"].get<double>() ==
        doctest::Approx(0.853).epsilon(1e-12));
  CHECK(j["bounds"]["lower"].get<double>() ==
        doctest::Approx(0.72025).epsilon(1e-12));
  CHECK(j["bounds"]["vacuous_lower"] == false);
  REQUIRE(j["models"].is_array());
  CHECK(j["models"][0]["model"] == "worst_case");
  CHECK(j["models"][1]["model"] == "statistical");
  REQUIRE(j["targets"].is_array());
  CHECK(j["targets"][0]["paulis"].size() == 4);
  CHECK(j["targets"][0]["contributions"].size() == 4);
  CHECK(j["process_fidelity_estimate"].get<double>() ==
        doctest::Approx(0.82515625).epsilon(1e-12));
  CHECK(j["average_fidelity"].get<double>() ==
        doctest::Approx(0.860125).epsilon(1e-12));
  CHECK(j["diagnostics"].is_array());
}
