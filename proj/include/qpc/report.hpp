#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "qpc/measurement.hpp"
#include "qpc/noise_models.hpp"
#include "qpc/target_fidelity.hpp"

namespace qpc {

enum class ModelChoice { WorstCase, Statistical, Both };

// Accepts "worst-case", "statistical", "both"; throws ValidationError on
// anything else.
ModelChoice parse_model_choice(const std::string& name);
std::string to_string(ModelChoice m);

struct AnalysisOptions {
  ModelChoice model = ModelChoice::Both;
  // Round the summary to 3 decimals before modeling, to reproduce analyses
  // that were run on published 3-decimal tables.
  bool rounded_summaries = false;
  bool strict = false;  // recorded in provenance; input parsing applies it
  // Empty selects the built-in two-qubit targets when n_qubits == 2.
  std::vector<StabilizerTarget> targets;
  std::string input_path = "-";  // provenance only
};

// Everything a rendered report contains, in one value. Both renderers read
// from this struct alone, so the Markdown tables and the JSON block cannot
// disagree.
struct AnalysisReport {
  int n_qubits = 0;
  ComplementarySummary summary;  // the summary the models were built from
  FidelityBounds bounds;
  std::vector<DiagonalChi> models;  // worst-case first when both are present
  // Per-target values; a model that was not requested is stored as NaN and
  // skipped by the renderers.
  std::vector<TargetFidelityReport> targets;
  double process_fidelity_estimate = 1.0;  // closed form from the summary
  double average_fidelity = 1.0;           // (F_est * d + 1) / (d + 1)
  std::vector<std::string> diagnostics;
  std::string input_path;
  std::string source_metadata;
  std::string tool_version;
  std::string flags;

  int dim() const { return 1 << n_qubits; }
  const DiagonalChi* worst_case_model() const;   // nullptr when not built
  const DiagonalChi* statistical_model() const;  // matches clamped tag too
};

// Full pipeline on a validated table set: summarize (optionally rounded),
// bounds, requested models, targets, estimates. Throws
// InfeasibleSummaryError when the worst-case model is requested but
// F_Z + F_X < 1; warnings (clamping, vacuous bounds) land in diagnostics.
AnalysisReport analyze(const ErrorTableSet& tables,
                       const AnalysisOptions& opts = {});

// Same pipeline when only the 2d summary values are available.
AnalysisReport analyze_summary(const ComplementarySummary& s,
                               const AnalysisOptions& opts = {});

// Markdown report: summaries at 3 decimals, model tables at 4 decimals with
// marginal Sum row/column, target table, estimates, diagnostics, and the
// full-precision JSON block at the end.
std::string render_markdown(const AnalysisReport& r);

// Machine-readable form of the same value, full precision.
nlohmann::json report_to_json(const AnalysisReport& r);

// The two-line bounds summary: the interval and the vacuous flag.
std::string render_bounds(const FidelityBounds& b);

}  // namespace qpc
