#include "qpc/report.hpp"

#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qpc/errors.hpp"
#include "qpc/json_io.hpp"
#include "qpc/version.hpp"

namespace qpc {

namespace {

using nlohmann::json;

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string member_string(const StabilizerTarget& t) {
  std::string s;
  for (std::size_t i = 0; i < t.members.size(); ++i) {
    if (i > 0) s += " ";
    s += pauli_string(pauli_of_index(t.members[i], t.n_qubits));
  }
  return s;
}

std::string render_flags(const AnalysisOptions& opts) {
  std::string flags = "--model " + to_string(opts.model);
  if (opts.rounded_summaries) flags += " --rounded-summaries";
  if (opts.strict) flags += " --strict";
  if (!opts.targets.empty()) {
    flags += " --targets <" + std::to_string(opts.targets.size()) + " custom>";
  }
  return flags;
}

void append_chi_table(std::ostringstream& out, const DiagonalChi& chi,
                      int n_qubits) {
  const int d = chi.dim();
  out << "| f_z \\ f_x |";
  for (int c = 0; c < d; ++c) out << " " << input_label(n_qubits, c) << " |";
  out << " Sum |\n|---|";
  for (int c = 0; c <= d; ++c) out << "---|";
  out << "\n";
  for (int r = 0; r < d; ++r) {
    out << "| " << input_label(n_qubits, r) << " |";
    for (int c = 0; c < d; ++c) out << " " << fixed(chi.values(r, c), 4) << " |";
    out << " " << fixed(chi.values.row(r).sum(), 4) << " |\n";
  }
  out << "| Sum |";
  for (int c = 0; c < d; ++c) {
    out << " " << fixed(chi.values.col(c).sum(), 4) << " |";
  }
  out << " " << fixed(chi.values.sum(), 4) << " |\n";
}

}  // namespace

ModelChoice parse_model_choice(const std::string& name) {
  if (name == "worst-case") return ModelChoice::WorstCase;
  if (name == "statistical") return ModelChoice::Statistical;
  if (name == "both") return ModelChoice::Both;
  throw ValidationError(
      "unknown model \"" + name +
      "\" (expected worst-case, statistical, or both)");
}

std::string to_string(ModelChoice m) {
  switch (m) {
    case ModelChoice::WorstCase:
      return "worst-case";
    case ModelChoice::Statistical:
      return "statistical";
    case ModelChoice::Both:
      return "both";
  }
  return "both";
}

const DiagonalChi* AnalysisReport::worst_case_model() const {
  for (const DiagonalChi& m : models) {
    if (m.model_tag == kModelWorstCase) return &m;
  }
  return nullptr;
}

const DiagonalChi* AnalysisReport::statistical_model() const {
  for (const DiagonalChi& m : models) {
    if (m.model_tag == kModelStatistical ||
        m.model_tag == kModelClampedStatistical) {
      return &m;
    }
  }
  return nullptr;
}

AnalysisReport analyze_summary(const ComplementarySummary& s,
                               const AnalysisOptions& opts) {
  AnalysisReport r;
  r.n_qubits = s.n_qubits;
  r.summary = s;
  r.input_path = opts.input_path;
  r.tool_version = kVersion;
  r.flags = render_flags(opts);

  r.bounds = process_fidelity_bounds(s);
  if (r.bounds.vacuous_lower) {
    r.diagnostics.push_back(
        "lower bound is vacuous: F_Z + F_X - 1 = " +
        fixed(s.fidelity_z() + s.fidelity_x() - 1.0, 6) + " clamped to 0");
  }

  if (opts.model != ModelChoice::Statistical) {
    r.models.push_back(worst_case_chi(s));
  }
  if (opts.model != ModelChoice::WorstCase) {
    DiagonalChi stat = statistical_chi(s);
    for (const std::string& d : stat.diagnostics) {
      r.diagnostics.push_back(stat.model_tag + ": " + d);
    }
    r.models.push_back(std::move(stat));
  }

  r.process_fidelity_estimate = process_fidelity_estimate(s);
  r.average_fidelity =
      average_fidelity_from_process(r.process_fidelity_estimate, s.dim());

  std::vector<StabilizerTarget> targets = opts.targets;
  if (targets.empty() && s.n_qubits == 2) {
    targets = preset_targets();
  }
  const DiagonalChi* worst = r.worst_case_model();
  const DiagonalChi* stat = r.statistical_model();
  const double nan = std::nan("");
  for (const StabilizerTarget& t : targets) {
    if (t.n_qubits != s.n_qubits) {
      throw ValidationError("target \"" + t.name + "\" is for " +
                            std::to_string(t.n_qubits) +
                            " qubits but the data has " +
                            std::to_string(s.n_qubits));
    }
    TargetFidelityReport tr;
    tr.target = t;
    tr.worst_case_value = worst ? target_fidelity(*worst, t) : nan;
    tr.statistical_value = stat ? target_fidelity(*stat, t) : nan;
    for (const ErrorIndex& e : t.members) {
      TargetContribution c;
      c.index = e;
      c.worst_case = worst ? worst->values(e.f_z, e.f_x) : nan;
      c.statistical = stat ? stat->values(e.f_z, e.f_x) : nan;
      tr.contributions.push_back(c);
    }
    r.targets.push_back(std::move(tr));
  }
  return r;
}

AnalysisReport analyze(const ErrorTableSet& tables,
                       const AnalysisOptions& opts) {
  ComplementarySummary s = summarize(tables);
  if (opts.rounded_summaries) {
    s = rounded_summary(s);
  }
  AnalysisReport r = analyze_summary(s, opts);
  r.source_metadata = tables.metadata;
  return r;
}

json report_to_json(const AnalysisReport& r) {
  json doc;
  doc["tool"] = {{"name", "qpc"}, {"version", r.tool_version}};
  doc["provenance"] = {{"input", r.input_path}, {"flags", r.flags}};
  if (!r.source_metadata.empty()) {
    doc["provenance"]["metadata"] = r.source_metadata;
  }
  doc["n_qubits"] = r.n_qubits;

  json summary;
  summary["p_z"] = std::vector<double>(r.summary.p_z.data(),
                                       r.summary.p_z.data() + r.summary.dim());
  summary["p_x"] = std::vector<double>(r.summary.p_x.data(),
                                       r.summary.p_x.data() + r.summary.dim());
  summary["fidelity_z"] = r.summary.fidelity_z();
  summary["fidelity_x"] = r.summary.fidelity_x();
  doc["summary"] = std::move(summary);

  doc["bounds"] = {{"lower", r.bounds.lower},
                   {"upper", r.bounds.upper},
                   {"vacuous_lower", r.bounds.vacuous_lower}};

  doc["models"] = json::array();
  for (const DiagonalChi& m : r.models) {
    doc["models"].push_back(diagonal_chi_to_json(m));
  }

  doc["targets"] = json::array();
  for (const TargetFidelityReport& tr : r.targets) {
    json t = target_to_json(tr.target);
    if (!std::isnan(tr.worst_case_value)) {
      t["worst_case"] = tr.worst_case_value;
    }
    if (!std::isnan(tr.statistical_value)) {
      t["statistical"] = tr.statistical_value;
    }
    json contributions = json::array();
    for (const TargetContribution& c : tr.contributions) {
      json entry;
      entry["pauli"] =
          pauli_string(pauli_of_index(c.index, tr.target.n_qubits));
      entry["f_z"] = c.index.f_z;
      entry["f_x"] = c.index.f_x;
      if (!std::isnan(c.worst_case)) entry["worst_case"] = c.worst_case;
      if (!std::isnan(c.statistical)) entry["statistical"] = c.statistical;
      contributions.push_back(std::move(entry));
    }
    t["contributions"] = std::move(contributions);
    doc["targets"].push_back(std::move(t));
  }

  doc["process_fidelity_estimate"] = r.process_fidelity_estimate;
  doc["average_fidelity"] = r.average_fidelity;
  doc["diagnostics"] = r.diagnostics;
  return doc;
}

std::string render_markdown(const AnalysisReport& r) {
  std::ostringstream out;
  const int d = r.dim();

  out << "# Complementary error analysis\n\n";
  out << "- input: " << r.input_path << "\n";
  if (!r.source_metadata.empty()) {
    out << "- metadata: " << r.source_metadata << "\n";
  }
  out << "- tool: qpc " << r.tool_version << " (" << r.flags << ")\n";
  out << "- qubits: " << r.n_qubits << " (d = " << d << ")\n";

  out << "\n## Error summaries\n\n";
  out << "| pattern f | p_Z(f) | p_X(f) |\n|---|---|---|\n";
  for (int f = 0; f < d; ++f) {
    out << "| " << input_label(r.n_qubits, f) << " | "
        << fixed(r.summary.p_z(f), 3) << " | " << fixed(r.summary.p_x(f), 3)
        << " |\n";
  }
  out << "\nF_Z = " << fixed(r.summary.fidelity_z(), 3)
      << ", F_X = " << fixed(r.summary.fidelity_x(), 3) << "\n";

  out << "\n## Process fidelity bounds\n\n";
  out << render_bounds(r.bounds);

  for (const DiagonalChi& m : r.models) {
    out << "\n## Model: " << m.model_tag << "\n\n";
    append_chi_table(out, m, r.n_qubits);
    out << "\nprocess fidelity chi(0,0) = " << fixed(m.process_fidelity(), 4)
        << "\n";
  }

  if (!r.targets.empty()) {
    out << "\n## Target fidelities\n\n";
    out << "| target | stabilizers |";
    const bool worst = r.worst_case_model() != nullptr;
    const bool stat = r.statistical_model() != nullptr;
    if (worst) out << " worst-case |";
    if (stat) out << " statistical |";
    out << "\n|---|---|";
    if (worst) out << "---|";
    if (stat) out << "---|";
    out << "\n";
    for (const TargetFidelityReport& tr : r.targets) {
      out << "| " << tr.target.name << " | " << member_string(tr.target)
          << " |";
      if (worst) out << " " << fixed(tr.worst_case_value, 3) << " |";
      if (stat) out << " " << fixed(tr.statistical_value, 3) << " |";
      out << "\n";
    }
  }

  out << "\n## Estimates\n\n";
  out << "- most-likely process fidelity: "
      << fixed(r.process_fidelity_estimate, 3) << "\n";
  out << "- average output-state fidelity: " << fixed(r.average_fidelity, 3)
      << "\n";

  if (!r.diagnostics.empty()) {
    out << "\n## Diagnostics\n\n";
    for (const std::string& diag : r.diagnostics) {
      out << "- " << diag << "\n";
    }
  }

  out << "\n## Machine-readable report\n\n```json\n"
      << report_to_json(r).dump(2) << "\n```\n";
  return out.str();
}

std::string render_bounds(const FidelityBounds& b) {
  std::ostringstream out;
  out << fixed(b.lower, 3) << " ≤ F_qp ≤ " << fixed(b.upper, 3)
      << "\n";
  out << "lower bound: "
      << (b.vacuous_lower ? "vacuous (clamped to 0)" : "informative") << "\n";
  return out.str();
}

}  // namespace qpc
