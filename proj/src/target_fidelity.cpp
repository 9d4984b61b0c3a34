#include "qpc/target_fidelity.hpp"

#include <numeric>

#include "qpc/errors.hpp"

namespace qpc {

namespace {

StabilizerTarget make_target(std::string name,
                             std::initializer_list<ErrorIndex> members) {
  return StabilizerTarget{std::move(name), 2, std::vector<ErrorIndex>(members)};
}

void require_valid(const DiagonalChi& chi, const StabilizerTarget& t) {
  if (t.n_qubits != chi.n_qubits) {
    throw ValidationError("target '" + t.name + "' is for " +
                          std::to_string(t.n_qubits) + " qubits, chi is for " +
                          std::to_string(chi.n_qubits));
  }
  const std::vector<std::string> violations = validate_target(t);
  if (!violations.empty()) {
    std::string msg = "invalid target '" + t.name + "':";
    for (const std::string& v : violations) msg += "\n  - " + v;
    throw ValidationError(msg);
  }
}

}  // namespace

double chi_mass(const DiagonalChi& chi, std::span<const ErrorIndex> indices) {
  const auto d = static_cast<std::uint32_t>(chi.dim());
  double sum = 0.0;
  for (const ErrorIndex& idx : indices) {
    if (idx.f_z >= d || idx.f_x >= d) {
      throw ValidationError("index " + to_string(idx) +
                            " is outside a dimension-" + std::to_string(d) +
                            " table");
    }
    sum += chi.values(static_cast<int>(idx.f_z), static_cast<int>(idx.f_x));
  }
  return sum;
}

double target_fidelity(const DiagonalChi& chi, const StabilizerTarget& t) {
  require_valid(chi, t);
  return chi_mass(chi, t.members);
}

std::vector<StabilizerTarget> preset_targets() {
  return {
      make_target("zx_eigenstates", {{0, 0}, {1, 0}, {0, 2}, {1, 2}}),
      make_target("bell_from_xz", {{0, 0}, {3, 0}, {0, 3}, {3, 3}}),
      make_target("xz_from_bell", {{0, 0}, {2, 0}, {0, 1}, {2, 1}}),
      make_target("entangle_from_yy", {{0, 0}, {1, 3}, {3, 2}, {2, 1}}),
  };
}

std::vector<TargetFidelityReport> evaluate_all(
    const ComplementarySummary& s,
    const std::vector<StabilizerTarget>& targets) {
  const DiagonalChi worst = worst_case_chi(s);
  const DiagonalChi stat = statistical_chi(s);

  std::vector<TargetFidelityReport> reports;
  reports.reserve(targets.size());
  for (const StabilizerTarget& t : targets) {
    require_valid(worst, t);
    TargetFidelityReport r;
    r.target = t;
    for (const ErrorIndex& idx : t.members) {
      const int fz = static_cast<int>(idx.f_z);
      const int fx = static_cast<int>(idx.f_x);
      r.contributions.push_back(
          TargetContribution{idx, worst.values(fz, fx), stat.values(fz, fx)});
    }
    r.worst_case_value =
        std::accumulate(r.contributions.begin(), r.contributions.end(), 0.0,
                        [](double a, const TargetContribution& c) {
                          return a + c.worst_case;
                        });
    r.statistical_value =
        std::accumulate(r.contributions.begin(), r.contributions.end(), 0.0,
                        [](double a, const TargetContribution& c) {
                          return a + c.statistical;
                        });
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace qpc
