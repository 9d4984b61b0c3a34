#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qpc/measurement.hpp"

namespace qpc {

// A reciprocal 1/(1-F) in the statistical model is replaced by 0 when
// 1-F drops below this; every use multiplies it by an error probability
// drawn from the same vanishing marginal.
inline constexpr double kFidelityEpsilon = 1e-12;

inline constexpr const char* kModelWorstCase = "worst_case";
inline constexpr const char* kModelStatistical = "statistical";
inline constexpr const char* kModelClampedStatistical = "clamped-statistical";
inline constexpr const char* kModelCustom = "custom";

// Diagonal of a process matrix, laid out as a d x d table: values(f_z, f_x)
// is the joint probability that a single error flips pattern f_z in the Z
// run and f_x in the X run. Row sums are the Z-run marginals (F_Z, eta_Z),
// column sums the X-run marginals, and values(0, 0) is the process fidelity.
struct DiagonalChi {
  int n_qubits = 0;
  Eigen::MatrixXd values;
  std::string model_tag = kModelCustom;
  std::vector<std::string> diagnostics;

  int dim() const { return 1 << n_qubits; }
  double process_fidelity() const { return values(0, 0); }
};

struct FidelityBounds {
  double lower = 0.0;
  double upper = 1.0;
  // True when F_Z + F_X - 1 < 0 and the lower bound was clamped to 0.
  bool vacuous_lower = false;
};

// F_Z + F_X - 1 <= F_qp <= min(F_Z, F_X). The lower bound is clamped at 0
// and flagged vacuous instead of reporting a negative number.
FidelityBounds process_fidelity_bounds(const ComplementarySummary& s);

// All error mass on pure-Z and pure-X error indices: chi(f_z, 0) = eta_Z(f_z),
// chi(0, f_x) = eta_X(f_x), chi(0, 0) = F_Z + F_X - 1, everything else 0.
// Marginals reproduce the summary exactly. Throws InfeasibleSummaryError
// when F_Z + F_X < 1.
DiagonalChi worst_case_chi(const ComplementarySummary& s);

// Uncorrelated-error estimate. With
//   c = (d-1)/(2d) * (1/(1-F_Z) + 1/(1-F_X)),
// the cells read
//   chi(f_z, f_x) = c * eta_Z(f_z) * eta_X(f_x)        (f_z, f_x >= 1)
//   chi(f_z, 0)   = eta_Z(f_z) * (1 - c*(1-F_X))
//   chi(0, f_x)   = eta_X(f_x) * (1 - c*(1-F_Z))
//   chi(0, 0)     = (1 + 1/d)*(F_Z+F_X)/2 - 1/d.
// The (d-1)/(2d) coefficient is forced by marginal consistency: with it, rows
// and columns sum to the measured marginals identically (doubling it breaks
// every marginal by the cross-term mass). Those identities assume the summary
// vectors each sum to 1; when they do not (3-decimal published tables, or a
// kFidelityEpsilon-suppressed reciprocal), or when a cell goes negative,
// the repair clamps negatives to 0 and renormalizes to unit trace. The tag
// becomes clamped-statistical only if entries were actually clamped, and
// diagnostics records the renormalization plus the worst marginal deviation.
DiagonalChi statistical_chi(const ComplementarySummary& s);

// Most-likely process fidelity (1 + 1/d)*(F_Z+F_X)/2 - 1/d. Equals the
// statistical model's (0,0) cell before any clamping.
double process_fidelity_estimate(const ComplementarySummary& s);

// Haar-average state fidelity from the process fidelity:
// F_av = (F_qp * d + 1) / (d + 1).
double average_fidelity_from_process(double f_qp, int dim);

// Summary recovered from a diagonal chi: p_z = row sums, p_x = column sums.
ComplementarySummary marginal_summary(const DiagonalChi& chi);

// Entries nonnegative (within -1e-12) and total mass 1 within 1e-9.
void validate_diagonal_chi(const DiagonalChi& chi);

}  // namespace qpc
