#include "qpc/noise_models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qpc/errors.hpp"

namespace qpc {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

}  // namespace

FidelityBounds process_fidelity_bounds(const ComplementarySummary& s) {
  const double raw_lower = s.fidelity_z() + s.fidelity_x() - 1.0;
  FidelityBounds b;
  b.vacuous_lower = raw_lower < 0.0;
  b.lower = std::max(0.0, raw_lower);
  b.upper = std::clamp(std::min(s.fidelity_z(), s.fidelity_x()), b.lower, 1.0);
  return b;
}

DiagonalChi worst_case_chi(const ComplementarySummary& s) {
  const double f_qp = s.fidelity_z() + s.fidelity_x() - 1.0;
  if (f_qp < 0.0) {
    throw InfeasibleSummaryError(
        "no worst-case model: F_Z + F_X - 1 = " + fmt(f_qp) +
        " is negative (F_Z=" + fmt(s.fidelity_z()) +
        ", F_X=" + fmt(s.fidelity_x()) + ")");
  }
  const int d = s.dim();
  DiagonalChi chi;
  chi.n_qubits = s.n_qubits;
  chi.model_tag = kModelWorstCase;
  chi.values = Eigen::MatrixXd::Zero(d, d);
  chi.values(0, 0) = f_qp;
  for (int f = 1; f < d; ++f) {
    chi.values(f, 0) = s.p_z(f);
    chi.values(0, f) = s.p_x(f);
  }
  return chi;
}

DiagonalChi statistical_chi(const ComplementarySummary& s) {
  const int d = s.dim();
  const double f_z = s.fidelity_z();
  const double f_x = s.fidelity_x();
  const double recip_z = (1.0 - f_z) < kFidelityEpsilon ? 0.0 : 1.0 / (1.0 - f_z);
  const double recip_x = (1.0 - f_x) < kFidelityEpsilon ? 0.0 : 1.0 / (1.0 - f_x);
  const double c = (d - 1) / (2.0 * d) * (recip_z + recip_x);
  const double coeff_z = 1.0 - c * (1.0 - f_x);  // scales chi(f_z, 0)
  const double coeff_x = 1.0 - c * (1.0 - f_z);  // scales chi(0, f_x)

  DiagonalChi chi;
  chi.n_qubits = s.n_qubits;
  chi.model_tag = kModelStatistical;
  chi.values.resize(d, d);
  chi.values(0, 0) = process_fidelity_estimate(s);
  for (int fz = 1; fz < d; ++fz) chi.values(fz, 0) = coeff_z * s.p_z(fz);
  for (int fx = 1; fx < d; ++fx) chi.values(0, fx) = coeff_x * s.p_x(fx);
  for (int fz = 1; fz < d; ++fz) {
    for (int fx = 1; fx < d; ++fx) {
      chi.values(fz, fx) = c * s.p_z(fz) * s.p_x(fx);
    }
  }

  int clamped = 0;
  double removed = 0.0;
  for (int fz = 0; fz < d; ++fz) {
    for (int fx = 0; fx < d; ++fx) {
      if (chi.values(fz, fx) < 0.0) {
        removed -= chi.values(fz, fx);
        chi.values(fz, fx) = 0.0;
        ++clamped;
      }
    }
  }

  const double total = chi.values.sum();
  if (clamped > 0 || std::abs(total - 1.0) > 1e-12) {
    if (total <= 0.0) {
      throw ValidationError("statistical model collapsed to zero mass");
    }
    chi.values /= total;
    if (clamped > 0) {
      chi.model_tag = kModelClampedStatistical;
      chi.diagnostics.push_back("clamped " + std::to_string(clamped) +
                                " negative entries (mass " + fmt(removed) +
                                ")");
    }
    chi.diagnostics.push_back("renormalized total mass " + fmt(total) +
                              " to 1");
    // A summary whose vectors do not sum to 1 (3-decimal published tables,
    // or an exact-fidelity corner) admits no unit-trace table with matching
    // marginals, so report how far the repaired model lands from it.
    const ComplementarySummary m = marginal_summary(chi);
    const double dev =
        std::max((m.p_z - s.p_z).cwiseAbs().maxCoeff(),
                 (m.p_x - s.p_x).cwiseAbs().maxCoeff());
    if (dev > 1e-9) {
      chi.diagnostics.push_back(
          "model marginals deviate from the summary by up to " + fmt(dev) +
          " (summary masses " + fmt(s.p_z.sum()) + " / " + fmt(s.p_x.sum()) +
          ")");
    }
  }
  return chi;
}

double process_fidelity_estimate(const ComplementarySummary& s) {
  const double d = static_cast<double>(s.dim());
  return (1.0 + 1.0 / d) * (s.fidelity_z() + s.fidelity_x()) / 2.0 - 1.0 / d;
}

double average_fidelity_from_process(double f_qp, int dim) {
  if (dim < 2) {
    throw ValidationError("dimension must be >= 2, got " + std::to_string(dim));
  }
  if (f_qp < 0.0 || f_qp > 1.0) {
    throw ValidationError("process fidelity must be in [0, 1], got " +
                          fmt(f_qp));
  }
  return (f_qp * dim + 1.0) / (dim + 1.0);
}

ComplementarySummary marginal_summary(const DiagonalChi& chi) {
  ComplementarySummary s;
  s.n_qubits = chi.n_qubits;
  s.p_z = chi.values.rowwise().sum();
  s.p_x = chi.values.colwise().sum();
  return s;
}

void validate_diagonal_chi(const DiagonalChi& chi) {
  const int d = chi.dim();
  if (chi.n_qubits < 1 || chi.values.rows() != d || chi.values.cols() != d) {
    throw ValidationError("diagonal chi must be " + std::to_string(d) + "x" +
                          std::to_string(d) + " for n_qubits=" +
                          std::to_string(chi.n_qubits));
  }
  if ((chi.values.array() < -1e-12).any()) {
    throw ValidationError("diagonal chi has a negative entry (min " +
                          fmt(chi.values.minCoeff()) + ")");
  }
  const double total = chi.values.sum();
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("diagonal chi total mass is " + fmt(total) +
                          ", expected 1 within 1e-9");
  }
}

}  // namespace qpc
