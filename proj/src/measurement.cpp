#include "qpc/measurement.hpp"

#include <cmath>
#include <sstream>

#include "qpc/errors.hpp"
#include "qpc/pauli.hpp"

namespace qpc {

namespace {

void check_table(const Eigen::MatrixXd& m, int d, const char* which,
                 double row_tol) {
  if (m.rows() != d || m.cols() != d) {
    std::ostringstream os;
    os << which << " must be " << d << "x" << d << ", got " << m.rows() << "x"
       << m.cols();
    throw ValidationError(os.str());
  }
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const double v = m(r, c);
      if (!(v >= 0.0) || v > 1.0) {
        std::ostringstream os;
        os << which << " entry out of [0,1] at row " << r << ", column " << c
           << ": " << v;
        throw ValidationError(os.str());
      }
    }
    const double dev = m.row(r).sum() - 1.0;
    if (std::abs(dev) > row_tol) {
      std::ostringstream os;
      os.precision(12);
      os << which << " row " << r << " (input "
         << input_label(static_cast<int>(std::lround(std::log2(d))), r)
         << ") sums to " << m.row(r).sum() << " (deviation " << dev
         << " exceeds tolerance " << row_tol << ")";
      throw ValidationError(os.str());
    }
  }
}

}  // namespace

std::string input_label(int n_qubits, int index) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int b = 0; b < n_qubits; ++b) {
    if (index & (1 << (n_qubits - 1 - b))) s[static_cast<std::size_t>(b)] = '1';
  }
  return s;
}

void validate_tables(const ErrorTableSet& t, const TableTolerances& tol) {
  if (t.n_qubits < 1 || t.n_qubits > kMaxQubits) {
    throw ValidationError("n_qubits must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(t.n_qubits));
  }
  const int d = t.dim();
  check_table(t.z_table, d, "z_table", tol.row_sum);
  check_table(t.x_table, d, "x_table", tol.row_sum);
}

ComplementarySummary summarize(const ErrorTableSet& t) {
  ComplementarySummary s;
  s.n_qubits = t.n_qubits;
  s.p_z = t.z_table.colwise().mean();
  s.p_x = t.x_table.colwise().mean();
  return s;
}

ErrorTableSet renormalize_rows(const ErrorTableSet& t) {
  ErrorTableSet out = t;
  for (Eigen::MatrixXd* m : {&out.z_table, &out.x_table}) {
    for (int r = 0; r < m->rows(); ++r) {
      const double sum = m->row(r).sum();
      if (sum <= 0.0) {
        throw ValidationError("cannot renormalize row " + std::to_string(r) +
                              ": row sum is " + std::to_string(sum));
      }
      m->row(r) /= sum;
    }
  }
  out.metadata += out.metadata.empty() ? "rows renormalized"
                                       : " | rows renormalized";
  return out;
}

ComplementarySummary make_summary(int n_qubits, Eigen::VectorXd p_z,
                                  Eigen::VectorXd p_x, double tolerance) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("n_qubits must be in [1, " +
                          std::to_string(kMaxQubits) + "]");
  }
  const int d = 1 << n_qubits;
  if (p_z.size() != d || p_x.size() != d) {
    throw ValidationError("summary vectors must have length " +
                          std::to_string(d));
  }
  for (const Eigen::VectorXd* v : {&p_z, &p_x}) {
    if ((v->array() < 0.0).any()) {
      throw ValidationError("summary entries must be nonnegative");
    }
    if (std::abs(v->sum() - 1.0) > tolerance) {
      std::ostringstream os;
      os.precision(12);
      os << "summary vector sums to " << v->sum() << ", expected 1 within "
         << tolerance;
      throw ValidationError(os.str());
    }
  }
  return ComplementarySummary{n_qubits, std::move(p_z), std::move(p_x)};
}

ComplementarySummary rounded_summary(const ComplementarySummary& s,
                                     int decimals) {
  const double scale = std::pow(10.0, decimals);
  ComplementarySummary out = s;
  out.p_z = (s.p_z.array() * scale).round() / scale;
  out.p_x = (s.p_x.array() * scale).round() / scale;
  return out;
}

}  // namespace qpc
