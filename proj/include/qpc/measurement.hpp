#pragma once

#include <Eigen/Dense>
#include <string>

namespace qpc {

// Validation tolerances for probability tables. The default row tolerance of
// 2e-3 admits tables whose rows were rounded to 3 decimals before publishing
// (row sums like 1.001 or 0.999); strict mode is for machine-generated data.
struct TableTolerances {
  double row_sum = 2e-3;

  static TableTolerances strict() { return TableTolerances{1e-9}; }
};

// The raw experiment: two d x d conditional-probability tables, one per
// complementary run. Row index = input label n (binary, MSB-leftmost), whose
// ideal output is the n-th basis state of that run's basis; column index =
// observed flip pattern f relative to the ideal output.
struct ErrorTableSet {
  int n_qubits = 0;
  Eigen::MatrixXd z_table;  // z_table(n, f_z) = p(f_z | Z_n)
  Eigen::MatrixXd x_table;  // x_table(k, f_x) = p(f_x | X_k)
  std::string metadata;

  int dim() const { return 1 << n_qubits; }
};

// The 2d numbers the whole method runs on. p_z(0) = F_Z, p_z(f) = eta_Z(f)
// for f >= 1; likewise p_x for the X run.
struct ComplementarySummary {
  int n_qubits = 0;
  Eigen::VectorXd p_z;
  Eigen::VectorXd p_x;

  int dim() const { return 1 << n_qubits; }
  double fidelity_z() const { return p_z(0); }
  double fidelity_x() const { return p_x(0); }
};

// Checks table shape (d x d with d = 2^n_qubits), entry range [0, 1], and
// per-row normalization. Throws ValidationError naming the offending row and
// its deviation.
void validate_tables(const ErrorTableSet& t, const TableTolerances& tol = {});

// Column means of each table: p_z(f) = (1/d) sum_n z_table(n, f), and the
// same for X. Assumes a validated table set.
ComplementarySummary summarize(const ErrorTableSet& t);

// Divides every row by its sum so rows are normalized to machine precision;
// records the adjustment in metadata. Throws ValidationError on a
// nonpositive-sum row.
ErrorTableSet renormalize_rows(const ErrorTableSet& t);

// Builds a summary from raw vectors, checking nonnegativity and that each
// vector sums to 1 within `tolerance`.
ComplementarySummary make_summary(int n_qubits, Eigen::VectorXd p_z,
                                  Eigen::VectorXd p_x,
                                  double tolerance = 2e-3);

// Summary with every entry rounded to `decimals` places, for reproducing
// analyses that were run on printed 3-decimal tables.
ComplementarySummary rounded_summary(const ComplementarySummary& s,
                                     int decimals = 3);

// Row label in the input convention, e.g. bit pattern 2 at N=2 -> "10".
std::string input_label(int n_qubits, int index);

}  // namespace qpc
