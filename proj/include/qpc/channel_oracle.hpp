#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "qpc/measurement.hpp"
#include "qpc/noise_models.hpp"
#include "qpc/pauli.hpp"

namespace qpc {

// Dense simulation keeps d^2 x d^2 complex matrices; 5 qubits is 1024^2.
inline constexpr int kMaxOracleQubits = 5;

// Full process matrix chi_{ij} over the Pauli error basis, indexed by the
// linearized error index i = f_z * d + f_x. The channel it describes is
//   rho_out = sum_{ij} chi_{ij} . Lambda_i U0 rho_in U0^dag . Lambda_j,
// with Lambda_i the Pauli operator whose syndrome is (f_z, f_x).
struct FullProcessMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd entries;

  int dim() const { return 1 << n_qubits; }
  int basis_size() const { return dim() * dim(); }
};

struct GateSpec {
  enum class Kind { Identity, Cnot, Custom };
  Kind kind = Kind::Identity;
  int n_qubits = 0;
  Eigen::MatrixXcd unitary;

  int dim() const { return 1 << n_qubits; }
  std::string name() const;
};

GateSpec identity_gate(int n_qubits);
// Control = qubit 1 (MSB of the basis label), target = qubit 2.
GateSpec cnot_gate();
// Any d x d unitary with d a power of two; unitarity checked within 1e-10.
GateSpec custom_gate(Eigen::MatrixXcd unitary);

// Hermitian within 1e-10, eigenvalues >= -1e-10, trace 1 within 1e-10.
// Error messages carry the offending eigenvalue / trace.
void validate_process_matrix(const FullProcessMatrix& chi);

// Hermitian, unit trace, positive semidefinite (all within 1e-10).
void validate_density_matrix(const Eigen::MatrixXcd& rho);

// A diagonal chi embeds as the diagonal of the full matrix.
FullProcessMatrix full_chi_from_diagonal(const DiagonalChi& chi);

FullProcessMatrix point_mass_chi(int n_qubits, ErrorIndex idx);

// Dense matrix of the Pauli operator: tensor product of I/X/Y/Z over the
// qubits, leftmost qubit = most significant bit, Y = [[0,-i],[i,0]].
Eigen::MatrixXcd pauli_matrix(const PauliLabel& p);

// Computational basis ket |m>.
Eigen::VectorXcd z_basis_state(int n_qubits, std::uint32_t m);
// Hadamard-transform basis: |X_k> = 2^{-N/2} sum_m (-1)^{parity(k & m)} |m>.
// With this sign convention a Z-type error maps |X_k> to |X_{k xor f_x}>,
// which is what makes the X-table column index an XOR offset.
Eigen::VectorXcd x_basis_state(int n_qubits, std::uint32_t k);

// Applies the process-matrix channel to rho. Iterates only nonzero chi
// entries and uses the permutation-plus-phase structure of Pauli operators,
// so diagonal models cost O(d^4) rather than O(d^6).
Eigen::MatrixXcd apply_process(const FullProcessMatrix& chi, const GateSpec& g,
                               const Eigen::MatrixXcd& rho);

// Simulates both complementary runs. Input n is prepared as U0^dag |Z_n>
// (so the ideal output is |Z_n>), the channel is applied, and
// z_table(n, f_z) = <Z_{n xor f_z}| rho_out |Z_{n xor f_z}>; the X run is
// analogous with |X_k>. Works for arbitrary U0.
ErrorTableSet generate_tables(const FullProcessMatrix& chi, const GateSpec& g);

// Replaces each row by multinomial frequencies drawn from it. The RNG stream
// is seeded per (seed, table, row), so any evaluation order gives identical
// output.
ErrorTableSet sample_tables(const ErrorTableSet& t, long shots,
                            std::uint64_t seed);

// <ideal| E(rho_in) |ideal> -- the fidelity of one input against one ideal
// output state.
double state_fidelity_oracle(const FullProcessMatrix& chi, const GateSpec& g,
                             const Eigen::MatrixXcd& rho_in,
                             const Eigen::VectorXcd& ideal_output);

// Monte Carlo average of state_fidelity_oracle over Haar-random pure inputs
// (normalized complex-Gaussian vectors); ideal output = U0 |input>.
double haar_average_fidelity(const FullProcessMatrix& chi, const GateSpec& g,
                             int samples, std::uint64_t seed);

}  // namespace qpc
