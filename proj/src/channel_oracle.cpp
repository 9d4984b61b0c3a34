#include "qpc/channel_oracle.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "qpc/errors.hpp"

namespace qpc {

namespace {

using complexd = std::complex<double>;

constexpr double kMatrixTol = 1e-10;

void check_oracle_size(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxOracleQubits) {
    throw ValidationError("oracle supports 1 to " +
                          std::to_string(kMaxOracleQubits) + " qubits, got " +
                          std::to_string(n_qubits));
  }
}

int parity(std::uint32_t v) { return std::popcount(v) & 1; }

// Phase of Lambda = i^{#Y} X^{x} Z^{z} acting on |m>:
// Lambda |m> = phase(m) |m xor x>.
complexd pauli_phase(std::uint32_t x_mask, std::uint32_t z_mask,
                     std::uint32_t m) {
  static const complexd i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  complexd ph = i_pow[std::popcount(x_mask & z_mask) & 3];
  if (parity(z_mask & m)) ph = -ph;
  return ph;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

int qubits_for_dim(Eigen::Index d, const char* what) {
  if (d < 2 || (d & (d - 1)) != 0) {
    throw ValidationError(std::string(what) + " dimension " +
                          std::to_string(d) + " is not a power of two >= 2");
  }
  return std::countr_zero(static_cast<std::uint64_t>(d));
}

}  // namespace

std::string GateSpec::name() const {
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::Cnot:
      return "cnot";
    case Kind::Custom:
      return "custom";
  }
  return "?";
}

GateSpec identity_gate(int n_qubits) {
  check_oracle_size(n_qubits);
  const int d = 1 << n_qubits;
  return GateSpec{GateSpec::Kind::Identity, n_qubits,
                  Eigen::MatrixXcd::Identity(d, d)};
}

GateSpec cnot_gate() {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(4, 4);
  // |00>->|00>, |01>->|01>, |10>->|11>, |11>->|10>
  u(0, 0) = 1;
  u(1, 1) = 1;
  u(3, 2) = 1;
  u(2, 3) = 1;
  return GateSpec{GateSpec::Kind::Cnot, 2, std::move(u)};
}

GateSpec custom_gate(Eigen::MatrixXcd unitary) {
  if (unitary.rows() != unitary.cols()) {
    throw ValidationError("gate matrix must be square");
  }
  const int n = qubits_for_dim(unitary.rows(), "gate");
  check_oracle_size(n);
  const double dev = (unitary * unitary.adjoint() -
                      Eigen::MatrixXcd::Identity(unitary.rows(), unitary.rows()))
                         .cwiseAbs()
                         .maxCoeff();
  if (dev > kMatrixTol) {
    throw ValidationError("gate matrix is not unitary (max |UU^dag - I| = " +
                          fmt(dev) + ")");
  }
  return GateSpec{GateSpec::Kind::Custom, n, std::move(unitary)};
}

void validate_process_matrix(const FullProcessMatrix& chi) {
  check_oracle_size(chi.n_qubits);
  const int dd = chi.basis_size();
  if (chi.entries.rows() != dd || chi.entries.cols() != dd) {
    throw ValidationError("process matrix must be " + std::to_string(dd) +
                          "x" + std::to_string(dd) + " for n_qubits=" +
                          std::to_string(chi.n_qubits));
  }
  const double herm_dev =
      (chi.entries - chi.entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kMatrixTol) {
    throw ValidationError("process matrix is not Hermitian (max deviation " +
                          fmt(herm_dev) + ")");
  }
  const complexd tr = chi.entries.trace();
  if (std::abs(tr - complexd{1, 0}) > kMatrixTol) {
    throw ValidationError("process matrix trace is " + fmt(tr.real()) +
                          (tr.imag() >= 0 ? "+" : "") + fmt(tr.imag()) +
                          "i, expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(chi.entries,
                                                     Eigen::EigenvaluesOnly);
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -kMatrixTol) {
    throw ValidationError(
        "process matrix is not positive semidefinite (min eigenvalue " +
        fmt(min_ev) + ")");
  }
}

void validate_density_matrix(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) {
    throw ValidationError("density matrix must be square");
  }
  const double herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kMatrixTol) {
    throw ValidationError("density matrix is not Hermitian (max deviation " +
                          fmt(herm_dev) + ")");
  }
  if (std::abs(rho.trace() - complexd{1, 0}) > kMatrixTol) {
    throw ValidationError("density matrix trace is " + fmt(rho.trace().real()) +
                          ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kMatrixTol) {
    throw ValidationError("density matrix is not positive semidefinite (min "
                          "eigenvalue " +
                          fmt(es.eigenvalues().minCoeff()) + ")");
  }
}

FullProcessMatrix full_chi_from_diagonal(const DiagonalChi& chi) {
  check_oracle_size(chi.n_qubits);
  validate_diagonal_chi(chi);
  const int d = chi.dim();
  FullProcessMatrix full;
  full.n_qubits = chi.n_qubits;
  full.entries = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int fz = 0; fz < d; ++fz) {
    for (int fx = 0; fx < d; ++fx) {
      // Clip the -1e-12-grade negatives admitted by validate_diagonal_chi so
      // the embedded matrix is PSD.
      full.entries(fz * d + fx, fz * d + fx) =
          std::max(0.0, chi.values(fz, fx));
    }
  }
  return full;
}

FullProcessMatrix point_mass_chi(int n_qubits, ErrorIndex idx) {
  check_oracle_size(n_qubits);
  const int d = 1 << n_qubits;
  if (idx.f_z >= static_cast<std::uint32_t>(d) ||
      idx.f_x >= static_cast<std::uint32_t>(d)) {
    throw ValidationError("error index " + to_string(idx) +
                          " does not fit in " + std::to_string(n_qubits) +
                          " qubits");
  }
  FullProcessMatrix full;
  full.n_qubits = n_qubits;
  full.entries = Eigen::MatrixXcd::Zero(d * d, d * d);
  const int i = static_cast<int>(idx.f_z) * d + static_cast<int>(idx.f_x);
  full.entries(i, i) = 1.0;
  return full;
}

Eigen::MatrixXcd pauli_matrix(const PauliLabel& p) {
  check_oracle_size(p.n_qubits);
  const int d = 1 << p.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::uint32_t col = 0; col < static_cast<std::uint32_t>(d); ++col) {
    m(static_cast<int>(col ^ p.x_mask), static_cast<int>(col)) =
        pauli_phase(p.x_mask, p.z_mask, col);
  }
  return m;
}

Eigen::VectorXcd z_basis_state(int n_qubits, std::uint32_t m) {
  check_oracle_size(n_qubits);
  const int d = 1 << n_qubits;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  v(static_cast<int>(m)) = 1.0;
  return v;
}

Eigen::VectorXcd x_basis_state(int n_qubits, std::uint32_t k) {
  check_oracle_size(n_qubits);
  const int d = 1 << n_qubits;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  Eigen::VectorXcd v(d);
  for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(d); ++m) {
    v(static_cast<int>(m)) = parity(k & m) ? -norm : norm;
  }
  return v;
}

Eigen::MatrixXcd apply_process(const FullProcessMatrix& chi, const GateSpec& g,
                               const Eigen::MatrixXcd& rho) {
  const int d = chi.dim();
  if (g.dim() != d || rho.rows() != d || rho.cols() != d) {
    throw ValidationError("dimension mismatch between chi (" +
                          std::to_string(d) + "), gate (" +
                          std::to_string(g.dim()) + ") and state (" +
                          std::to_string(rho.rows()) + ")");
  }

  const Eigen::MatrixXcd a = g.unitary * rho * g.unitary.adjoint();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);

  // out(r, c) = sum_{ij} chi_ij . Lambda_i[r, r^x_i] a(r^x_i, c^x_j)
  //                            . Lambda_j[c^x_j, c]
  // where Lambda[m^x, m] = pauli_phase(x, z, m); only nonzero chi_ij and the
  // single nonzero element per Pauli row/column are visited.
  const auto dd = static_cast<std::uint32_t>(d);
  for (int i = 0; i < chi.basis_size(); ++i) {
    const auto xi = static_cast<std::uint32_t>(i / d);  // f_z part
    const auto zi = static_cast<std::uint32_t>(i % d);  // f_x part
    for (int j = 0; j < chi.basis_size(); ++j) {
      const complexd w = chi.entries(i, j);
      if (w == complexd{0, 0}) continue;
      const auto xj = static_cast<std::uint32_t>(j / d);
      const auto zj = static_cast<std::uint32_t>(j % d);
      for (std::uint32_t r = 0; r < dd; ++r) {
        const complexd left = w * pauli_phase(xi, zi, r ^ xi);
        for (std::uint32_t c = 0; c < dd; ++c) {
          out(static_cast<int>(r), static_cast<int>(c)) +=
              left * a(static_cast<int>(r ^ xi), static_cast<int>(c ^ xj)) *
              pauli_phase(xj, zj, c);
        }
      }
    }
  }
  return out;
}

ErrorTableSet generate_tables(const FullProcessMatrix& chi, const GateSpec& g) {
  const int d = chi.dim();
  if (g.dim() != d) {
    throw ValidationError("gate dimension " + std::to_string(g.dim()) +
                          " does not match chi dimension " + std::to_string(d));
  }

  ErrorTableSet t;
  t.n_qubits = chi.n_qubits;
  t.z_table.resize(d, d);
  t.x_table.resize(d, d);
  t.metadata = "simulated from process matrix, gate " + g.name();

  const Eigen::MatrixXcd u_dag = g.unitary.adjoint();
  for (std::uint32_t n = 0; n < static_cast<std::uint32_t>(d); ++n) {
    const Eigen::VectorXcd in = u_dag * z_basis_state(chi.n_qubits, n);
    const Eigen::MatrixXcd rho_out =
        apply_process(chi, g, in * in.adjoint());
    for (std::uint32_t f = 0; f < static_cast<std::uint32_t>(d); ++f) {
      const auto m = static_cast<int>(n ^ f);
      t.z_table(static_cast<int>(n), static_cast<int>(f)) =
          rho_out(m, m).real();
    }
  }
  for (std::uint32_t k = 0; k < static_cast<std::uint32_t>(d); ++k) {
    const Eigen::VectorXcd in = u_dag * x_basis_state(chi.n_qubits, k);
    const Eigen::MatrixXcd rho_out =
        apply_process(chi, g, in * in.adjoint());
    for (std::uint32_t f = 0; f < static_cast<std::uint32_t>(d); ++f) {
      const Eigen::VectorXcd outcome = x_basis_state(chi.n_qubits, k ^ f);
      t.x_table(static_cast<int>(k), static_cast<int>(f)) =
          (outcome.adjoint() * rho_out * outcome)(0, 0).real();
    }
  }
  return t;
}

ErrorTableSet sample_tables(const ErrorTableSet& t, long shots,
                            std::uint64_t seed) {
  if (shots < 1) {
    throw ValidationError("shots must be >= 1, got " + std::to_string(shots));
  }
  const int d = t.dim();

  ErrorTableSet out = t;
  int table_id = 0;
  for (auto [src, dst] : {std::pair{&t.z_table, &out.z_table},
                          std::pair{&t.x_table, &out.x_table}}) {
    for (int r = 0; r < d; ++r) {
      std::seed_seq sseq{static_cast<std::uint32_t>(seed),
                         static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(table_id),
                         static_cast<std::uint32_t>(r)};
      std::mt19937_64 rng(sseq);
      std::uniform_real_distribution<double> uniform(0.0, 1.0);

      Eigen::VectorXd cdf(d);
      double acc = 0.0;
      const double row_sum = src->row(r).sum();
      if (row_sum <= 0.0) {
        throw ValidationError("cannot sample from row " + std::to_string(r) +
                              ": row sum is " + std::to_string(row_sum));
      }
      for (int c = 0; c < d; ++c) {
        acc += (*src)(r, c) / row_sum;
        cdf(c) = acc;
      }
      cdf(d - 1) = 1.0;

      Eigen::VectorXd counts = Eigen::VectorXd::Zero(d);
      for (long s = 0; s < shots; ++s) {
        const double u = uniform(rng);
        int c = 0;
        while (c < d - 1 && cdf(c) <= u) ++c;
        counts(c) += 1.0;
      }
      dst->row(r) = counts.transpose() / static_cast<double>(shots);
    }
    ++table_id;
  }
  out.metadata += out.metadata.empty() ? "" : " | ";
  out.metadata += "sampled " + std::to_string(shots) +
                  " shots per input, seed " + std::to_string(seed);
  return out;
}

double state_fidelity_oracle(const FullProcessMatrix& chi, const GateSpec& g,
                             const Eigen::MatrixXcd& rho_in,
                             const Eigen::VectorXcd& ideal_output) {
  if (ideal_output.size() != chi.dim()) {
    throw ValidationError("ideal output state has dimension " +
                          std::to_string(ideal_output.size()) + ", expected " +
                          std::to_string(chi.dim()));
  }
  const Eigen::MatrixXcd rho_out = apply_process(chi, g, rho_in);
  return (ideal_output.adjoint() * rho_out * ideal_output)(0, 0).real();
}

double haar_average_fidelity(const FullProcessMatrix& chi, const GateSpec& g,
                             int samples, std::uint64_t seed) {
  if (samples < 1) {
    throw ValidationError("samples must be >= 1, got " +
                          std::to_string(samples));
  }
  const int d = chi.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double total = 0.0;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXcd psi(d);
    for (int m = 0; m < d; ++m) psi(m) = complexd{gauss(rng), gauss(rng)};
    psi.normalize();
    const Eigen::VectorXcd ideal = g.unitary * psi;
    total += state_fidelity_oracle(chi, g, psi * psi.adjoint(), ideal);
  }
  return total / samples;
}

}  // namespace qpc
