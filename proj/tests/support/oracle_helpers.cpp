#include "support/oracle_helpers.hpp"

#include <complex>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace qpc::testing {

namespace {

using complexd = std::complex<double>;

Eigen::Matrix2cd single_qubit(char c) {
  Eigen::Matrix2cd m;
  switch (c) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, complexd{0, -1}, complexd{0, 1}, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("bad Pauli character");
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd kron_pauli(const std::string& pauli) {
  Eigen::MatrixXcd acc = single_qubit(pauli.at(0));
  for (std::size_t i = 1; i < pauli.size(); ++i) {
    acc = Eigen::kroneckerProduct(acc, single_qubit(pauli[i])).eval();
  }
  return acc;
}

std::vector<Eigen::VectorXcd> joint_eigenstates(const StabilizerTarget& t) {
  const int n = t.n_qubits;
  const int d = 1 << n;

  // Independent generators: treat each member as a 2n-bit vector and keep
  // the ones outside the span of those already kept (xor-basis reduction).
  std::vector<std::uint32_t> basis;
  std::vector<ErrorIndex> gens;
  for (const ErrorIndex& m : t.members) {
    std::uint32_t v = (m.f_z << n) | m.f_x;
    for (std::uint32_t b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      gens.push_back(m);
    }
  }
  if (static_cast<int>(gens.size()) != n) {
    throw std::invalid_argument("member set does not span " +
                                std::to_string(n) + " generators");
  }

  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(d, d);
  std::vector<Eigen::VectorXcd> states;
  for (int signs = 0; signs < d; ++signs) {
    Eigen::MatrixXcd proj = eye;
    for (int k = 0; k < n; ++k) {
      const Eigen::MatrixXcd g =
          kron_pauli(pauli_string(pauli_of_index(gens[k], n)));
      const double sign = (signs >> k) & 1 ? -1.0 : 1.0;
      proj = proj * (eye + sign * g) / 2.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(proj);
    int top = 0;
    es.eigenvalues().maxCoeff(&top);
    if (std::abs(es.eigenvalues()(top) - 1.0) > 1e-9) {
      throw std::runtime_error("projector is not rank one");
    }
    states.push_back(es.eigenvectors().col(top));
  }
  return states;
}

ComplementarySummary random_summary(int n_qubits, std::mt19937_64& rng) {
  const int d = 1 << n_qubits;
  std::uniform_real_distribution<double> fid(0.55, 0.95);
  std::uniform_real_distribution<double> ratio(0.8, 1.25);
  std::exponential_distribution<double> weight(1.0);

  const double f_z = fid(rng);
  const double f_x = 1.0 - (1.0 - f_z) * ratio(rng);

  ComplementarySummary s;
  s.n_qubits = n_qubits;
  s.p_z.resize(d);
  s.p_x.resize(d);
  s.p_z(0) = f_z;
  s.p_x(0) = f_x;
  for (auto [vec, f] : {std::pair{&s.p_z, f_z}, std::pair{&s.p_x, f_x}}) {
    Eigen::VectorXd w(d - 1);
    for (int i = 0; i < d - 1; ++i) w(i) = weight(rng);
    vec->tail(d - 1) = w * ((1.0 - f) / w.sum());
  }
  return s;
}

DiagonalChi random_diagonal_chi(int n_qubits, std::mt19937_64& rng) {
  const int d = 1 << n_qubits;
  std::exponential_distribution<double> weight(1.0);
  DiagonalChi chi;
  chi.n_qubits = n_qubits;
  chi.values.resize(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) chi.values(r, c) = weight(rng);
  }
  chi.values /= chi.values.sum();
  return chi;
}

Eigen::MatrixXcd random_psd_unit_trace(int size, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(size, size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) a(r, c) = complexd{gauss(rng), gauss(rng)};
  }
  Eigen::MatrixXcd m = a * a.adjoint();
  return m / m.trace().real();
}

Eigen::MatrixXcd random_unitary(int size, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(size, size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) a(r, c) = complexd{gauss(rng), gauss(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < size; ++i) {
    const complexd rd = r(i, i);
    q.col(i) *= rd / std::abs(rd);
  }
  return q;
}

}  // namespace qpc::testing
