#include "qpc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "qpc/errors.hpp"

namespace qpc {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("n_qubits must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(n_qubits));
  }
}

bool fits(std::uint32_t mask, int n_qubits) {
  return n_qubits >= 32 || mask < (std::uint32_t{1} << n_qubits);
}

}  // namespace

PauliLabel make_pauli(int n_qubits, std::uint32_t x_mask, std::uint32_t z_mask) {
  check_qubit_count(n_qubits);
  if (!fits(x_mask, n_qubits) || !fits(z_mask, n_qubits)) {
    throw ValidationError("Pauli mask does not fit in " +
                          std::to_string(n_qubits) + " qubits");
  }
  return PauliLabel{n_qubits, x_mask, z_mask};
}

ErrorIndex error_index_of(const PauliLabel& p) {
  return ErrorIndex{p.x_mask, p.z_mask};
}

PauliLabel pauli_of_index(ErrorIndex idx, int n_qubits) {
  check_qubit_count(n_qubits);
  if (!fits(idx.f_z, n_qubits) || !fits(idx.f_x, n_qubits)) {
    throw ValidationError("error index " + to_string(idx) +
                          " does not fit in " + std::to_string(n_qubits) +
                          " qubits");
  }
  return PauliLabel{n_qubits, idx.f_z, idx.f_x};
}

ErrorIndex product_index(ErrorIndex a, ErrorIndex b) {
  return ErrorIndex{a.f_z ^ b.f_z, a.f_x ^ b.f_x};
}

bool commutes(ErrorIndex a, ErrorIndex b) {
  return (std::popcount(a.f_z & b.f_x) & 1) == (std::popcount(a.f_x & b.f_z) & 1);
}

PauliLabel parse_pauli_string(const std::string& s) {
  const int n = static_cast<int>(s.size());
  check_qubit_count(n);
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << (n - 1 - i);  // leftmost = MSB
    switch (s[i]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      default:
        throw ValidationError("invalid Pauli character '" +
                              std::string(1, s[i]) + "' in \"" + s + "\"");
    }
  }
  return PauliLabel{n, x, z};
}

std::string pauli_string(const PauliLabel& p) {
  std::string out(static_cast<std::size_t>(p.n_qubits), 'I');
  for (int i = 0; i < p.n_qubits; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << (p.n_qubits - 1 - i);
    const bool x = (p.x_mask & bit) != 0;
    const bool z = (p.z_mask & bit) != 0;
    out[static_cast<std::size_t>(i)] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

std::string to_string(ErrorIndex idx) {
  std::ostringstream os;
  os << "(f_z=" << idx.f_z << ", f_x=" << idx.f_x << ")";
  return os.str();
}

std::vector<std::string> validate_target(const StabilizerTarget& t) {
  std::vector<std::string> violations;
  if (t.n_qubits < 1 || t.n_qubits > kMaxQubits) {
    violations.push_back("n_qubits must be in [1, " +
                         std::to_string(kMaxQubits) + "], got " +
                         std::to_string(t.n_qubits));
    return violations;
  }

  const std::size_t d = std::size_t{1} << t.n_qubits;
  if (t.members.size() != d) {
    violations.push_back("target must have exactly " + std::to_string(d) +
                         " members, got " + std::to_string(t.members.size()));
  }

  std::set<ErrorIndex> members;
  for (const ErrorIndex& m : t.members) {
    if (!fits(m.f_z, t.n_qubits) || !fits(m.f_x, t.n_qubits)) {
      violations.push_back("member " + to_string(m) + " does not fit in " +
                           std::to_string(t.n_qubits) + " qubits");
    }
    if (!members.insert(m).second) {
      violations.push_back("duplicate member " + to_string(m));
    }
  }

  if (members.find(ErrorIndex{0, 0}) == members.end()) {
    violations.push_back("identity (f_z=0, f_x=0) missing");
  }

  for (auto a = members.begin(); a != members.end(); ++a) {
    for (auto b = std::next(a); b != members.end(); ++b) {
      if (members.find(product_index(*a, *b)) == members.end()) {
        violations.push_back("not closed: product of " + to_string(*a) +
                             " and " + to_string(*b) + " is outside the set");
      }
      if (!commutes(*a, *b)) {
        violations.push_back("members " + to_string(*a) + " and " +
                             to_string(*b) + " anticommute");
      }
    }
  }
  return violations;
}

}  // namespace qpc
