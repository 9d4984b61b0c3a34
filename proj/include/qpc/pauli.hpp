#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qpc {

// Masks are limited to 16 qubits so every pattern fits comfortably in 32 bits.
// Analysis tables are dense d x d with d = 2^N, so realistic N is far smaller.
inline constexpr int kMaxQubits = 16;

// An N-qubit Pauli operator modulo global phase. Per qubit, the (x, z) bit
// pair decodes as (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.
//
// Bit convention (fixed throughout the project): the leftmost qubit of the
// tensor-product string is the MOST significant bit of both masks, so "IXY"
// has x_mask = 0b011 and z_mask = 0b001. The opposite convention is common
// elsewhere; everything here assumes this one.
struct PauliLabel {
  int n_qubits = 0;
  std::uint32_t x_mask = 0;
  std::uint32_t z_mask = 0;

  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;
};

// Observable error syndrome of a Pauli operator: f_z is the bit-flip pattern
// it causes on Z-basis outputs, f_x the pattern on X-basis outputs. The map
// to PauliLabel is f_z = x_mask, f_x = z_mask (an X or Y component flips the
// Z-basis bit; a Z or Y component flips the X-basis bit).
struct ErrorIndex {
  std::uint32_t f_z = 0;
  std::uint32_t f_x = 0;

  friend bool operator==(const ErrorIndex&, const ErrorIndex&) = default;
  friend auto operator<=>(const ErrorIndex&, const ErrorIndex&) = default;
};

// A d-element abelian, pairwise-commuting group of error indices closed under
// the (phase-free) Pauli product. Such a group lists the error operators that
// leave every ideal output state of some target operation invariant, and the
// target's fidelity is the chi-diagonal mass on exactly these indices.
struct StabilizerTarget {
  std::string name;
  int n_qubits = 0;
  std::vector<ErrorIndex> members;
};

// Throws ValidationError unless 1 <= n_qubits <= kMaxQubits and both masks
// fit in n_qubits bits.
PauliLabel make_pauli(int n_qubits, std::uint32_t x_mask, std::uint32_t z_mask);

ErrorIndex error_index_of(const PauliLabel& p);

// Inverse of error_index_of. Throws ValidationError when a pattern does not
// fit in n_qubits bits.
PauliLabel pauli_of_index(ErrorIndex idx, int n_qubits);

// Pauli product modulo phase: componentwise XOR. Abelian, self-inverse,
// (0,0) is the unit.
ErrorIndex product_index(ErrorIndex a, ErrorIndex b);

// Symplectic form: true iff parity(a.f_z & b.f_x) == parity(a.f_x & b.f_z).
bool commutes(ErrorIndex a, ErrorIndex b);

// One character per qubit, leftmost = qubit 1; only I, X, Y, Z accepted.
PauliLabel parse_pauli_string(const std::string& s);
std::string pauli_string(const PauliLabel& p);

// "(f_z=3, f_x=1)" -- used by validation messages and reports.
std::string to_string(ErrorIndex idx);

// Checks all StabilizerTarget invariants: masks in range, exactly d = 2^N
// distinct members, identity present, closure under product_index, pairwise
// commutation. Returns one message per violation; empty means valid.
std::vector<std::string> validate_target(const StabilizerTarget& t);

inline bool is_valid_target(const StabilizerTarget& t) {
  return validate_target(t).empty();
}

}  // namespace qpc
