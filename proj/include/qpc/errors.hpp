#pragma once

#include <stdexcept>
#include <string>

namespace qpc {

// Bad input data: schema violations, out-of-range probabilities, malformed
// Pauli strings, dimension mismatches. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Summary with F_Z + F_X < 1: no worst-case model exists because its
// identity-error entry would be negative. Maps to CLI exit code 2.
class InfeasibleSummaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpc
