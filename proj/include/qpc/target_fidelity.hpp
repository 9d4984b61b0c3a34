#pragma once

#include <span>
#include <vector>

#include "qpc/noise_models.hpp"
#include "qpc/pauli.hpp"

namespace qpc {

struct TargetContribution {
  ErrorIndex index;
  double worst_case = 0.0;
  double statistical = 0.0;
};

struct TargetFidelityReport {
  StabilizerTarget target;
  double worst_case_value = 0.0;   // lower bound
  double statistical_value = 0.0;  // most-likely estimate
  std::vector<TargetContribution> contributions;
};

// Sum of chi cells over an arbitrary index list; no group validation, so it
// can also total the full table (all d^2 indices sum to 1).
double chi_mass(const DiagonalChi& chi, std::span<const ErrorIndex> indices);

// Fidelity of the operation whose output stabilizers are t.members: the sum
// of the d matching chi diagonal cells. Throws ValidationError when the
// target fails validate_target or dimensions mismatch.
double target_fidelity(const DiagonalChi& chi, const StabilizerTarget& t);

// The four built-in two-qubit targets:
//   zx_eigenstates  {II, IX, ZI, ZX}  -- preserves joint Z(x)I / I(x)X outputs
//   bell_from_xz    {II, XX, YY, ZZ}  -- entangles local X/Z inputs into Bell states
//   xz_from_bell    {II, XI, IZ, XZ}  -- disentangles Bell states to local outputs
//   entangle_from_yy {II, ZY, YX, XZ} -- entangles YY inputs
std::vector<StabilizerTarget> preset_targets();

// Builds the worst-case and statistical models once, then reports both
// fidelity values and the per-member contributions for every target.
std::vector<TargetFidelityReport> evaluate_all(
    const ComplementarySummary& s, const std::vector<StabilizerTarget>& targets);

}  // namespace qpc
