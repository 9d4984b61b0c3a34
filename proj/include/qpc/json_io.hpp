#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "qpc/channel_oracle.hpp"
#include "qpc/measurement.hpp"
#include "qpc/noise_models.hpp"
#include "qpc/pauli.hpp"

namespace qpc {

// Error-table document:
//   { "n_qubits": int, "z_table": [[...]], "x_table": [[...]],
//     "metadata": string? }
// Row index = input label (binary, MSB-leftmost), column index = pattern f.
ErrorTableSet tables_from_json(const nlohmann::json& doc,
                               const TableTolerances& tol = {});
nlohmann::json tables_to_json(const ErrorTableSet& t);

// Diagonal chi document:
//   { "n_qubits": int, "model": string, "values": [[...]],
//     "diagnostics": [string]? }
// Row index = f_z, column index = f_x.
DiagonalChi diagonal_chi_from_json(const nlohmann::json& doc);
nlohmann::json diagonal_chi_to_json(const DiagonalChi& chi);

// Process-matrix document: either a diagonal-chi document (embedded as the
// diagonal) or the full form
//   { "n_qubits": int, "entries_re": [[...]], "entries_im": [[...]] }.
// Validated (Hermitian, PSD, unit trace) before returning.
FullProcessMatrix process_matrix_from_json(const nlohmann::json& doc);
nlohmann::json process_matrix_to_json(const FullProcessMatrix& chi);

// Target documents: { "name": string, "paulis": ["II", "XX", ...] }, either
// one object or an array of them. Each target is validated.
std::vector<StabilizerTarget> targets_from_json(const nlohmann::json& doc);
nlohmann::json target_to_json(const StabilizerTarget& t);

// File/stream helpers; path "-" reads stdin. Parse errors and schema
// violations surface as ValidationError.
nlohmann::json load_json(const std::string& path);
void save_json(const nlohmann::json& doc, const std::string& path);

}  // namespace qpc
