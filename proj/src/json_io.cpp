#include "qpc/json_io.hpp"

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qpc/errors.hpp"

namespace qpc {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ValidationError(std::string("missing required field \"") + key +
                          "\"");
  }
  return *it;
}

int read_n_qubits(const json& doc) {
  const json& field = require_field(doc, "n_qubits");
  if (!field.is_number_integer()) {
    throw ValidationError("\"n_qubits\" must be an integer");
  }
  const int n = field.get<int>();
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("\"n_qubits\" out of range: " + std::to_string(n));
  }
  return n;
}

Eigen::MatrixXd read_matrix(const json& field, const char* key, int rows,
                            int cols) {
  if (!field.is_array() || static_cast<int>(field.size()) != rows) {
    throw ValidationError(std::string("\"") + key + "\" must be an array of " +
                          std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = field[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw ValidationError(std::string("\"") + key + "\" row " +
                            std::to_string(r) + " must have " +
                            std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number()) {
        throw ValidationError(std::string("\"") + key + "\" entry (" +
                              std::to_string(r) + ", " + std::to_string(c) +
                              ") is not a number");
      }
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

StabilizerTarget one_target_from_json(const json& doc) {
  const json& name = require_field(doc, "name");
  if (!name.is_string()) {
    throw ValidationError("target \"name\" must be a string");
  }
  const json& paulis = require_field(doc, "paulis");
  if (!paulis.is_array() || paulis.empty()) {
    throw ValidationError("target \"paulis\" must be a non-empty array");
  }

  StabilizerTarget target;
  target.name = name.get<std::string>();
  for (const json& entry : paulis) {
    if (!entry.is_string()) {
      throw ValidationError("target \"" + target.name +
                            "\": \"paulis\" entries must be strings");
    }
    const PauliLabel label = parse_pauli_string(entry.get<std::string>());
    if (target.members.empty()) {
      target.n_qubits = label.n_qubits;
    } else if (label.n_qubits != target.n_qubits) {
      throw ValidationError("target \"" + target.name +
                            "\": inconsistent Pauli string lengths");
    }
    target.members.push_back(error_index_of(label));
  }

  const auto problems = validate_target(target);
  if (!problems.empty()) {
    throw ValidationError("target \"" + target.name + "\": " + problems[0]);
  }
  return target;
}

}  // namespace

ErrorTableSet tables_from_json(const json& doc, const TableTolerances& tol) {
  ErrorTableSet t;
  t.n_qubits = read_n_qubits(doc);
  const int d = t.dim();
  t.z_table = read_matrix(require_field(doc, "z_table"), "z_table", d, d);
  t.x_table = read_matrix(require_field(doc, "x_table"), "x_table", d, d);
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_string()) {
      throw ValidationError("\"metadata\" must be a string");
    }
    t.metadata = it->get<std::string>();
  }
  validate_tables(t, tol);
  return t;
}

json tables_to_json(const ErrorTableSet& t) {
  json doc;
  doc["n_qubits"] = t.n_qubits;
  doc["z_table"] = matrix_to_json(t.z_table);
  doc["x_table"] = matrix_to_json(t.x_table);
  if (!t.metadata.empty()) {
    doc["metadata"] = t.metadata;
  }
  return doc;
}

DiagonalChi diagonal_chi_from_json(const json& doc) {
  DiagonalChi chi;
  chi.n_qubits = read_n_qubits(doc);
  const int d = 1 << chi.n_qubits;
  chi.values = read_matrix(require_field(doc, "values"), "values", d, d);
  if (auto it = doc.find("model"); it != doc.end()) {
    if (!it->is_string()) {
      throw ValidationError("\"model\" must be a string");
    }
    chi.model_tag = it->get<std::string>();
  } else {
    chi.model_tag = kModelCustom;
  }
  if (auto it = doc.find("diagnostics"); it != doc.end()) {
    if (!it->is_array()) {
      throw ValidationError("\"diagnostics\" must be an array of strings");
    }
    for (const json& entry : *it) {
      if (!entry.is_string()) {
        throw ValidationError("\"diagnostics\" entries must be strings");
      }
      chi.diagnostics.push_back(entry.get<std::string>());
    }
  }
  validate_diagonal_chi(chi);
  return chi;
}

json diagonal_chi_to_json(const DiagonalChi& chi) {
  json doc;
  doc["n_qubits"] = chi.n_qubits;
  doc["model"] = chi.model_tag;
  doc["values"] = matrix_to_json(chi.values);
  doc["diagnostics"] = chi.diagnostics;
  return doc;
}

FullProcessMatrix process_matrix_from_json(const json& doc) {
  if (doc.contains("values")) {
    return full_chi_from_diagonal(diagonal_chi_from_json(doc));
  }

  FullProcessMatrix chi;
  chi.n_qubits = read_n_qubits(doc);
  const int b = chi.basis_size();
  const Eigen::MatrixXd re =
      read_matrix(require_field(doc, "entries_re"), "entries_re", b, b);
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(b, b);
  if (doc.contains("entries_im")) {
    im = read_matrix(doc["entries_im"], "entries_im", b, b);
  }
  chi.entries = re.cast<std::complex<double>>() +
                std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
  validate_process_matrix(chi);
  return chi;
}

json process_matrix_to_json(const FullProcessMatrix& chi) {
  json doc;
  doc["n_qubits"] = chi.n_qubits;
  doc["entries_re"] = matrix_to_json(chi.entries.real());
  doc["entries_im"] = matrix_to_json(chi.entries.imag());
  return doc;
}

std::vector<StabilizerTarget> targets_from_json(const json& doc) {
  std::vector<StabilizerTarget> targets;
  if (doc.is_array()) {
    for (const json& entry : doc) {
      targets.push_back(one_target_from_json(entry));
    }
  } else {
    targets.push_back(one_target_from_json(doc));
  }
  return targets;
}

json target_to_json(const StabilizerTarget& t) {
  json paulis = json::array();
  for (const ErrorIndex& e : t.members) {
    paulis.push_back(pauli_string(pauli_of_index(e, t.n_qubits)));
  }
  return json{{"name", t.name}, {"paulis", std::move(paulis)}};
}

json load_json(const std::string& path) {
  try {
    if (path == "-") {
      return json::parse(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
      throw ValidationError("cannot open file: " + path);
    }
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("JSON parse error in " + path + ": " + e.what());
  }
}

void save_json(const json& doc, const std::string& path) {
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot open file for writing: " + path);
  }
  out << doc.dump(2) << "\n";
}

}  // namespace qpc
