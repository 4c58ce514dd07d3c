#pragma once

#include <string>

#include <json.hpp>

#include "qcoh/channels.hpp"
#include "qcoh/core.hpp"
#include "qcoh/state.hpp"
#include "qcoh/thermo.hpp"

namespace qcoh {

// All files share one matrix layout:
//   {"dim": d, "rows": [[[re, im], ...], ...]}   (row-major, IEEE-754)
// States and energy observables store the matrix itself; a basis stores its
// vectors as the matrix columns; a channel wraps a list of such row arrays:
//   {"dim": d, "kraus": [rows, ...]}
// Unreadable files raise IoFailure; unparseable or ill-shaped content raises
// MalformedInput; domain validation errors propagate from the constructors.

nlohmann::json load_json_file(const std::string& path);

Matrix matrix_from_json(const nlohmann::json& doc);
nlohmann::json matrix_to_json(const Matrix& m);

DensityMatrix read_state_file(const std::string& path);
Basis read_basis_file(const std::string& path);
KrausChannel read_channel_file(const std::string& path);
Hamiltonian read_hamiltonian_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace qcoh
