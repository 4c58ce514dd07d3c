#include "qcoh/io.hpp"

#include <fstream>
#include <vector>

namespace qcoh {

namespace {

using nlohmann::json;

int read_dim(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") ||
      !doc["dim"].is_number_integer()) {
    throw Error(ErrorKind::MalformedInput,
                "expected an object with an integer \"dim\" field");
  }
  int dim = doc["dim"].get<int>();
  if (dim < 1) {
    throw Error(ErrorKind::MalformedInput,
                "\"dim\" must be positive, got " + std::to_string(dim));
  }
  return dim;
}

Matrix rows_to_matrix(const json& rows, int dim, const std::string& what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw Error(ErrorKind::MalformedInput,
                what + " must be an array of " + std::to_string(dim) +
                    " rows");
  }
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw Error(ErrorKind::MalformedInput,
                  what + " row " + std::to_string(i) + " must have " +
                      std::to_string(dim) + " entries");
    }
    for (int j = 0; j < dim; ++j) {
      const json& cell = row[j];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        throw Error(ErrorKind::MalformedInput,
                    what + " entry (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") must be a [re, im] pair");
      }
      m(i, j) = cxd(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return m;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoFailure, "cannot open " + path);
  }
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(ErrorKind::MalformedInput, path + " is not valid JSON");
  }
  return doc;
}

Matrix matrix_from_json(const nlohmann::json& doc) {
  int dim = read_dim(doc);
  if (!doc.contains("rows")) {
    throw Error(ErrorKind::MalformedInput, "missing \"rows\" field");
  }
  return rows_to_matrix(doc["rows"], dim, "\"rows\"");
}

nlohmann::json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"rows", std::move(rows)}};
}

DensityMatrix read_state_file(const std::string& path) {
  return DensityMatrix::from_matrix(matrix_from_json(load_json_file(path)));
}

Basis read_basis_file(const std::string& path) {
  return Basis::from_matrix(matrix_from_json(load_json_file(path)));
}

KrausChannel read_channel_file(const std::string& path) {
  json doc = load_json_file(path);
  int dim = read_dim(doc);
  if (!doc.contains("kraus") || !doc["kraus"].is_array() ||
      doc["kraus"].empty()) {
    throw Error(ErrorKind::MalformedInput,
                "missing or empty \"kraus\" operator list");
  }
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < doc["kraus"].size(); ++k) {
    ops.push_back(rows_to_matrix(doc["kraus"][k], dim,
                                 "\"kraus\"[" + std::to_string(k) + "]"));
  }
  return KrausChannel::from_operators(ops);
}

Hamiltonian read_hamiltonian_file(const std::string& path) {
  json doc = load_json_file(path);
  Matrix m = matrix_from_json(doc);
  std::string unit = "J";
  if (doc.contains("energy_unit")) {
    if (!doc["energy_unit"].is_string()) {
      throw Error(ErrorKind::MalformedInput,
                  "\"energy_unit\" must be a string");
    }
    unit = doc["energy_unit"].get<std::string>();
  }
  return Hamiltonian::from_matrix(m, unit);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::IoFailure, "cannot open " + path + " for writing");
  }
  out << content;
  if (!out) {
    throw Error(ErrorKind::IoFailure, "failed while writing " + path);
  }
}

}  // namespace qcoh
