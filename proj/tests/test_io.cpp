#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "qcoh/channels.hpp"
#include "qcoh/core.hpp"
#include "qcoh/io.hpp"
#include "qcoh/state.hpp"
#include "qcoh/thermo.hpp"

using namespace qcoh;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "qcoh_io_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << text;
  out.close();
  return p.string();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::IoFailure;  // unreachable in these tests
}

}  // namespace

TEST_CASE("matrices round trip through their file representation") {
  Rng rng(71);
  auto rho = random_density_matrix(rng, 3, 2);
  auto path = write_scratch("state.json", matrix_to_json(rho.matrix()).dump());
  auto back = read_state_file(path);
  CHECK(back.dim() == 3);
  CHECK(max_abs(back.matrix() - rho.matrix()) < 1e-15);
}

TEST_CASE("bases and observables load from files") {
  auto b = haar_random_unitary(3, 77);
  auto bpath = write_scratch("basis.json", matrix_to_json(b.unitary()).dump());
  auto loaded = read_basis_file(bpath);
  CHECK(max_abs(loaded.unitary() - b.unitary()) < 1e-15);

  auto doc = matrix_to_json(pauli_z());
  doc["energy_unit"] = "eV";
  auto hpath = write_scratch("ham.json", doc.dump());
  auto ham = read_hamiltonian_file(hpath);
  CHECK(ham.energy_unit() == "eV");
  CHECK(max_abs(ham.matrix() - pauli_z()) < 1e-15);

  // The unit tag defaults to joules when absent.
  auto hpath2 = write_scratch("ham2.json", matrix_to_json(pauli_z()).dump());
  CHECK(read_hamiltonian_file(hpath2).energy_unit() == "J");
}

TEST_CASE("channels load from kraus operator lists") {
  auto ch = bit_flip(0.3);
  nlohmann::json doc;
  doc["dim"] = 2;
  doc["kraus"] = nlohmann::json::array();
  for (const auto& k : ch.operators())
    doc["kraus"].push_back(matrix_to_json(k)["rows"]);
  auto path = write_scratch("channel.json", doc.dump());
  auto loaded = read_channel_file(path);
  REQUIRE(loaded.operators().size() == 2);

  auto rho = bloch_to_qubit({0.3, -0.4, 0.5});
  CHECK(max_abs(apply_channel(rho, loaded).matrix() -
                apply_channel(rho, ch).matrix()) < 1e-15);
}

TEST_CASE("unreadable and malformed files raise distinct errors") {
  CHECK(kind_of([] { read_state_file("/nonexistent/dir/state.json"); }) ==
        ErrorKind::IoFailure);

  auto garbled = write_scratch("garbled.json", "{not json at all");
  CHECK(kind_of([&] { read_state_file(garbled); }) == ErrorKind::MalformedInput);

  auto no_dim = write_scratch("no_dim.json", R"({"rows": [[[1.0, 0.0]]]})");
  CHECK(kind_of([&] { read_state_file(no_dim); }) == ErrorKind::MalformedInput);

  auto short_row = write_scratch(
      "short_row.json",
      R"({"dim": 2, "rows": [[[1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]})");
  CHECK(kind_of([&] { read_state_file(short_row); }) ==
        ErrorKind::MalformedInput);

  auto bad_cell = write_scratch(
      "bad_cell.json",
      R"({"dim": 1, "rows": [[["one", 0.0]]]})");
  CHECK(kind_of([&] { read_state_file(bad_cell); }) ==
        ErrorKind::MalformedInput);

  // Structurally fine but physically invalid input fails domain validation.
  auto off_trace = write_scratch(
      "off_trace.json",
      R"({"dim": 2, "rows": [[[0.6, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.3, 0.0]]]})");
  CHECK(kind_of([&] { read_state_file(off_trace); }) ==
        ErrorKind::NotUnitTrace);

  CHECK(kind_of([] {
          write_text_file("/nonexistent/dir/out.csv", "data");
        }) == ErrorKind::IoFailure);
}
