#include "qcoh/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcoh/coherence.hpp"
#include "qcoh/entropy.hpp"

namespace qcoh {

namespace {

void require_temperature(double t) {
  if (!(t > 0.0)) {
    std::ostringstream os;
    os.precision(6);
    os << "temperature " << t << " K is not positive";
    throw Error(ErrorKind::NonpositiveTemperature, os.str());
  }
}

double scale_for(double temperature, WorkUnits units) {
  double kt = kBoltzmann * temperature;
  return units == WorkUnits::Joules ? kt * std::numbers::ln2 : kt;
}

}  // namespace

Hamiltonian Hamiltonian::from_matrix(const Matrix& entries,
                                     std::string energy_unit) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw Error(ErrorKind::MalformedInput,
                "energy observable must be square and nonempty, got " +
                    std::to_string(entries.rows()) + "x" +
                    std::to_string(entries.cols()));
  }
  double dev = max_abs(entries - entries.adjoint());
  if (dev > kHermitianTol) {
    std::ostringstream os;
    os.precision(6);
    os << "max |H - H^dag| = " << dev << " exceeds " << kHermitianTol;
    throw Error(ErrorKind::NotHermitian, os.str());
  }
  Matrix m = 0.5 * (entries + entries.adjoint());
  return Hamiltonian(std::move(m), std::move(energy_unit));
}

WorkResult extractable_work(const DensityMatrix& rho, double temperature,
                            WorkUnits units) {
  require_temperature(temperature);
  double value = scale_for(temperature, units) * bi_coherence(rho);
  return {std::max(value, 0.0), units};
}

DensityMatrix hamiltonian_pinch(const DensityMatrix& rho,
                                const Hamiltonian& h) {
  if (rho.dim() != h.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "state dim " + std::to_string(rho.dim()) +
                    " vs observable dim " + std::to_string(h.dim()));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  const RealVector& energies = solver.eigenvalues();  // ascending
  const Matrix& vectors = solver.eigenvectors();
  int d = h.dim();
  double tol = 1e-9 * std::max(1.0, energies.cwiseAbs().maxCoeff());

  Matrix out = Matrix::Zero(d, d);
  int start = 0;
  while (start < d) {
    int end = start + 1;
    while (end < d && energies(end) - energies(end - 1) <= tol) ++end;
    auto eigenspace = vectors.middleCols(start, end - start);
    Matrix projector = eigenspace * eigenspace.adjoint();
    out += projector * rho.matrix() * projector;
    start = end;
  }
  return DensityMatrix::from_matrix(out);
}

WorkResult coherence_to_work(const DensityMatrix& rho, const Hamiltonian& h,
                             double temperature, WorkUnits units) {
  require_temperature(temperature);
  DensityMatrix pinched = hamiltonian_pinch(rho, h);
  double gap = von_neumann(pinched) - von_neumann(rho);
  double value = scale_for(temperature, units) * std::max(gap, 0.0);
  return {value, units};
}

std::pair<double, double> distillable_pure_count(const DensityMatrix& rho,
                                                 long n) {
  if (n < 0) {
    throw Error(ErrorKind::OutOfRange,
                "copy count must be non-negative, got " + std::to_string(n));
  }
  double rate = bi_coherence(rho);
  return {rate, static_cast<double>(n) * rate};
}

}  // namespace qcoh
