#include "qcoh/channels.hpp"

#include <cmath>
#include <sstream>

#include "qcoh/duality.hpp"

namespace qcoh {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os.precision(6);
    os << "flip probability " << p << " outside [0, 1]";
    throw Error(ErrorKind::ProbabilityOutOfRange, os.str());
  }
}

}  // namespace

KrausChannel KrausChannel::from_operators(const std::vector<Matrix>& operators) {
  if (operators.empty()) {
    throw Error(ErrorKind::IncompleteChannel, "no Kraus operators given");
  }
  int d = static_cast<int>(operators.front().rows());
  for (const Matrix& k : operators) {
    if (k.rows() != d || k.cols() != d) {
      throw Error(ErrorKind::DimensionMismatch,
                  "Kraus operators must all be " + std::to_string(d) + "x" +
                      std::to_string(d));
    }
  }
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& k : operators) sum += k.adjoint() * k;
  double dev = max_abs(sum - Matrix::Identity(d, d));
  if (dev > 1e-9) {
    std::ostringstream os;
    os.precision(6);
    os << "sum of K^dag K deviates from identity by " << dev;
    throw Error(ErrorKind::IncompleteChannel, os.str());
  }
  return KrausChannel(d, operators);
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch) {
  if (rho.dim() != ch.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "state dim " + std::to_string(rho.dim()) + " vs channel dim " +
                    std::to_string(ch.dim()));
  }
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& k : ch.operators()) {
    out += k * rho.matrix() * k.adjoint();
  }
  return DensityMatrix::from_matrix(out);
}

KrausChannel bit_flip(double p) {
  require_probability(p);
  std::vector<Matrix> ops;
  ops.push_back(std::sqrt(p) * Matrix::Identity(2, 2));
  ops.push_back(std::sqrt(1.0 - p) * pauli_x());
  return KrausChannel::from_operators(ops);
}

DensityMatrix bitflip_example_state(double p) {
  require_probability(p);
  double shift = (2.0 * p - 1.0) / std::sqrt(6.0);
  cxd off(0.5 / std::sqrt(2.0), (1.0 - 2.0 * p) / (2.0 * std::sqrt(3.0)));
  Matrix m(2, 2);
  m << cxd(0.5 * (1.0 + shift), 0.0), off, std::conj(off),
      cxd(0.5 * (1.0 - shift), 0.0);
  return DensityMatrix::from_matrix(m);
}

std::vector<DualityRow> bitflip_duality_sweep(const std::vector<double>& p_grid,
                                              const Basis& b) {
  std::vector<DualityRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    DualityBudget budget = duality_budget(bitflip_example_state(p), b);
    rows.push_back({p, budget.wave, budget.particle, budget.entanglement});
  }
  return rows;
}

}  // namespace qcoh
