#pragma once

#include <vector>

#include "qcoh/core.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

/// Completely positive trace-preserving map given by Kraus operators:
/// rho -> sum_k K_k rho K_k^dag with sum_k K_k^dag K_k = I within 1e-9.
class KrausChannel {
 public:
  static KrausChannel from_operators(const std::vector<Matrix>& operators);

  int dim() const { return dim_; }
  const std::vector<Matrix>& operators() const { return ops_; }

 private:
  KrausChannel(int dim, std::vector<Matrix> ops)
      : dim_(dim), ops_(std::move(ops)) {}

  int dim_;
  std::vector<Matrix> ops_;
};

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch);

/// Qubit bit-flip channel K0 = sqrt(p) I, K1 = sqrt(1-p) X: identity at
/// p = 1, pure NOT conjugation at p = 0.
KrausChannel bit_flip(double p);

/// The Bloch vector (1/sqrt2, 1/sqrt3, 1/sqrt6) qubit after the bit-flip
/// channel with parameter p, written in closed form: diagonal
/// (1 +- (2p-1)/sqrt6)/2 and upper off-diagonal
/// 1/(2 sqrt2) + i (1-2p)/(2 sqrt3).
DensityMatrix bitflip_example_state(double p);

/// One row of the duality sweep of the bit-flip example.
struct DualityRow {
  double p = 0.0;
  double wave = 0.0;
  double particle = 0.0;
  double entanglement = 0.0;
};

/// Duality budget of bitflip_example_state(p) for each p in the grid; every
/// row's three parts sum to 1.
std::vector<DualityRow> bitflip_duality_sweep(const std::vector<double>& p_grid,
                                              const Basis& b);

}  // namespace qcoh
