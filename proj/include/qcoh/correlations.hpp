#pragma once

#include "qcoh/core.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

/// Correlation triple of a two-qubit state diagonal in the Bell basis:
/// rho = (I (x) I + c1 X(x)X + c2 Y(x)Y + c3 Z(x)Z) / 4. Valid whenever the
/// induced spectrum is positive semidefinite.
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Closed-form correlation ladder of a Bell-diagonal state, all in bits:
/// basis-independent coherence >= computational-basis coherence >= symmetric
/// discord >= relative entropy of entanglement.
struct CorrelationReport {
  double bi_coherence = 0.0;
  double comp_coherence = 0.0;
  double discord = 0.0;
  double entanglement = 0.0;
  bool hierarchy_ok = false;
};

/// Coherence comparison for a general state: the basis-independent value, the
/// value in the given basis, and whether the expected ordering holds. For
/// Bell-diagonal input the check extends to the full four-rung ladder.
struct HierarchyCheck {
  double c = 0.0;
  double c_b = 0.0;
  bool ordering_ok = false;
};

/// The 4x4 state induced by the correlation triple.
DensityMatrix bell_diagonal(const BellDiagonalParams& params);

/// Its spectrum (the four Bell-basis weights), sorted descending. Obtained by
/// diagonalization, not by a sign-convention table.
RealVector bell_spectrum(const BellDiagonalParams& params);

/// All four closed forms plus the ordering flag.
CorrelationReport bd_report(const BellDiagonalParams& params);

/// Brute-force symmetric discord of a two-qubit state: minimum over product
/// local projective measurements of S(dephased) - S(rho), with each side's
/// measurement axis drawn from a grid_steps x grid_steps polar/azimuth grid
/// that contains the x, y (grid_steps divisible by 4) and z axes exactly.
/// Ties resolve to the lexicographically first grid point, so the scan is
/// deterministic.
double discord_oracle(const DensityMatrix& rho, int grid_steps);

/// Ordering check C(rho) >= C^b(rho), extended to discord and entanglement
/// via the closed forms when rho is Bell-diagonal.
HierarchyCheck hierarchy_check(const DensityMatrix& rho, const Basis& b);

}  // namespace qcoh
