#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qcoh/core.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

/// Additive decomposition of the basis-independent coherence of a state with
/// respect to one basis: total = basis_part + residual, all in bits, all
/// non-negative (values in [-1e-9, 0) are clamped to 0).
struct CoherenceSplit {
  double total = 0.0;
  double basis_part = 0.0;
  double residual = 0.0;
};

/// Result of dephasing through a sequence of bases: the coherence captured at
/// each step, the post-measurement state and its remaining basis-independent
/// coherence after each step, and the input's total. The step coherences plus
/// the terminal residual sum to the total, and the residual sequence is
/// non-increasing.
struct ChainReport {
  std::vector<double> step_coherences;
  std::vector<DensityMatrix> states;
  std::vector<double> residuals;
  double terminal_residual = 0.0;
  double total = 0.0;
};

enum class BlochAxis { Z, X };

/// Full dephasing of rho in basis b: sum_i |a_i><a_i| rho |a_i><a_i|.
DensityMatrix dephase(const DensityMatrix& rho, const Basis& b);

/// Diagonal of rho in basis b, clamped and renormalized like a spectrum.
RealVector dephased_probabilities(const DensityMatrix& rho, const Basis& b);

/// Basis-independent coherence C(rho) = log2 d - S(rho), in bits. This is the
/// relative entropy from rho to I/d, the unique state diagonal in every basis.
double bi_coherence(const DensityMatrix& rho);

/// Relative entropy of coherence with respect to b:
/// S(dephase(rho, b)) - S(rho), in bits; 0 <= result <= bi_coherence(rho).
double rel_ent_coherence(const DensityMatrix& rho, const Basis& b);

/// The split C(rho) = C^B(rho) + C(dephase(rho, b)); all three parts are
/// computed independently, so the sum identity is a genuine numerical check.
CoherenceSplit coherence_split(const DensityMatrix& rho, const Basis& b);

/// Iterated split over a sequence of bases: each step captures the coherence
/// of the current state in the next basis and replaces the state by its
/// dephased image.
ChainReport chain_split(const DensityMatrix& rho,
                        const std::vector<Basis>& bases);

/// Discrete-Fourier basis: column k has entries omega^{jk}/sqrt(d) with
/// omega = exp(2 pi i / d). Mutually unbiased with the computational basis
/// in every dimension.
Basis fourier_basis(int dim);

/// True iff every cross overlap |<b2_j | b1_i>|^2 lies within tol of 1/d.
bool is_mub(const Basis& b1, const Basis& b2, double tol = 1e-9);

/// True iff rho is within tol of I/d in max norm — the only state that is
/// incoherent in every basis.
bool is_bi_incoherent(const DensityMatrix& rho, double tol = 1e-9);

/// Supremum of C^b(U rho U^dag) over global unitaries U. The supremum equals
/// bi_coherence(rho) and is attained by the unitary that maps the eigenbasis
/// of rho onto the Fourier rotation of b; the first component is the value
/// that construction achieves, the second the best of n_samples Haar draws.
std::pair<double, double> max_coherence_over_unitaries(const DensityMatrix& rho,
                                                       const Basis& b,
                                                       int n_samples,
                                                       std::uint64_t seed);

/// State with the given spectrum whose eigenbasis is the Fourier rotation of
/// b, so its coherence in b equals log2 d - H(spectrum) — the largest value
/// any state with that spectrum can have.
DensityMatrix max_coherent_mixed_state(const RealVector& spectrum,
                                       const Basis& b);

/// Closed-form qubit split for the basis of sigma_z (axis Z, the
/// computational basis) or sigma_x (axis X, the |+>/|-> basis):
///   total      = 1 - H2((1 + |r|)/2)
///   basis_part = H2((1 + a)/2) - H2((1 + |r|)/2)
///   residual   = 1 - H2((1 + a)/2)
/// where a is the Bloch component along the chosen axis.
CoherenceSplit qubit_split_closed_form(const BlochVector& v, BlochAxis axis);

}  // namespace qcoh
