#pragma once

#include "qcoh/core.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

// Support detection for relative entropy: a sigma-eigenvalue below
// kSupportEigTol that carries rho-weight above kSupportWeightTol means
// supp(rho) is not contained in supp(sigma).
inline constexpr double kSupportEigTol = 1e-12;
inline constexpr double kSupportWeightTol = 1e-10;

/// Validate a probability vector: entries in [-1e-12, 0) are clamped to 0,
/// anything more negative is rejected, the sum must be within 1e-9 of 1, and
/// the result is renormalized to sum exactly 1.
RealVector validated_distribution(const RealVector& p);

/// Eigenvalues of rho, sorted descending, with in-tolerance negatives
/// (>= -1e-9) clamped to 0 and the vector renormalized. This is the spectrum
/// all entropy evaluations use.
RealVector spectrum(const DensityMatrix& rho);

/// H(p) = -sum p_i log2 p_i in bits, with 0 log2 0 = 0.
double shannon(const RealVector& p);

/// H2(t) = shannon((t, 1-t)); symmetric about 1/2.
double binary_entropy(double t);

/// S(rho) = shannon(spectrum(rho)) in bits.
double von_neumann(const DensityMatrix& rho);

/// S(rho || sigma) = Tr(rho log2 rho) - Tr(rho log2 sigma) in bits.
/// Returns +infinity when supp(rho) is not contained in supp(sigma); this is
/// a sentinel value, not an exception.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// True iff y is majorized by x: sorted-descending partial sums of y never
/// exceed those of x (equality holds automatically at full length).
bool majorizes(const RealVector& x, const RealVector& y);

}  // namespace qcoh
