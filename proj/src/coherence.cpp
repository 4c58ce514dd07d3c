#include "qcoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcoh/entropy.hpp"

namespace qcoh {

namespace {

void require_same_dim(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "state dim " + std::to_string(a) + " vs basis dim " +
                    std::to_string(b));
  }
}

// Values in [-1e-9, 0) are reported as 0 so split components stay
// non-negative under roundoff.
double clamp_tiny(double v) { return v < 0.0 && v >= -1e-9 ? 0.0 : v; }

Matrix fourier_matrix(int d) {
  Matrix f(d, d);
  double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      double angle = 2.0 * std::numbers::pi * j * k / d;
      f(j, k) = scale * cxd(std::cos(angle), std::sin(angle));
    }
  }
  return f;
}

}  // namespace

DensityMatrix dephase(const DensityMatrix& rho, const Basis& b) {
  require_same_dim(rho.dim(), b.dim());
  const Matrix& u = b.unitary();
  Matrix in_basis = u.adjoint() * rho.matrix() * u;
  Matrix diag = in_basis.diagonal().asDiagonal();
  return DensityMatrix::from_matrix(u * diag * u.adjoint());
}

RealVector dephased_probabilities(const DensityMatrix& rho, const Basis& b) {
  require_same_dim(rho.dim(), b.dim());
  const Matrix& u = b.unitary();
  RealVector p = (u.adjoint() * rho.matrix() * u).diagonal().real();
  double sum = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) < 0.0) p(i) = 0.0;  // PSD guarantees >= -1e-9
    sum += p(i);
  }
  if (sum > 0.0 && sum != 1.0) p /= sum;
  return p;
}

double bi_coherence(const DensityMatrix& rho) {
  return clamp_tiny(std::log2(static_cast<double>(rho.dim())) -
                    von_neumann(rho));
}

double rel_ent_coherence(const DensityMatrix& rho, const Basis& b) {
  return clamp_tiny(shannon(dephased_probabilities(rho, b)) -
                    von_neumann(rho));
}

CoherenceSplit coherence_split(const DensityMatrix& rho, const Basis& b) {
  CoherenceSplit split;
  split.total = bi_coherence(rho);
  split.basis_part = rel_ent_coherence(rho, b);
  split.residual = bi_coherence(dephase(rho, b));
  return split;
}

ChainReport chain_split(const DensityMatrix& rho,
                        const std::vector<Basis>& bases) {
  if (bases.empty()) {
    throw Error(ErrorKind::EmptyChain, "at least one basis is required");
  }
  ChainReport report;
  report.total = bi_coherence(rho);
  DensityMatrix current = rho;
  for (const Basis& b : bases) {
    require_same_dim(current.dim(), b.dim());
    report.step_coherences.push_back(rel_ent_coherence(current, b));
    current = dephase(current, b);
    report.states.push_back(current);
    report.residuals.push_back(bi_coherence(current));
  }
  report.terminal_residual = report.residuals.back();
  return report;
}

Basis fourier_basis(int dim) {
  if (dim < 1) {
    throw Error(ErrorKind::OutOfRange,
                "dimension must be positive, got " + std::to_string(dim));
  }
  return Basis::from_matrix(fourier_matrix(dim));
}

bool is_mub(const Basis& b1, const Basis& b2, double tol) {
  require_same_dim(b1.dim(), b2.dim());
  int d = b1.dim();
  Matrix overlaps = b2.unitary().adjoint() * b1.unitary();
  double target = 1.0 / d;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (std::abs(std::norm(overlaps(j, i)) - target) > tol) return false;
    }
  }
  return true;
}

bool is_bi_incoherent(const DensityMatrix& rho, double tol) {
  int d = rho.dim();
  return max_abs(rho.matrix() - Matrix::Identity(d, d) / d) <= tol;
}

std::pair<double, double> max_coherence_over_unitaries(const DensityMatrix& rho,
                                                       const Basis& b,
                                                       int n_samples,
                                                       std::uint64_t seed) {
  require_same_dim(rho.dim(), b.dim());
  if (n_samples < 0) {
    throw Error(ErrorKind::OutOfRange, "sample count must be non-negative");
  }
  int d = rho.dim();

  // The rotation that sends the eigenbasis of rho onto the Fourier rotation
  // of b makes every eigenvector maximally spread over b, so the dephased
  // entropy hits log2 d and the coherence hits its ceiling log2 d - S(rho).
  Matrix eigvecs = eigensystem(rho).vectors;
  Matrix attaining = b.unitary() * fourier_matrix(d) * eigvecs.adjoint();
  DensityMatrix rotated = DensityMatrix::from_matrix(
      attaining * rho.matrix() * attaining.adjoint());
  double supremum = rel_ent_coherence(rotated, b);

  double sample_max = 0.0;
  Rng rng(seed);
  for (int k = 0; k < n_samples; ++k) {
    Matrix u = haar_unitary_matrix(rng, d);
    DensityMatrix moved =
        DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
    sample_max = std::max(sample_max, rel_ent_coherence(moved, b));
  }
  return {supremum, sample_max};
}

DensityMatrix max_coherent_mixed_state(const RealVector& spectrum,
                                       const Basis& b) {
  require_same_dim(static_cast<int>(spectrum.size()), b.dim());
  RealVector p = validated_distribution(spectrum);
  Matrix vectors = b.unitary() * fourier_matrix(b.dim());
  return DensityMatrix::from_spectrum(p, vectors);
}

CoherenceSplit qubit_split_closed_form(const BlochVector& v, BlochAxis axis) {
  double sq = v.squared_norm();
  if (sq > 1.0 + kBlochNormSlack) {
    throw Error(ErrorKind::BlochNormExceeded,
                "|r|^2 = " + std::to_string(sq) + " exceeds 1");
  }
  double r = std::sqrt(std::min(sq, 1.0));
  double a = axis == BlochAxis::Z ? v.z : v.x;
  double h_r = binary_entropy(0.5 * (1.0 + r));
  double h_a = binary_entropy(std::clamp(0.5 * (1.0 + a), 0.0, 1.0));
  CoherenceSplit split;
  split.total = clamp_tiny(1.0 - h_r);
  split.basis_part = clamp_tiny(h_a - h_r);
  split.residual = clamp_tiny(1.0 - h_a);
  return split;
}

}  // namespace qcoh
