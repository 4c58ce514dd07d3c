#pragma once

#include <cstdint>
#include <utility>

#include "qcoh/core.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

/// Qubit Bloch parametrization; valid when x^2 + y^2 + z^2 <= 1.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double squared_norm() const { return x * x + y * y + z * z; }
};

/// d x d complex Hermitian, unit-trace, positive-semidefinite operator.
///
/// Construction always validates: Hermiticity within 1e-9, |Tr - 1| <= 1e-9
/// (then renormalized exactly), smallest eigenvalue >= -1e-9. In-tolerance
/// negative eigenvalues stay in the stored matrix; entropy evaluation clamps
/// them (see spectrum() in entropy.hpp).
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const Matrix& entries);

  /// rho = sum_i values[i] |v_i><v_i| over the columns of `vectors`.
  static DensityMatrix from_spectrum(const RealVector& values,
                                     const Matrix& vectors);

  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }

 private:
  explicit DensityMatrix(Matrix m) : mat_(std::move(m)) {}

  Matrix mat_;
};

/// Unit-norm state vector.
class PureState {
 public:
  static PureState from_amplitudes(const Vector& amplitudes);

  int dim() const { return static_cast<int>(amp_.size()); }
  const Vector& amplitudes() const { return amp_; }

  DensityMatrix projector() const;

 private:
  explicit PureState(Vector v) : amp_(std::move(v)) {}

  Vector amp_;
};

/// Ordered orthonormal set of d vectors, stored as the columns of a unitary.
class Basis {
 public:
  static Basis from_matrix(const Matrix& unitary);
  static Basis computational(int dim);

  int dim() const { return static_cast<int>(u_.rows()); }
  const Matrix& unitary() const { return u_; }
  Vector vector(int i) const { return u_.col(i); }

 private:
  explicit Basis(Matrix u) : u_(std::move(u)) {}

  Matrix u_;
};

/// Eigen-decomposition of a state, eigenvalues sorted descending. Ties are
/// broken by lexicographic (re, im) order of the eigenvector entries so the
/// output is deterministic for a given input.
struct Eigensystem {
  RealVector values;  // descending
  Matrix vectors;     // columns, matching order
};

Eigensystem eigensystem(const DensityMatrix& rho);

DensityMatrix bloch_to_qubit(const BlochVector& v);
BlochVector qubit_to_bloch(const DensityMatrix& rho);

/// |Psi> = sum_k sqrt(lambda_k) |psi_k> (x) |k>_R with the reference system R
/// second and the eigenpairs in eigensystem() order. Tracing out R recovers
/// rho, and the reduced state on R has entropy S(rho).
PureState purify(const DensityMatrix& rho);

enum class Keep { A, B };

DensityMatrix partial_trace(const DensityMatrix& rho_ab, int dim_a, int dim_b,
                            Keep keep);

/// Haar-distributed random unitary (Ginibre + QR with phase correction),
/// deterministic per seed.
Basis haar_random_unitary(int dim, std::uint64_t seed);
Matrix haar_unitary_matrix(Rng& rng, int dim);

/// Random state of the requested rank: eigenvalues drawn uniformly from the
/// probability simplex, eigenvectors from a Haar unitary.
DensityMatrix random_density_matrix(int dim, int rank, std::uint64_t seed);
DensityMatrix random_density_matrix(Rng& rng, int dim, int rank);

}  // namespace qcoh
