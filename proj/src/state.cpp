#include "qcoh/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace qcoh {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool column_lex_less(const Matrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) {
    cxd va = m(i, a);
    cxd vb = m(i, b);
    if (va.real() != vb.real()) return va.real() < vb.real();
    if (va.imag() != vb.imag()) return va.imag() < vb.imag();
  }
  return false;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Matrix& entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw Error(ErrorKind::MalformedInput,
                "state matrix must be square and nonempty, got " +
                    std::to_string(entries.rows()) + "x" +
                    std::to_string(entries.cols()));
  }
  double herm_dev = max_abs(entries - entries.adjoint());
  if (herm_dev > kHermitianTol) {
    throw Error(ErrorKind::NotHermitian,
                "max |rho - rho^dag| = " + fmt(herm_dev) + " exceeds " +
                    fmt(kHermitianTol));
  }
  Matrix m = 0.5 * (entries + entries.adjoint());
  double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw Error(ErrorKind::NotUnitTrace,
                "|Tr rho - 1| = " + fmt(std::abs(trace - 1.0)) + " exceeds " +
                    fmt(kTraceTol));
  }
  if (trace != 1.0) m /= trace;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw Error(ErrorKind::NotPositive, "smallest eigenvalue " + fmt(min_eig) +
                                            " is below -" + fmt(kPsdTol));
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_spectrum(const RealVector& values,
                                           const Matrix& vectors) {
  if (values.size() != vectors.cols()) {
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(values.size()) + " eigenvalues for " +
                    std::to_string(vectors.cols()) + " eigenvectors");
  }
  Matrix m = vectors * values.asDiagonal() * vectors.adjoint();
  return from_matrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) {
    throw Error(ErrorKind::OutOfRange,
                "dimension must be positive, got " + std::to_string(dim));
  }
  Matrix m = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

PureState PureState::from_amplitudes(const Vector& amplitudes) {
  if (amplitudes.size() < 1) {
    throw Error(ErrorKind::MalformedInput, "empty amplitude vector");
  }
  double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw Error(ErrorKind::NotUnitTrace,
                "state-vector norm deviates from 1 by " +
                    fmt(std::abs(norm - 1.0)));
  }
  Vector v = amplitudes;
  if (norm != 1.0) v /= norm;
  return PureState(std::move(v));
}

DensityMatrix PureState::projector() const {
  return DensityMatrix::from_matrix(amp_ * amp_.adjoint());
}

Basis Basis::from_matrix(const Matrix& unitary) {
  if (unitary.rows() != unitary.cols() || unitary.rows() < 1) {
    throw Error(ErrorKind::MalformedInput,
                "basis matrix must be square and nonempty, got " +
                    std::to_string(unitary.rows()) + "x" +
                    std::to_string(unitary.cols()));
  }
  int d = static_cast<int>(unitary.rows());
  double dev = max_abs(unitary.adjoint() * unitary - Matrix::Identity(d, d));
  if (dev > kUnitaryTol) {
    throw Error(ErrorKind::MalformedInput,
                "basis Gram matrix deviates from identity by " + fmt(dev) +
                    ", tolerance " + fmt(kUnitaryTol));
  }
  return Basis(unitary);
}

Basis Basis::computational(int dim) {
  if (dim < 1) {
    throw Error(ErrorKind::OutOfRange,
                "dimension must be positive, got " + std::to_string(dim));
  }
  return Basis(Matrix::Identity(dim, dim));
}

Eigensystem eigensystem(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix());
  const RealVector& vals = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();

  int d = rho.dim();
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (vals(a) != vals(b)) return vals(a) > vals(b);
    return column_lex_less(vecs, a, b);
  });

  Eigensystem out;
  out.values.resize(d);
  out.vectors.resize(d, d);
  for (int k = 0; k < d; ++k) {
    out.values(k) = vals(order[k]);
    out.vectors.col(k) = vecs.col(order[k]);
  }
  return out;
}

DensityMatrix bloch_to_qubit(const BlochVector& v) {
  double sq = v.squared_norm();
  if (sq > 1.0 + kBlochNormSlack) {
    throw Error(ErrorKind::BlochNormExceeded,
                "|r|^2 = " + fmt(sq) + " exceeds 1");
  }
  Matrix m(2, 2);
  m << cxd(0.5 * (1.0 + v.z), 0.0), cxd(0.5 * v.x, -0.5 * v.y),
      cxd(0.5 * v.x, 0.5 * v.y), cxd(0.5 * (1.0 - v.z), 0.0);
  return DensityMatrix::from_matrix(m);
}

BlochVector qubit_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch,
                "Bloch parametrization needs a qubit, got dim " +
                    std::to_string(rho.dim()));
  }
  const Matrix& m = rho.matrix();
  BlochVector v;
  v.x = 2.0 * m(1, 0).real();
  v.y = 2.0 * m(1, 0).imag();
  v.z = (m(0, 0) - m(1, 1)).real();
  return v;
}

PureState purify(const DensityMatrix& rho) {
  int d = rho.dim();
  Eigensystem es = eigensystem(rho);
  Vector amp = Vector::Zero(d * d);
  for (int k = 0; k < d; ++k) {
    double lambda = std::max(es.values(k), 0.0);
    if (lambda == 0.0) continue;
    double root = std::sqrt(lambda);
    for (int i = 0; i < d; ++i) {
      amp(i * d + k) = root * es.vectors(i, k);
    }
  }
  amp /= amp.norm();
  return PureState::from_amplitudes(amp);
}

DensityMatrix partial_trace(const DensityMatrix& rho_ab, int dim_a, int dim_b,
                            Keep keep) {
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != rho_ab.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "subsystem dims " + std::to_string(dim_a) + "x" +
                    std::to_string(dim_b) + " do not factor dim " +
                    std::to_string(rho_ab.dim()));
  }
  const Matrix& m = rho_ab.matrix();
  if (keep == Keep::A) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int b = 0; b < dim_b; ++b)
          out(i, j) += m(i * dim_b + b, j * dim_b + b);
    return DensityMatrix::from_matrix(out);
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (int a = 0; a < dim_a; ++a)
    for (int i = 0; i < dim_b; ++i)
      for (int j = 0; j < dim_b; ++j)
        out(i, j) += m(a * dim_b + i, a * dim_b + j);
  return DensityMatrix::from_matrix(out);
}

Matrix haar_unitary_matrix(Rng& rng, int dim) {
  Matrix z(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) z(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR();
  // Fix the phase freedom of QR so the distribution is Haar.
  for (int j = 0; j < dim; ++j) {
    cxd diag = r(j, j);
    cxd phase = std::abs(diag) > 0.0 ? diag / std::abs(diag) : cxd(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

Basis haar_random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw Error(ErrorKind::OutOfRange,
                "dimension must be positive, got " + std::to_string(dim));
  }
  Rng rng(seed);
  return Basis::from_matrix(haar_unitary_matrix(rng, dim));
}

DensityMatrix random_density_matrix(Rng& rng, int dim, int rank) {
  if (rank < 1 || rank > dim) {
    throw Error(ErrorKind::RankOutOfRange,
                "rank " + std::to_string(rank) + " outside [1, " +
                    std::to_string(dim) + "]");
  }
  RealVector weights(rank);
  double total = 0.0;
  for (int i = 0; i < rank; ++i) {
    weights(i) = -std::log(rng.uniform_pos());
    total += weights(i);
  }
  weights /= total;
  std::sort(weights.data(), weights.data() + rank, std::greater<double>());
  Matrix u = haar_unitary_matrix(rng, dim);
  return DensityMatrix::from_spectrum(weights, u.leftCols(rank));
}

DensityMatrix random_density_matrix(int dim, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density_matrix(rng, dim, rank);
}

}  // namespace qcoh
