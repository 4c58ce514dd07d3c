#include "qcoh/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "qcoh/coherence.hpp"
#include "qcoh/entropy.hpp"

namespace qcoh {

namespace {

double clamp_tiny(double v) { return v < 0.0 && v >= -1e-9 ? 0.0 : v; }

// (1-t)/2 log2(1-t) + (1+t)/2 log2(1+t), the entropy deficit a correlation
// strength t imposes on a uniform two-outcome margin; the limit t -> +-1 is 1.
double correlation_deficit(double t) {
  auto term = [](double u) { return u > 0.0 ? 0.5 * u * std::log2(u) : 0.0; };
  return term(1.0 - t) + term(1.0 + t);
}

using RowMajorMatrixXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

DensityMatrix bell_diagonal(const BellDiagonalParams& params) {
  Matrix m = kron(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) +
             params.c1 * kron(pauli_x(), pauli_x()) +
             params.c2 * kron(pauli_y(), pauli_y()) +
             params.c3 * kron(pauli_z(), pauli_z());
  return DensityMatrix::from_matrix(0.25 * m);
}

RealVector bell_spectrum(const BellDiagonalParams& params) {
  return spectrum(bell_diagonal(params));
}

CorrelationReport bd_report(const BellDiagonalParams& params) {
  RealVector lambda = bell_spectrum(params);
  double h_lambda = shannon(lambda);
  double c_max = std::max({std::abs(params.c1), std::abs(params.c2),
                           std::abs(params.c3)});

  CorrelationReport report;
  report.bi_coherence = clamp_tiny(2.0 - h_lambda);
  report.comp_coherence =
      clamp_tiny(2.0 - h_lambda - correlation_deficit(params.c3));
  report.discord = clamp_tiny(2.0 - h_lambda - correlation_deficit(c_max));
  double top = lambda(0);
  report.entanglement =
      top >= 0.5 ? clamp_tiny(1.0 - binary_entropy(top)) : 0.0;
  report.hierarchy_ok = report.bi_coherence >= report.comp_coherence - 1e-9 &&
                        report.comp_coherence >= report.discord - 1e-9 &&
                        report.discord >= report.entanglement - 1e-9;
  return report;
}

double discord_oracle(const DensityMatrix& rho, int grid_steps) {
  if (rho.dim() != 4) {
    throw Error(ErrorKind::DimensionMismatch,
                "two-qubit state required, got dim " +
                    std::to_string(rho.dim()));
  }
  if (grid_steps < 2) {
    throw Error(ErrorKind::OutOfRange, "grid_steps must be at least 2");
  }
  const Matrix& m = rho.matrix();
  int n = grid_steps;
  int points = n * n;

  // A measurement axis (theta, phi) defines the projector pair onto
  // a0 = (cos(theta/2), e^{i phi} sin(theta/2)) and its complement. Since the
  // pair only depends on the unordered axis, theta in [0, pi/2] with full phi
  // range covers every measurement; both endpoints and phi = 2 pi j / n are
  // exact, so the x, y and z axes are on the grid.
  //
  // For fixed vectors a (side A) and b (side B), the outcome probability is
  //   p = <a (x) b| rho |a (x) b> = f(a) . q(b)
  // where f(a) = (c^2, s^2, 2cs cos phi, -2cs sin phi) and q(b) collects the
  // Hermitian 2x2 operator Q_b[i][k] = <b| rho_block(i,k) |b> as
  // (Q00, Q11, Re Q01, Im Q01). This turns the double grid scan into two
  // matrix products.
  RowMajorMatrixXd features(points, 4);
  std::vector<double> cos_half(n), sin_half(n);
  for (int t = 0; t < n; ++t) {
    double theta = 0.5 * std::numbers::pi * t / (n - 1);
    cos_half[t] = std::cos(0.5 * theta);
    sin_half[t] = std::sin(0.5 * theta);
  }
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < n; ++f) {
      double phi = 2.0 * std::numbers::pi * f / n;
      double c = cos_half[t];
      double s = sin_half[t];
      int row = t * n + f;
      features(row, 0) = c * c;
      features(row, 1) = s * s;
      features(row, 2) = 2.0 * c * s * std::cos(phi);
      features(row, 3) = -2.0 * c * s * std::sin(phi);
    }
  }

  // q-features of the first projector of every B-side grid point, plus its
  // trace; the second projector follows from the reduced state on A.
  auto block = [&](int i, int k, int u, int v) {
    return m(2 * i + u, 2 * k + v);
  };
  cxd ra00 = block(0, 0, 0, 0) + block(0, 0, 1, 1);
  cxd ra11 = block(1, 1, 0, 0) + block(1, 1, 1, 1);
  cxd ra01 = block(0, 1, 0, 0) + block(0, 1, 1, 1);
  Eigen::Vector4d reduced_a(ra00.real(), ra11.real(), ra01.real(),
                            ra01.imag());

  RowMajorMatrixXd q_first(points, 4);
  RealVector trace_first(points);
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < n; ++f) {
      double phi = 2.0 * std::numbers::pi * f / n;
      double c = cos_half[t];
      double s = sin_half[t];
      cxd phase(std::cos(phi), std::sin(phi));
      auto expect = [&](int i, int k) {
        return c * c * block(i, k, 0, 0) + s * s * block(i, k, 1, 1) +
               c * s * (phase * block(i, k, 0, 1) +
                        std::conj(phase) * block(i, k, 1, 0));
      };
      cxd q00 = expect(0, 0);
      cxd q11 = expect(1, 1);
      cxd q01 = expect(0, 1);
      int row = t * n + f;
      q_first(row, 0) = q00.real();
      q_first(row, 1) = q11.real();
      q_first(row, 2) = q01.real();
      q_first(row, 3) = q01.imag();
      trace_first(row) = q00.real() + q11.real();
    }
  }
  RowMajorMatrixXd q_second = (-q_first).rowwise() + reduced_a.transpose();
  RealVector trace_second = RealVector::Ones(points) - trace_first;

  double s_rho = von_neumann(rho);
  double best = std::numeric_limits<double>::infinity();
  constexpr double kLogFloor = 1e-300;
  const double inv_ln2 = 1.0 / std::numbers::ln2;

  // Chunk the A side so the probability matrices stay small; scan row-major
  // with strict improvement so ties resolve to the lexicographically first
  // (theta_A, phi_A, theta_B, phi_B).
  const int chunk = 512;
  RowMajorMatrixXd p_first, p_second, entropy_sum;
  for (int start = 0; start < points; start += chunk) {
    int rows = std::min(chunk, points - start);
    p_first.noalias() =
        features.middleRows(start, rows) * q_first.transpose();
    p_second.noalias() =
        features.middleRows(start, rows) * q_second.transpose();
    auto plog2p = [&](const RowMajorMatrixXd& p) {
      return (p.array().max(0.0) *
              (p.array().max(kLogFloor)).log() * inv_ln2);
    };
    RowMajorMatrixXd p_third =
        (-p_first).rowwise() + trace_first.transpose();
    RowMajorMatrixXd p_fourth =
        (-p_second).rowwise() + trace_second.transpose();
    entropy_sum = -(plog2p(p_first) + plog2p(p_second) + plog2p(p_third) +
                    plog2p(p_fourth))
                       .matrix();
    const double* data = entropy_sum.data();
    long count = static_cast<long>(rows) * points;
    for (long i = 0; i < count; ++i) {
      if (data[i] < best) best = data[i];
    }
  }
  return clamp_tiny(best - s_rho);
}

HierarchyCheck hierarchy_check(const DensityMatrix& rho, const Basis& b) {
  HierarchyCheck check;
  check.c = bi_coherence(rho);
  check.c_b = rel_ent_coherence(rho, b);
  check.ordering_ok = check.c >= check.c_b - 1e-9;

  if (rho.dim() == 4) {
    Matrix xx = kron(pauli_x(), pauli_x());
    Matrix yy = kron(pauli_y(), pauli_y());
    Matrix zz = kron(pauli_z(), pauli_z());
    const Matrix& r = rho.matrix();
    bool commutes = max_abs(r * xx - xx * r) <= 1e-10 &&
                    max_abs(r * yy - yy * r) <= 1e-10 &&
                    max_abs(r * zz - zz * r) <= 1e-10;
    if (commutes) {
      BellDiagonalParams params{(r * xx).trace().real(),
                                (r * yy).trace().real(),
                                (r * zz).trace().real()};
      check.ordering_ok =
          check.ordering_ok && bd_report(params).hierarchy_ok;
    }
  }
  return check;
}

}  // namespace qcoh
