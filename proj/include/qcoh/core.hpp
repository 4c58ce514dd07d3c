#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qcoh {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Absolute tolerances used by validation and identity checks.
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-9;
inline constexpr double kBlochNormSlack = 1e-12;
inline constexpr double kProbNegTol = 1e-12;
inline constexpr double kProbSumTol = 1e-9;

enum class ErrorKind {
  NotHermitian,
  NotUnitTrace,
  NotPositive,
  BlochNormExceeded,
  DimensionMismatch,
  RankOutOfRange,
  InvalidDistribution,
  OutOfRange,
  LengthMismatch,
  EmptyChain,
  MaximallyMixedInput,
  NotPure,
  ProbabilityOutOfRange,
  IncompleteChannel,
  NonpositiveTemperature,
  MalformedInput,
  IoFailure,
};

const char* to_string(ErrorKind kind);

// Every validation failure names the violated invariant and the offending
// magnitude in its message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::BlochNormExceeded: return "BlochNormExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyChain: return "EmptyChain";
    case ErrorKind::MaximallyMixedInput: return "MaximallyMixedInput";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorKind::IncompleteChannel: return "IncompleteChannel";
    case ErrorKind::NonpositiveTemperature: return "NonpositiveTemperature";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, cxd(0, -1), cxd(0, 1), 0;
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Largest entrywise absolute value, the norm used by the max-norm tolerances.
inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace qcoh
