#include "qcoh/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qcoh {

namespace {

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

RealVector validated_distribution(const RealVector& p) {
  if (p.size() < 1) {
    throw Error(ErrorKind::InvalidDistribution, "empty probability vector");
  }
  RealVector out = p;
  double sum = 0.0;
  for (int i = 0; i < out.size(); ++i) {
    if (out(i) < -kProbNegTol) {
      throw Error(ErrorKind::InvalidDistribution,
                  "entry " + std::to_string(i) + " = " + fmt(out(i)) +
                      " is below -" + fmt(kProbNegTol));
    }
    if (out(i) < 0.0) out(i) = 0.0;
    sum += out(i);
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw Error(ErrorKind::InvalidDistribution,
                "entries sum to " + fmt(sum) + ", off by more than " +
                    fmt(kProbSumTol));
  }
  if (sum != 1.0) out /= sum;
  return out;
}

RealVector spectrum(const DensityMatrix& rho) {
  RealVector vals = eigensystem(rho).values;
  double sum = 0.0;
  for (int i = 0; i < vals.size(); ++i) {
    if (vals(i) < 0.0) vals(i) = 0.0;  // construction guarantees >= -1e-9
    sum += vals(i);
  }
  if (sum > 0.0 && sum != 1.0) vals /= sum;
  return vals;
}

double shannon(const RealVector& p) {
  RealVector q = validated_distribution(p);
  double h = 0.0;
  for (int i = 0; i < q.size(); ++i) h -= xlog2x(q(i));
  return std::max(h, 0.0);
}

double binary_entropy(double t) {
  if (t < -kProbNegTol || t > 1.0 + kProbNegTol) {
    throw Error(ErrorKind::OutOfRange,
                "argument " + fmt(t) + " outside [0, 1]");
  }
  double u = std::clamp(t, 0.0, 1.0);
  return std::max(-xlog2x(u) - xlog2x(1.0 - u), 0.0);
}

double von_neumann(const DensityMatrix& rho) {
  RealVector s = spectrum(rho);
  double h = 0.0;
  for (int i = 0; i < s.size(); ++i) h -= xlog2x(s(i));
  return std::max(h, 0.0);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "state dims " + std::to_string(rho.dim()) + " and " +
                    std::to_string(sigma.dim()) + " differ");
  }
  Eigensystem es = eigensystem(sigma);
  double cross = 0.0;
  for (int j = 0; j < sigma.dim(); ++j) {
    Vector v = es.vectors.col(j);
    double weight =
        std::max((v.adjoint() * rho.matrix() * v)(0, 0).real(), 0.0);
    double s = std::max(es.values(j), 0.0);
    if (s < kSupportEigTol) {
      if (weight > kSupportWeightTol) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    cross += weight * std::log2(s);
  }
  return -von_neumann(rho) - cross;
}

bool majorizes(const RealVector& x, const RealVector& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "vector lengths " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()) + " differ");
  }
  RealVector a = validated_distribution(x);
  RealVector b = validated_distribution(y);
  std::sort(a.data(), a.data() + a.size(), std::greater<double>());
  std::sort(b.data(), b.data() + b.size(), std::greater<double>());
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (int k = 0; k < a.size(); ++k) {
    sum_a += a(k);
    sum_b += b(k);
    if (sum_b > sum_a + 1e-12) return false;
  }
  return true;
}

}  // namespace qcoh
