#pragma once

#include <string>
#include <utility>

#include "qcoh/core.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

// Boltzmann constant, SI exact, in J/K.
inline constexpr double kBoltzmann = 1.380649e-23;

/// Hermitian energy observable. The optional unit tag is carried through
/// from input files for display; all numerics treat entries as joules.
class Hamiltonian {
 public:
  static Hamiltonian from_matrix(const Matrix& entries,
                                 std::string energy_unit = "J");

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }
  const std::string& energy_unit() const { return unit_; }

 private:
  Hamiltonian(Matrix m, std::string unit)
      : mat_(std::move(m)), unit_(std::move(unit)) {}

  Matrix mat_;
  std::string unit_;
};

/// Unit convention for work values. BitsKT multiplies the coherence (in
/// bits) by k_B T directly; Joules additionally applies the ln 2 factor that
/// converts bits to nats, giving physical work k_B T ln2 per bit.
enum class WorkUnits { BitsKT, Joules };

struct WorkResult {
  double value = 0.0;
  WorkUnits units = WorkUnits::BitsKT;
};

/// Work extractable from rho with a bath at temperature T (kelvin):
/// proportional to the basis-independent coherence log2 d - S(rho).
WorkResult extractable_work(const DensityMatrix& rho, double temperature,
                            WorkUnits units = WorkUnits::BitsKT);

/// Pinching in the energy eigenbasis: sum_k P_k rho P_k over the eigenspace
/// projectors of h, with eigenspaces grouped at relative tolerance 1e-9.
/// Trace-preserving and entropy-non-decreasing; acts as the identity when
/// [rho, h] = 0 and in particular when h is fully degenerate.
DensityMatrix hamiltonian_pinch(const DensityMatrix& rho, const Hamiltonian& h);

/// Work obtainable from the coherence the pinch destroys:
/// proportional to C(rho) - C(pinched) = S(pinched) - S(rho) >= 0.
WorkResult coherence_to_work(const DensityMatrix& rho, const Hamiltonian& h,
                             double temperature,
                             WorkUnits units = WorkUnits::BitsKT);

/// Asymptotic pure-qubit yield of rho: per-copy rate C(rho) and the
/// real-valued total n * C(rho) for n copies.
std::pair<double, double> distillable_pure_count(const DensityMatrix& rho,
                                                 long n);

}  // namespace qcoh
