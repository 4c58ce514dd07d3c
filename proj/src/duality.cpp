#include "qcoh/duality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcoh/entropy.hpp"

namespace qcoh {

namespace {

double clamp_tiny(double v) { return v < 0.0 && v >= -1e-9 ? 0.0 : v; }

void require_same_dim(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimension " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_factorization(int total, int product) {
  if (total != product) {
    throw Error(ErrorKind::DimensionMismatch,
                "subsystem dims multiply to " + std::to_string(product) +
                    " but the state has dim " + std::to_string(total));
  }
}

PartyBudget party_budget(const DensityMatrix& reduced, const Basis& b,
                         double entanglement) {
  PartyBudget out;
  out.wave = wave_measure(reduced, b);
  out.particle = particle_measure(reduced, b);
  out.entanglement = clamp_tiny(entanglement);
  out.total = std::log2(static_cast<double>(reduced.dim()));
  return out;
}

// Trace out the middle factor of an A (x) B (x) C state.
DensityMatrix trace_out_middle(const DensityMatrix& rho, int dim_a, int dim_b,
                               int dim_c) {
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(dim_a * dim_c, dim_a * dim_c);
  for (int ia = 0; ia < dim_a; ++ia)
    for (int ja = 0; ja < dim_a; ++ja)
      for (int ic = 0; ic < dim_c; ++ic)
        for (int jc = 0; jc < dim_c; ++jc)
          for (int b = 0; b < dim_b; ++b)
            out(ia * dim_c + ic, ja * dim_c + jc) +=
                m((ia * dim_b + b) * dim_c + ic, (ja * dim_b + b) * dim_c + jc);
  return DensityMatrix::from_matrix(out);
}

PureState as_pure(const DensityMatrix& rho) {
  Eigensystem es = eigensystem(rho);
  if (es.values(0) < 1.0 - 1e-9) {
    std::ostringstream os;
    os.precision(6);
    os << "largest eigenvalue " << es.values(0)
       << " below 1; global state must be pure";
    throw Error(ErrorKind::NotPure, os.str());
  }
  Vector v = es.vectors.col(0);
  return PureState::from_amplitudes(v / v.norm());
}

}  // namespace

double particle_measure(const DensityMatrix& rho, const Basis& b) {
  return clamp_tiny(std::log2(static_cast<double>(rho.dim())) -
                    shannon(dephased_probabilities(rho, b)));
}

double wave_measure(const DensityMatrix& rho, const Basis& b) {
  return clamp_tiny(bi_coherence(rho) - bi_coherence(dephase(rho, b)));
}

std::pair<double, double> normalized_tradeoff(const DensityMatrix& rho,
                                              const Basis& b) {
  double c = bi_coherence(rho);
  if (c <= 1e-9) {
    throw Error(ErrorKind::MaximallyMixedInput,
                "the trade-off is undefined at I/d, where both measures "
                "vanish");
  }
  return {particle_measure(rho, b) / c, wave_measure(rho, b) / c};
}

DualityBudget duality_budget(const DensityMatrix& rho, const Basis& b) {
  require_same_dim(rho.dim(), b.dim());
  int d = rho.dim();
  DualityBudget budget;
  budget.wave = wave_measure(rho, b);
  budget.particle = particle_measure(rho, b);
  DensityMatrix reference_side =
      partial_trace(purify(rho).projector(), d, d, Keep::B);
  budget.entanglement = clamp_tiny(von_neumann(reference_side));
  budget.total = std::log2(static_cast<double>(d));
  return budget;
}

BipartiteBudgetReport multipartite_budget(const PureState& psi, int dim_a,
                                          int dim_b, const Basis& basis_a,
                                          const Basis& basis_b) {
  require_factorization(psi.dim(), dim_a * dim_b);
  require_same_dim(basis_a.dim(), dim_a);
  require_same_dim(basis_b.dim(), dim_b);
  DensityMatrix full = psi.projector();
  DensityMatrix rho_a = partial_trace(full, dim_a, dim_b, Keep::A);
  DensityMatrix rho_b = partial_trace(full, dim_a, dim_b, Keep::B);
  BipartiteBudgetReport report;
  // The cut entropy is taken from the opposite side, keeping the
  // entanglement leg independent of the side whose budget it closes.
  report.a = party_budget(rho_a, basis_a, von_neumann(rho_b));
  report.b = party_budget(rho_b, basis_b, von_neumann(rho_a));
  double sum_a = report.a.wave + report.a.particle;
  double sum_b = report.b.wave + report.b.particle;
  report.budgets_match = std::abs(sum_a - sum_b) <= 1e-9;
  return report;
}

TripartiteBudgetReport multipartite_budget(const PureState& psi, int dim_a,
                                           int dim_b, int dim_c,
                                           const Basis& basis_a,
                                           const Basis& basis_b,
                                           const Basis& basis_c) {
  require_factorization(psi.dim(), dim_a * dim_b * dim_c);
  require_same_dim(basis_a.dim(), dim_a);
  require_same_dim(basis_b.dim(), dim_b);
  require_same_dim(basis_c.dim(), dim_c);
  DensityMatrix full = psi.projector();
  DensityMatrix rho_ab = partial_trace(full, dim_a * dim_b, dim_c, Keep::A);
  DensityMatrix rho_c = partial_trace(full, dim_a * dim_b, dim_c, Keep::B);
  DensityMatrix rho_bc = partial_trace(full, dim_a, dim_b * dim_c, Keep::B);
  DensityMatrix rho_ac = trace_out_middle(full, dim_a, dim_b, dim_c);
  DensityMatrix rho_a = partial_trace(rho_ab, dim_a, dim_b, Keep::A);
  DensityMatrix rho_b = partial_trace(rho_ab, dim_a, dim_b, Keep::B);

  Basis basis_ab =
      Basis::from_matrix(kron(basis_a.unitary(), basis_b.unitary()));

  TripartiteBudgetReport report;
  report.a = party_budget(rho_a, basis_a, von_neumann(rho_bc));
  report.b = party_budget(rho_b, basis_b, von_neumann(rho_ac));
  report.c = party_budget(rho_c, basis_c, von_neumann(rho_ab));
  report.ab = party_budget(rho_ab, basis_ab, von_neumann(rho_c));

  double sum_a = report.a.wave + report.a.particle;
  double sum_b = report.b.wave + report.b.particle;
  double sum_c = report.c.wave + report.c.particle;
  double sum_ab = report.ab.wave + report.ab.particle;
  report.pair_inequality_ok = sum_a + sum_b <= sum_c + 1e-9;
  report.joint_inequality_ok = sum_ab <= sum_c + 1e-9;
  report.pair_equality = std::abs(sum_a + sum_b - sum_c) <= 1e-9;
  report.joint_equality = std::abs(sum_ab - sum_c) <= 1e-9;
  return report;
}

BipartiteBudgetReport multipartite_budget(const DensityMatrix& rho, int dim_a,
                                          int dim_b, const Basis& basis_a,
                                          const Basis& basis_b) {
  return multipartite_budget(as_pure(rho), dim_a, dim_b, basis_a, basis_b);
}

TripartiteBudgetReport multipartite_budget(const DensityMatrix& rho, int dim_a,
                                           int dim_b, int dim_c,
                                           const Basis& basis_a,
                                           const Basis& basis_b,
                                           const Basis& basis_c) {
  return multipartite_budget(as_pure(rho), dim_a, dim_b, dim_c, basis_a,
                             basis_b, basis_c);
}

}  // namespace qcoh
