#include "qcoh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "qcoh/channels.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/correlations.hpp"
#include "qcoh/duality.hpp"
#include "qcoh/entropy.hpp"
#include "qcoh/state.hpp"
#include "qcoh/thermo.hpp"

namespace qcoh {

namespace {

// Accumulates per-check deviations against their tolerances; keeps the worst
// deviation and the first failure description.
struct Checker {
  SuiteResult out;

  void record(double deviation, double tol, const std::string& what) {
    ++out.checks;
    out.worst_error = std::max(out.worst_error, deviation);
    if (deviation > tol && out.passed) {
      out.passed = false;
      std::ostringstream os;
      os.precision(6);
      os << what << ": deviation " << deviation << " exceeds " << tol;
      out.detail = os.str();
    }
  }

  void expect(bool condition, const std::string& what) {
    ++out.checks;
    if (!condition && out.passed) {
      out.passed = false;
      out.detail = what;
    }
  }
};

int scaled(int base, int trials) {
  long n = static_cast<long>(base) * trials / 200;
  return static_cast<int>(std::max(1L, n));
}

DensityMatrix sample_state(Rng& rng, int d) {
  int rank = 1 + static_cast<int>(rng.uniform() * d);
  return random_density_matrix(rng, d, std::min(rank, d));
}

Basis sample_basis(Rng& rng, int d) {
  return Basis::from_matrix(haar_unitary_matrix(rng, d));
}

RealVector sample_distribution(Rng& rng, int d) {
  RealVector p(d);
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    p(i) = -std::log(rng.uniform_pos());
    sum += p(i);
  }
  return p / sum;
}

PureState sample_pure(Rng& rng, int d) {
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return PureState::from_amplitudes(v / v.norm());
}

std::vector<int> sample_permutation(Rng& rng, int d) {
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  for (int i = d - 1; i > 0; --i) {
    int j = static_cast<int>(rng.uniform() * (i + 1));
    std::swap(perm[i], perm[std::min(j, i)]);
  }
  return perm;
}

Matrix permuted_columns(const Matrix& m, const std::vector<int>& perm) {
  Matrix out(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) out.col(j) = m.col(perm[j]);
  return out;
}

const double kInf = std::numeric_limits<double>::infinity();

// --- qstate ---------------------------------------------------------------

SuiteResult purify_round_trip(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4};
  int n = scaled(200, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    DensityMatrix rho = sample_state(rng, d);
    DensityMatrix back =
        partial_trace(purify(rho).projector(), d, d, Keep::A);
    check.record(max_abs(back.matrix() - rho.matrix()), 1e-9,
                 "purification round trip");
  }
  return check.out;
}

SuiteResult spectrum_unitary_invariance(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4};
  int n = scaled(200, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    DensityMatrix rho = sample_state(rng, d);
    Matrix u = haar_unitary_matrix(rng, d);
    DensityMatrix moved =
        DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
    RealVector a = spectrum(rho);
    RealVector b = spectrum(moved);
    check.record((a - b).cwiseAbs().maxCoeff(), 1e-9,
                 "spectrum under conjugation");
  }
  return check.out;
}

SuiteResult bloch_round_trip(Rng&, int) {
  Checker check;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      for (int k = 0; k < 20; ++k) {
        BlochVector v{-1.0 + 2.0 * i / 19, -1.0 + 2.0 * j / 19,
                      -1.0 + 2.0 * k / 19};
        if (v.squared_norm() > 1.0) continue;
        BlochVector w = qubit_to_bloch(bloch_to_qubit(v));
        double dev = std::max({std::abs(w.x - v.x), std::abs(w.y - v.y),
                               std::abs(w.z - v.z)});
        check.record(dev, 1e-12, "Bloch round trip");
      }
    }
  }
  return check.out;
}

// --- entropy --------------------------------------------------------------

SuiteResult schur_concavity(Rng& rng, int trials) {
  Checker check;
  int n = scaled(500, trials);
  for (int i = 0; i < n; ++i) {
    int d = 2 + i % 5;
    RealVector x = sample_distribution(rng, d);
    // Averaging permutations of x yields a vector majorized by x.
    RealVector y = RealVector::Zero(d);
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<int> perm = sample_permutation(rng, d);
      for (int t = 0; t < d; ++t) y(t) += x(perm[t]) / 3.0;
    }
    check.expect(majorizes(x, y), "averaged vector must be majorized");
    check.record(std::max(shannon(x) - shannon(y), 0.0), 1e-9,
                 "entropy against majorization order");
  }
  return check.out;
}

SuiteResult relative_entropy_to_uniform(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4};
  int n = scaled(200, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    DensityMatrix rho = sample_state(rng, d);
    double lhs = relative_entropy(rho, DensityMatrix::maximally_mixed(d));
    double rhs = std::log2(static_cast<double>(d)) - von_neumann(rho);
    check.record(std::abs(lhs - rhs), 1e-9, "distance to I/d");
  }
  return check.out;
}

SuiteResult uniform_majorized(Rng& rng, int trials) {
  Checker check;
  int n = scaled(500, trials);
  for (int i = 0; i < n; ++i) {
    int d = 2 + i % 5;
    RealVector p = sample_distribution(rng, d);
    RealVector uniform = RealVector::Constant(d, 1.0 / d);
    check.expect(majorizes(p, uniform),
                 "every distribution majorizes the uniform one");
  }
  return check.out;
}

// --- coherence ------------------------------------------------------------

SuiteResult split_identity(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4, 8};
  int n = scaled(1000, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 4];
    DensityMatrix rho = sample_state(rng, d);
    Basis b = sample_basis(rng, d);
    CoherenceSplit split = coherence_split(rho, b);
    check.record(
        std::abs(split.total - split.basis_part - split.residual), 1e-9,
        "coherence split sum");
  }
  return check.out;
}

SuiteResult coherence_ordering(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4, 8};
  int n = scaled(1000, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 4];
    DensityMatrix rho = sample_state(rng, d);
    Basis b = sample_basis(rng, d);
    double c = bi_coherence(rho);
    double cb = rel_ent_coherence(rho, b);
    check.record(std::max({cb - c, -cb, 0.0}), 1e-9,
                 "0 <= basis coherence <= total coherence");
  }
  return check.out;
}

SuiteResult mub_collapse(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 5};
  int n = scaled(200, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    DensityMatrix rho = sample_state(rng, d);
    DensityMatrix out =
        dephase(dephase(rho, Basis::computational(d)), fourier_basis(d));
    check.record(max_abs(out.matrix() - Matrix::Identity(d, d) / d), 1e-10,
                 "two dephasings in unbiased bases");
    check.record(bi_coherence(out), 1e-9, "terminal residual");
  }
  return check.out;
}

SuiteResult rel_ent_grid_oracle(Rng& rng, int trials) {
  Checker check;
  int n = scaled(20, trials);
  for (int i = 0; i < n; ++i) {
    DensityMatrix rho = sample_state(rng, 2);
    Basis b = sample_basis(rng, 2);
    double direct = rel_ent_coherence(rho, b);
    double best = kInf;
    for (int k = 0; k <= 1000; ++k) {
      double t = k / 1000.0;
      RealVector diag(2);
      diag << t, 1.0 - t;
      DensityMatrix sigma = DensityMatrix::from_matrix(
          b.unitary() * Matrix(diag.cast<cxd>().asDiagonal()) *
          b.unitary().adjoint());
      best = std::min(best, relative_entropy(rho, sigma));
    }
    check.record(std::abs(direct - best), 2e-3,
                 "grid-minimized distance to diagonal states");
  }
  return check.out;
}

SuiteResult chain_monotonicity(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4};
  int n = scaled(200, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    DensityMatrix rho = sample_state(rng, d);
    int len = 2 + i % 3;
    std::vector<Basis> bases;
    for (int k = 0; k < len; ++k) bases.push_back(sample_basis(rng, d));
    ChainReport report = chain_split(rho, bases);
    double rise = 0.0;
    double prev = report.total;
    for (double r : report.residuals) {
      rise = std::max(rise, r - prev);
      prev = r;
    }
    check.record(rise, 1e-9, "residual monotonicity");
    double sum = report.terminal_residual;
    for (double s : report.step_coherences) sum += s;
    check.record(std::abs(sum - report.total), 1e-9, "chain telescoping sum");
  }
  return check.out;
}

SuiteResult commutant_witness(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3};
  int n = scaled(10, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 2];
    DensityMatrix rho = sample_state(rng, d);
    bool mixed = is_bi_incoherent(rho, 1e-9);
    bool witnessed = false;
    double max_mixed_offdiag = 0.0;
    for (int k = 0; k < 50; ++k) {
      Matrix u = haar_unitary_matrix(rng, d);
      Matrix moved = u.adjoint() * rho.matrix() * u;
      Matrix offdiag = moved - Matrix(moved.diagonal().asDiagonal());
      double mass = max_abs(offdiag);
      if (mass > 1e-6) witnessed = true;
      max_mixed_offdiag = std::max(max_mixed_offdiag, mass);
    }
    if (mixed) {
      check.record(max_mixed_offdiag, 1e-12,
                   "I/d must stay diagonal in every basis");
    } else {
      check.expect(witnessed,
                   "some sampled basis must expose off-diagonal mass");
    }
    // The maximally mixed state itself, explicitly.
    DensityMatrix iso = DensityMatrix::maximally_mixed(d);
    Matrix u = haar_unitary_matrix(rng, d);
    Matrix moved = u.adjoint() * iso.matrix() * u;
    check.record(max_abs(moved - Matrix(moved.diagonal().asDiagonal())),
                 1e-12, "I/d must stay diagonal in every basis");
  }
  return check.out;
}

// --- duality --------------------------------------------------------------

SuiteResult budget_identity(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4};
  int n = scaled(500, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    DensityMatrix rho = sample_state(rng, d);
    Basis b = sample_basis(rng, d);
    DualityBudget budget = duality_budget(rho, b);
    check.record(std::abs(budget.wave + budget.particle +
                          budget.entanglement - budget.total),
                 1e-9, "three-way budget sum");
  }
  return check.out;
}

SuiteResult particle_criteria(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4};
  int n = scaled(200, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    Basis b = sample_basis(rng, d);
    DensityMatrix rho = sample_state(rng, d);
    Basis shuffled = Basis::from_matrix(
        permuted_columns(b.unitary(), sample_permutation(rng, d)));
    check.record(
        std::abs(particle_measure(rho, b) - particle_measure(rho, shuffled)),
        1e-12, "permutation invariance of the particle measure");

    DensityMatrix rho2 = sample_state(rng, d);
    DensityMatrix rho3 = sample_state(rng, d);
    RealVector w = sample_distribution(rng, 3);
    DensityMatrix mix = DensityMatrix::from_matrix(w(0) * rho.matrix() +
                                                   w(1) * rho2.matrix() +
                                                   w(2) * rho3.matrix());
    double mixed = particle_measure(mix, b);
    double convex = w(0) * particle_measure(rho, b) +
                    w(1) * particle_measure(rho2, b) +
                    w(2) * particle_measure(rho3, b);
    check.record(std::max(mixed - convex, 0.0), 1e-9,
                 "convexity of the particle measure");
  }
  return check.out;
}

SuiteResult wave_criteria(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4};
  int n = scaled(200, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    Basis b = sample_basis(rng, d);
    DensityMatrix rho = sample_state(rng, d);
    Basis shuffled = Basis::from_matrix(
        permuted_columns(b.unitary(), sample_permutation(rng, d)));
    check.record(
        std::abs(wave_measure(rho, b) - wave_measure(rho, shuffled)), 1e-12,
        "relabeling invariance of the wave measure");

    DensityMatrix rho2 = sample_state(rng, d);
    DensityMatrix rho3 = sample_state(rng, d);
    RealVector w = sample_distribution(rng, 3);
    DensityMatrix mix = DensityMatrix::from_matrix(w(0) * rho.matrix() +
                                                   w(1) * rho2.matrix() +
                                                   w(2) * rho3.matrix());
    double mixed = wave_measure(mix, b);
    double convex = w(0) * wave_measure(rho, b) +
                    w(1) * wave_measure(rho2, b) +
                    w(2) * wave_measure(rho3, b);
    check.record(std::max(mixed - convex, 0.0), 1e-9,
                 "convexity of the wave measure");
  }
  return check.out;
}

SuiteResult purification_subadditivity(Rng& rng, int trials) {
  Checker check;
  const int dims[][3] = {{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}};
  int n = scaled(200, trials);
  for (int i = 0; i < n; ++i) {
    const int* d = dims[i % 4];
    PureState psi = sample_pure(rng, d[0] * d[1] * d[2]);
    DensityMatrix full = psi.projector();
    DensityMatrix rho_ab =
        partial_trace(full, d[0] * d[1], d[2], Keep::A);
    DensityMatrix rho_a = partial_trace(rho_ab, d[0], d[1], Keep::A);
    DensityMatrix rho_b = partial_trace(rho_ab, d[0], d[1], Keep::B);
    double defect =
        von_neumann(rho_ab) - von_neumann(rho_a) - von_neumann(rho_b);
    check.record(std::max(defect, 0.0), 1e-9, "entropy subadditivity");
  }
  return check.out;
}

// --- correlations ---------------------------------------------------------

std::vector<BellDiagonalParams> valid_correlation_grid() {
  std::vector<BellDiagonalParams> points;
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      for (int k = 0; k <= 8; ++k) {
        BellDiagonalParams c{-1.0 + 0.25 * i, -1.0 + 0.25 * j,
                             -1.0 + 0.25 * k};
        try {
          bell_diagonal(c);
        } catch (const Error&) {
          continue;
        }
        points.push_back(c);
      }
    }
  }
  return points;
}

SuiteResult closed_form_consistency(Rng&, int) {
  Checker check;
  Basis computational = Basis::computational(4);
  for (const BellDiagonalParams& c : valid_correlation_grid()) {
    CorrelationReport report = bd_report(c);
    double direct = rel_ent_coherence(bell_diagonal(c), computational);
    check.record(std::abs(report.comp_coherence - direct), 1e-9,
                 "closed form against direct dephasing");
  }
  return check.out;
}

SuiteResult discord_oracle_agreement(Rng& rng, int trials) {
  Checker check;
  int n = scaled(50, trials);
  for (int i = 0; i < n; ++i) {
    BellDiagonalParams c;
    DensityMatrix rho = DensityMatrix::maximally_mixed(4);
    for (;;) {
      c = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0,
           2.0 * rng.uniform() - 1.0};
      try {
        rho = bell_diagonal(c);
        break;
      } catch (const Error&) {
      }
    }
    double closed = bd_report(c).discord;
    double searched = discord_oracle(rho, 60);
    check.record(std::max(closed - searched, 0.0), 1e-9,
                 "grid search must not undercut the closed form");
    check.record(std::abs(searched - closed), 1e-3,
                 "grid search against closed form");
  }
  return check.out;
}

SuiteResult entanglement_continuity(Rng&, int) {
  Checker check;
  for (double eps : {0.0, 1e-9, 1e-6}) {
    for (double sign : {1.0, -1.0}) {
      // c = (s, -s, s) has top weight (1 + 3s)/4, so s = 1/3 puts it at 1/2.
      double s = (4.0 * (0.5 + sign * eps) - 1.0) / 3.0;
      CorrelationReport report = bd_report({s, -s, s});
      check.record(report.entanglement, 1e-9,
                   "entanglement near the separability threshold");
    }
  }
  return check.out;
}

SuiteResult hierarchy_grid(Rng&, int) {
  Checker check;
  for (const BellDiagonalParams& c : valid_correlation_grid()) {
    CorrelationReport r = bd_report(c);
    double slack = std::max({r.comp_coherence - r.bi_coherence,
                             r.discord - r.comp_coherence,
                             r.entanglement - r.discord, 0.0});
    check.record(slack, 1e-9, "four-rung correlation ordering");
    check.expect(r.hierarchy_ok, "ordering flag must be set");
  }
  return check.out;
}

// --- channels -------------------------------------------------------------

SuiteResult channel_preservation(Rng& rng, int trials) {
  Checker check;
  int n = scaled(200, trials);
  for (int i = 0; i < n; ++i) {
    DensityMatrix rho = sample_state(rng, 2);
    KrausChannel ch = bit_flip(rng.uniform());
    Matrix raw = Matrix::Zero(2, 2);
    for (const Matrix& k : ch.operators()) {
      raw += k * rho.matrix() * k.adjoint();
    }
    check.record(std::abs(raw.trace().real() - 1.0), 1e-10,
                 "trace preservation");
    check.record(max_abs(raw - raw.adjoint()), 1e-10,
                 "Hermiticity preservation");
  }
  return check.out;
}

SuiteResult sweep_shape(Rng&, int) {
  Checker check;
  std::vector<double> grid(101);
  for (int i = 0; i <= 100; ++i) grid[i] = i / 100.0;
  std::vector<DualityRow> rows =
      bitflip_duality_sweep(grid, Basis::computational(2));
  double wave_min = kInf, wave_max = -kInf;
  double particle_min = kInf, particle_max = -kInf;
  for (int i = 0; i <= 100; ++i) {
    wave_min = std::min(wave_min, rows[i].wave);
    wave_max = std::max(wave_max, rows[i].wave);
    particle_min = std::min(particle_min, rows[i].particle);
    particle_max = std::max(particle_max, rows[i].particle);
    if (i < 50) {
      check.record(std::max(rows[i + 1].wave - rows[i].wave, 0.0), 1e-12,
                   "wave must fall toward the midpoint");
    }
    if (i >= 50 && i < 100) {
      check.record(std::max(rows[i].wave - rows[i + 1].wave, 0.0), 1e-12,
                   "wave must rise past the midpoint");
    }
    check.record(std::max(rows[i].entanglement - rows[50].entanglement, 0.0),
                 1e-12, "entanglement must peak at the midpoint");
  }
  check.expect(wave_max - wave_min > particle_max - particle_min,
               "wave must vary more than particle across the sweep");
  return check.out;
}

// --- thermo ---------------------------------------------------------------

Hamiltonian sample_hamiltonian(Rng& rng, int d) {
  Matrix g(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  return Hamiltonian::from_matrix(0.5 * (g + g.adjoint()));
}

SuiteResult pinch_monotonicity(Rng& rng, int trials) {
  Checker check;
  const int dims[] = {2, 3, 4};
  int n = scaled(300, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    DensityMatrix rho = sample_state(rng, d);
    Hamiltonian h = sample_hamiltonian(rng, d);
    double defect =
        von_neumann(rho) - von_neumann(hamiltonian_pinch(rho, h));
    check.record(std::max(defect, 0.0), 1e-9,
                 "pinching must not decrease entropy");
  }
  return check.out;
}

SuiteResult work_identity(Rng& rng, int trials) {
  Checker check;
  // At T = 1/k_B the bits_kT scale factor is exactly 1, so the work values
  // are the coherence differences themselves and the 1e-9 comparison bites.
  double temperature = 1.0 / kBoltzmann;
  const int dims[] = {2, 3, 4};
  int n = scaled(300, trials);
  for (int i = 0; i < n; ++i) {
    int d = dims[i % 3];
    DensityMatrix rho = sample_state(rng, d);
    Hamiltonian h = sample_hamiltonian(rng, d);
    DensityMatrix pinched = hamiltonian_pinch(rho, h);
    double via_pinch = coherence_to_work(rho, h, temperature).value;
    double via_coherence = extractable_work(rho, temperature).value -
                           extractable_work(pinched, temperature).value;
    double via_entropy = von_neumann(pinched) - von_neumann(rho);
    check.record(std::abs(via_pinch - via_coherence), 1e-9,
                 "work from coherence difference");
    check.record(std::abs(via_pinch - via_entropy), 1e-9,
                 "work from entropy difference");
  }
  return check.out;
}

}  // namespace

std::vector<Suite> standard_suites() {
  return {
      {"qstate.purify_round_trip", purify_round_trip},
      {"qstate.spectrum_unitary_invariance", spectrum_unitary_invariance},
      {"qstate.bloch_round_trip", bloch_round_trip},
      {"entropy.schur_concavity", schur_concavity},
      {"entropy.relative_entropy_to_uniform", relative_entropy_to_uniform},
      {"entropy.uniform_majorized", uniform_majorized},
      {"coherence.split_identity", split_identity},
      {"coherence.ordering", coherence_ordering},
      {"coherence.mub_collapse", mub_collapse},
      {"coherence.rel_ent_grid_oracle", rel_ent_grid_oracle},
      {"coherence.chain_monotonicity", chain_monotonicity},
      {"coherence.commutant_witness", commutant_witness},
      {"duality.budget_identity", budget_identity},
      {"duality.particle_criteria", particle_criteria},
      {"duality.wave_criteria", wave_criteria},
      {"duality.purification_subadditivity", purification_subadditivity},
      {"correlations.closed_form_consistency", closed_form_consistency},
      {"correlations.discord_oracle_agreement", discord_oracle_agreement},
      {"correlations.entanglement_continuity", entanglement_continuity},
      {"correlations.hierarchy_grid", hierarchy_grid},
      {"channels.preservation", channel_preservation},
      {"channels.sweep_shape", sweep_shape},
      {"thermo.pinch_monotonicity", pinch_monotonicity},
      {"thermo.work_identity", work_identity},
  };
}

VerifySummary run_suites(const std::vector<Suite>& suites, std::uint64_t seed,
                         int trials) {
  VerifySummary summary;
  summary.seed = seed;
  summary.trials = trials;
  summary.all_passed = true;
  Rng root(seed);
  for (std::size_t i = 0; i < suites.size(); ++i) {
    Rng stream = root.child(i);
    SuiteResult result;
    try {
      result = suites[i].run(stream, trials);
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("unexpected error: ") + e.what();
    }
    summary.names.push_back(suites[i].name);
    summary.results.push_back(result);
    summary.all_passed = summary.all_passed && result.passed;
  }
  return summary;
}

nlohmann::ordered_json summary_to_json(const VerifySummary& summary) {
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < summary.results.size(); ++i) {
    const SuiteResult& r = summary.results[i];
    suites.push_back({{"name", summary.names[i]},
                      {"passed", r.passed},
                      {"checks", r.checks},
                      {"worst_error", r.worst_error},
                      {"detail", r.detail}});
  }
  return {{"seed", summary.seed},
          {"trials", summary.trials},
          {"all_passed", summary.all_passed},
          {"suites", std::move(suites)}};
}

}  // namespace qcoh
