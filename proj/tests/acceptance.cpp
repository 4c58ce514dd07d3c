// Acceptance gate: one self-contained check per advertised guarantee, one
// PASS/FAIL line each, exit code = number of failures.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "qcoh/channels.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/core.hpp"
#include "qcoh/correlations.hpp"
#include "qcoh/duality.hpp"
#include "qcoh/entropy.hpp"
#include "qcoh/rng.hpp"
#include "qcoh/state.hpp"
#include "qcoh/thermo.hpp"

using namespace qcoh;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

std::string secs(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f s", v);
  return buf;
}

struct Criterion {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

// 1. The coherence split closes on 1000 seeded pairs in under 10 seconds.
Criterion split_identity() {
  Criterion c;
  const double t0 = now_seconds();
  Rng rng(1001);
  const int dims[] = {2, 3, 4, 8};
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    int d = dims[trial % 4];
    int rank = 1 + static_cast<int>(rng.uniform() * d);
    auto rho = random_density_matrix(rng, d, rank);
    auto basis = haar_random_unitary(d, rng.next_u64());
    auto split = coherence_split(rho, basis);
    double dev = std::abs(split.total - split.basis_part - split.residual);
    if (dev > worst) worst = dev;
  }
  double elapsed = now_seconds() - t0;
  if (worst > 1e-9) c.fail("worst split deviation " + sci(worst));
  if (elapsed >= 10.0) c.fail("took " + secs(elapsed));
  c.detail = "worst deviation " + sci(worst) + ", " + secs(elapsed);
  return c;
}

// 2. The balanced-basis residual at x = 0.4 is 0.1187 for every z.
Criterion balanced_residual_anchor() {
  Criterion c;
  auto x_basis = fourier_basis(2);
  for (int j = -200; j <= 200; ++j) {
    double z = 0.005 * j;
    if (0.4 * 0.4 + 0.2 * 0.2 + z * z > 1.0 + 1e-12) continue;
    auto split = coherence_split(bloch_to_qubit({0.4, 0.2, z}), x_basis);
    if (std::abs(split.residual - 0.1187) > 5e-4) {
      c.fail("residual " + sci(split.residual) + " at z = " + std::to_string(z));
    }
  }
  return c;
}

// 3. Dephasing in two mutually unbiased bases flattens every state.
Criterion unbiased_collapse() {
  Criterion c;
  Rng rng(3003);
  const int dims[] = {2, 3, 5};
  for (int trial = 0; trial < 200; ++trial) {
    int d = dims[trial % 3];
    int rank = 1 + static_cast<int>(rng.uniform() * d);
    auto rho = random_density_matrix(rng, d, rank);
    auto report = chain_split(rho, {Basis::computational(d), fourier_basis(d)});
    double dev = max_abs(report.states.back().matrix() -
                         Matrix::Identity(d, d) / static_cast<double>(d));
    if (dev > 1e-10) c.fail("final state off I/d by " + sci(dev));
    if (report.terminal_residual > 1e-9) {
      c.fail("terminal residual " + sci(report.terminal_residual));
    }
  }
  return c;
}

// 4. Wave + particle + entanglement closes to log2 d on 500 pairs, with the
// entanglement leg computed through purification and partial trace.
Criterion budget_identity() {
  Criterion c;
  Rng rng(4004);
  const int dims[] = {2, 3, 4, 8};
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    int d = dims[trial % 4];
    int rank = 1 + static_cast<int>(rng.uniform() * d);
    auto rho = random_density_matrix(rng, d, rank);
    auto basis = haar_random_unitary(d, rng.next_u64());
    auto budget = duality_budget(rho, basis);
    double dev = std::abs(budget.wave + budget.particle +
                          budget.entanglement - budget.total);
    if (dev > worst) worst = dev;
  }
  if (worst > 1e-9) c.fail("worst budget deviation " + sci(worst));
  c.detail = "worst deviation " + sci(worst);
  return c;
}

// 5. The correlation ladder holds across the parameter grid and takes the
// value (2, 1, 1, 1) at the maximally entangled corner.
Criterion correlation_ladder() {
  Criterion c;
  int valid = 0;
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      for (int k = 0; k <= 8; ++k) {
        BellDiagonalParams p{-1.0 + 0.25 * i, -1.0 + 0.25 * j,
                             -1.0 + 0.25 * k};
        CorrelationReport rep;
        try {
          rep = bd_report(p);
        } catch (const Error&) {
          continue;
        }
        ++valid;
        if (rep.bi_coherence < rep.comp_coherence - 1e-9 ||
            rep.comp_coherence < rep.discord - 1e-9 ||
            rep.discord < rep.entanglement - 1e-9 || !rep.hierarchy_ok) {
          c.fail("ladder violated at (" + std::to_string(p.c1) + ", " +
                 std::to_string(p.c2) + ", " + std::to_string(p.c3) + ")");
        }
      }
    }
  }
  if (valid < 100) c.fail("only " + std::to_string(valid) + " valid points");

  auto bell = bd_report({1.0, -1.0, 1.0});
  if (std::abs(bell.bi_coherence - 2.0) > 1e-9 ||
      std::abs(bell.comp_coherence - 1.0) > 1e-9 ||
      std::abs(bell.discord - 1.0) > 1e-9 ||
      std::abs(bell.entanglement - 1.0) > 1e-9) {
    c.fail("maximally entangled corner off (2, 1, 1, 1)");
  }
  if (c.passed) c.detail = std::to_string(valid) + " valid grid points";
  return c;
}

// 6. The measured-discord grid search reproduces the closed form on 50
// sampled parameter points in under 60 seconds.
Criterion discord_search_agreement() {
  Criterion c;
  const double t0 = now_seconds();
  Rng rng(6006);
  double worst = 0.0;
  int accepted = 0;
  while (accepted < 50) {
    BellDiagonalParams p{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0,
                         2.0 * rng.uniform() - 1.0};
    DensityMatrix rho = DensityMatrix::maximally_mixed(4);
    try {
      rho = bell_diagonal(p);
    } catch (const Error&) {
      continue;
    }
    ++accepted;
    double searched = discord_oracle(rho, 60);
    double closed = bd_report(p).discord;
    double dev = std::abs(searched - closed);
    if (dev > worst) worst = dev;
  }
  double elapsed = now_seconds() - t0;
  if (worst > 1e-3) c.fail("worst discord gap " + sci(worst));
  if (elapsed >= 60.0) c.fail("took " + secs(elapsed));
  c.detail = "worst gap " + sci(worst) + ", " + secs(elapsed);
  return c;
}

// 7. No sampled global rotation beats the basis-independent coherence, and
// the constructed rotation attains it.
Criterion rotation_supremum() {
  Criterion c;
  Rng rng(7007);
  const int dims[] = {2, 3, 4};
  for (int trial = 0; trial < 100; ++trial) {
    int d = dims[trial % 3];
    int rank = 1 + static_cast<int>(rng.uniform() * d);
    auto rho = random_density_matrix(rng, d, rank);
    double ceiling = bi_coherence(rho);
    auto [supremum, sample_max] = max_coherence_over_unitaries(
        rho, Basis::computational(d), 200, rng.next_u64());
    if (sample_max > ceiling + 1e-9) {
      c.fail("a sampled rotation exceeded the ceiling by " +
             sci(sample_max - ceiling));
    }
    if (std::abs(supremum - ceiling) > 1e-9) {
      c.fail("constructed rotation off the ceiling by " +
             sci(supremum - ceiling));
    }
  }
  return c;
}

// 8. The noise-sweep columns close, the entanglement column is symmetric
// with zero endpoints, and the wave column moves more than the particle one.
Criterion sweep_properties() {
  Criterion c;
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  auto rows = bitflip_duality_sweep(grid, Basis::computational(2));
  if (rows.size() != 101) {
    c.fail("expected 101 rows, got " + std::to_string(rows.size()));
    return c;
  }
  double wave_min = rows[0].wave, wave_max = rows[0].wave;
  double part_min = rows[0].particle, part_max = rows[0].particle;
  for (int i = 0; i <= 100; ++i) {
    const auto& row = rows[i];
    if (std::abs(row.wave + row.particle + row.entanglement - 1.0) > 1e-9) {
      c.fail("budget open at p = " + std::to_string(row.p));
    }
    if (std::abs(row.entanglement - rows[100 - i].entanglement) > 1e-9) {
      c.fail("entanglement asymmetric at p = " + std::to_string(row.p));
    }
    wave_min = std::min(wave_min, row.wave);
    wave_max = std::max(wave_max, row.wave);
    part_min = std::min(part_min, row.particle);
    part_max = std::max(part_max, row.particle);
  }
  if (rows.front().entanglement > 1e-9 || rows.back().entanglement > 1e-9) {
    c.fail("entanglement does not vanish at the endpoints");
  }
  if (wave_max - wave_min <= part_max - part_min) {
    c.fail("wave range " + std::to_string(wave_max - wave_min) +
           " does not exceed particle range " +
           std::to_string(part_max - part_min));
  }
  return c;
}

// 9. Pinching in an energy eigenbasis never lowers the entropy, and the
// destroyed coherence equals the drop in extractable work.
Criterion pinch_and_work() {
  Criterion c;
  Rng rng(9009);
  const int dims[] = {2, 3, 4};
  const double unit_temp = 1.0 / kBoltzmann;  // per-bit scale exactly one
  for (int trial = 0; trial < 300; ++trial) {
    int d = dims[trial % 3];
    auto rho = random_density_matrix(rng, d, d);
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = cxd(rng.normal(), rng.normal());
    auto h = Hamiltonian::from_matrix((g + g.adjoint()) / 2.0);
    auto pinched = hamiltonian_pinch(rho, h);
    if (von_neumann(pinched) < von_neumann(rho) - 1e-9) {
      c.fail("entropy dropped under pinching");
    }
    double work_gap = extractable_work(rho, unit_temp).value -
                      extractable_work(pinched, unit_temp).value;
    double converted = coherence_to_work(rho, h, unit_temp).value;
    if (std::abs(converted - work_gap) > 1e-9) {
      c.fail("work identity off by " + sci(converted - work_gap));
    }
  }
  return c;
}

// 10. The end-to-end self-verification binary passes under two seeds.
Criterion end_to_end_verification() {
  Criterion c;
  for (const char* seed : {"42", "20260821"}) {
    std::string command = std::string(QCOH_CLI_PATH) + " verify --seed " +
                          seed + " > /dev/null 2>&1";
    int status = std::system(command.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != 0) {
      c.fail(std::string("seed ") + seed + " exited with " +
             std::to_string(code));
    }
  }
  return c;
}

struct Entry {
  const char* label;
  Criterion (*run)();
};

}  // namespace

int main() {
  const Entry entries[] = {
      {"coherence split identity on 1000 seeded pairs", split_identity},
      {"balanced-basis residual anchor 0.1187", balanced_residual_anchor},
      {"mutually unbiased collapse to I/d", unbiased_collapse},
      {"wave-particle-entanglement budget on 500 pairs", budget_identity},
      {"correlation ladder across the parameter grid", correlation_ladder},
      {"discord grid search matches the closed form", discord_search_agreement},
      {"global-rotation supremum attained, never exceeded", rotation_supremum},
      {"noise-sweep budget, symmetry, and range ordering", sweep_properties},
      {"pinching monotonicity and work identity", pinch_and_work},
      {"self-verification passes under two seeds", end_to_end_verification},
  };

  int failures = 0;
  int index = 0;
  for (const auto& entry : entries) {
    ++index;
    Criterion result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result.fail(std::string("unexpected error: ") + e.what());
    }
    if (!result.passed) ++failures;
    std::printf("criterion %2d: %s — %s%s%s\n", index,
                result.passed ? "PASS" : "FAIL", entry.label,
                result.detail.empty() ? "" : " — ", result.detail.c_str());
  }
  if (failures > 0) {
    std::printf("%d of 10 criteria failed\n", failures);
  } else {
    std::printf("all 10 criteria passed\n");
  }
  return failures;
}
