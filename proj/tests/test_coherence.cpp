#include <doctest.h>

#include <cmath>
#include <vector>

#include "qcoh/coherence.hpp"
#include "qcoh/core.hpp"
#include "qcoh/entropy.hpp"
#include "qcoh/state.hpp"

using namespace qcoh;

namespace {

DensityMatrix plus_state() {
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return DensityMatrix::from_matrix(m);
}

}  // namespace

TEST_CASE("dephasing keeps only the diagonal of the measured basis") {
  auto rho = bloch_to_qubit({0.4, 0.2, 0.3});
  auto comp = Basis::computational(2);
  auto v = qubit_to_bloch(dephase(rho, comp));
  CHECK(std::abs(v.x) < 1e-12);
  CHECK(std::abs(v.y) < 1e-12);
  CHECK(v.z == doctest::Approx(0.3).epsilon(1e-12));

  // Idempotent: dephasing twice changes nothing.
  auto once = dephase(rho, comp);
  auto twice = dephase(once, comp);
  CHECK(max_abs(once.matrix() - twice.matrix()) < 1e-14);

  // The flat state is a fixed point in every basis.
  auto flat = DensityMatrix::maximally_mixed(3);
  auto b = haar_random_unitary(3, 4);
  CHECK(max_abs(dephase(flat, b).matrix() - flat.matrix()) < 1e-12);

  CHECK_THROWS_AS(dephase(rho, Basis::computational(3)), Error);
}

TEST_CASE("basis-independent coherence of reference states") {
  CHECK(bi_coherence(DensityMatrix::maximally_mixed(4)) ==
        doctest::Approx(0.0).epsilon(1e-12));

  Matrix pure = Matrix::Zero(4, 4);
  pure(0, 0) = 1.0;
  CHECK(bi_coherence(DensityMatrix::from_matrix(pure)) ==
        doctest::Approx(2.0).epsilon(1e-12));

  // Bloch length sqrt(0.2): 1 - h((1 + sqrt(0.2)) / 2).
  CHECK(bi_coherence(bloch_to_qubit({0.4, 0.2, 0.0})) ==
        doctest::Approx(0.14951037489783836).epsilon(1e-12));

  // Never negative, even for nearly flat spectra.
  auto nearly_flat = DensityMatrix::maximally_mixed(2);
  CHECK(bi_coherence(nearly_flat) >= 0.0);
}

TEST_CASE("relative entropy of coherence vanishes exactly in an eigenbasis") {
  Rng rng(29);
  for (int d : {2, 3, 4}) {
    auto rho = random_density_matrix(rng, d, d);
    auto eigen_basis = Basis::from_matrix(eigensystem(rho).vectors);
    CHECK(rel_ent_coherence(rho, eigen_basis) == doctest::Approx(0.0).epsilon(1e-9));
  }
  CHECK(rel_ent_coherence(plus_state(), Basis::computational(2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coherence splits into a basis part plus a residual") {
  Matrix ground = Matrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  auto split = coherence_split(DensityMatrix::from_matrix(ground),
                               Basis::computational(2));
  CHECK(split.total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(split.basis_part == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(split.residual == doctest::Approx(1.0).epsilon(1e-12));

  Rng rng(31);
  for (int d : {2, 3, 4, 8}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto rho = random_density_matrix(rng, d, 1 + static_cast<int>(rng.uniform() * d));
      auto basis = haar_random_unitary(d, static_cast<uint64_t>(trial + 100 * d));
      auto s = coherence_split(rho, basis);
      CHECK(std::abs(s.total - s.basis_part - s.residual) < 1e-9);
      CHECK(s.basis_part >= 0.0);
      CHECK(s.residual >= 0.0);
    }
  }
}

TEST_CASE("residual after a balanced qubit measurement is basis-limited") {
  // Dephasing (0.4, 0.2, z) in the x basis leaves Bloch vector (0.4, 0, 0)
  // regardless of z, so the residual is constant: 1 - h(0.7).
  auto x_basis = fourier_basis(2);
  for (double z : {-0.8, -0.3, 0.0, 0.25, 0.7}) {
    if (0.4 * 0.4 + 0.2 * 0.2 + z * z > 1.0) continue;
    auto split = coherence_split(bloch_to_qubit({0.4, 0.2, z}), x_basis);
    CHECK(split.residual ==
          doctest::Approx(0.1187091007693073).epsilon(1e-9));
  }
}

TEST_CASE("chain decomposition telescopes across bases") {
  auto comp = Basis::computational(2);
  auto four = fourier_basis(2);

  // Same basis twice: the second step contributes nothing.
  auto rho = bloch_to_qubit({0.4, 0.2, 0.3});
  auto rep = chain_split(rho, {comp, comp});
  CHECK(rep.step_coherences.size() == 2);
  CHECK(rep.step_coherences[1] == doctest::Approx(0.0).epsilon(1e-12));

  // A qubit dephased in two mutually unbiased bases lands on the flat state.
  auto two = chain_split(rho, {comp, four});
  CHECK(two.terminal_residual == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(max_abs(two.states.back().matrix() - Matrix::Identity(2, 2) / 2.0) <
        1e-10);

  // Telescoping: total equals the sum of steps plus the terminal residual.
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    auto state = random_density_matrix(rng, 3, 3);
    std::vector<Basis> chain;
    for (int k = 0; k < 5; ++k)
      chain.push_back(haar_random_unitary(3, static_cast<uint64_t>(7 * trial + k)));
    auto report = chain_split(state, chain);
    double sum = report.terminal_residual;
    for (double c : report.step_coherences) sum += c;
    CHECK(std::abs(sum - report.total) < 1e-8);
    // Residuals never increase along the chain.
    for (std::size_t i = 1; i < report.residuals.size(); ++i)
      CHECK(report.residuals[i] <= report.residuals[i - 1] + 1e-9);
  }

  CHECK_THROWS_AS(chain_split(rho, {}), Error);
}

TEST_CASE("fourier basis is mutually unbiased with the computational one") {
  auto f2 = fourier_basis(2);
  CHECK(std::abs(f2.unitary()(0, 0).real() - M_SQRT1_2) < 1e-12);
  CHECK(std::abs(f2.unitary()(1, 1).real() + M_SQRT1_2) < 1e-12);

  for (int d : {2, 3, 4, 5, 7}) {
    CHECK(is_mub(Basis::computational(d), fourier_basis(d)));
    CHECK(!is_mub(fourier_basis(d), fourier_basis(d)));
  }

  // A slightly rotated copy of the computational basis is not unbiased.
  double c = std::cos(0.5), s = std::sin(0.5);
  Matrix r(2, 2);
  r << c, -s, s, c;
  CHECK(!is_mub(Basis::computational(2), Basis::from_matrix(r)));
}

TEST_CASE("only the flat state is incoherent in every basis") {
  CHECK(is_bi_incoherent(DensityMatrix::maximally_mixed(3)));
  CHECK(!is_bi_incoherent(bloch_to_qubit({0.0, 0.0, 0.3})));

  // A diagonal non-flat state is incoherent in its own basis but still
  // carries basis-independent coherence.
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 0.7;
  diag(1, 1) = 0.3;
  auto rho = DensityMatrix::from_matrix(diag);
  CHECK(rel_ent_coherence(rho, Basis::computational(2)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bi_coherence(rho) > 0.1);
}

TEST_CASE("unitary orbit maximum equals the basis-independent coherence") {
  Rng rng(47);
  for (int d : {2, 3, 4}) {
    auto rho = random_density_matrix(rng, d, d);
    double c = bi_coherence(rho);
    auto [supremum, sample_max] = max_coherence_over_unitaries(
        rho, Basis::computational(d), 200, 1234);
    CHECK(std::abs(supremum - c) < 1e-9);
    CHECK(sample_max <= c + 1e-9);
    CHECK(sample_max >= 0.0);
  }

  // The flat state has an empty orbit: everything is zero.
  auto [flat_sup, flat_best] = max_coherence_over_unitaries(
      DensityMatrix::maximally_mixed(3), Basis::computational(3), 50, 9);
  CHECK(flat_sup == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(flat_best == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("maximally coherent mixed states saturate the basis coherence") {
  RealVector spec(2);
  spec << 0.7, 0.3;
  auto comp = Basis::computational(2);
  auto rho = max_coherent_mixed_state(spec, comp);
  auto split = coherence_split(rho, comp);
  CHECK(split.basis_part ==
        doctest::Approx(0.1187091007693073).epsilon(1e-9));
  CHECK(split.residual == doctest::Approx(0.0).epsilon(1e-9));

  RealVector pure_spec(4);
  pure_spec << 1.0, 0.0, 0.0, 0.0;
  auto pure = max_coherent_mixed_state(pure_spec, Basis::computational(4));
  CHECK(rel_ent_coherence(pure, Basis::computational(4)) ==
        doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("closed-form qubit split matches the general machinery") {
  auto north = qubit_split_closed_form({0.0, 0.0, 1.0}, BlochAxis::Z);
  CHECK(north.total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(north.basis_part == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(north.residual == doctest::Approx(1.0).epsilon(1e-12));

  for (double x : {-0.6, 0.0, 0.4}) {
    for (double y : {-0.3, 0.2}) {
      for (double z : {-0.5, 0.0, 0.55}) {
        if (x * x + y * y + z * z > 1.0) continue;
        auto rho = bloch_to_qubit({x, y, z});
        auto zc = qubit_split_closed_form({x, y, z}, BlochAxis::Z);
        auto zs = coherence_split(rho, Basis::computational(2));
        CHECK(std::abs(zc.total - zs.total) < 1e-9);
        CHECK(std::abs(zc.basis_part - zs.basis_part) < 1e-9);
        CHECK(std::abs(zc.residual - zs.residual) < 1e-9);

        auto xc = qubit_split_closed_form({x, y, z}, BlochAxis::X);
        auto xs = coherence_split(rho, fourier_basis(2));
        CHECK(std::abs(xc.basis_part - xs.basis_part) < 1e-9);
        CHECK(std::abs(xc.residual - xs.residual) < 1e-9);
      }
    }
  }

  CHECK_THROWS_AS(qubit_split_closed_form({1.2, 0.0, 0.0}, BlochAxis::Z),
                  Error);
}
