#pragma once

#include <cstdint>
#include <random>

#include "qcoh/core.hpp"

namespace qcoh {

// Deterministic random source. The algorithm is fixed so results are
// reproducible bit-for-bit per seed on any conforming platform:
//   - engine: std::mt19937_64 seeded with splitmix64(seed)
//   - uniform doubles: top 53 bits of the engine output, in [0, 1)
//   - normals: Box-Muller on uniform doubles (pairs, second value cached)
//   - child streams: child(k) reseeds with splitmix64(seed + GOLDEN * (k + 1))
// Distributions from <random> are never used; their output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed)
      : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  // Independent stream for subtask k of this generator's seed.
  Rng child(std::uint64_t k) const {
    return Rng(splitmix64(seed_ + kGolden * (k + 1)));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in (0, 1]; safe as a log argument.
  double uniform_pos() { return 1.0 - uniform(); }

  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform_pos();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  // Standard complex Gaussian, unit variance overall.
  cxd complex_normal() {
    double re = normal();
    double im = normal();
    return cxd(re * M_SQRT1_2, im * M_SQRT1_2);
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace qcoh
