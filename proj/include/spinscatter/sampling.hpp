#pragma once

#include <cstdint>
#include <random>

#include "spinscatter/kinematics.hpp"
#include "spinscatter/linalg.hpp"

namespace spinscatter {

/// Deterministic helpers for seeded randomized checks. mt19937_64 output is
/// fully specified, so a fixed seed reproduces the same stream everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Log-uniform over [lo, hi], for scale-spanning momenta and masses.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  int sign() { return uniform() < 0.5 ? -1 : +1; }

  Vec3 unit_vector();

  /// Unit vector orthogonal to n.
  Vec3 unit_perpendicular(const Vec3& n);

  /// Complex direction with unit sum of squared moduli.
  Vec3c unit_complex_vector();

  /// Random elastic frame: arbitrary orientation, theta in (theta_lo,
  /// theta_hi), p and mass log-uniform over [0.1, 10].
  ScatteringFrame frame(double theta_lo = 1e-3, double theta_hi = M_PI - 1e-3);

  /// Frame whose momenta lie in the x-y plane (normal-incidence geometry,
  /// as required by the Aharonov-Bohm potential).
  ScatteringFrame planar_frame(double theta_lo = 1e-3,
                               double theta_hi = M_PI - 1e-3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace spinscatter
