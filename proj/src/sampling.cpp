#include "spinscatter/sampling.hpp"

#include <cmath>

namespace spinscatter {

Vec3 Sampler::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * M_PI);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

Vec3 Sampler::unit_perpendicular(const Vec3& n) {
  // Gram-Schmidt a random direction against n; retry the rare collinear draw.
  for (;;) {
    const Vec3 v = unit_vector();
    const Vec3 w = v - dot(v, n) * n;
    const double wn = w.norm();
    if (wn > 1e-6) return (1.0 / wn) * w;
  }
}

Vec3c Sampler::unit_complex_vector() {
  Vec3c a{cplx{uniform(-1.0, 1.0), uniform(-1.0, 1.0)},
          cplx{uniform(-1.0, 1.0), uniform(-1.0, 1.0)},
          cplx{uniform(-1.0, 1.0), uniform(-1.0, 1.0)}};
  const double n = a.norm();
  if (n < 1e-3) return unit_complex_vector();
  return (1.0 / cplx{n}) * a;
}

ScatteringFrame Sampler::frame(double theta_lo, double theta_hi) {
  const double p = log_uniform(0.1, 10.0);
  const double mass = log_uniform(0.1, 10.0);
  const double theta = uniform(theta_lo, theta_hi);
  const Vec3 in_dir = unit_vector();
  const Vec3 perp = unit_perpendicular(in_dir);
  const Vec3 out_dir = std::cos(theta) * in_dir + std::sin(theta) * perp;
  return frame_from_momenta(p * in_dir, p * out_dir, mass);
}

ScatteringFrame Sampler::planar_frame(double theta_lo, double theta_hi) {
  const double p = log_uniform(0.1, 10.0);
  const double mass = log_uniform(0.1, 10.0);
  const double theta = uniform(theta_lo, theta_hi);
  const double alpha = uniform(0.0, 2.0 * M_PI);
  const Vec3 in_dir{std::cos(alpha), std::sin(alpha), 0.0};
  const Vec3 out_dir{std::cos(alpha + theta), std::sin(alpha + theta), 0.0};
  return frame_from_momenta(p * in_dir, p * out_dir, mass);
}

}  // namespace spinscatter
