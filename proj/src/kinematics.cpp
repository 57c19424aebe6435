#include "spinscatter/kinematics.hpp"

#include <cmath>
#include <string>

#include "spinscatter/errors.hpp"

namespace spinscatter {

ScatteringFrame frame_from_momenta(const Momentum3& p_in,
                                   const Momentum3& p_out, double mass) {
  const double pi_mag = p_in.norm();
  const double pf_mag = p_out.norm();
  if (!(pi_mag > 0.0) || !(pf_mag > 0.0) || !std::isfinite(pi_mag) ||
      !std::isfinite(pf_mag)) {
    throw_error(Errc::invalid_argument, "momenta must be finite and nonzero");
  }
  if (std::abs(pf_mag - pi_mag) > kElasticRelTolerance * pi_mag) {
    throw_error(Errc::inelastic_input,
                "incident and outgoing momentum magnitudes differ: |p_in| = " +
                    std::to_string(pi_mag) + ", |p_out| = " +
                    std::to_string(pf_mag));
  }

  // atan2 form is stable at both small and near-backward angles.
  const Vec3 n = cross(p_in, p_out);
  const double theta = std::atan2(n.norm(), dot(p_in, p_out));
  if (theta < kMinScatteringAngle) {
    throw_error(Errc::degenerate_geometry,
                "forward scattering: momentum transfer direction undefined");
  }
  if (theta > M_PI - kMinScatteringAngle) {
    throw_error(Errc::degenerate_geometry,
                "backscattering: total momentum direction undefined");
  }

  ScatteringFrame frame;
  frame.k_hat = (p_out + p_in).normalized();
  frame.q_hat = (p_out - p_in).normalized();
  frame.l_hat = cross(frame.k_hat, frame.q_hat).normalized();
  frame.p_in_hat = (1.0 / pi_mag) * p_in;
  frame.p_out_hat = (1.0 / pf_mag) * p_out;
  frame.theta = theta;
  frame.p = 0.5 * (pi_mag + pf_mag);
  frame.mass = mass;
  frame.energy = std::sqrt(frame.p * frame.p + mass * mass);
  return frame;
}

GeometricCoefficients decompose(const ScatteringFrame& frame,
                                const Vec3c& a_hat) {
  if (std::abs(a_hat.norm() - 1.0) > 1e-12) {
    throw_error(Errc::non_unit_vector,
                "direction must be normalized to unit sum of squared moduli");
  }
  return {dot(a_hat, frame.l_hat), dot(a_hat, frame.k_hat),
          dot(a_hat, frame.q_hat)};
}

HelicityAxisDecomposition helicity_axis_decomposition(
    const ScatteringFrame& frame) {
  return {std::cos(0.5 * frame.theta), std::sin(0.5 * frame.theta)};
}

}  // namespace spinscatter
