#pragma once

#include "spinscatter/linalg.hpp"

namespace spinscatter {

using Momentum3 = Vec3;

/// Intrinsic scattering frame built from the incident and outgoing momenta.
///
/// k_hat points along the total momentum p_out + p_in, q_hat along the
/// momentum transfer p_out - p_in, and l_hat = k_hat x q_hat completes the
/// right-handed triad. Elastic kinematics throughout: |p_in| = |p_out| = p,
/// energy = sqrt(p^2 + mass^2). theta is the angle between p_in and p_out,
/// so dot(p_in_hat, k_hat) = cos(theta/2).
struct ScatteringFrame {
  Vec3 k_hat;
  Vec3 q_hat;
  Vec3 l_hat;
  Vec3 p_in_hat;
  Vec3 p_out_hat;
  double theta = 0.0;
  double p = 0.0;
  double mass = 0.0;
  double energy = 0.0;

  /// Momentum transfer vector p_out - p_in = 2 p sin(theta/2) q_hat.
  Vec3 momentum_transfer() const {
    return (2.0 * p * std::sin(0.5 * theta)) * q_hat;
  }
};

/// Projections of a (possibly complex) unit direction on the frame axes:
/// on_l = a.l_hat, on_k = a.k_hat, on_q = a.q_hat. For a real unit
/// direction the three squares sum to one.
struct GeometricCoefficients {
  cplx on_l{};
  cplx on_k{};
  cplx on_q{};
};

/// Coefficients expressing the incident/outgoing helicity operators in the
/// frame generators: Sigma.p_in_hat  = on_k * Sigma_k - on_q * Sigma_q and
/// Sigma.p_out_hat = on_k * Sigma_k + on_q * Sigma_q.
struct HelicityAxisDecomposition {
  double on_k = 0.0;  // cos(theta/2)
  double on_q = 0.0;  // sin(theta/2)
};

inline constexpr double kMinScatteringAngle = 1e-6;
inline constexpr double kElasticRelTolerance = 1e-9;

/// Builds the intrinsic frame. Throws InelasticInput when the momentum
/// magnitudes differ beyond the relative tolerance and DegenerateGeometry
/// when theta falls outside (kMinScatteringAngle, pi - kMinScatteringAngle),
/// where one of the axes loses meaning.
ScatteringFrame frame_from_momenta(const Momentum3& p_in,
                                   const Momentum3& p_out, double mass);

/// Decomposes a unit direction (sum |a_i|^2 = 1) on the frame axes.
GeometricCoefficients decompose(const ScatteringFrame& frame,
                                const Vec3c& a_hat);

HelicityAxisDecomposition helicity_axis_decomposition(
    const ScatteringFrame& frame);

}  // namespace spinscatter
