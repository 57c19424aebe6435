#pragma once

#include <cmath>

#include "spinscatter/clifford.hpp"
#include "spinscatter/kinematics.hpp"
#include "spinscatter/linalg.hpp"
#include "spinscatter/sampling.hpp"

namespace testutil {

using spinscatter::cplx;
using spinscatter::ScatteringFrame;
using spinscatter::Vec3;

/// Frame with p_in along +x and p_out rotated counterclockwise in the x-y
/// plane (the intrinsic normal l_hat comes out along +z).
inline ScatteringFrame planar_frame_ccw(double p, double mass, double theta) {
  return spinscatter::frame_from_momenta(
      {p, 0.0, 0.0}, {p * std::cos(theta), p * std::sin(theta), 0.0}, mass);
}

/// Clockwise variant (l_hat along -z); the geometry the flux-line examples
/// with positive flux use to make the potential direction equal +k_hat.
inline ScatteringFrame planar_frame_cw(double p, double mass, double theta) {
  return spinscatter::frame_from_momenta(
      {p, 0.0, 0.0}, {p * std::cos(theta), -p * std::sin(theta), 0.0}, mass);
}

/// Sigma . v for an arbitrary (not necessarily unit) real vector.
inline spinscatter::Mat4 sigma_dot_unnormalized(const Vec3& v) {
  using spinscatter::sigma_matrix;
  return cplx{v.x} * sigma_matrix(1) + cplx{v.y} * sigma_matrix(2) +
         cplx{v.z} * sigma_matrix(3);
}

}  // namespace testutil
