#include "spinscatter/spinors.hpp"

#include <algorithm>
#include <cmath>

#include "spinscatter/clifford.hpp"
#include "spinscatter/errors.hpp"

namespace spinscatter {

namespace {

void require_unit(const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12) {
    throw_error(Errc::non_unit_vector, "axis must be a unit vector");
  }
}

}  // namespace

Spinor2 pauli_eigenspinor(const Vec3& n, int sign) {
  require_unit(n);
  if (sign != 1 && sign != -1) {
    throw_error(Errc::invalid_argument, "eigenvalue sign must be +1 or -1");
  }
  const double beta = std::acos(std::clamp(n.z, -1.0, 1.0));
  const double phi = std::atan2(n.y, n.x);
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const cplx phase = std::polar(1.0, phi);
  if (sign > 0) return {cplx{c}, phase * s};
  Spinor2 chi{cplx{s}, -phase * c};
  if (chi[0] == cplx{}) {
    // n along +z: make the surviving component real positive.
    chi = {cplx{0.0}, cplx{1.0}};
  }
  return chi;
}

Spinor2 frame_eigenspinor(const ScatteringFrame& frame, const Vec3& axis,
                          int sign) {
  require_unit(axis);
  const Spinor2 seed = pauli_eigenspinor(frame.k_hat, sign);
  const Vec3 n = cross(frame.k_hat, axis);
  const double s = n.norm();
  const double angle = std::atan2(s, dot(frame.k_hat, axis));
  if (s < 1e-14) {
    if (angle < 1e-7) return seed;  // axis == k_hat
    // axis == -k_hat: rotate through pi about l_hat.
    return spin_rotation2(frame.l_hat, M_PI).apply(seed);
  }
  return spin_rotation2((1.0 / s) * n, angle).apply(seed);
}

double norm_const(SpinorNorm norm, double p, double mass) {
  const double energy = std::sqrt(p * p + mass * mass);
  switch (norm) {
    case SpinorNorm::mass:
      return std::sqrt((energy + mass) / (4.0 * mass));
    case SpinorNorm::unit:
      return std::sqrt((energy + mass) / (2.0 * energy));
  }
  throw_error(Errc::invalid_argument, "unknown spinor normalization");
}

DiracSpinor axis_spinor(const ScatteringFrame& frame, const Vec3& axis,
                        int sign, SpinorNorm norm) {
  if (!(frame.mass > 0.0)) {
    throw_error(Errc::non_positive_mass,
                "plane-wave spinors require mass > 0");
  }
  const Spinor2 chi = frame_eigenspinor(frame, axis, sign);
  const double np = norm_const(norm, frame.p, frame.mass);
  const double kappa = frame.p / (frame.energy + frame.mass);
  DiracSpinor u;
  // Lower block is sigma.(p axis)/(E+m) chi = sign * kappa * chi.
  const double lower = sign * kappa;
  u.components = {np * chi[0], np * chi[1], np * lower * chi[0],
                  np * lower * chi[1]};
  u.axis = axis;
  u.eigenvalue = sign;
  u.p = frame.p;
  u.mass = frame.mass;
  u.norm_const = np;
  return u;
}

ExpansionCoefficients expand_in_axis(const ScatteringFrame& frame,
                                     const DiracSpinor& state,
                                     FrameAxis target) {
  const Vec3& axis =
      (target == FrameAxis::total) ? frame.k_hat : frame.q_hat;
  const Spinor2 chi_state{state.components[0] / state.norm_const,
                          state.components[1] / state.norm_const};
  const Spinor2 plus = frame_eigenspinor(frame, axis, +1);
  const Spinor2 minus = frame_eigenspinor(frame, axis, -1);
  return {inner(plus, chi_state), inner(minus, chi_state)};
}

}  // namespace spinscatter
