#pragma once

#include "spinscatter/kinematics.hpp"
#include "spinscatter/linalg.hpp"

namespace spinscatter {

/// Normalization of the plane-wave spinors.
///   mass: N' = sqrt((E+m)/4m), so <k;h|gamma5|k;h> = h p/2m.
///   unit: N' = sqrt((E+m)/2E), so u^dag u = 1.
enum class SpinorNorm { mass, unit };

/// Plane-wave spinor that is a Sigma.axis eigenstate: components are
/// N' (chi, h p/(E+m) chi) with sigma.axis chi = h chi.
struct DiracSpinor {
  Spinor4 components{};
  Vec3 axis;
  int eigenvalue = +1;
  double p = 0.0;
  double mass = 0.0;
  double norm_const = 0.0;
};

/// Pauli eigenspinor of sigma.n with the stated sign. Phase convention:
/// chi_plus = (cos(beta/2), e^{i phi} sin(beta/2)) with (beta, phi) the
/// polar/azimuth angles of n; chi_minus orthogonal with its first nonzero
/// component real and positive.
Spinor2 pauli_eigenspinor(const Vec3& n, int sign);

/// Pauli eigenspinor whose phase is aligned to the frame: the spinor at
/// k_hat is rotated to the requested axis by the geodesic rotation
/// (about l_hat for in-plane axes). This phase alignment is what makes
/// amplitudes built from different axes comparable without stray phases.
Spinor2 frame_eigenspinor(const ScatteringFrame& frame, const Vec3& axis,
                          int sign);

/// Builds the 4-spinor for momentum p*axis with the frame-aligned Pauli
/// part. Requires mass > 0 (the default normalization diverges otherwise).
DiracSpinor axis_spinor(const ScatteringFrame& frame, const Vec3& axis,
                        int sign, SpinorNorm norm = SpinorNorm::mass);

enum class FrameAxis { total, transfer };  // k_hat / q_hat

struct ExpansionCoefficients {
  cplx plus{};
  cplx minus{};
};

/// Expands the spin (Pauli) part of a state on the eigenspinors of the
/// chosen frame axis; |plus|^2 + |minus|^2 = 1.
ExpansionCoefficients expand_in_axis(const ScatteringFrame& frame,
                                     const DiracSpinor& state,
                                     FrameAxis target);

double norm_const(SpinorNorm norm, double p, double mass);

}  // namespace spinscatter
