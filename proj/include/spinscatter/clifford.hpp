#pragma once

#include <string>
#include <vector>

#include "spinscatter/kinematics.hpp"
#include "spinscatter/linalg.hpp"

namespace spinscatter {

// Dirac (standard) representation throughout. gamma5 is the off-diagonal
// block form [[0, I], [I, 0]]; Sigma_i = diag(sigma_i, sigma_i);
// alpha_i = gamma5 Sigma_i. Metric signature (+,-,-,-).

Mat2 pauli_matrix(int i);  // i in 1..3

/// sigma . n for a real unit 2-direction (throws NonUnitVector).
Mat2 pauli_dot(const Vec3& n);

Mat4 gamma_matrix(int mu);  // mu in 0..3
Mat4 gamma5();
Mat4 sigma_matrix(int i);  // i in 1..3
Mat4 alpha_matrix(int i);  // gamma5 * Sigma_i

/// Sigma . n for a real unit vector; Hermitian and squares to the identity.
Mat4 sigma_dot(const Vec3& n);

/// Sigma . a for a complex direction with sum |a_i|^2 = 1 (Fourier-space
/// potential directions may carry phases; Hermiticity is not implied).
Mat4 sigma_dot(const Vec3c& a);

/// Spin rotation U(n, angle) = exp(-i angle Sigma.n / 2), evaluated in
/// closed form as cos(angle/2) I - i sin(angle/2) Sigma.n.
Mat4 spin_rotation(const Vec3& n, double angle);

/// 2x2 counterpart acting on Pauli spinors.
Mat2 spin_rotation2(const Vec3& n, double angle);

/// The three spin generators of the intrinsic frame. They close an su(2)
/// algebra: [Sigma_k, Sigma_q] = 2i Sigma_l and cyclic, pairwise
/// anticommuting, each squaring to the identity.
struct FrameGenerators {
  Mat4 sigma_k;
  Mat4 sigma_q;
  Mat4 sigma_l;
};

FrameGenerators frame_generators(const ScatteringFrame& frame);

struct IdentityDeviation {
  std::string name;
  double deviation = 0.0;
};

/// Evaluates every operator identity the frame generators must satisfy
/// (commutators, anticommutators, squares, triple products, helicity-axis
/// decompositions, the sandwich relations, rotation transport and the
/// normal-axis reduction) and reports the max entrywise deviation of each.
/// All of them vanish in exact arithmetic; callers assert < 1e-10.
std::vector<IdentityDeviation> check_algebra(const ScatteringFrame& frame);

}  // namespace spinscatter
