#pragma once

#include "spinscatter/kinematics.hpp"
#include "spinscatter/linalg.hpp"
#include "spinscatter/potentials.hpp"
#include "spinscatter/spinors.hpp"

namespace spinscatter {

enum class Method { oracle, reduced };

struct FrameSummary {
  double theta = 0.0;
  double p = 0.0;
  double mass = 0.0;
  double energy = 0.0;
};

/// Spin-space matrix element u_out^dag (gamma5 Sigma.a_hat) u_in together
/// with the geometric projections of a_hat and the tolerance scale
/// max(1, |A(q)| 2 N'^2 p/(E+m)) used by the vanishing-channel checks.
struct AmplitudeResult {
  cplx value{};
  Method method = Method::oracle;
  GeometricCoefficients coefficients;
  int h_in = +1;
  int h_out = +1;
  FrameSummary frame;
  double potential_magnitude = 0.0;
  double scale = 1.0;
};

/// Ground truth: builds the two 4-spinors and evaluates the element by
/// explicit matrix-vector products. No algebraic reductions.
AmplitudeResult oracle_element(const ScatteringFrame& frame,
                               const PotentialSpec& spec, int h_in, int h_out,
                               SpinorNorm norm = SpinorNorm::mass);

/// Closed form for the helicity-conserving channel:
///   (B + h i A sin(theta/2)) * 2 N'^2 p/(E+m)
/// with (A, B) the projections of a_hat on (l_hat, k_hat). The flip channel
/// is identically zero and is not evaluated here.
AmplitudeResult reduced_element(const ScatteringFrame& frame,
                                const PotentialSpec& spec, int h,
                                SpinorNorm norm = SpinorNorm::mass);

/// First-order transition element. `value` multiplies the energy-conserving
/// delta(E_out - E_in), which is kept symbolic (units: per energy); it is
/// never folded into the number.
struct SMatrixElement {
  cplx value{};
  static constexpr const char* energy_factor = "delta(E_out - E_in)";
};

SMatrixElement s_matrix_element(const ScatteringFrame& frame,
                                const PotentialSpec& spec, int h_in, int h_out,
                                double normalization,
                                SpinorNorm norm = SpinorNorm::mass);

struct CrossSectionPoint {
  double theta = 0.0;
  double dsigma_dtheta = 0.0;
  double spin_averaged_m2 = 0.0;
  /// Textbook first-order Aharonov-Bohm value e^2 flux^2/(8 pi p sin^2);
  /// differs from dsigma_dtheta by the spinor-normalization convention
  /// (factor 1/mass^2 under the default normalization). Reported only.
  double dsigma_dtheta_reference = 0.0;
};

/// Unpolarized Aharonov-Bohm cross section at the frame's angle, evaluated
/// from oracle matrix elements over all four helicity channels.
CrossSectionPoint ab_cross_section(const ScatteringFrame& frame, double flux,
                                   double charge,
                                   SpinorNorm norm = SpinorNorm::mass);

/// (1/2) sum over helicity channels of |M|^2 for any potential.
double spin_averaged_m2(const ScatteringFrame& frame,
                        const PotentialSpec& spec,
                        SpinorNorm norm = SpinorNorm::mass);

/// <k;h|gamma5|k;h> = h 2 N'^2 p/(E+m) from explicit spinors; also checks
/// that the helicity-basis sandwich of gamma5 Sigma_k reproduces it.
cplx k_basis_element(const ScatteringFrame& frame, int h,
                     SpinorNorm norm = SpinorNorm::mass);

}  // namespace spinscatter
