#include "spinscatter/amplitude.hpp"

#include <cmath>

#include "spinscatter/clifford.hpp"
#include "spinscatter/errors.hpp"

namespace spinscatter {

namespace {

void require_helicity(int h) {
  if (h != 1 && h != -1) {
    throw_error(Errc::invalid_argument, "helicity must be +1 or -1");
  }
}

FrameSummary summarize(const ScatteringFrame& frame) {
  return {frame.theta, frame.p, frame.mass, frame.energy};
}

/// 2 N'^2 p/(E+m), the magnitude of the gamma5 expectation in an axis state.
double element_prefactor(const ScatteringFrame& frame, SpinorNorm norm) {
  const double np = norm_const(norm, frame.p, frame.mass);
  return 2.0 * np * np * frame.p / (frame.energy + frame.mass);
}

double tolerance_scale(double potential_magnitude, double prefactor) {
  return std::max(1.0, potential_magnitude * prefactor);
}

}  // namespace

AmplitudeResult oracle_element(const ScatteringFrame& frame,
                               const PotentialSpec& spec, int h_in, int h_out,
                               SpinorNorm norm) {
  require_helicity(h_in);
  require_helicity(h_out);
  const auto [magnitude, a_hat] =
      direction_and_magnitude(spec, frame.momentum_transfer());
  const DiracSpinor u_in = axis_spinor(frame, frame.p_in_hat, h_in, norm);
  const DiracSpinor u_out = axis_spinor(frame, frame.p_out_hat, h_out, norm);
  const Mat4 op = gamma5() * sigma_dot(a_hat);

  AmplitudeResult result;
  result.value = inner(u_out.components, op.apply(u_in.components));
  result.method = Method::oracle;
  result.coefficients = decompose(frame, a_hat);
  result.h_in = h_in;
  result.h_out = h_out;
  result.frame = summarize(frame);
  result.potential_magnitude = magnitude;
  result.scale = tolerance_scale(magnitude, element_prefactor(frame, norm));
  return result;
}

AmplitudeResult reduced_element(const ScatteringFrame& frame,
                                const PotentialSpec& spec, int h,
                                SpinorNorm norm) {
  require_helicity(h);
  const auto [magnitude, a_hat] =
      direction_and_magnitude(spec, frame.momentum_transfer());
  const GeometricCoefficients coeff = decompose(frame, a_hat);
  const double prefactor = element_prefactor(frame, norm);
  const cplx h_c{static_cast<double>(h)};

  AmplitudeResult result;
  result.value = (coeff.on_k + h_c * imag_unit * coeff.on_l *
                                   std::sin(0.5 * frame.theta)) *
                 prefactor;
  result.method = Method::reduced;
  result.coefficients = coeff;
  result.h_in = h;
  result.h_out = h;
  result.frame = summarize(frame);
  result.potential_magnitude = magnitude;
  result.scale = tolerance_scale(magnitude, prefactor);
  return result;
}

SMatrixElement s_matrix_element(const ScatteringFrame& frame,
                                const PotentialSpec& spec, int h_in, int h_out,
                                double normalization, SpinorNorm norm) {
  const AmplitudeResult m = oracle_element(frame, spec, h_in, h_out, norm);
  const double prefactor = -2.0 * M_PI * spec.charge() * normalization *
                           normalization * m.potential_magnitude;
  return {prefactor * m.value};
}

double spin_averaged_m2(const ScatteringFrame& frame,
                        const PotentialSpec& spec, SpinorNorm norm) {
  double sum = 0.0;
  for (const int h_in : {+1, -1})
    for (const int h_out : {+1, -1})
      sum += std::norm(oracle_element(frame, spec, h_in, h_out, norm).value);
  return 0.5 * sum;
}

CrossSectionPoint ab_cross_section(const ScatteringFrame& frame, double flux,
                                   double charge, SpinorNorm norm) {
  const PotentialSpec spec = PotentialSpec::aharonov_bohm(flux, charge);
  const double avg = spin_averaged_m2(frame, spec, norm);
  const double sin2 = std::pow(std::sin(0.5 * frame.theta), 2);
  const double e2f2 = charge * charge * flux * flux;

  CrossSectionPoint point;
  point.theta = frame.theta;
  point.spin_averaged_m2 = avg;
  point.dsigma_dtheta =
      e2f2 / (2.0 * M_PI * std::pow(frame.p, 3) * sin2) * avg;
  point.dsigma_dtheta_reference = e2f2 / (8.0 * M_PI * frame.p * sin2);
  return point;
}

cplx k_basis_element(const ScatteringFrame& frame, int h, SpinorNorm norm) {
  require_helicity(h);
  const DiracSpinor u = axis_spinor(frame, frame.k_hat, h, norm);
  const cplx value = inner(u.components, gamma5().apply(u.components));

  // Cross-check: the helicity-basis sandwich of gamma5 Sigma_k equals the
  // same number times h.
  const DiracSpinor u_in = axis_spinor(frame, frame.p_in_hat, h, norm);
  const DiracSpinor u_out = axis_spinor(frame, frame.p_out_hat, h, norm);
  const Mat4 op = gamma5() * sigma_dot(frame.k_hat);
  const cplx sandwich = inner(u_out.components, op.apply(u_in.components));
  const double scale = std::max(1.0, std::abs(value));
  if (std::abs(sandwich - cplx{static_cast<double>(h)} * value) >
      1e-10 * scale) {
    throw_error(Errc::invalid_argument,
                "internal consistency failure in k-basis element");
  }
  return value;
}

}  // namespace spinscatter
