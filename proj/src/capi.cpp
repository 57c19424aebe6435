#include "spinscatter.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "spinscatter/amplitude.hpp"
#include "spinscatter/errors.hpp"
#include "spinscatter/kinematics.hpp"
#include "spinscatter/potentials.hpp"
#include "spinscatter/selfcheck.hpp"

namespace ss = spinscatter;

struct ssc_frame {
  ss::ScatteringFrame frame;
};

struct ssc_potential {
  ss::PotentialSpec spec;
};

namespace {

thread_local std::string g_last_error;

ssc_status status_from(ss::Errc code) {
  switch (code) {
    case ss::Errc::invalid_argument:
      return SSC_ERROR_INVALID_ARGUMENT;
    case ss::Errc::non_unit_vector:
      return SSC_ERROR_NON_UNIT_VECTOR;
    case ss::Errc::inelastic_input:
      return SSC_ERROR_INELASTIC_INPUT;
    case ss::Errc::degenerate_geometry:
      return SSC_ERROR_DEGENERATE_GEOMETRY;
    case ss::Errc::non_positive_mass:
      return SSC_ERROR_NON_POSITIVE_MASS;
    case ss::Errc::zero_momentum_transfer:
      return SSC_ERROR_ZERO_MOMENTUM_TRANSFER;
    case ss::Errc::out_of_plane:
      return SSC_ERROR_OUT_OF_PLANE;
    case ss::Errc::null_potential_at_q:
      return SSC_ERROR_NULL_POTENTIAL;
  }
  return SSC_ERROR_INTERNAL;
}

/// Runs the body, translating exceptions to status codes.
template <typename Fn>
ssc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ss::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SSC_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SSC_ERROR_INTERNAL;
  }
}

ssc_status require(bool ok, const char* message) {
  if (ok) return SSC_OK;
  g_last_error = message;
  return SSC_ERROR_INVALID_ARGUMENT;
}

ss::Vec3 to_vec3(const double v[3]) { return {v[0], v[1], v[2]}; }

void store(const ss::Vec3& v, double out[3]) {
  out[0] = v.x;
  out[1] = v.y;
  out[2] = v.z;
}

void store(const ss::AmplitudeResult& r, ssc_amplitude* out) {
  out->value_re = r.value.real();
  out->value_im = r.value.imag();
  out->proj_l_re = r.coefficients.on_l.real();
  out->proj_l_im = r.coefficients.on_l.imag();
  out->proj_k_re = r.coefficients.on_k.real();
  out->proj_k_im = r.coefficients.on_k.imag();
  out->proj_q_re = r.coefficients.on_q.real();
  out->proj_q_im = r.coefficients.on_q.imag();
  out->potential_magnitude = r.potential_magnitude;
  out->scale = r.scale;
  out->h_in = r.h_in;
  out->h_out = r.h_out;
  out->method = r.method == ss::Method::oracle ? SSC_METHOD_ORACLE
                                               : SSC_METHOD_REDUCED;
}

}  // namespace

extern "C" {

const char* ssc_version(void) { return "1.0.0"; }

const char* ssc_status_name(ssc_status status) {
  switch (status) {
    case SSC_OK:
      return "Ok";
    case SSC_ERROR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case SSC_ERROR_NON_UNIT_VECTOR:
      return "NonUnitVector";
    case SSC_ERROR_INELASTIC_INPUT:
      return "InelasticInput";
    case SSC_ERROR_DEGENERATE_GEOMETRY:
      return "DegenerateGeometry";
    case SSC_ERROR_NON_POSITIVE_MASS:
      return "NonPositiveMass";
    case SSC_ERROR_ZERO_MOMENTUM_TRANSFER:
      return "ZeroMomentumTransfer";
    case SSC_ERROR_OUT_OF_PLANE:
      return "OutOfPlane";
    case SSC_ERROR_NULL_POTENTIAL:
      return "NullPotentialAtQ";
    case SSC_ERROR_INTERNAL:
      return "InternalError";
  }
  return "UnknownStatus";
}

const char* ssc_last_error_message(void) { return g_last_error.c_str(); }

ssc_status ssc_frame_create(const double p_in[3], const double p_out[3],
                            double mass, ssc_frame** out) {
  if (auto st = require(p_in && p_out && out, "null pointer argument"))
    return st;
  return guarded([&] {
    *out = new ssc_frame{
        ss::frame_from_momenta(to_vec3(p_in), to_vec3(p_out), mass)};
    return SSC_OK;
  });
}

void ssc_frame_destroy(ssc_frame* frame) { delete frame; }

ssc_status ssc_frame_get_info(const ssc_frame* frame, ssc_frame_info* out) {
  if (auto st = require(frame && out, "null pointer argument")) return st;
  store(frame->frame.k_hat, out->k_hat);
  store(frame->frame.q_hat, out->q_hat);
  store(frame->frame.l_hat, out->l_hat);
  store(frame->frame.p_in_hat, out->p_in_hat);
  store(frame->frame.p_out_hat, out->p_out_hat);
  out->theta = frame->frame.theta;
  out->p = frame->frame.p;
  out->mass = frame->frame.mass;
  out->energy = frame->frame.energy;
  return SSC_OK;
}

ssc_status ssc_potential_create_ab(double flux, double charge,
                                   ssc_potential** out) {
  if (auto st = require(out != nullptr, "null pointer argument")) return st;
  return guarded([&] {
    *out = new ssc_potential{ss::PotentialSpec::aharonov_bohm(flux, charge)};
    return SSC_OK;
  });
}

ssc_status ssc_potential_create_dipole(const double moment[3], double charge,
                                       ssc_potential** out) {
  if (auto st = require(moment && out, "null pointer argument")) return st;
  return guarded([&] {
    *out = new ssc_potential{
        ss::PotentialSpec::dipole(to_vec3(moment), charge)};
    return SSC_OK;
  });
}

ssc_status ssc_potential_create_fixed(const double a_hat[3], double charge,
                                      ssc_potential** out) {
  if (auto st = require(a_hat && out, "null pointer argument")) return st;
  return guarded([&] {
    *out = new ssc_potential{ss::PotentialSpec::fixed_direction(
        ss::to_complex(to_vec3(a_hat)), charge)};
    return SSC_OK;
  });
}

ssc_status ssc_potential_create_gauge_shifted(const ssc_potential* base,
                                              ssc_gauge_fn f, void* user,
                                              ssc_potential** out) {
  if (auto st = require(base && f && out, "null pointer argument")) return st;
  return guarded([&] {
    ss::GaugeFunction fn = [f, user](const ss::Vec3& q) {
      const double qv[3] = {q.x, q.y, q.z};
      double re = 0.0, im = 0.0;
      f(qv, &re, &im, user);
      return ss::cplx{re, im};
    };
    *out = new ssc_potential{
        ss::PotentialSpec::gauge_shifted(base->spec, std::move(fn))};
    return SSC_OK;
  });
}

void ssc_potential_destroy(ssc_potential* potential) { delete potential; }

ssc_status ssc_potential_fourier(const ssc_potential* potential,
                                 const double q[3], double out_re[3],
                                 double out_im[3]) {
  if (auto st = require(potential && q && out_re && out_im,
                        "null pointer argument"))
    return st;
  return guarded([&] {
    const ss::Vec3c a = ss::fourier_amplitude(potential->spec, to_vec3(q));
    out_re[0] = a.x.real();
    out_re[1] = a.y.real();
    out_re[2] = a.z.real();
    out_im[0] = a.x.imag();
    out_im[1] = a.y.imag();
    out_im[2] = a.z.imag();
    return SSC_OK;
  });
}

ssc_status ssc_amplitude_oracle(const ssc_frame* frame,
                                const ssc_potential* potential, int h_in,
                                int h_out, ssc_amplitude* out) {
  if (auto st = require(frame && potential && out, "null pointer argument"))
    return st;
  return guarded([&] {
    store(ss::oracle_element(frame->frame, potential->spec, h_in, h_out), out);
    return SSC_OK;
  });
}

ssc_status ssc_amplitude_reduced(const ssc_frame* frame,
                                 const ssc_potential* potential, int h,
                                 ssc_amplitude* out) {
  if (auto st = require(frame && potential && out, "null pointer argument"))
    return st;
  return guarded([&] {
    store(ss::reduced_element(frame->frame, potential->spec, h), out);
    return SSC_OK;
  });
}

ssc_status ssc_s_matrix_element(const ssc_frame* frame,
                                const ssc_potential* potential, int h_in,
                                int h_out, double normalization,
                                double* out_re, double* out_im) {
  if (auto st = require(frame && potential && out_re && out_im,
                        "null pointer argument"))
    return st;
  return guarded([&] {
    const ss::SMatrixElement s = ss::s_matrix_element(
        frame->frame, potential->spec, h_in, h_out, normalization);
    *out_re = s.value.real();
    *out_im = s.value.imag();
    return SSC_OK;
  });
}

ssc_status ssc_spin_averaged_m2(const ssc_frame* frame,
                                const ssc_potential* potential, double* out) {
  if (auto st = require(frame && potential && out, "null pointer argument"))
    return st;
  return guarded([&] {
    *out = ss::spin_averaged_m2(frame->frame, potential->spec);
    return SSC_OK;
  });
}

ssc_status ssc_k_basis_element(const ssc_frame* frame, int h, double* out_re,
                               double* out_im) {
  if (auto st = require(frame && out_re && out_im, "null pointer argument"))
    return st;
  return guarded([&] {
    const ss::cplx v = ss::k_basis_element(frame->frame, h);
    *out_re = v.real();
    *out_im = v.imag();
    return SSC_OK;
  });
}

ssc_status ssc_ab_cross_section(const ssc_frame* frame, double flux,
                                double charge, ssc_cross_section* out) {
  if (auto st = require(frame && out, "null pointer argument")) return st;
  return guarded([&] {
    const ss::CrossSectionPoint p =
        ss::ab_cross_section(frame->frame, flux, charge);
    out->theta = p.theta;
    out->dsigma_dtheta = p.dsigma_dtheta;
    out->spin_averaged_m2 = p.spin_averaged_m2;
    out->dsigma_dtheta_reference = p.dsigma_dtheta_reference;
    return SSC_OK;
  });
}

int ssc_invariant_count(void) {
  return static_cast<int>(ss::invariant_names().size());
}

const char* ssc_invariant_name(int index) {
  const auto& names = ss::invariant_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<std::size_t>(index)].c_str();
}

ssc_status ssc_invariant_check(uint64_t seed, int trials,
                               double* max_deviations, int count) {
  if (auto st = require(max_deviations != nullptr, "null pointer argument"))
    return st;
  if (auto st = require(count == ssc_invariant_count(),
                        "count must equal ssc_invariant_count()"))
    return st;
  return guarded([&] {
    const auto report = ss::run_invariant_suite(seed, trials);
    for (int i = 0; i < count; ++i)
      max_deviations[i] = report[static_cast<std::size_t>(i)].max_deviation;
    return SSC_OK;
  });
}

}  // extern "C"
