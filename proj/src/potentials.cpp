#include "spinscatter/potentials.hpp"

#include <cmath>
#include <utility>

#include "spinscatter/errors.hpp"

namespace spinscatter {

PotentialSpec PotentialSpec::aharonov_bohm(double flux, double charge) {
  PotentialSpec spec;
  spec.kind_ = Kind::aharonov_bohm;
  spec.flux_ = flux;
  spec.charge_ = charge;
  return spec;
}

PotentialSpec PotentialSpec::dipole(const Vec3& moment, double charge) {
  PotentialSpec spec;
  spec.kind_ = Kind::dipole;
  spec.moment_ = moment;
  spec.charge_ = charge;
  return spec;
}

PotentialSpec PotentialSpec::fixed_direction(const Vec3c& a_hat,
                                             double charge) {
  if (std::abs(a_hat.norm() - 1.0) > 1e-12) {
    throw_error(Errc::non_unit_vector,
                "fixed direction must have unit sum of squared moduli");
  }
  PotentialSpec spec;
  spec.kind_ = Kind::fixed_direction;
  spec.direction_ = a_hat;
  spec.charge_ = charge;
  return spec;
}

PotentialSpec PotentialSpec::gauge_shifted(const PotentialSpec& base,
                                           GaugeFunction f) {
  PotentialSpec spec;
  spec.kind_ = Kind::gauge_shifted;
  spec.charge_ = base.charge();
  spec.base_ = std::make_shared<PotentialSpec>(base);
  spec.gauge_ = std::move(f);
  return spec;
}

Vec3c fourier_amplitude(const PotentialSpec& spec, const Vec3& q) {
  const double q2 = q.norm2();
  if (!(q2 > 1e-300)) {
    throw_error(Errc::zero_momentum_transfer,
                "Fourier transform undefined at q = 0");
  }
  switch (spec.kind()) {
    case PotentialSpec::Kind::aharonov_bohm: {
      if (std::abs(q.z) > 1e-9) {
        throw_error(Errc::out_of_plane,
                    "Aharonov-Bohm transfer must lie in the plane normal to "
                    "the flux line");
      }
      const double f = -spec.flux() / q2;
      return {cplx{f * q.y}, cplx{-f * q.x}, cplx{0.0}};
    }
    case PotentialSpec::Kind::dipole: {
      const Vec3 m = cross(spec.moment(), q);
      return {cplx{m.x / q2}, cplx{m.y / q2}, cplx{m.z / q2}};
    }
    case PotentialSpec::Kind::fixed_direction:
      return spec.direction_;
    case PotentialSpec::Kind::gauge_shifted: {
      const Vec3c base = fourier_amplitude(*spec.base_, q);
      const cplx f = spec.gauge_(q);
      return base + f * to_complex(q);
    }
  }
  throw_error(Errc::invalid_argument, "unknown potential kind");
}

DirectionMagnitude direction_and_magnitude(const PotentialSpec& spec,
                                           const Vec3& q) {
  const Vec3c a = fourier_amplitude(spec, q);
  const double mag = a.norm();
  if (mag < 1e-300) {
    throw_error(Errc::null_potential_at_q,
                "A(q) vanishes; direction undefined and amplitude zero");
  }
  return {mag, (1.0 / cplx{mag}) * a};
}

}  // namespace spinscatter
