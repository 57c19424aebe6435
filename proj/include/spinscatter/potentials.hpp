#pragma once

#include <functional>
#include <memory>

#include "spinscatter/linalg.hpp"

namespace spinscatter {

/// Scalar gauge function f(q); the shifted transform is A(q) + q f(q).
using GaugeFunction = std::function<cplx(const Vec3& q)>;

/// A static vector potential described by its Fourier transform A(q).
///
/// aharonov_bohm: flux line along z, A(q) = -flux (q_y, -q_x, 0)/q^2,
///   defined for momentum transfers in the plane normal to the line.
/// dipole: A(q) = (moment x q)/q^2 (transform fixed up to a constant).
/// fixed_direction: A(q) = a_hat, a unit vector independent of q.
/// gauge_shifted: base transform plus q f(q); the magnetic field and
///   physical amplitudes are unchanged.
class PotentialSpec {
 public:
  enum class Kind { aharonov_bohm, dipole, fixed_direction, gauge_shifted };

  static PotentialSpec aharonov_bohm(double flux, double charge = 1.0);
  static PotentialSpec dipole(const Vec3& moment, double charge = 1.0);
  static PotentialSpec fixed_direction(const Vec3c& a_hat,
                                       double charge = 1.0);
  static PotentialSpec gauge_shifted(const PotentialSpec& base,
                                     GaugeFunction f);

  Kind kind() const { return kind_; }
  double charge() const { return charge_; }
  double flux() const { return flux_; }
  const Vec3& moment() const { return moment_; }

 private:
  PotentialSpec() = default;

  friend Vec3c fourier_amplitude(const PotentialSpec&, const Vec3&);

  Kind kind_ = Kind::fixed_direction;
  double charge_ = 1.0;
  double flux_ = 0.0;
  Vec3 moment_;
  Vec3c direction_;
  std::shared_ptr<const PotentialSpec> base_;
  GaugeFunction gauge_;
};

/// Evaluates A(q). Throws ZeroMomentumTransfer at q = 0 and OutOfPlane for
/// an Aharonov-Bohm transfer with a component along the flux line.
Vec3c fourier_amplitude(const PotentialSpec& spec, const Vec3& q);

struct DirectionMagnitude {
  double magnitude = 0.0;  // sqrt(sum |A_i|^2)
  Vec3c direction;         // A(q)/|A(q)|
};

/// Splits A(q) into magnitude and unit direction. Throws NullPotentialAtQ
/// when A(q) vanishes (the amplitude is exactly zero there and the
/// direction is undefined).
DirectionMagnitude direction_and_magnitude(const PotentialSpec& spec,
                                           const Vec3& q);

}  // namespace spinscatter
