#include "spinscatter/clifford.hpp"

#include <cmath>

#include "spinscatter/errors.hpp"

namespace spinscatter {

namespace {

void require_unit(const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12) {
    throw_error(Errc::non_unit_vector, "axis must be a unit vector");
  }
}

Mat2 zero2() { return {0.0, 0.0, 0.0, 0.0}; }

}  // namespace

Mat2 pauli_matrix(int i) {
  switch (i) {
    case 1:
      return {0.0, 1.0, 1.0, 0.0};
    case 2:
      return {0.0, -imag_unit, imag_unit, 0.0};
    case 3:
      return {1.0, 0.0, 0.0, -1.0};
    default:
      throw_error(Errc::invalid_argument, "pauli index must be 1..3");
  }
}

Mat2 pauli_dot(const Vec3& n) {
  require_unit(n);
  return {cplx{n.z}, cplx{n.x, -n.y}, cplx{n.x, n.y}, cplx{-n.z}};
}

Mat4 gamma_matrix(int mu) {
  const Mat2 id = Mat2::identity();
  switch (mu) {
    case 0:
      return Mat4::from_blocks(id, zero2(), zero2(), cplx{-1.0} * id);
    case 1:
    case 2:
    case 3: {
      const Mat2 s = pauli_matrix(mu);
      return Mat4::from_blocks(zero2(), s, cplx{-1.0} * s, zero2());
    }
    default:
      throw_error(Errc::invalid_argument, "gamma index must be 0..3");
  }
}

Mat4 gamma5() {
  const Mat2 id = Mat2::identity();
  return Mat4::from_blocks(zero2(), id, id, zero2());
}

Mat4 sigma_matrix(int i) {
  const Mat2 s = pauli_matrix(i);
  return Mat4::from_blocks(s, zero2(), zero2(), s);
}

Mat4 alpha_matrix(int i) {
  const Mat2 s = pauli_matrix(i);
  return Mat4::from_blocks(zero2(), s, s, zero2());
}

Mat4 sigma_dot(const Vec3& n) {
  require_unit(n);
  const Mat2 s{cplx{n.z}, cplx{n.x, -n.y}, cplx{n.x, n.y}, cplx{-n.z}};
  return Mat4::from_blocks(s, zero2(), zero2(), s);
}

Mat4 sigma_dot(const Vec3c& a) {
  if (std::abs(a.norm() - 1.0) > 1e-12) {
    throw_error(Errc::non_unit_vector,
                "direction must have unit sum of squared moduli");
  }
  const Mat2 s{a.z, a.x - imag_unit * a.y, a.x + imag_unit * a.y,
               cplx{-1.0} * a.z};
  return Mat4::from_blocks(s, zero2(), zero2(), s);
}

Mat4 spin_rotation(const Vec3& n, double angle) {
  require_unit(n);
  const cplx c = std::cos(0.5 * angle);
  const cplx s{0.0, -std::sin(0.5 * angle)};
  return c * Mat4::identity() + s * sigma_dot(n);
}

Mat2 spin_rotation2(const Vec3& n, double angle) {
  require_unit(n);
  const cplx c = std::cos(0.5 * angle);
  const cplx s{0.0, -std::sin(0.5 * angle)};
  return c * Mat2::identity() + s * pauli_dot(n);
}

FrameGenerators frame_generators(const ScatteringFrame& frame) {
  return {sigma_dot(frame.k_hat), sigma_dot(frame.q_hat),
          sigma_dot(frame.l_hat)};
}

std::vector<IdentityDeviation> check_algebra(const ScatteringFrame& frame) {
  std::vector<IdentityDeviation> report;
  const Mat4 id = Mat4::identity();
  const Mat4 g5 = gamma5();
  const auto [sk, sq, sl] = frame_generators(frame);
  const Mat4 spi = sigma_dot(frame.p_in_hat);
  const Mat4 spf = sigma_dot(frame.p_out_hat);
  const double ch = std::cos(0.5 * frame.theta);
  const double sh = std::sin(0.5 * frame.theta);
  const cplx two_i{0.0, 2.0};

  {
    // {gamma_mu, gamma_nu} = 2 g_mu_nu, metric (+,-,-,-).
    double dev = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) {
        const double g = (mu != nu) ? 0.0 : (mu == 0 ? 1.0 : -1.0);
        dev = std::max(
            dev, max_abs_diff(anticommutator(gamma_matrix(mu),
                                             gamma_matrix(nu)),
                              cplx{2.0 * g} * id));
      }
    report.push_back({"clifford_anticommutation", dev});
  }
  {
    double dev = max_abs_diff(g5 * g5, id);
    // i gamma5 = gamma1 gamma2 gamma3 gamma0 in this representation.
    dev = std::max(dev, max_abs_diff(imag_unit * g5,
                                     gamma_matrix(1) * gamma_matrix(2) *
                                         gamma_matrix(3) * gamma_matrix(0)));
    for (int i = 1; i <= 3; ++i)
      dev = std::max(dev, max_abs_diff(g5 * sigma_matrix(i), alpha_matrix(i)));
    report.push_back({"gamma5_structure", dev});
  }
  {
    double dev = 0.0;
    for (const Mat4* s : {&sk, &sq, &sl, &spi, &spf})
      dev = std::max(dev, commutator(g5, *s).max_abs());
    report.push_back({"gamma5_commutes_spin", dev});
  }
  {
    double dev = max_abs_diff(commutator(sk, sq), two_i * sl);
    dev = std::max(dev, max_abs_diff(commutator(sl, sk), two_i * sq));
    dev = std::max(dev, max_abs_diff(commutator(sq, sl), two_i * sk));
    report.push_back({"su2_commutators", dev});
  }
  {
    double dev = anticommutator(sl, sk).max_abs();
    dev = std::max(dev, anticommutator(sq, sl).max_abs());
    dev = std::max(dev, anticommutator(sq, sk).max_abs());
    report.push_back({"su2_anticommutators", dev});
  }
  {
    double dev = max_abs_diff(sk * sk, id);
    dev = std::max(dev, max_abs_diff(sq * sq, id));
    dev = std::max(dev, max_abs_diff(sl * sl, id));
    report.push_back({"su2_squares", dev});
  }
  {
    double dev = max_abs_diff(imag_unit * sk, sq * sl);
    dev = std::max(dev, max_abs_diff(imag_unit * sq, sl * sk));
    dev = std::max(dev, max_abs_diff(imag_unit * sl, sk * sq));
    report.push_back({"su2_triple_products", dev});
  }
  {
    double dev = max_abs_diff(spi, cplx{ch} * sk - cplx{sh} * sq);
    dev = std::max(dev, max_abs_diff(spf, cplx{ch} * sk + cplx{sh} * sq));
    report.push_back({"helicity_axis_decomposition", dev});
  }
  {
    // Conjugating the incident helicity operator by the rotation about
    // l_hat through theta transports it to the outgoing one.
    const Mat4 u = spin_rotation(frame.l_hat, frame.theta);
    report.push_back(
        {"rotation_transport", max_abs_diff(u * spi * u.adjoint(), spf)});
  }
  {
    const Mat4 u = spin_rotation(frame.l_hat, frame.theta);
    report.push_back({"rotation_unitarity", max_abs_diff(u.adjoint() * u, id)});
  }
  {
    report.push_back({"sandwich_total_axis", max_abs_diff(spf * sk * spi, sk)});
    report.push_back(
        {"sandwich_transfer_axis", max_abs_diff(spf * sq * spi, cplx{-1.0} * sq)});
  }
  {
    // The half-angle rotations on either side of gamma5 Sigma_k cancel.
    const Mat4 left = spin_rotation(frame.l_hat, 0.5 * frame.theta).adjoint();
    const Mat4 right = spin_rotation(frame.l_hat, -0.5 * frame.theta);
    report.push_back({"spin_interaction_rotation_invariance",
                      max_abs_diff(left * (g5 * sk) * right, g5 * sk)});
  }
  {
    // Sigma.p_out Sigma_l Sigma.p_in acts on Sigma.p_in eigenstates as
    // +/- i (-cos(theta/2) Sigma_q + sin(theta/2) Sigma_k). Projecting on
    // each eigenspace tests the action on every eigenstate at once.
    double dev = 0.0;
    for (const double h : {1.0, -1.0}) {
      const Mat4 proj = cplx{0.5} * (id + cplx{h} * spi);
      const Mat4 reduced =
          (cplx{h} * imag_unit) * (cplx{-ch} * sq + cplx{sh} * sk);
      dev = std::max(dev, ((spf * sl * spi - reduced) * proj).max_abs());
    }
    report.push_back({"normal_axis_reduction", dev});
  }
  {
    double dev = 0.0;
    for (const Vec3* n : {&frame.k_hat, &frame.q_hat, &frame.l_hat}) {
      const Mat4 lhs = spin_rotation(*n, frame.theta) *
                       spin_rotation(*n, 0.5 * frame.theta);
      dev = std::max(
          dev, max_abs_diff(lhs, spin_rotation(*n, 1.5 * frame.theta)));
    }
    report.push_back({"rotation_composition", dev});
  }
  return report;
}

}  // namespace spinscatter
