#include "spinscatter/spinors.hpp"

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "spinscatter/clifford.hpp"
#include "spinscatter/errors.hpp"
#include "spinscatter/sampling.hpp"

using namespace spinscatter;

namespace {

Spinor2 apply2(const Mat2& m, const Spinor2& v) { return m.apply(v); }

double eigen_deviation2(const Vec3& n, const Spinor2& chi, int sign) {
  const Spinor2 r = apply2(pauli_dot(n), chi);
  return std::max(std::abs(r[0] - cplx{double(sign)} * chi[0]),
                  std::abs(r[1] - cplx{double(sign)} * chi[1]));
}

}  // namespace

TEST_CASE("pauli eigenspinors at the coordinate axes") {
  const Spinor2 up = pauli_eigenspinor(Vec3{0.0, 0.0, 1.0}, +1);
  CHECK(std::abs(up[0] - cplx{1.0}) < 1e-15);
  CHECK(std::abs(up[1]) < 1e-15);

  const Spinor2 down = pauli_eigenspinor(Vec3{0.0, 0.0, 1.0}, -1);
  CHECK(std::abs(down[0]) < 1e-15);
  CHECK(std::abs(down[1] - cplx{1.0}) < 1e-15);

  const Spinor2 xp = pauli_eigenspinor(Vec3{1.0, 0.0, 0.0}, +1);
  const double r = std::sqrt(0.5);
  CHECK(std::abs(xp[0] - cplx{r}) < 1e-15);
  CHECK(std::abs(xp[1] - cplx{r}) < 1e-15);
}

TEST_CASE("pauli eigenspinors satisfy the eigen-relation everywhere") {
  Sampler sampler(31);
  for (int i = 0; i < 500; ++i) {
    const Vec3 n = sampler.unit_vector();
    const Spinor2 plus = pauli_eigenspinor(n, +1);
    const Spinor2 minus = pauli_eigenspinor(n, -1);
    CHECK(eigen_deviation2(n, plus, +1) < 1e-13);
    CHECK(eigen_deviation2(n, minus, -1) < 1e-13);
    CHECK(std::abs(inner(plus, minus)) < 1e-13);
    CHECK(std::abs(inner(plus, plus) - cplx{1.0}) < 1e-13);
    // Convention: first nonzero component of the minus spinor is real
    // positive.
    if (std::abs(minus[0]) > 1e-13) {
      CHECK(minus[0].imag() == doctest::Approx(0.0).epsilon(1e-13));
      CHECK(minus[0].real() > 0.0);
    } else {
      CHECK(minus[1].imag() == doctest::Approx(0.0).epsilon(1e-13));
      CHECK(minus[1].real() > 0.0);
    }
  }
}

TEST_CASE("axis spinors are Sigma.axis eigenstates") {
  Sampler sampler(32);
  for (int i = 0; i < 200; ++i) {
    const ScatteringFrame f = sampler.frame();
    const Vec3 random_axis = sampler.unit_vector();
    for (const Vec3* axis : {&f.p_in_hat, &f.p_out_hat, &f.k_hat, &f.q_hat,
                             &random_axis}) {
      for (const int h : {+1, -1}) {
        const DiracSpinor u = axis_spinor(f, *axis, h);
        Spinor4 r = sigma_dot(*axis).apply(u.components);
        for (int k = 0; k < 4; ++k) r[k] -= cplx{double(h)} * u.components[k];
        CHECK(max_abs(r) < 1e-13);
      }
    }
  }
}

TEST_CASE("axis spinor structure and normalization") {
  const ScatteringFrame f = testutil::planar_frame_ccw(1.0, 1.0, 0.9);

  SUBCASE("normalization constant at p = m = 1") {
    const DiracSpinor u = axis_spinor(f, f.k_hat, +1);
    CHECK(u.norm_const ==
          doctest::Approx(std::sqrt((std::sqrt(2.0) + 1.0) / 4.0))
              .epsilon(1e-14));
  }

  SUBCASE("gamma5 expectation is h 2N'^2 p/(E+m)") {
    Sampler sampler(33);
    for (int i = 0; i < 100; ++i) {
      const ScatteringFrame g = sampler.frame();
      const double np = norm_const(SpinorNorm::mass, g.p, g.mass);
      const double expected = 2.0 * np * np * g.p / (g.energy + g.mass);
      for (const int h : {+1, -1}) {
        const DiracSpinor u = axis_spinor(g, g.k_hat, h);
        const cplx v = inner(u.components, gamma5().apply(u.components));
        CHECK(std::abs(v - cplx{double(h) * expected}) < 1e-13 * (1 + expected));
      }
    }
  }

  SUBCASE("unit normalization gives unit norm") {
    const DiracSpinor u = axis_spinor(f, f.k_hat, +1, SpinorNorm::unit);
    CHECK(std::abs(inner(u.components, u.components) - cplx{1.0}) < 1e-14);
  }

  SUBCASE("default normalization gives norm E/2m") {
    Sampler sampler(34);
    const ScatteringFrame g = sampler.frame();
    const DiracSpinor u = axis_spinor(g, g.p_in_hat, -1);
    CHECK(std::abs(inner(u.components, u.components) -
                   cplx{g.energy / (2.0 * g.mass)}) < 1e-12);
  }

  SUBCASE("mass must be positive") {
    ScatteringFrame g = f;
    g.mass = 0.0;
    CHECK_THROWS_AS(axis_spinor(g, g.k_hat, +1), Error);
    g.mass = -1.0;
    try {
      axis_spinor(g, g.k_hat, +1);
      FAIL("expected a throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::non_positive_mass);
    }
  }
}

TEST_CASE("incident spinor equals the rotated total-axis spinor") {
  Sampler sampler(35);
  for (int i = 0; i < 200; ++i) {
    const ScatteringFrame f = sampler.frame();
    const DiracSpinor u_k = axis_spinor(f, f.k_hat, +1);
    const DiracSpinor u_in = axis_spinor(f, f.p_in_hat, +1);
    const DiracSpinor u_out = axis_spinor(f, f.p_out_hat, +1);

    const Spinor4 rot_in =
        spin_rotation(f.l_hat, -0.5 * f.theta).apply(u_k.components);
    const Spinor4 rot_out =
        spin_rotation(f.l_hat, 0.5 * f.theta).apply(u_k.components);

    // Frame-aligned phases make the rotation relation exact, so the
    // normalized overlap magnitude is 1.
    const double nu = std::abs(inner(u_in.components, u_in.components));
    CHECK(std::abs(std::abs(inner(rot_in, u_in.components)) / nu - 1.0) <
          1e-12);
    CHECK(std::abs(std::abs(inner(rot_out, u_out.components)) / nu - 1.0) <
          1e-12);
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(rot_in[k] - u_in.components[k]) < 1e-12 * (1.0 + nu));
      CHECK(std::abs(rot_out[k] - u_out.components[k]) < 1e-12 * (1.0 + nu));
    }
  }
}

TEST_CASE("expansions in the total axis carry quarter angles") {
  Sampler sampler(36);
  for (int i = 0; i < 100; ++i) {
    const ScatteringFrame f = sampler.frame();
    const double cq = std::cos(0.25 * f.theta);
    const double sq = std::sin(0.25 * f.theta);

    const DiracSpinor u_in = axis_spinor(f, f.p_in_hat, +1);
    const DiracSpinor u_out = axis_spinor(f, f.p_out_hat, +1);

    const ExpansionCoefficients in_k = expand_in_axis(f, u_in, FrameAxis::total);
    const ExpansionCoefficients out_k =
        expand_in_axis(f, u_out, FrameAxis::total);
    CHECK(std::abs(in_k.plus) == doctest::Approx(cq).epsilon(1e-12));
    CHECK(std::abs(in_k.minus) == doctest::Approx(sq).epsilon(1e-12));
    CHECK(std::abs(out_k.plus) == doctest::Approx(cq).epsilon(1e-12));
    CHECK(std::abs(out_k.minus) == doctest::Approx(sq).epsilon(1e-12));

    const double cqp = std::abs(std::cos(0.25 * (f.theta + M_PI)));
    const double sqp = std::abs(std::sin(0.25 * (f.theta + M_PI)));
    const ExpansionCoefficients in_q =
        expand_in_axis(f, u_in, FrameAxis::transfer);
    const ExpansionCoefficients out_q =
        expand_in_axis(f, u_out, FrameAxis::transfer);
    CHECK(std::abs(in_q.plus) == doctest::Approx(cqp).epsilon(1e-12));
    CHECK(std::abs(in_q.minus) == doctest::Approx(sqp).epsilon(1e-12));
    CHECK(std::abs(out_q.plus) == doctest::Approx(sqp).epsilon(1e-12));
    CHECK(std::abs(out_q.minus) == doctest::Approx(cqp).epsilon(1e-12));
  }
}

TEST_CASE("collinear limit collapses onto the total axis state") {
  const ScatteringFrame f = testutil::planar_frame_ccw(1.0, 1.0, 1e-5);
  const DiracSpinor u_in = axis_spinor(f, f.p_in_hat, +1);
  const ExpansionCoefficients c = expand_in_axis(f, u_in, FrameAxis::total);
  CHECK(std::abs(c.plus) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(c.minus) < 1e-5);
}

TEST_CASE("expansion magnitudes match between incident and outgoing") {
  Sampler sampler(37);
  for (int i = 0; i < 200; ++i) {
    const ScatteringFrame f = sampler.frame();
    const DiracSpinor u_in = axis_spinor(f, f.p_in_hat, +1);
    const DiracSpinor u_out = axis_spinor(f, f.p_out_hat, +1);

    const ExpansionCoefficients in_k = expand_in_axis(f, u_in, FrameAxis::total);
    const ExpansionCoefficients out_k =
        expand_in_axis(f, u_out, FrameAxis::total);
    // Same-helicity overlaps agree on the total axis...
    CHECK(std::norm(in_k.plus) ==
          doctest::Approx(std::norm(out_k.plus)).epsilon(1e-12));
    CHECK(std::norm(in_k.minus) ==
          doctest::Approx(std::norm(out_k.minus)).epsilon(1e-12));

    // ...and cross over on the transfer axis.
    const ExpansionCoefficients in_q =
        expand_in_axis(f, u_in, FrameAxis::transfer);
    const ExpansionCoefficients out_q =
        expand_in_axis(f, u_out, FrameAxis::transfer);
    CHECK(std::norm(in_q.plus) ==
          doctest::Approx(std::norm(out_q.minus)).epsilon(1e-12));
    CHECK(std::norm(in_q.minus) ==
          doctest::Approx(std::norm(out_q.plus)).epsilon(1e-12));

    for (const ExpansionCoefficients* c : {&in_k, &out_k, &in_q, &out_q}) {
      CHECK(std::norm(c->plus) + std::norm(c->minus) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}
