#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace spinscatter {

using cplx = std::complex<double>;

inline constexpr cplx imag_unit{0.0, 1.0};

/// Real 3-vector. Momenta, frame axes and rotation axes all live here.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(double s, const Vec3& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Complex 3-vector (Fourier transforms of vector potentials and their
/// directions). The norm is sqrt(sum |a_i|^2); no conjugation is implied
/// by dot() so projections on real axes stay componentwise.
struct Vec3c {
  cplx x{};
  cplx y{};
  cplx z{};

  double norm2() const { return std::norm(x) + std::norm(y) + std::norm(z); }
  double norm() const { return std::sqrt(norm2()); }

  friend Vec3c operator+(const Vec3c& a, const Vec3c& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3c operator-(const Vec3c& a, const Vec3c& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3c operator*(const cplx& s, const Vec3c& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
};

inline Vec3c to_complex(const Vec3& v) { return {v.x, v.y, v.z}; }

inline cplx dot(const Vec3c& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

using Spinor2 = std::array<cplx, 2>;
using Spinor4 = std::array<cplx, 4>;

inline cplx inner(const Spinor2& a, const Spinor2& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

inline cplx inner(const Spinor4& a, const Spinor4& b) {
  cplx s{};
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// 2x2 complex matrix, row major. Just enough for Pauli algebra.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(cplx a, cplx b, cplx c, cplx d) : e_{a, b, c, d} {}

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  cplx& operator()(int i, int j) { return e_[2 * i + j]; }
  const cplx& operator()(int i, int j) const { return e_[2 * i + j]; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend Mat2 operator*(const cplx& s, const Mat2& m) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e_[i] = s * m.e_[i];
    return r;
  }

  Mat2 adjoint() const {
    return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]),
            std::conj(e_[3])};
  }

  Spinor2 apply(const Spinor2& v) const {
    return {e_[0] * v[0] + e_[1] * v[1], e_[2] * v[0] + e_[3] * v[1]};
  }

 private:
  std::array<cplx, 4> e_{};
};

/// 4x4 complex matrix, row major. Gamma matrices, spin operators and
/// rotations; everything stays in closed form so no decompositions are
/// needed.
class Mat4 {
 public:
  Mat4() = default;

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Assemble from 2x2 blocks [[a, b], [c, d]].
  static Mat4 from_blocks(const Mat2& a, const Mat2& b, const Mat2& c,
                          const Mat2& d) {
    Mat4 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m(i, j) = a(i, j);
        m(i, j + 2) = b(i, j);
        m(i + 2, j) = c(i, j);
        m(i + 2, j + 2) = d(i, j);
      }
    return m;
  }

  cplx& operator()(int i, int j) { return e_[4 * i + j]; }
  const cplx& operator()(int i, int j) const { return e_[4 * i + j]; }

  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend Mat4 operator*(const cplx& s, const Mat4& m) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e_[i] = s * m.e_[i];
    return r;
  }

  Mat4 adjoint() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  Spinor4 apply(const Spinor4& v) const {
    Spinor4 r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& e : e_) m = std::max(m, std::abs(e));
    return m;
  }

 private:
  std::array<cplx, 16> e_{};
};

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
  return (a - b).max_abs();
}

inline Mat4 commutator(const Mat4& a, const Mat4& b) {
  return a * b - b * a;
}

inline Mat4 anticommutator(const Mat4& a, const Mat4& b) {
  return a * b + b * a;
}

inline double max_abs(const Spinor4& v) {
  double m = 0.0;
  for (const auto& e : v) m = std::max(m, std::abs(e));
  return m;
}

}  // namespace spinscatter
