// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "chiralcas/errors.hpp"

namespace chiralcas {

/// Dense 4x4 real matrix, row-major. Small fixed-size kernel used by the
/// transfer-matrix hot loop; no dynamic allocation.
struct Mat4 {
  std::array<double, 16> m{};

  static Mat4 identity() {
    Mat4 r;
    r.m[0] = r.m[5] = r.m[10] = r.m[15] = 1.0;
    return r;
  }

  double& operator()(int i, int j) { return m[static_cast<std::size_t>(4 * i + j)]; }
  double operator()(int i, int j) const { return m[static_cast<std::size_t>(4 * i + j)]; }

  double max_abs() const {
    double s = 0.0;
    for (double v : m) s = std::max(s, std::fabs(v));
    return s;
  }

  Mat4& operator*=(double s) {
    for (double& v : m) v *= s;
    return *this;
  }

  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
      const double a0 = a(i, 0), a1 = a(i, 1), a2 = a(i, 2), a3 = a(i, 3);
      for (int j = 0; j < 4; ++j) {
        r(i, j) = a0 * b(0, j) + a1 * b(1, j) + a2 * b(2, j) + a3 * b(3, j);
      }
    }
    return r;
  }

  friend Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t k = 0; k < 16; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
  }

  /// Determinant by cofactor expansion over 2x2 minors.
  double det() const;

  /// Inverse via closed-form cofactors; falls back to partial-pivot
  /// Gauss-Jordan when the cofactor determinant is small relative to the
  /// entry scale. Throws SingularMatrixError when both paths degenerate.
  Mat4 inverse() const;
};

namespace detail {

// Adjugate-based inverse; returns false when |det| is too small relative to
// the fourth power of the entry scale to trust the closed form.
bool cofactor_inverse(const Mat4& a, Mat4& out);

// Gauss-Jordan with partial pivoting; throws SingularMatrixError.
Mat4 pivot_inverse(const Mat4& a);

} // namespace detail

/// Dense 2x2 real matrix for reflection blocks.
struct Mat2 {
  std::array<double, 4> m{};

  double& operator()(int i, int j) { return m[static_cast<std::size_t>(2 * i + j)]; }
  double operator()(int i, int j) const { return m[static_cast<std::size_t>(2 * i + j)]; }

  double trace() const { return m[0] + m[3]; }
  double det() const { return m[0] * m[3] - m[1] * m[2]; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    r.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
    r.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
    r.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
    r.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
    return r;
  }
};

} // namespace chiralcas
