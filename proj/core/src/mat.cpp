// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include "chiralcas/mat.hpp"

#include <cmath>

namespace chiralcas {

namespace {

// The six 2x2 minors of rows (2,3) shared by the cofactor expansion.
struct Minors {
  double s0, s1, s2, s3, s4, s5; // rows 0,1
  double c0, c1, c2, c3, c4, c5; // rows 2,3
};

Minors lower_minors(const Mat4& a) {
  Minors t{};
  t.s0 = a(0, 0) * a(1, 1) - a(1, 0) * a(0, 1);
  t.s1 = a(0, 0) * a(1, 2) - a(1, 0) * a(0, 2);
  t.s2 = a(0, 0) * a(1, 3) - a(1, 0) * a(0, 3);
  t.s3 = a(0, 1) * a(1, 2) - a(1, 1) * a(0, 2);
  t.s4 = a(0, 1) * a(1, 3) - a(1, 1) * a(0, 3);
  t.s5 = a(0, 2) * a(1, 3) - a(1, 2) * a(0, 3);
  t.c0 = a(2, 0) * a(3, 1) - a(3, 0) * a(2, 1);
  t.c1 = a(2, 0) * a(3, 2) - a(3, 0) * a(2, 2);
  t.c2 = a(2, 0) * a(3, 3) - a(3, 0) * a(2, 3);
  t.c3 = a(2, 1) * a(3, 2) - a(3, 1) * a(2, 2);
  t.c4 = a(2, 1) * a(3, 3) - a(3, 1) * a(2, 3);
  t.c5 = a(2, 2) * a(3, 3) - a(3, 2) * a(2, 3);
  return t;
}

double det_from(const Minors& t) {
  return t.s0 * t.c5 - t.s1 * t.c4 + t.s2 * t.c3 + t.s3 * t.c2 - t.s4 * t.c1 +
         t.s5 * t.c0;
}

} // namespace

double Mat4::det() const {
  return det_from(lower_minors(*this));
}

namespace detail {

bool cofactor_inverse(const Mat4& a, Mat4& out) {
  const Minors t = lower_minors(a);
  const double det = det_from(t);
  const double scale = a.max_abs();
  if (std::fabs(det) <= 1e-12 * scale * scale * scale * scale) return false;
  const double inv = 1.0 / det;

  out(0, 0) = (a(1, 1) * t.c5 - a(1, 2) * t.c4 + a(1, 3) * t.c3) * inv;
  out(0, 1) = (-a(0, 1) * t.c5 + a(0, 2) * t.c4 - a(0, 3) * t.c3) * inv;
  out(0, 2) = (a(3, 1) * t.s5 - a(3, 2) * t.s4 + a(3, 3) * t.s3) * inv;
  out(0, 3) = (-a(2, 1) * t.s5 + a(2, 2) * t.s4 - a(2, 3) * t.s3) * inv;
  out(1, 0) = (-a(1, 0) * t.c5 + a(1, 2) * t.c2 - a(1, 3) * t.c1) * inv;
  out(1, 1) = (a(0, 0) * t.c5 - a(0, 2) * t.c2 + a(0, 3) * t.c1) * inv;
  out(1, 2) = (-a(3, 0) * t.s5 + a(3, 2) * t.s2 - a(3, 3) * t.s1) * inv;
  out(1, 3) = (a(2, 0) * t.s5 - a(2, 2) * t.s2 + a(2, 3) * t.s1) * inv;
  out(2, 0) = (a(1, 0) * t.c4 - a(1, 1) * t.c2 + a(1, 3) * t.c0) * inv;
  out(2, 1) = (-a(0, 0) * t.c4 + a(0, 1) * t.c2 - a(0, 3) * t.c0) * inv;
  out(2, 2) = (a(3, 0) * t.s4 - a(3, 1) * t.s2 + a(3, 3) * t.s0) * inv;
  out(2, 3) = (-a(2, 0) * t.s4 + a(2, 1) * t.s2 - a(2, 3) * t.s0) * inv;
  out(3, 0) = (-a(1, 0) * t.c3 + a(1, 1) * t.c1 - a(1, 2) * t.c0) * inv;
  out(3, 1) = (a(0, 0) * t.c3 - a(0, 1) * t.c1 + a(0, 2) * t.c0) * inv;
  out(3, 2) = (-a(3, 0) * t.s3 + a(3, 1) * t.s1 - a(3, 2) * t.s0) * inv;
  out(3, 3) = (a(2, 0) * t.s3 - a(2, 1) * t.s1 + a(2, 2) * t.s0) * inv;
  return true;
}

Mat4 pivot_inverse(const Mat4& a) {
  // Augmented Gauss-Jordan with partial pivoting.
  double w[4][8];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      w[i][j] = a(i, j);
      w[i][j + 4] = (i == j) ? 1.0 : 0.0;
    }
  }
  const double scale = a.max_abs();
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::fabs(w[r][col]) > std::fabs(w[piv][col])) piv = r;
    }
    if (std::fabs(w[piv][col]) <= 1e-300 + 1e-15 * scale) {
      throw SingularMatrixError("4x4 inverse: pivot vanished (singular matrix)");
    }
    if (piv != col) {
      for (int j = 0; j < 8; ++j) std::swap(w[piv][j], w[col][j]);
    }
    const double d = 1.0 / w[col][col];
    for (int j = 0; j < 8; ++j) w[col][j] *= d;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = w[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 8; ++j) w[r][j] -= f * w[col][j];
    }
  }
  Mat4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out(i, j) = w[i][j + 4];
  }
  return out;
}

} // namespace detail

Mat4 Mat4::inverse() const {
  Mat4 out;
  if (detail::cofactor_inverse(*this, out)) return out;
  return detail::pivot_inverse(*this);
}

} // namespace chiralcas
