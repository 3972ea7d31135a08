// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <random>

#include "chiralcas/errors.hpp"
#include "chiralcas/mat.hpp"

using namespace chiralcas;

namespace {

Mat4 random_mat(std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat4 a;
  for (double& v : a.m) v = scale * u(rng);
  return a;
}

double max_diff(const Mat4& a, const Mat4& b) { return (a - b).max_abs(); }

} // namespace

TEST_CASE("identity multiplication is neutral") {
  std::mt19937 rng(101);
  const Mat4 a = random_mat(rng);
  const Mat4 i = Mat4::identity();
  CHECK(max_diff(a * i, a) == 0.0);
  CHECK(max_diff(i * a, a) == 0.0);
}

TEST_CASE("multiplication matches a hand-expanded entry") {
  Mat4 a;
  Mat4 b;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a(i, j) = 1.0 + 4 * i + j;
      b(i, j) = 0.5 * (i - j);
    }
  }
  const Mat4 c = a * b;
  double expect = 0.0;
  for (int k = 0; k < 4; ++k) expect += a(2, k) * b(k, 3);
  CHECK(c(2, 3) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("determinant of a triangular matrix is the diagonal product") {
  Mat4 a = Mat4::identity();
  a(0, 0) = 2.0;
  a(1, 1) = -3.0;
  a(2, 2) = 0.5;
  a(3, 3) = 4.0;
  a(0, 3) = 7.0;
  a(1, 2) = -1.5;
  CHECK(a.det() == doctest::Approx(2.0 * -3.0 * 0.5 * 4.0).epsilon(1e-14));
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat4 a = random_mat(rng);
    const Mat4 b = random_mat(rng);
    CHECK((a * b).det() ==
          doctest::Approx(a.det() * b.det()).epsilon(1e-10));
  }
}

TEST_CASE("inverse round-trips on random well-conditioned matrices") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Mat4 a = random_mat(rng);
    // Diagonal dominance keeps the sample away from accidental singularity.
    for (int i = 0; i < 4; ++i) a(i, i) += 4.0;
    const Mat4 inv = a.inverse();
    CHECK(max_diff(a * inv, Mat4::identity()) < 1e-12);
    CHECK(max_diff(inv * a, Mat4::identity()) < 1e-12);
  }
}

TEST_CASE("inverse survives extreme uniform scaling") {
  // The cofactor determinant scales as the fourth power of the entries, so
  // badly scaled but perfectly conditioned inputs exercise the pivoting
  // fallback path.
  std::mt19937 rng(29);
  for (const double scale : {1e-120, 1e-8, 1e8, 1e120}) {
    Mat4 a = random_mat(rng, scale);
    for (int i = 0; i < 4; ++i) a(i, i) += 4.0 * scale;
    const Mat4 inv = a.inverse();
    CHECK(max_diff(a * inv, Mat4::identity()) < 1e-11);
  }
}

TEST_CASE("cofactor and pivot inverses agree where both are valid") {
  std::mt19937 rng(31);
  Mat4 a = random_mat(rng);
  for (int i = 0; i < 4; ++i) a(i, i) += 4.0;
  Mat4 cof;
  REQUIRE(detail::cofactor_inverse(a, cof));
  const Mat4 piv = detail::pivot_inverse(a);
  CHECK(max_diff(cof, piv) < 1e-13);
}

TEST_CASE("singular matrix raises a typed error") {
  Mat4 a = Mat4::identity();
  // Duplicate rows make the matrix exactly rank deficient.
  for (int j = 0; j < 4; ++j) a(3, j) = a(2, j);
  a(2, 0) = a(3, 0) = 1.0;
  CHECK_THROWS_AS(a.inverse(), SingularMatrixError);
  CHECK_THROWS_AS(detail::pivot_inverse(a), SingularMatrixError);
}

TEST_CASE("max_abs and scalar scaling") {
  Mat4 a;
  a(1, 2) = -7.5;
  a(3, 0) = 3.0;
  CHECK(a.max_abs() == 7.5);
  a *= 2.0;
  CHECK(a(1, 2) == -15.0);
  CHECK(a(3, 0) == 6.0);
}

TEST_CASE("2x2 block arithmetic") {
  Mat2 a;
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = 3.0;
  a(1, 1) = 4.0;
  Mat2 b;
  b(0, 0) = -1.0;
  b(0, 1) = 0.5;
  b(1, 0) = 2.0;
  b(1, 1) = 1.0;
  const Mat2 c = a * b;
  CHECK(c(0, 0) == doctest::Approx(1.0 * -1.0 + 2.0 * 2.0));
  CHECK(c(0, 1) == doctest::Approx(1.0 * 0.5 + 2.0 * 1.0));
  CHECK(c(1, 0) == doctest::Approx(3.0 * -1.0 + 4.0 * 2.0));
  CHECK(c(1, 1) == doctest::Approx(3.0 * 0.5 + 4.0 * 1.0));
  CHECK(a.trace() == 5.0);
  CHECK(a.det() == doctest::Approx(1.0 * 4.0 - 2.0 * 3.0));
  // det(ab) = det(a) det(b) ties the three accessors together.
  CHECK(c.det() == doctest::Approx(a.det() * b.det()).epsilon(1e-14));
}
