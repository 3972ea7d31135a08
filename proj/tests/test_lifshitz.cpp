// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "chiralcas/cholesteric.hpp"
#include "chiralcas/errors.hpp"
#include "chiralcas/lifshitz.hpp"
#include "chiralcas/media.hpp"

using namespace chiralcas;

namespace {

constexpr double kPi = std::numbers::pi;

DielectricModel constant_model(double ex, double ey) {
  DielectricModel m;
  m.label = "constant";
  m.debye_static_x = ex;
  m.debye_static_y = ey;
  return m;
}

// Small but strongly anisotropic configuration for fast symmetry checks.
InteractionConfig small_config(double separation, Handedness h1,
                               Handedness h2, int phi_points) {
  InteractionConfig config;
  config.slab1.d_tot = 2e-6;
  config.slab1.pitch = 0.8e-6;
  config.slab1.handedness = h1;
  config.slab1.theta_front = 0.0;
  config.slab1.model = constant_model(2.0, 3.0);
  config.slab2 = config.slab1;
  config.slab2.handedness = h2;
  config.gap_eps = 1.0;
  config.separation = separation;
  config.thermal.max_terms = 60;
  config.quadrature.n_eta = 8;
  config.quadrature.n_krho = 12;
  config.quadrature.phi_points = phi_points;
  config.threads = 1;
  return config;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// doctest's Approx adds 1.0 to the scale, which turns relative checks on
// sub-unit magnitudes into absolute ones; energies here are ~1e-12, so
// compare explicitly.
bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

} // namespace

TEST_CASE("interaction determinant log: closed forms and symmetry") {
  ReflectionMatrix zero;
  CHECK(log_det_D(zero, zero, 1e6, 2e-6) == 0.0);

  CHECK_THROWS_AS(log_det_D(zero, zero, 0.0, 2e-6), DomainError);
  CHECK_THROWS_AS(log_det_D(zero, zero, 1e6, 0.0), DomainError);

  // Diagonal reflections decouple into two scalar round trips.
  ReflectionMatrix diag;
  diag.r_ss = 0.3;
  diag.r_pp = -0.5;
  const double k3 = 5e5, a = 2e-6;
  const double e2 = std::exp(-2.0 * k3 * a);
  const double expected =
      std::log1p(-0.09 * e2) + std::log1p(-0.25 * e2);
  CHECK(log_det_D(diag, diag, k3, a) ==
        doctest::Approx(expected).epsilon(1e-14));

  // det(I - AB t) = det(I - BA t): the two slabs can be swapped.
  std::mt19937_64 rng(91u);
  std::uniform_real_distribution<double> amp(-0.6, 0.6);
  for (int trial = 0; trial < 20; ++trial) {
    ReflectionMatrix r1, r2;
    r1.r_ss = amp(rng); r1.r_sp = amp(rng); r1.r_ps = amp(rng); r1.r_pp = amp(rng);
    r2.r_ss = amp(rng); r2.r_sp = amp(rng); r2.r_ps = amp(rng); r2.r_pp = amp(rng);
    const double ab = log_det_D(r1, r2, 8e5, 1.5e-6);
    const double ba = log_det_D(r2, r1, 8e5, 1.5e-6);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-14));
  }

  // Overunity reflections at negligible gap drive the determinant negative.
  ReflectionMatrix over;
  over.r_ss = 1.2;
  CHECK_THROWS_AS(log_det_D(over, over, 1e3, 1e-9),
                  NonpositiveDeterminantError);
}

TEST_CASE("configuration validation rejects bad inputs") {
  InteractionConfig config = small_config(2e-6, Handedness::right,
                                          Handedness::right, 16);
  validate_interaction_config(config);

  InteractionConfig bad = config;
  bad.separation = 0.0;
  CHECK_THROWS_AS(validate_interaction_config(bad), Error);
  bad = config;
  bad.gap_eps = 0.99;
  CHECK_THROWS_AS(validate_interaction_config(bad), Error);
  bad = config;
  bad.thermal.max_terms = 0;
  CHECK_THROWS_AS(validate_interaction_config(bad), ConfigError);
  bad = config;
  bad.thermal.rel_tol = 0.0;
  CHECK_THROWS_AS(validate_interaction_config(bad), ConfigError);
  bad = config;
  bad.quadrature.n_eta = 7;
  CHECK_THROWS_AS(validate_interaction_config(bad), Error);
  bad = config;
  bad.quadrature.phi_points = 6;
  CHECK_THROWS_AS(validate_interaction_config(bad), Error);
  bad = config;
  bad.quadrature.n_krho = 0;
  CHECK_THROWS_AS(validate_interaction_config(bad), Error);
  bad = config;
  bad.quadrature.krho_cut = -1.0;
  CHECK_THROWS_AS(validate_interaction_config(bad), Error);
  bad = config;
  bad.slab1.pitch = bad.slab1.d_tot;
  CHECK_THROWS_AS(validate_interaction_config(bad), DomainError);
}

TEST_CASE("index-matched slabs exert no force") {
  InteractionConfig config = small_config(2e-6, Handedness::right,
                                          Handedness::left, 16);
  config.slab1.model = constant_model(1.0, 1.0);
  config.slab2.model = config.slab1.model;
  const EnergyResult result = energy_per_area(config, 0.4);
  CHECK(result.energy == 0.0);
  CHECK(result.terms_used <= 5);
}

TEST_CASE("energy is pi-periodic in the misalignment angle") {
  const InteractionConfig config = small_config(2e-6, Handedness::right,
                                                Handedness::right, 16);
  const double e0 = energy_per_area(config, 0.4).energy;
  const double e1 = energy_per_area(config, 0.4 + kPi).energy;
  CHECK(rel_close(e0, e1, 1e-12));
}

TEST_CASE("parity: flipping both handednesses mirrors the angle") {
  for (const auto pairing :
       {std::pair{Handedness::right, Handedness::right},
        std::pair{Handedness::right, Handedness::left}}) {
    const InteractionConfig config =
        small_config(2e-6, pairing.first, pairing.second, 16);
    InteractionConfig flipped = config;
    flipped.slab1.handedness =
        pairing.first == Handedness::right ? Handedness::left
                                           : Handedness::right;
    flipped.slab2.handedness =
        pairing.second == Handedness::right ? Handedness::left
                                            : Handedness::right;
    const double e = energy_per_area(config, 0.3).energy;
    const double mirrored = energy_per_area(flipped, -0.3).energy;
    CHECK(rel_close(e, mirrored, 1e-13));
  }
}

TEST_CASE("attraction: energy is negative and decays with separation") {
  const InteractionConfig near = small_config(2e-6, Handedness::right,
                                              Handedness::right, 16);
  InteractionConfig far = near;
  far.separation = 3e-6;
  const double e_near = energy_per_area(near, 0.3).energy;
  const double e_far = energy_per_area(far, 0.3).energy;
  CHECK(e_near < 0.0);
  CHECK(e_far < 0.0);
  CHECK(std::fabs(e_near) > std::fabs(e_far));
}

TEST_CASE("Matsubara magnitudes are non-increasing beyond the static term") {
  const InteractionConfig config = small_config(2e-6, Handedness::right,
                                                Handedness::right, 16);
  const EnergyResult result = energy_per_area(config, 0.5);
  REQUIRE(result.terms_used >= 5);
  for (int n = 2; n < result.terms_used; ++n) {
    CHECK(result.term_magnitudes[n] <=
          result.term_magnitudes[n - 1] * (1.0 + 1e-12));
  }
}

TEST_CASE("mirror pairing makes the energy even in the angle") {
  // The mirror maps the azimuth to a phi-shifted node set, so the evenness
  // residual is the azimuth quadrature error; it decays spectrally in n_eta
  // (8 -> ~1e-15, 32 -> ~1e-26 absolute here).
  InteractionConfig config = small_config(2e-6, Handedness::right,
                                          Handedness::left, 16);
  config.quadrature.n_eta = 32;
  for (const double phi : {0.35, 1.1}) {
    const double plus = energy_per_area(config, phi).energy;
    const double minus = energy_per_area(config, -phi).energy;
    CHECK(rel_close(plus, minus, 1e-13));
  }
}

TEST_CASE("opposite-handed mirror pair feels no torque at alignment") {
  // Identical geometry with opposite handedness is a mirror pair, so E(phi)
  // is even and the torque is a pure sine series: it vanishes at phi = 0 and
  // all cosine Fourier coefficients are zero. The residual is set by the
  // azimuth quadrature, hence the finer n_eta.
  InteractionConfig config = small_config(2e-6, Handedness::right,
                                          Handedness::left, 16);
  config.quadrature.n_eta = 32;
  const TorqueCurve curve = torque_curve(config);
  const double scale = max_abs(curve.torque);
  REQUIRE(scale > 0.0);
  CHECK(std::fabs(curve.torque.front()) < 1e-8 * scale);
  const FourierSpectrum spec = fourier_components(curve, 3);
  const double b1 = std::fabs(spec.b[0]);
  REQUIRE(b1 > 0.0);
  for (double am : spec.a) CHECK(std::fabs(am) < 1e-8 * b1);
}

TEST_CASE("same-handed identical slabs feel a torque at alignment") {
  // Same-handed identical slabs are NOT a mirror pair: the back faces break
  // the symmetry for finite thickness, leaving a genuine cosine component
  // (a few percent of b_1 here, far above the ~1e-6 azimuth residual at
  // this resolution).
  InteractionConfig config = small_config(2e-6, Handedness::right,
                                          Handedness::right, 16);
  config.quadrature.n_eta = 16;
  const TorqueCurve curve = torque_curve(config);
  const FourierSpectrum spec = fourier_components(curve, 3);
  const double b1 = std::fabs(spec.b[0]);
  REQUIRE(b1 > 0.0);
  CHECK(std::fabs(spec.a[0]) > 1e-3 * b1);
}

TEST_CASE("torque curve: grid layout, zero mean, derivative cross-check") {
  // The 5-point difference column carries O(h^4) truncation error, ~1e-4 of
  // the torque scale at 48 nodes and 16x smaller at 96; the grid is sized so
  // the global sweep passes with margin and pi/3 is a node (index 32).
  InteractionConfig config = small_config(2e-6, Handedness::right,
                                          Handedness::right, 96);
  const TorqueCurve curve = torque_curve(config);
  REQUIRE(curve.phi_grid.size() == 96);
  REQUIRE(curve.energy.size() == 96);
  REQUIRE(curve.torque.size() == 96);
  REQUIRE(curve.torque_fd.size() == 96);
  CHECK(curve.separation == config.separation);
  for (std::size_t k = 0; k < curve.phi_grid.size(); ++k) {
    CHECK(curve.phi_grid[k] ==
          doctest::Approx(kPi * double(k) / 96.0).epsilon(1e-14));
  }

  const double scale = max_abs(curve.torque);
  REQUIRE(scale > 0.0);

  // A spectral derivative of a periodic series has zero mean.
  double mean = 0.0;
  for (double t : curve.torque) mean += t;
  mean /= double(curve.torque.size());
  CHECK(std::fabs(mean) < 1e-10 * scale);

  // Two independent differentiations of the same energy samples.
  for (std::size_t k = 0; k < curve.torque.size(); ++k) {
    CHECK(std::fabs(curve.torque[k] - curve.torque_fd[k]) < 2e-5 * scale);
  }

  // The stated pointwise check at phi = pi/3.
  const std::size_t third = 32;
  CHECK(curve.phi_grid[third] == doctest::Approx(kPi / 3.0).epsilon(1e-14));
  REQUIRE(std::fabs(curve.torque[third]) > 1e-3 * scale);
  CHECK(std::fabs(curve.torque[third] - curve.torque_fd[third]) <
        1e-4 * std::fabs(curve.torque[third]));
}

TEST_CASE("torque converges spectrally when the grid doubles") {
  // Harmonics of this configuration decay by roughly a factor 4 per order,
  // so the 16-node grid still aliases at ~5e-6 of the torque scale; 32
  // nodes puts the alias far below the 1e-6 gate.
  InteractionConfig coarse = small_config(2e-6, Handedness::right,
                                          Handedness::right, 32);
  InteractionConfig fine = coarse;
  fine.quadrature.phi_points = 64;
  const TorqueCurve c = torque_curve(coarse);
  const TorqueCurve f = torque_curve(fine);
  const double scale = max_abs(f.torque);
  REQUIRE(scale > 0.0);
  for (std::size_t k = 0; k < c.torque.size(); ++k) {
    CHECK(c.phi_grid[k] == doctest::Approx(f.phi_grid[2 * k]).epsilon(1e-14));
    CHECK(std::fabs(c.torque[k] - f.torque[2 * k]) < 1e-6 * scale);
  }
}

TEST_CASE("worker count does not change the result") {
  InteractionConfig config = small_config(2e-6, Handedness::right,
                                          Handedness::left, 8);
  const TorqueCurve serial = torque_curve(config);
  config.threads = 4;
  const TorqueCurve parallel = torque_curve(config);
  REQUIRE(serial.torque.size() == parallel.torque.size());
  for (std::size_t k = 0; k < serial.torque.size(); ++k) {
    CHECK(serial.energy[k] == parallel.energy[k]);
    CHECK(serial.torque[k] == parallel.torque[k]);
  }
}

TEST_CASE("Fourier projection recovers a synthetic band-limited series") {
  const std::size_t P = 64;
  TorqueCurve curve;
  curve.separation = 3e-6;
  for (std::size_t k = 0; k < P; ++k) {
    const double phi = kPi * double(k) / double(P);
    curve.phi_grid.push_back(phi);
    curve.torque.push_back(0.75 * std::sin(2.0 * phi) -
                           0.2 * std::cos(4.0 * phi) +
                           0.05 * std::sin(10.0 * phi));
  }
  const FourierSpectrum spec = fourier_components(curve, 10);
  REQUIRE(spec.orders.size() == 10);
  CHECK(spec.separation == curve.separation);
  for (int m = 1; m <= 10; ++m) {
    CHECK(spec.orders[m - 1] == m);
    const double a_want = (m == 2) ? -0.2 : 0.0;
    double b_want = 0.0;
    if (m == 1) b_want = 0.75;
    if (m == 5) b_want = 0.05;
    CHECK(spec.a[m - 1] == doctest::Approx(a_want).epsilon(1e-12));
    CHECK(spec.b[m - 1] == doctest::Approx(b_want).epsilon(1e-12));
  }
}

TEST_CASE("Fourier projection rejects malformed requests") {
  TorqueCurve curve;
  const std::size_t P = 16;
  for (std::size_t k = 0; k < P; ++k) {
    curve.phi_grid.push_back(kPi * double(k) / double(P));
    curve.torque.push_back(std::sin(2.0 * curve.phi_grid.back()));
  }
  CHECK_NOTHROW(fourier_components(curve, 7));
  // At or above the Nyquist order the projection would alias.
  CHECK_THROWS_AS(fourier_components(curve, 8), DomainError);
  CHECK_THROWS_AS(fourier_components(curve, 0), DomainError);

  TorqueCurve mismatched = curve;
  mismatched.torque.pop_back();
  CHECK_THROWS_AS(fourier_components(mismatched, 2), DomainError);

  TorqueCurve skewed = curve;
  skewed.phi_grid[3] += 1e-6;
  CHECK_THROWS_AS(fourier_components(skewed, 2), DomainError);

  TorqueCurve empty;
  CHECK_THROWS_AS(fourier_components(empty, 1), DomainError);
}

TEST_CASE("sweep evaluates cases independently and in order") {
  SweepCase good;
  good.label = "good";
  good.config = small_config(3e-6, Handedness::right, Handedness::right, 8);
  good.fourier_orders = 2;

  SweepCase bad;
  bad.label = "bad";
  bad.config = good.config;
  bad.config.separation = -1.0;
  bad.fourier_orders = 2;

  const std::vector<SweepItem> items = sweep({good, bad});
  REQUIRE(items.size() == 2);

  CHECK(items[0].label == "good");
  CHECK(items[0].ok);
  CHECK(items[0].error.empty());
  REQUIRE(items[0].curve.torque.size() == 8);
  REQUIRE(items[0].spectrum.orders.size() == 2);
  CHECK(items[0].curve.energy[0] < 0.0);

  CHECK(items[1].label == "bad");
  CHECK_FALSE(items[1].ok);
  CHECK_FALSE(items[1].error.empty());
  CHECK(items[1].curve.torque.empty());

  CHECK(sweep({}).empty());
}
