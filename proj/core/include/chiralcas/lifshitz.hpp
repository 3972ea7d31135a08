// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "chiralcas/berreman.hpp"
#include "chiralcas/cholesteric.hpp"
#include "chiralcas/media.hpp"

namespace chiralcas {

/// Discretization of the free-energy integrals. The radial integral runs in
/// the substituted variable u = 2 k_3 a (the integrand carries e^{-u}), on
/// Gauss-Legendre panels [0,5], [5,20], [20,krho_cut] clipped to the
/// propagating region; the azimuth uses the uniform trapezoid rule, which
/// converges spectrally for the periodic integrand.
struct QuadratureSpec {
  int n_eta = 32;         ///< trapezoid points on [0, 2pi); even, >= 8
  int n_krho = 40;        ///< Gauss-Legendre points per radial panel
  double krho_cut = 60.0; ///< stop where 2 k_3 a exceeds this (tail < 1e-26)
  int phi_points = 64;    ///< uniform phi samples on [0, pi); even, >= 8
};

/// Two slabs facing each other across an isotropic gap of width `separation`.
/// In paired-energy evaluations the misalignment angle phi is defined as the
/// angle between the front-face optic axes, so slab2 enters with effective
/// front angle slab1.theta_front + phi and slab2.theta_front is not used
/// there (it still applies to standalone single-slab reflection calls).
struct InteractionConfig {
  CholestericSlab slab1;
  CholestericSlab slab2;
  double gap_eps = 1.0; ///< permittivity of the gap, >= 1
  double separation;    ///< gap width a (m), > 0
  ThermalGrid thermal;
  QuadratureSpec quadrature;
  unsigned threads = 0; ///< worker threads for phi grids; 0 = hardware
};

/// Throws DomainError / ConfigError when an invariant fails.
void validate_quadrature(const QuadratureSpec& spec);
void validate_interaction_config(const InteractionConfig& config);

/// Free energy per unit area at one misalignment angle, with the Matsubara
/// breakdown kept for diagnostics.
struct EnergyResult {
  double energy = 0.0; ///< E/A (J/m^2)
  /// magnitude of each summed Matsubara contribution, index = n (the n = 0
  /// entry carries its 1/2 weight); non-increasing for n >= 1
  std::vector<double> term_magnitudes;
  int terms_used = 0; ///< number of entries actually summed
};

/// Energy and torque sampled on the uniform phi grid phi_k = k pi / P.
struct TorqueCurve {
  std::vector<double> phi_grid;  ///< rad, uniform on [0, pi)
  std::vector<double> energy;    ///< E/A (J/m^2)
  std::vector<double> torque;    ///< -dE/dphi, spectral (J/(m^2 rad))
  std::vector<double> torque_fd; ///< same by 5-point central differences
  double separation = 0.0;       ///< m
};

/// Fourier components of the torque over the pi period:
/// a_m = (2/pi) int tau cos(2 m phi) dphi, b_m likewise with sin.
struct FourierSpectrum {
  std::vector<int> orders;  ///< m = 1..M
  std::vector<double> a;    ///< cosine coefficients (J/(m^2 rad))
  std::vector<double> b;    ///< sine coefficients (J/(m^2 rad))
  double separation = 0.0;  ///< m
};

/// ln det(I - r1 r2 e^{-2 k3 a}) for the 2x2 reflection pair, via the
/// closed-form determinant and log1p. Symmetric under swapping r1 and r2
/// (Sylvester identity). Throws NonpositiveDeterminantError when the
/// determinant argument is <= 0.
double log_det_D(const ReflectionMatrix& r1, const ReflectionMatrix& r2,
                 double k3, double a);

/// Free energy per unit area (Lifshitz sum) at misalignment angle phi:
/// Matsubara sum (weight 1/2 at n = 0, truncated when three consecutive
/// terms fall below rel_tol of the partial sum) over the (u, eta) quadrature
/// of ln det D. Throws ConvergenceError when max_terms is reached without
/// meeting the tolerance.
EnergyResult energy_per_area(const InteractionConfig& config, double phi);

/// Energy on the phi grid plus the torque by spectral differentiation of the
/// discrete Fourier series (period pi), cross-checked by the stored central
/// difference column. Parallel over phi nodes, deterministic by
/// construction (results are gathered per node, never reduced racily).
TorqueCurve torque_curve(const InteractionConfig& config);

/// Torque Fourier coefficients up to order M from a uniform curve; exact for
/// band-limited input below the grid Nyquist order. Requires 2M <
/// phi_points (DomainError otherwise: the coefficients would alias).
FourierSpectrum fourier_components(const TorqueCurve& curve, int max_order);

/// One labelled sweep entry: a full interaction configuration plus the
/// number of Fourier orders to report.
struct SweepCase {
  std::string label;
  InteractionConfig config;
  int fourier_orders = 2;
};

/// Sweep result for one case; `ok` is false when evaluation threw, with the
/// message captured in `error` and the payload fields left empty.
struct SweepItem {
  std::string label;
  bool ok = false;
  std::string error;
  TorqueCurve curve;
  FourierSpectrum spectrum;
};

/// Evaluates each case independently; output order equals input order and
/// per-case failures are captured, not propagated.
std::vector<SweepItem> sweep(const std::vector<SweepCase>& cases);

} // namespace chiralcas
