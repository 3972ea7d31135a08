// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include "chiralcas/cholesteric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chiralcas/constants.hpp"
#include "chiralcas/errors.hpp"
#include "chiralcas/quadrature.hpp"

namespace chiralcas {

void validate_slab(const CholestericSlab& slab) {
  if (!(slab.d_tot > 0.0)) throw DomainError("slab: d_tot must be > 0");
  if (!(slab.pitch > 0.0) || !(slab.pitch < slab.d_tot)) {
    throw DomainError("slab: pitch must satisfy 0 < pitch < d_tot (at least "
                      "one pitch inside the slab)");
  }
  if (!std::isfinite(slab.theta_front)) {
    throw DomainError("slab: theta_front must be finite");
  }
}

namespace {

constexpr double kAverageTol = 1e-10;

// Extraordinary eigenvalue at one relative angle (optic axis minus
// incidence azimuth).
double q_e_at(double theta, double ex, double ey, double z, double k2) {
  const double c = std::cos(theta), s = std::sin(theta);
  return std::sqrt(ex * z * z + (ex / ey) * k2 * c * c + k2 * s * s);
}

// Integral of q_e over one half-period; by pi-periodicity this is the only
// eta-independent piece of the window average.
double half_period_integral(std::pair<double, double> eps,
                            const WaveIndices& wave) {
  const double ex = eps.first, ey = eps.second;
  const double z = wave.zeta / kSpeedOfLight;
  const double k2 = wave.k_rho * wave.k_rho;
  return integrate_adaptive(
      [&](double theta) { return q_e_at(theta, ex, ey, z, k2); }, 0.0,
      std::numbers::pi, kAverageTol);
}

// Window average of q_e: the relative angle runs from
// theta_front - eta at the gap face across Theta = pi d_tot / L in the
// handedness direction. Full half-periods contribute i_half each; only the
// fractional remainder depends on where the window starts.
double windowed_average(const CholestericSlab& slab, const WaveIndices& wave,
                        std::pair<double, double> eps, double i_half) {
  const double ex = eps.first, ey = eps.second;
  const double z = wave.zeta / kSpeedOfLight;
  const double k2 = wave.k_rho * wave.k_rho;
  const double span = std::numbers::pi * slab.d_tot / slab.pitch;
  const double psi_front = slab.theta_front - wave.eta;
  const double start =
      handedness_sign(slab.handedness) > 0 ? psi_front : psi_front - span;
  const double full = std::floor(span / std::numbers::pi);
  const double rem = span - full * std::numbers::pi;
  double integral = full * i_half;
  if (rem > 0.0) {
    integral += integrate_adaptive(
        [&](double theta) { return q_e_at(theta, ex, ey, z, k2); },
        start + full * std::numbers::pi, start + span, kAverageTol);
  }
  return integral / span;
}

} // namespace

double average_eigenvalue(const CholestericSlab& slab, const WaveIndices& wave,
                          std::pair<double, double> eps) {
  validate_slab(slab);
  validate_wave(wave);
  return windowed_average(slab, wave, eps, half_period_integral(eps, wave));
}

double average_theta(double q_int, const WaveIndices& wave,
                     std::pair<double, double> eps, Handedness handedness,
                     Direction direction) {
  validate_wave(wave);
  const double ex = eps.first, ey = eps.second;
  if (std::fabs(ex - ey) <= kDegeneracyThreshold * std::max(ex, ey)) {
    throw DegeneracyError("average_theta: eps_x and eps_y are degenerate");
  }
  const double z = wave.zeta / kSpeedOfLight;
  const double k2 = wave.k_rho * wave.k_rho;
  const double denom = k2 * (ex / ey - 1.0);
  // When q_e is angle-independent to working precision (k_rho -> 0 or a
  // vanishing anisotropy lever arm), the orientation is physically
  // meaningless; take the conventional branch theta_avg = 0.
  if (std::fabs(denom) <= 1e-8 * q_int * q_int) return 0.0;
  double w = (q_int * q_int - ex * z * z - k2) / denom;
  constexpr double slack = 1e-9;
  if (w < -slack || w > 1.0 + slack) {
    throw InversionDomainError(
        "average_theta: arccos argument outside [0, 1] beyond tolerance "
        "(inconsistent averaged eigenvalue)");
  }
  w = std::clamp(w, 0.0, 1.0);
  double alpha = std::acos(std::sqrt(w));
  if (direction == Direction::backward) alpha = std::numbers::pi - alpha;
  return handedness_sign(handedness) * alpha;
}

std::array<double, 4> averaged_propagator(const AveragedMode& mode,
                                          double d_tot) {
  if (d_tot < 0.0) throw DomainError("averaged_propagator: d_tot must be >= 0");
  return {mode.q_e_avg * d_tot, -mode.q_e_avg * d_tot, mode.q_o * d_tot,
          -mode.q_o * d_tot};
}

namespace {

// Averaged mode from a precomputed half-period integral: windowed q_int,
// the orientation that inverts it, and the matched q_e.
AveragedMode mode_from_half(const CholestericSlab& slab,
                            const WaveIndices& wave,
                            std::pair<double, double> eps, double i_half,
                            double q_o) {
  AveragedMode mode{};
  mode.q_int = windowed_average(slab, wave, eps, i_half);
  mode.theta_avg = average_theta(mode.q_int, wave, eps, slab.handedness,
                                 Direction::forward);
  const double z = wave.zeta / kSpeedOfLight;
  const double k2 = wave.k_rho * wave.k_rho;
  mode.q_e_avg = q_e_at(mode.theta_avg, eps.first, eps.second, z, k2);
  mode.q_o = q_o;
  return mode;
}

} // namespace

AveragedMode averaged_mode(const CholestericSlab& slab, const WaveIndices& wave,
                           std::pair<double, double> eps) {
  validate_slab(slab);
  validate_wave(wave);
  const double z = wave.zeta / kSpeedOfLight;
  const double k2 = wave.k_rho * wave.k_rho;
  const double q_o = std::sqrt(eps.second * z * z + k2);
  return mode_from_half(slab, wave, eps, half_period_integral(eps, wave), q_o);
}

namespace {

// Uniform-medium transfer with explicit exponent arguments (the averaged
// propagator uses q_int, which differs from the basis's pointwise q_e).
TransferMatrix4 transfer_from_args(const ModeBasis& basis,
                                   const std::array<double, 4>& args) {
  const double m = std::max(args[0], args[2]);
  TransferMatrix4 t;
  t.log_scale = m;
  Mat4 sd;
  for (int i = 0; i < 4; ++i) {
    const double e = std::exp(args[static_cast<std::size_t>(i)] - m);
    for (int r = 0; r < 4; ++r) sd(r, i) = basis.S(r, i) * e;
  }
  t.core = sd * basis.S_inv;
  return t;
}

// Closed-form isotropic slab reflection (two-interface form at imaginary
// frequency). Kept private and separate from the oracle module on purpose:
// the oracle must remain an independent referee.
ReflectionMatrix iso_slab_closed(double eps_gap, double eps_medium,
                                 double thickness, const WaveIndices& wave) {
  const double k3 = gap_k3(eps_gap, wave);
  const double km = gap_k3(eps_medium, wave);
  const double rho_s = (k3 - km) / (k3 + km);
  const double rho_p = (eps_gap * km - eps_medium * k3) /
                       (eps_gap * km + eps_medium * k3);
  ReflectionMatrix r;
  if (km * thickness > kBranchSwitch) {
    r.r_ss = rho_s;
    r.r_pp = rho_p;
    return r;
  }
  const double e2 = std::exp(-2.0 * km * thickness);
  r.r_ss = rho_s * (1.0 - e2) / (1.0 - rho_s * rho_s * e2);
  r.r_pp = rho_p * (1.0 - e2) / (1.0 - rho_p * rho_p * e2);
  return r;
}

// Electrostatic (zeta = 0) closed form: only the p-p element survives, with
// effective index sqrt(eps_y eps_par) and decay kappa = k_rho
// sqrt(eps_par/eps_y) at the averaged orientation.
ReflectionMatrix static_reflection(const CholestericSlab& slab,
                                   const WaveIndices& wave,
                                   std::pair<double, double> eps,
                                   double eps_gap, const AveragedMode& mode) {
  const double ex = eps.first, ey = eps.second;
  const double psi = slab.theta_front + mode.theta_avg - wave.eta;
  const double c = std::cos(psi), s = std::sin(psi);
  const double epar = ex * c * c + ey * s * s;
  const double eeff = std::sqrt(ey * epar);
  const double kappa = wave.k_rho * std::sqrt(epar / ey);
  const double rho = (eps_gap - eeff) / (eps_gap + eeff);
  ReflectionMatrix r;
  if (kappa * slab.d_tot > kBranchSwitch) {
    r.r_pp = rho;
    return r;
  }
  const double e2 = std::exp(-2.0 * kappa * slab.d_tot);
  r.r_pp = rho * (1.0 - e2) / (1.0 - rho * rho * e2);
  return r;
}

} // namespace

RegularizedTransfer slab_transfer_regularized(const CholestericSlab& slab,
                                              const WaveIndices& wave,
                                              std::pair<double, double> eps,
                                              const AveragedMode& mode,
                                              const ModeBasis& iso) {
  const LayerOptics layer{eps.first, eps.second,
                          slab.theta_front + mode.theta_avg};
  const ModeBasis s1 = mode_basis(layer, wave);
  RegularizedTransfer out;
  if (std::max(mode.q_e_avg, mode.q_o) * slab.d_tot > kBranchSwitch) {
    out.branch = SlabBranch::semi_infinite;
    out.M.core = iso.S_inv * s1.S;
    out.M.log_scale = 0.0;
  } else {
    out.branch = SlabBranch::finite;
    const TransferMatrix4 t =
        transfer_from_args(s1, averaged_propagator(mode, slab.d_tot));
    out.M = to_sp_basis(t, iso);
  }
  return out;
}

SlabWaveData slab_wave_data(const CholestericSlab& slab,
                            const WaveIndices& wave) {
  validate_slab(slab);
  validate_wave(wave);
  if (wave.zeta == 0.0 && wave.k_rho == 0.0) {
    throw DomainError("degenerate static mode: zeta = k_rho = 0");
  }
  SlabWaveData data;
  data.eps = eval_permittivity(slab.model, wave.zeta);
  data.isotropic = std::fabs(data.eps.first - data.eps.second) <=
                   kDegeneracyThreshold *
                       std::max(data.eps.first, data.eps.second);
  if (!data.isotropic) {
    data.i_half = half_period_integral(data.eps, wave);
    const double z = wave.zeta / kSpeedOfLight;
    const double k2 = wave.k_rho * wave.k_rho;
    data.q_o = std::sqrt(data.eps.second * z * z + k2);
  }
  return data;
}

ReflectionMatrix slab_reflection_with(const CholestericSlab& slab,
                                      const WaveIndices& wave, double eps_gap,
                                      const SlabWaveData& data,
                                      const ModeBasis* iso) {
  if (eps_gap < 1.0) throw DomainError("slab_reflection: eps_gap must be >= 1");
  if (data.isotropic) {
    const double em = 0.5 * (data.eps.first + data.eps.second);
    return iso_slab_closed(eps_gap, em, slab.d_tot, wave);
  }
  const AveragedMode mode =
      mode_from_half(slab, wave, data.eps, data.i_half, data.q_o);
  if (wave.zeta == 0.0) {
    return static_reflection(slab, wave, data.eps, eps_gap, mode);
  }
  if (iso != nullptr) {
    return fresnel_from_transfer(
        slab_transfer_regularized(slab, wave, data.eps, mode, *iso).M);
  }
  const ModeBasis local_iso = iso_basis(eps_gap, wave);
  return fresnel_from_transfer(
      slab_transfer_regularized(slab, wave, data.eps, mode, local_iso).M);
}

ReflectionMatrix slab_reflection(const CholestericSlab& slab,
                                 const WaveIndices& wave, double eps_gap) {
  const SlabWaveData data = slab_wave_data(slab, wave);
  return slab_reflection_with(slab, wave, eps_gap, data, nullptr);
}

} // namespace chiralcas
