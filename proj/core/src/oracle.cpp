// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include "chiralcas/oracle.hpp"

#include <cmath>
#include <numbers>

#include "chiralcas/constants.hpp"
#include "chiralcas/errors.hpp"

namespace chiralcas {

void validate_stack_spec(const DiscreteStackSpec& spec) {
  if (spec.n_layers < 1) throw DomainError("stack: n_layers must be >= 1");
  if (!(spec.layer_thickness > 0.0)) {
    throw DomainError("stack: layer_thickness must be > 0");
  }
  if (!std::isfinite(spec.delta) || !std::isfinite(spec.theta_front)) {
    throw DomainError("stack: delta and theta_front must be finite");
  }
}

DiscreteStackSpec shadow_stack(const CholestericSlab& slab,
                               int layers_per_pitch) {
  validate_slab(slab);
  if (layers_per_pitch < 1) {
    throw DomainError("shadow_stack: layers_per_pitch must be >= 1");
  }
  DiscreteStackSpec spec;
  spec.n_layers = static_cast<int>(
      std::lround(layers_per_pitch * slab.d_tot / slab.pitch));
  if (spec.n_layers < 1) spec.n_layers = 1;
  spec.layer_thickness = slab.d_tot / spec.n_layers;
  spec.delta = handedness_sign(slab.handedness) * std::numbers::pi *
               spec.layer_thickness / slab.pitch;
  spec.theta_front = slab.theta_front;
  spec.model = slab.model;
  return spec;
}

ReflectionMatrix discrete_stack_reflection(const DiscreteStackSpec& spec,
                                           const WaveIndices& wave,
                                           double gap_eps) {
  validate_stack_spec(spec);
  validate_wave(wave);
  if (gap_eps < 1.0) {
    throw DomainError("discrete_stack_reflection: gap_eps must be >= 1");
  }
  const auto eps = eval_permittivity(spec.model, wave.zeta);
  std::vector<TransferMatrix4> layers;
  layers.reserve(static_cast<std::size_t>(spec.n_layers));
  for (int j = 0; j < spec.n_layers; ++j) {
    const LayerOptics layer{eps.first, eps.second,
                            spec.theta_front + j * spec.delta};
    layers.push_back(
        layer_transfer(mode_basis(layer, wave), spec.layer_thickness));
  }
  const TransferMatrix4 stacked = stack_transfer(layers);
  const ModeBasis iso = iso_basis(gap_eps, wave);
  return fresnel_from_transfer(to_sp_basis(stacked, iso));
}

ReflectionMatrix isotropic_fresnel(double eps_gap, double eps_medium,
                                   const WaveIndices& wave) {
  validate_wave(wave);
  if (eps_gap < 1.0 || eps_medium < 1.0) {
    throw DomainError("isotropic_fresnel: permittivities must be >= 1");
  }
  if (wave.zeta == 0.0 && wave.k_rho == 0.0) {
    throw DomainError("degenerate static mode: zeta = k_rho = 0");
  }
  const double z = wave.zeta / kSpeedOfLight;
  const double k2 = wave.k_rho * wave.k_rho;
  const double k3 = std::sqrt(eps_gap * z * z + k2);
  const double km = std::sqrt(eps_medium * z * z + k2);
  ReflectionMatrix r;
  r.r_ss = (k3 - km) / (k3 + km);
  r.r_pp = (eps_gap * km - eps_medium * k3) / (eps_gap * km + eps_medium * k3);
  return r;
}

ReflectionMatrix isotropic_slab_reflection(double eps_gap, double eps_medium,
                                           double thickness,
                                           const WaveIndices& wave) {
  if (!(thickness >= 0.0)) {
    throw DomainError("isotropic_slab_reflection: thickness must be >= 0");
  }
  const ReflectionMatrix half = isotropic_fresnel(eps_gap, eps_medium, wave);
  const double z = wave.zeta / kSpeedOfLight;
  const double km =
      std::sqrt(eps_medium * z * z + wave.k_rho * wave.k_rho);
  const double x = 2.0 * km * thickness;
  if (x > 2.0 * kBranchSwitch) return half;
  const double e2 = std::exp(-x);
  ReflectionMatrix r;
  r.r_ss = half.r_ss * (1.0 - e2) / (1.0 - half.r_ss * half.r_ss * e2);
  r.r_pp = half.r_pp * (1.0 - e2) / (1.0 - half.r_pp * half.r_pp * e2);
  return r;
}

double convergence_slope(const std::vector<double>& deltas,
                         const std::vector<double>& errors) {
  if (deltas.size() != errors.size() || deltas.size() < 2) {
    throw DomainError("convergence_slope: need >= 2 matched samples");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0) || !(errors[i] > 0.0)) {
      throw DomainError("convergence_slope: samples must be positive");
    }
    const double lx = std::log(deltas[i]);
    const double ly = std::log(errors[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (std::fabs(denom) < 1e-30) {
    throw DomainError("convergence_slope: degenerate abscissae");
  }
  return (n * sxy - sx * sy) / denom;
}

double max_element_diff(const ReflectionMatrix& a, const ReflectionMatrix& b) {
  return std::max(
      std::max(std::fabs(a.r_ss - b.r_ss), std::fabs(a.r_sp - b.r_sp)),
      std::max(std::fabs(a.r_ps - b.r_ps), std::fabs(a.r_pp - b.r_pp)));
}

} // namespace chiralcas
