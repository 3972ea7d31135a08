// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "chiralcas/berreman.hpp"
#include "chiralcas/cholesteric.hpp"
#include "chiralcas/media.hpp"

namespace chiralcas {

/// Brute-force discretization of a cholesteric: n_layers uniform layers of
/// thickness d, layer j at optic-axis angle theta_front + j * delta. Shadows
/// a continuous slab with pitch L = pi d / |delta|.
struct DiscreteStackSpec {
  int n_layers;
  double layer_thickness; ///< d (m), > 0
  double delta;           ///< per-layer rotation (rad), signed by handedness
  double theta_front = 0.0;
  DielectricModel model;
};

/// Throws DomainError when the stack invariants fail.
void validate_stack_spec(const DiscreteStackSpec& spec);

/// Stack that shadows the given slab at a chosen resolution: the layer count
/// is layers_per_pitch scaled to the slab thickness, d = d_tot / n, and
/// delta = handedness_sign * pi * d / pitch.
DiscreteStackSpec shadow_stack(const CholestericSlab& slab,
                               int layers_per_pitch);

/// Reference reflection matrix by the literal layer-product route: one
/// transfer matrix per layer (log-scale renormalized), multiplied in
/// physical order, then the same basis change and Fresnel extraction as the
/// pipeline. No orientation averaging is involved.
ReflectionMatrix discrete_stack_reflection(const DiscreteStackSpec& spec,
                                           const WaveIndices& wave,
                                           double gap_eps);

/// Analytic half-space Fresnel matrix at imaginary frequency:
/// r_ss = (k_3 - k_m)/(k_3 + k_m),
/// r_pp = (eps_gap k_m - eps_medium k_3)/(eps_gap k_m + eps_medium k_3),
/// r_sp = r_ps = 0, with k_m = sqrt(eps_medium zeta^2/c^2 + k_rho^2). The
/// p-polarization sign follows the pipeline's gap mode basis (which differs
/// from the common TM convention by an overall sign; energies are
/// unaffected since reflections always enter pairwise).
ReflectionMatrix isotropic_fresnel(double eps_gap, double eps_medium,
                                   const WaveIndices& wave);

/// Analytic finite-thickness isotropic slab (two-interface summation at
/// imaginary frequency): r = rho (1 - e^{-2 k_m d}) / (1 - rho^2 e^{-2 k_m d})
/// per polarization, with rho the half-space coefficient above.
ReflectionMatrix isotropic_slab_reflection(double eps_gap, double eps_medium,
                                           double thickness,
                                           const WaveIndices& wave);

/// Least-squares slope of log(error) against log(delta) for a convergence
/// sequence; entries with error = 0 are rejected (DomainError).
double convergence_slope(const std::vector<double>& deltas,
                         const std::vector<double>& errors);

/// Largest elementwise difference between two reflection matrices.
double max_element_diff(const ReflectionMatrix& a, const ReflectionMatrix& b);

} // namespace chiralcas
