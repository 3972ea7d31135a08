// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <utility>
#include <vector>

#include "chiralcas/mat.hpp"

namespace chiralcas {

/// Transverse wave labels at one imaginary frequency.
struct WaveIndices {
  double k_rho; ///< radial wavevector component (1/m), >= 0
  double eta;   ///< azimuthal wavevector angle (rad)
  double zeta;  ///< imaginary angular frequency (rad/s), >= 0
};

/// Uniaxial layer at one frequency: principal permittivities and the lab
/// angle of the optic axis. The out-of-plane permittivity equals eps_y and
/// all magnetic permeabilities are 1.
struct LayerOptics {
  double eps_x;
  double eps_y;
  double theta; ///< optic-axis angle relative to the laboratory x-axis (rad)
};

/// Real 4x4 first-order system matrix A: dPsi/dz = A Psi at omega = i zeta,
/// acting on the tangential field components. Anti-diagonal 2x2 block
/// structure (both diagonal blocks exactly zero).
struct SystemMatrix {
  Mat4 entries;
};

/// Eigenmode basis of one layer: eigenvalues (q_e, q_o) and the matrix S of
/// eigenvector columns ordered (e+, e-, o+, o-), where the "+" columns carry
/// A-eigenvalue -q (forward-decaying e^{-q z} modes, matching the gap basis).
struct ModeBasis {
  double q_e;
  double q_o;
  Mat4 S;
  Mat4 S_inv;
};

/// 4x4 transfer matrix in factored form: physical matrix = core *
/// exp(log_scale). The core's largest entry is kept within [1e-8, 1e8] so
/// products of arbitrarily many layers never overflow.
struct TransferMatrix4 {
  Mat4 core;
  double log_scale = 0.0;
};

/// Fresnel reflection matrix in the gap's s/p basis, acting on (a_s, a_p) as
/// [[r_ss, r_ps], [r_sp, r_pp]] (first index: outgoing polarization).
struct ReflectionMatrix {
  double r_ss = 0.0;
  double r_sp = 0.0;
  double r_ps = 0.0;
  double r_pp = 0.0;
};

/// Relative anisotropy |eps_x - eps_y| / max(eps) below which the eigenmode
/// basis refuses to resolve e/o labels and callers take the isotropic branch.
inline constexpr double kDegeneracyThreshold = 1e-13;

/// Renormalization band for TransferMatrix4 cores.
inline constexpr double kCoreBandLow = 1e-8;
inline constexpr double kCoreBandHigh = 1e8;

/// Throws DomainError on invalid fields (including zeta = k_rho = 0 where
/// required by the operation).
void validate_wave(const WaveIndices& wave);

/// k_3 = sqrt(eps_gap zeta^2/c^2 + k_rho^2), the decay constant in the gap.
double gap_k3(double eps_gap, const WaveIndices& wave);

/// System matrix with every entry made real by the analytic omega -> i zeta
/// substitution. Requires zeta > 0 (all entries scale with 1/omega).
SystemMatrix build_system_matrix(const LayerOptics& layer,
                                 const WaveIndices& wave);

/// (q_e, q_o): extraordinary and ordinary decay eigenvalues, both > 0.
std::pair<double, double> mode_eigenvalues(const LayerOptics& layer,
                                           const WaveIndices& wave);

/// Eigenvector basis with unit-norm columns; requires anisotropy above
/// kDegeneracyThreshold and zeta > 0. Throws DegeneracyError below threshold.
ModeBasis mode_basis(const LayerOptics& layer, const WaveIndices& wave);

/// Gap (isotropic) s/p basis with columns (s+, s-, p+, p-), kept verbatim
/// (not rescaled) because its column scaling defines the s/p amplitude
/// convention. Requires zeta > 0.
ModeBasis iso_basis(double eps_gap, const WaveIndices& wave);

/// Transfer matrix of one uniform layer of the given thickness:
/// S diag(e^{+q_e d}, e^{-q_e d}, e^{+q_o d}, e^{-q_o d}) S^{-1}, with the
/// dominant exponential folded into log_scale (never overflows).
TransferMatrix4 layer_transfer(const ModeBasis& basis, double thickness);

/// Product of layer transfer matrices in physical order (front layer first),
/// renormalizing the core after every multiplication.
TransferMatrix4 stack_transfer(const std::vector<TransferMatrix4>& layers);

/// M = S_0^{-1} T S_0: change from the lab field basis to the gap's s/p
/// mode basis; log_scale carried through unchanged.
TransferMatrix4 to_sp_basis(const TransferMatrix4& stack, const ModeBasis& iso);

/// Fresnel reflection matrix from the s/p-basis transfer matrix via the four
/// cofactor ratios over columns 1 and 3; log_scale cancels in every ratio.
ReflectionMatrix fresnel_from_transfer(const TransferMatrix4& M);

} // namespace chiralcas
