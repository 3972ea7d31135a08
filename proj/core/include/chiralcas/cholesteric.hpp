// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <utility>

#include "chiralcas/berreman.hpp"
#include "chiralcas/media.hpp"

namespace chiralcas {

/// Helix handedness (a pseudo-scalar: flips under parity).
enum class Handedness { left, right };

inline constexpr double handedness_sign(Handedness h) {
  return h == Handedness::right ? 1.0 : -1.0;
}

/// Finite cholesteric slab: total thickness, helix pitch (director rotates by
/// pi over one pitch), handedness, front-face optic-axis angle, and the
/// dielectric response of the material.
struct CholestericSlab {
  double d_tot;         ///< total thickness (m), > 0
  double pitch;         ///< helix pitch L (m), 0 < pitch < d_tot
  Handedness handedness = Handedness::right;
  double theta_front = 0.0; ///< front-face optic-axis angle (rad)
  DielectricModel model;
};

/// Throws DomainError when the slab invariants fail.
void validate_slab(const CholestericSlab& slab);

/// Helix-averaged single-mode description of a slab at one
/// (zeta, k_rho, eta); the azimuth enters through the averaging window.
struct AveragedMode {
  double q_int;     ///< averaged extraordinary eigenvalue (1/m)
  double theta_avg; ///< averaged orientation (rad), signed by handedness
  double q_e_avg;   ///< q_e evaluated at theta_avg; equals q_int to 1e-10
  double q_o;       ///< ordinary eigenvalue (1/m)
};

/// Which branch the regularized slab transfer took.
enum class SlabBranch { finite, semi_infinite };

/// Propagation direction selecting the inner sign of the orientation average.
enum class Direction { forward, backward };

/// max(q) * d_tot beyond which the finite-thickness branch switches to the
/// effective semi-infinite form (discarded terms are O(e^{-600})).
inline constexpr double kBranchSwitch = 300.0;

/// Pitch-averaged extraordinary eigenvalue: the integral of q_e over the
/// helix window actually swept by the slab, divided by the span
/// Theta = pi d_tot / L, to relative tolerance 1e-10. The window starts at
/// the front-face angle relative to the incidence plane
/// (theta_front - eta) and runs Theta in the handedness direction. Full
/// half-periods average to the intrinsic value (q_e is pi-periodic); the
/// fractional remainder keeps the front-angle dependence, which carries
/// the finite-thickness orientation effects. Slabs spanning an integer
/// number of half-periods therefore lose the eta dependence exactly.
double average_eigenvalue(const CholestericSlab& slab, const WaveIndices& wave,
                          std::pair<double, double> eps);

/// Averaged orientation recovered by inverting q_e(theta) = q_int. Outer
/// sign from handedness, inner sign (arccos branch) from direction;
/// forward gives |theta_avg| in [0, pi/2]. k_rho -> 0 and isotropic inputs
/// take the theta_avg = 0 branch (q_e is angle-independent there).
double average_theta(double q_int, const WaveIndices& wave,
                     std::pair<double, double> eps, Handedness handedness,
                     Direction direction);

/// Exponent arguments (+q_e_avg d, -q_e_avg d, +q_o d, -q_o d) of the
/// averaged propagator; exponentiation is deferred for overflow control.
std::array<double, 4> averaged_propagator(const AveragedMode& mode,
                                          double d_tot);

/// Composition helper: averaged eigenvalue, orientation (forward branch),
/// and the ordinary eigenvalue for one slab at one wave.
AveragedMode averaged_mode(const CholestericSlab& slab,
                           const WaveIndices& wave,
                           std::pair<double, double> eps);

struct RegularizedTransfer {
  TransferMatrix4 M; ///< s/p-basis transfer matrix (already through S_0)
  SlabBranch branch;
};

/// Regularized slab transfer: finite branch
/// S_0^{-1} S_1(<theta>) <P> S_1(<theta>)^{-1} S_0 with log-scaling, or the
/// semi-infinite branch S_0^{-1} S_1(<theta>) when max(q) d_tot exceeds
/// kBranchSwitch. The lab optic-axis angle is theta_front + theta_avg.
RegularizedTransfer slab_transfer_regularized(const CholestericSlab& slab,
                                              const WaveIndices& wave,
                                              std::pair<double, double> eps,
                                              const AveragedMode& mode,
                                              const ModeBasis& iso);

/// Eta-independent per-slab precomputation at one (zeta, k_rho). The
/// averaged mode itself depends on theta_front - eta through the helix
/// window, so reflections rebuild it per azimuth from the cached
/// half-period integral instead of storing one mode here.
struct SlabWaveData {
  std::pair<double, double> eps; ///< (eps_x, eps_y) at this zeta
  bool isotropic = false;        ///< degeneracy branch taken
  double i_half = 0.0;           ///< integral of q_e over one half-period
  double q_o = 0.0;              ///< ordinary eigenvalue (1/m)
};

/// Precompute the eta-independent slab data (permittivities, half-period
/// eigenvalue integral, ordinary eigenvalue). wave.eta is ignored here.
SlabWaveData slab_wave_data(const CholestericSlab& slab,
                            const WaveIndices& wave);

/// Reflection using precomputed slab data; wave supplies the azimuth. Pass
/// the gap mode basis to share it across slabs, or nullptr to build one
/// locally (required only for zeta > 0 on the anisotropic path).
ReflectionMatrix slab_reflection_with(const CholestericSlab& slab,
                                      const WaveIndices& wave, double eps_gap,
                                      const SlabWaveData& data,
                                      const ModeBasis* iso = nullptr);

/// Full reflection pipeline for one slab at one wave. Dispatches to the
/// closed-form isotropic branch below the degeneracy threshold and to the
/// closed-form electrostatic branch at zeta = 0.
ReflectionMatrix slab_reflection(const CholestericSlab& slab,
                                 const WaveIndices& wave, double eps_gap);

} // namespace chiralcas
