// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chiralcas {

/// One undamped Lorentz oscillator evaluated on the imaginary frequency axis:
/// contributes strength / (1 + (zeta/resonance)^2).
struct OscillatorTerm {
  double strength;  ///< dimensionless amplitude, >= 0
  double resonance; ///< angular frequency (rad/s), > 0
};

/// Uniaxial dielectric response: a constant Debye term plus oscillators, per
/// principal axis. Values are illustrative example data unless the user
/// supplies their own file; the physics only requires the invariants
/// (eps >= 1 everywhere, monotone non-increasing in zeta).
struct DielectricModel {
  std::string label;
  double debye_static_x = 1.0;
  double debye_static_y = 1.0;
  std::vector<OscillatorTerm> oscillators_x;
  std::vector<OscillatorTerm> oscillators_y;
};

/// Matsubara summation parameters.
struct ThermalGrid {
  double temperature = 298.15; ///< K, > 0
  int max_terms = 5000;        ///< hard cap on the Matsubara index
  double rel_tol = 1e-8;       ///< relative truncation tolerance
};

/// zeta_n = 2 pi n k_B T / hbar; exactly 0 for n = 0.
double matsubara_frequency(int n, const ThermalGrid& grid);

/// (eps_x, eps_y) at imaginary frequency zeta >= 0.
std::pair<double, double> eval_permittivity(const DielectricModel& model,
                                            double zeta);

/// Throws ConfigError naming the offending entry when an invariant fails.
void validate_dielectric_model(const DielectricModel& model);

/// JSON file I/O for dielectric models (schema documented in the README).
DielectricModel load_dielectric_model(const std::string& path);
void save_dielectric_model(const DielectricModel& model,
                           const std::string& path);

} // namespace chiralcas
