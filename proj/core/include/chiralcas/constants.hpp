// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

namespace chiralcas {

/// Fixed CODATA physical constants; never user-configurable.
struct PhysicalConstants {
  double c;    ///< speed of light (m/s)
  double hbar; ///< reduced Planck constant (J s)
  double k_B;  ///< Boltzmann constant (J/K)
};

inline constexpr PhysicalConstants kConstants{299792458.0, 1.054571817e-34,
                                              1.380649e-23};

inline constexpr double kSpeedOfLight = kConstants.c;
inline constexpr double kHbar = kConstants.hbar;
inline constexpr double kBoltzmann = kConstants.k_B;

} // namespace chiralcas
