// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "chiralcas/lifshitz.hpp"

namespace chiralcas {

/// Shortest-faithful decimal rendering of a double (%.17g); the same value
/// always renders to the same bytes, making outputs golden-file testable.
std::string format_double(double v);

/// Reproducibility record embedded in every output file: library version,
/// config hash, and the full resolved config as one JSON line. No
/// timestamps, so identical runs produce identical bytes.
struct FileMetadata {
  std::string version;
  std::string config_hash;
  std::string config_json;
};

/// CSV with '#' metadata lines, then one row per phi node:
/// phi_rad,energy_J_per_m2,torque_J_per_m2_rad. Throws IoError when the
/// path cannot be written.
void write_torque_csv(const std::string& path, const TorqueCurve& curve,
                      const FileMetadata& meta);

/// Same curve as a JSON document (metadata object plus column arrays).
void write_torque_json(const std::string& path, const TorqueCurve& curve,
                       const FileMetadata& meta);

/// CSV rows m,a_m,b_m,a_m_over_b1,b_m_over_b1 (ratio columns follow the
/// spectrum-as-fraction-of-the-leading-sine presentation; they are empty
/// strings when b_1 = 0).
void write_fourier_csv(const std::string& path, const FourierSpectrum& spec,
                       const FileMetadata& meta);

/// Same spectrum as a JSON document.
void write_fourier_json(const std::string& path, const FourierSpectrum& spec,
                        const FileMetadata& meta);

/// Whole sweep as one JSON document: an array of per-case objects carrying
/// label, status, and (when successful) the curve and spectrum.
void write_sweep_json(const std::string& path,
                      const std::vector<SweepItem>& items,
                      const FileMetadata& meta);

/// Scalar energy report as JSON (energy, Matsubara diagnostics, metadata).
void write_energy_json(const std::string& path, const EnergyResult& result,
                       double phi, double separation,
                       double eta_refine_residual, const FileMetadata& meta);

} // namespace chiralcas
