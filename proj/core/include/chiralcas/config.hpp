// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chiralcas/cholesteric.hpp"
#include "chiralcas/lifshitz.hpp"
#include "chiralcas/media.hpp"

namespace chiralcas {

/// Output destination and format ("csv" or "json").
struct OutputSpec {
  std::string path;
  std::string format = "csv";
};

/// One batch run parsed from a JSON file (schema documented in the README):
/// two slabs with resolved dielectric models, gap permittivity, thermal
/// grid, the separation grid in meters (config files give micrometers), and
/// the discretization/reporting knobs.
struct RunConfig {
  CholestericSlab slab1;
  CholestericSlab slab2;
  double gap_eps = 1.0;
  ThermalGrid thermal;
  std::vector<double> separations; ///< m, strictly positive, ascending
  QuadratureSpec quadrature;
  int fourier_orders = 2;
  OutputSpec output;
};

/// Parses and validates; throws ConfigError naming the offending field, or
/// IoError when the file cannot be read. Dielectric models may be given
/// inline per slab or by label into the file's "dielectrics" array.
RunConfig load_run_config(const std::string& path);

/// Re-checks every invariant on an assembled config (also called by
/// load_run_config).
void validate_run_config(const RunConfig& config);

/// Canonical single-line JSON rendering of the fully resolved config
/// (sorted keys, fixed float formatting); the reproducibility record
/// embedded in every output file.
std::string canonical_json(const RunConfig& config);

/// FNV-1a 64-bit hash of canonical_json, as fixed-width hex.
std::string config_hash(const RunConfig& config);

/// Interaction assembled from one run config at one separation.
InteractionConfig make_interaction(const RunConfig& config, double separation,
                                   unsigned threads);

} // namespace chiralcas
