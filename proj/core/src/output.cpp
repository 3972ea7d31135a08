// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include "chiralcas/output.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "chiralcas/errors.hpp"

namespace chiralcas {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write output file: " + path);
  return out;
}

void write_metadata_lines(std::ofstream& out, const FileMetadata& meta) {
  out << "# chiralcas " << meta.version << "\n";
  out << "# config_hash " << meta.config_hash << "\n";
  out << "# config " << meta.config_json << "\n";
}

nlohmann::json metadata_json(const FileMetadata& meta) {
  return nlohmann::json{
      {"generator", "chiralcas"},
      {"version", meta.version},
      {"config_hash", meta.config_hash},
      {"config", nlohmann::json::parse(meta.config_json)}};
}

nlohmann::json curve_json(const TorqueCurve& curve) {
  return nlohmann::json{{"separation_m", curve.separation},
                        {"phi_rad", curve.phi_grid},
                        {"energy_J_per_m2", curve.energy},
                        {"torque_J_per_m2_rad", curve.torque}};
}

nlohmann::json spectrum_json(const FourierSpectrum& spec) {
  return nlohmann::json{{"separation_m", spec.separation},
                        {"orders", spec.orders},
                        {"a_m", spec.a},
                        {"b_m", spec.b}};
}

} // namespace

void write_torque_csv(const std::string& path, const TorqueCurve& curve,
                      const FileMetadata& meta) {
  std::ofstream out = open_out(path);
  write_metadata_lines(out, meta);
  out << "# separation_m " << format_double(curve.separation) << "\n";
  out << "phi_rad,energy_J_per_m2,torque_J_per_m2_rad\n";
  for (std::size_t k = 0; k < curve.phi_grid.size(); ++k) {
    out << format_double(curve.phi_grid[k]) << ','
        << format_double(curve.energy[k]) << ','
        << format_double(curve.torque[k]) << '\n';
  }
  if (!out) throw IoError("short write to output file: " + path);
}

void write_torque_json(const std::string& path, const TorqueCurve& curve,
                       const FileMetadata& meta) {
  std::ofstream out = open_out(path);
  nlohmann::json j = curve_json(curve);
  j["metadata"] = metadata_json(meta);
  out << j.dump(2) << "\n";
  if (!out) throw IoError("short write to output file: " + path);
}

void write_fourier_csv(const std::string& path, const FourierSpectrum& spec,
                       const FileMetadata& meta) {
  std::ofstream out = open_out(path);
  write_metadata_lines(out, meta);
  out << "# separation_m " << format_double(spec.separation) << "\n";
  out << "m,a_m,b_m,a_m_over_b1,b_m_over_b1\n";
  const double b1 = spec.b.empty() ? 0.0 : spec.b.front();
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    out << spec.orders[i] << ',' << format_double(spec.a[i]) << ','
        << format_double(spec.b[i]) << ',';
    if (b1 != 0.0) {
      out << format_double(spec.a[i] / b1) << ','
          << format_double(spec.b[i] / b1);
    } else {
      out << ',';
    }
    out << '\n';
  }
  if (!out) throw IoError("short write to output file: " + path);
}

void write_fourier_json(const std::string& path, const FourierSpectrum& spec,
                        const FileMetadata& meta) {
  std::ofstream out = open_out(path);
  nlohmann::json j = spectrum_json(spec);
  j["metadata"] = metadata_json(meta);
  const double b1 = spec.b.empty() ? 0.0 : spec.b.front();
  if (b1 != 0.0) {
    std::vector<double> ra, rb;
    for (std::size_t i = 0; i < spec.orders.size(); ++i) {
      ra.push_back(spec.a[i] / b1);
      rb.push_back(spec.b[i] / b1);
    }
    j["a_m_over_b1"] = ra;
    j["b_m_over_b1"] = rb;
  }
  out << j.dump(2) << "\n";
  if (!out) throw IoError("short write to output file: " + path);
}

void write_sweep_json(const std::string& path,
                      const std::vector<SweepItem>& items,
                      const FileMetadata& meta) {
  std::ofstream out = open_out(path);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& item : items) {
    nlohmann::json j{{"label", item.label}, {"ok", item.ok}};
    if (item.ok) {
      j["curve"] = curve_json(item.curve);
      j["spectrum"] = spectrum_json(item.spectrum);
    } else {
      j["error"] = item.error;
    }
    arr.push_back(std::move(j));
  }
  nlohmann::json doc{{"metadata", metadata_json(meta)},
                     {"cases", std::move(arr)}};
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("short write to output file: " + path);
}

void write_energy_json(const std::string& path, const EnergyResult& result,
                       double phi, double separation,
                       double eta_refine_residual, const FileMetadata& meta) {
  std::ofstream out = open_out(path);
  nlohmann::json j{{"energy_J_per_m2", result.energy},
                   {"phi_rad", phi},
                   {"separation_m", separation},
                   {"matsubara_terms_used", result.terms_used},
                   {"matsubara_term_magnitudes", result.term_magnitudes},
                   {"eta_refine_residual_rel", eta_refine_residual},
                   {"metadata", metadata_json(meta)}};
  out << j.dump(2) << "\n";
  if (!out) throw IoError("short write to output file: " + path);
}

} // namespace chiralcas
