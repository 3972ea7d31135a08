// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include "chiralcas/media.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "chiralcas/constants.hpp"
#include "chiralcas/errors.hpp"
#include "internal_json.hpp"

namespace chiralcas {

double matsubara_frequency(int n, const ThermalGrid& grid) {
  if (n < 0) throw DomainError("matsubara_frequency: n must be >= 0");
  if (grid.temperature <= 0.0) {
    throw DomainError("matsubara_frequency: temperature must be > 0");
  }
  if (n == 0) return 0.0;
  return 2.0 * std::numbers::pi * n * kBoltzmann * grid.temperature / kHbar;
}

namespace {

double eval_axis(double debye_static,
                 const std::vector<OscillatorTerm>& oscillators, double zeta) {
  double eps = debye_static;
  for (const OscillatorTerm& t : oscillators) {
    const double r = zeta / t.resonance;
    eps += t.strength / (1.0 + r * r);
  }
  return eps;
}

void validate_axis(const char* axis, double debye_static,
                   const std::vector<OscillatorTerm>& oscillators) {
  std::ostringstream msg;
  if (debye_static < 1.0) {
    msg << "dielectric model: debye_static_" << axis << " = " << debye_static
        << " violates eps >= 1";
    throw ConfigError(msg.str());
  }
  for (std::size_t k = 0; k < oscillators.size(); ++k) {
    if (oscillators[k].strength < 0.0) {
      msg << "dielectric model: oscillators_" << axis << "[" << k
          << "].strength = " << oscillators[k].strength << " must be >= 0";
      throw ConfigError(msg.str());
    }
    if (!(oscillators[k].resonance > 0.0)) {
      msg << "dielectric model: oscillators_" << axis << "[" << k
          << "].resonance = " << oscillators[k].resonance << " must be > 0";
      throw ConfigError(msg.str());
    }
  }
}

} // namespace

std::pair<double, double> eval_permittivity(const DielectricModel& model,
                                            double zeta) {
  if (zeta < 0.0) throw DomainError("eval_permittivity: zeta must be >= 0");
  return {eval_axis(model.debye_static_x, model.oscillators_x, zeta),
          eval_axis(model.debye_static_y, model.oscillators_y, zeta)};
}

void validate_dielectric_model(const DielectricModel& model) {
  validate_axis("x", model.debye_static_x, model.oscillators_x);
  validate_axis("y", model.debye_static_y, model.oscillators_y);
}

namespace {

std::vector<OscillatorTerm> parse_oscillators(const nlohmann::json& j,
                                              const char* key) {
  std::vector<OscillatorTerm> out;
  if (!j.contains(key)) return out;
  for (const auto& item : j.at(key)) {
    out.push_back(OscillatorTerm{item.at("strength").get<double>(),
                                 item.at("resonance_rad_s").get<double>()});
  }
  return out;
}

nlohmann::json oscillators_to_json(const std::vector<OscillatorTerm>& list) {
  nlohmann::json arr = nlohmann::json::array();
  for (const OscillatorTerm& t : list) {
    arr.push_back({{"strength", t.strength}, {"resonance_rad_s", t.resonance}});
  }
  return arr;
}

} // namespace

DielectricModel dielectric_model_from_json(const nlohmann::json& j) {
  DielectricModel model;
  model.label = j.value("label", std::string{});
  model.debye_static_x = j.at("debye_static_x").get<double>();
  model.debye_static_y = j.at("debye_static_y").get<double>();
  model.oscillators_x = parse_oscillators(j, "oscillators_x");
  model.oscillators_y = parse_oscillators(j, "oscillators_y");
  validate_dielectric_model(model);
  return model;
}

nlohmann::json dielectric_model_to_json(const DielectricModel& model) {
  return nlohmann::json{{"label", model.label},
                        {"debye_static_x", model.debye_static_x},
                        {"debye_static_y", model.debye_static_y},
                        {"oscillators_x", oscillators_to_json(model.oscillators_x)},
                        {"oscillators_y", oscillators_to_json(model.oscillators_y)}};
}

DielectricModel load_dielectric_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dielectric model file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("dielectric model file " + path + ": " + e.what());
  }
  try {
    return dielectric_model_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("dielectric model file " + path + ": " + e.what());
  }
}

void save_dielectric_model(const DielectricModel& model,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write dielectric model file: " + path);
  out << dielectric_model_to_json(model).dump(2) << "\n";
}

} // namespace chiralcas
