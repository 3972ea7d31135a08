// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include "chiralcas/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "chiralcas/errors.hpp"
#include "internal_json.hpp"

namespace chiralcas {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw ConfigError("config field '" + field + "': " + why);
}

// `key` is the JSON key; `display` is the dotted path used in errors.
double get_number_named(const nlohmann::json& j, const char* key,
                        const std::string& display) {
  if (!j.contains(key)) bad_field(display, "missing");
  if (!j.at(key).is_number()) bad_field(display, "must be a number");
  return j.at(key).get<double>();
}

int get_int(const nlohmann::json& j, const std::string& field, int fallback) {
  if (!j.contains(field)) return fallback;
  if (!j.at(field).is_number_integer()) bad_field(field, "must be an integer");
  return j.at(field).get<int>();
}

double get_number_or(const nlohmann::json& j, const std::string& field,
                     double fallback) {
  if (!j.contains(field)) return fallback;
  if (!j.at(field).is_number()) bad_field(field, "must be a number");
  return j.at(field).get<double>();
}

Handedness parse_handedness(const nlohmann::json& j, const std::string& field) {
  if (!j.is_string()) bad_field(field, "must be \"left\" or \"right\"");
  const std::string s = j.get<std::string>();
  if (s == "left") return Handedness::left;
  if (s == "right") return Handedness::right;
  bad_field(field, "must be \"left\" or \"right\" (got \"" + s + "\")");
}

const char* handedness_name(Handedness h) {
  return h == Handedness::right ? "right" : "left";
}

DielectricModel resolve_dielectric(const nlohmann::json& slab_json,
                                   const nlohmann::json& library,
                                   const std::string& field) {
  if (!slab_json.contains("dielectric")) bad_field(field, "missing");
  const nlohmann::json& d = slab_json.at("dielectric");
  if (d.is_string()) {
    const std::string label = d.get<std::string>();
    for (const auto& entry : library) {
      if (entry.value("label", std::string{}) == label) {
        try {
          return dielectric_model_from_json(entry);
        } catch (const nlohmann::json::exception& e) {
          bad_field("dielectrics[label=" + label + "]", e.what());
        }
      }
    }
    bad_field(field, "label \"" + label + "\" not found in 'dielectrics'");
  }
  if (d.is_object()) {
    try {
      return dielectric_model_from_json(d);
    } catch (const nlohmann::json::exception& e) {
      bad_field(field, e.what());
    }
  }
  bad_field(field, "must be a label string or an inline model object");
}

CholestericSlab parse_slab(const nlohmann::json& j,
                           const nlohmann::json& library,
                           const std::string& field) {
  if (!j.is_object()) bad_field(field, "must be an object");
  CholestericSlab slab;
  slab.d_tot = get_number_named(j, "d_tot_m", field + ".d_tot_m");
  slab.pitch = get_number_named(j, "pitch_m", field + ".pitch_m");
  slab.theta_front = get_number_or(j, "theta_front_rad", 0.0);
  slab.handedness = j.contains("handedness")
                        ? parse_handedness(j.at("handedness"),
                                           field + ".handedness")
                        : Handedness::right;
  slab.model = resolve_dielectric(j, library, field + ".dielectric");
  return slab;
}

nlohmann::json slab_to_json(const CholestericSlab& slab) {
  return nlohmann::json{{"d_tot_m", slab.d_tot},
                        {"pitch_m", slab.pitch},
                        {"handedness", handedness_name(slab.handedness)},
                        {"theta_front_rad", slab.theta_front},
                        {"dielectric", dielectric_model_to_json(slab.model)}};
}

} // namespace

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open run config: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("run config " + path + ": " + e.what());
  }

  RunConfig config;
  const nlohmann::json library =
      j.contains("dielectrics") ? j.at("dielectrics")
                                : nlohmann::json::array();
  if (!library.is_array()) bad_field("dielectrics", "must be an array");

  if (!j.contains("slabs") || !j.at("slabs").is_array() ||
      j.at("slabs").size() != 2) {
    bad_field("slabs", "must be an array of exactly two slab objects");
  }
  config.slab1 = parse_slab(j.at("slabs")[0], library, "slabs[0]");
  config.slab2 = parse_slab(j.at("slabs")[1], library, "slabs[1]");

  config.gap_eps = get_number_or(j, "gap_eps", 1.0);
  config.thermal.temperature = get_number_or(j, "temperature_K", 298.15);
  if (j.contains("matsubara")) {
    const auto& m = j.at("matsubara");
    if (!m.is_object()) bad_field("matsubara", "must be an object");
    config.thermal.max_terms = get_int(m, "max_terms", config.thermal.max_terms);
    config.thermal.rel_tol =
        get_number_or(m, "rel_tol", config.thermal.rel_tol);
  }

  if (!j.contains("separations_um")) bad_field("separations_um", "missing");
  if (!j.at("separations_um").is_array() || j.at("separations_um").empty()) {
    bad_field("separations_um", "must be a non-empty array of numbers");
  }
  for (const auto& s : j.at("separations_um")) {
    if (!s.is_number()) bad_field("separations_um", "must contain numbers");
    config.separations.push_back(s.get<double>() * 1e-6);
  }

  if (j.contains("quadrature")) {
    const auto& q = j.at("quadrature");
    if (!q.is_object()) bad_field("quadrature", "must be an object");
    config.quadrature.n_eta = get_int(q, "n_eta", config.quadrature.n_eta);
    config.quadrature.n_krho = get_int(q, "n_krho", config.quadrature.n_krho);
    config.quadrature.krho_cut =
        get_number_or(q, "krho_cut", config.quadrature.krho_cut);
  }
  config.quadrature.phi_points =
      get_int(j, "phi_points", config.quadrature.phi_points);
  config.fourier_orders = get_int(j, "fourier_orders", config.fourier_orders);

  if (j.contains("output")) {
    const auto& o = j.at("output");
    if (!o.is_object()) bad_field("output", "must be an object");
    if (o.contains("path")) {
      if (!o.at("path").is_string()) bad_field("output.path", "must be a string");
      config.output.path = o.at("path").get<std::string>();
    }
    if (o.contains("format")) {
      if (!o.at("format").is_string()) {
        bad_field("output.format", "must be a string");
      }
      config.output.format = o.at("format").get<std::string>();
    }
  }

  validate_run_config(config);
  return config;
}

void validate_run_config(const RunConfig& config) {
  try {
    validate_slab(config.slab1);
    validate_dielectric_model(config.slab1.model);
  } catch (const Error& e) {
    throw ConfigError(std::string("slabs[0]: ") + e.what());
  }
  try {
    validate_slab(config.slab2);
    validate_dielectric_model(config.slab2.model);
  } catch (const Error& e) {
    throw ConfigError(std::string("slabs[1]: ") + e.what());
  }
  if (!(config.gap_eps >= 1.0)) bad_field("gap_eps", "must be >= 1");
  if (!(config.thermal.temperature > 0.0)) {
    bad_field("temperature_K", "must be > 0");
  }
  if (config.thermal.max_terms < 1) {
    bad_field("matsubara.max_terms", "must be >= 1");
  }
  if (!(config.thermal.rel_tol > 0.0)) {
    bad_field("matsubara.rel_tol", "must be > 0");
  }
  if (config.separations.empty()) bad_field("separations_um", "must be non-empty");
  for (std::size_t i = 0; i < config.separations.size(); ++i) {
    if (!(config.separations[i] > 0.0)) {
      bad_field("separations_um", "entries must be strictly positive");
    }
    if (i > 0 && !(config.separations[i] > config.separations[i - 1])) {
      bad_field("separations_um", "must be sorted strictly ascending");
    }
  }
  try {
    validate_quadrature(config.quadrature);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (config.fourier_orders < 1) bad_field("fourier_orders", "must be >= 1");
  if (2 * config.fourier_orders >= config.quadrature.phi_points) {
    bad_field("fourier_orders",
              "2 * fourier_orders must be < phi_points (aliasing)");
  }
  if (config.output.format != "csv" && config.output.format != "json") {
    bad_field("output.format", "must be \"csv\" or \"json\"");
  }
}

std::string canonical_json(const RunConfig& config) {
  // nlohmann orders object keys lexicographically and prints
  // shortest-roundtrip floats, so dump() is already canonical.
  const nlohmann::json j{
      {"fourier_orders", config.fourier_orders},
      {"gap_eps", config.gap_eps},
      {"matsubara",
       {{"max_terms", config.thermal.max_terms},
        {"rel_tol", config.thermal.rel_tol}}},
      {"output",
       {{"format", config.output.format}, {"path", config.output.path}}},
      {"quadrature",
       {{"krho_cut", config.quadrature.krho_cut},
        {"n_eta", config.quadrature.n_eta},
        {"n_krho", config.quadrature.n_krho},
        {"phi_points", config.quadrature.phi_points}}},
      {"separations_m", config.separations},
      {"slabs",
       nlohmann::json::array(
           {slab_to_json(config.slab1), slab_to_json(config.slab2)})},
      {"temperature_K", config.thermal.temperature}};
  return j.dump();
}

std::string config_hash(const RunConfig& config) {
  const std::string s = canonical_json(config);
  std::uint64_t h = 14695981039346656037ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

InteractionConfig make_interaction(const RunConfig& config, double separation,
                                   unsigned threads) {
  InteractionConfig out;
  out.slab1 = config.slab1;
  out.slab2 = config.slab2;
  out.gap_eps = config.gap_eps;
  out.separation = separation;
  out.thermal = config.thermal;
  out.quadrature = config.quadrature;
  out.threads = threads;
  return out;
}

} // namespace chiralcas
