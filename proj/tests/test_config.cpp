// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "chiralcas/config.hpp"
#include "chiralcas/errors.hpp"

using namespace chiralcas;

namespace {

std::filesystem::path write_temp_config(const std::string& name,
                                        const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

// Minimal valid run config with one labelled and one inline dielectric.
const char* kValidConfig = R"({
  "dielectrics": [
    {"label": "lc-a", "debye_static_x": 2.0, "debye_static_y": 3.0}
  ],
  "slabs": [
    {"d_tot_m": 2.0e-6, "pitch_m": 0.8e-6, "handedness": "left",
     "theta_front_rad": 0.25, "dielectric": "lc-a"},
    {"d_tot_m": 3.0e-6, "pitch_m": 0.5e-6,
     "dielectric": {"label": "inline-b", "debye_static_x": 1.4,
                    "debye_static_y": 1.2,
                    "oscillators_x": [{"strength": 0.5,
                                       "resonance_rad_s": 1.0e15}]}}
  ],
  "gap_eps": 1.25,
  "temperature_K": 300.0,
  "matsubara": {"max_terms": 120, "rel_tol": 1e-9},
  "separations_um": [1.0, 2.5, 10.0],
  "quadrature": {"n_eta": 16, "n_krho": 24, "krho_cut": 50.0},
  "phi_points": 32,
  "fourier_orders": 3,
  "output": {"path": "runs/out.csv", "format": "json"}
})";

// Loading a config whose body has `patch` spliced over the valid base is
// clumsy with raw strings; tests below instead write full variants.
std::string capture_error(const std::string& body) {
  const auto path = write_temp_config("chiralcas-bad-config.json", body);
  try {
    load_run_config(path.string());
  } catch (const ConfigError& e) {
    std::filesystem::remove(path);
    return e.what();
  }
  std::filesystem::remove(path);
  return "";
}

RunConfig load_valid() {
  const auto path = write_temp_config("chiralcas-good-config.json",
                                      kValidConfig);
  RunConfig config = load_run_config(path.string());
  std::filesystem::remove(path);
  return config;
}

} // namespace

TEST_CASE("run config: full parse with labelled and inline dielectrics") {
  const RunConfig config = load_valid();

  CHECK(config.slab1.d_tot == 2.0e-6);
  CHECK(config.slab1.pitch == 0.8e-6);
  CHECK(config.slab1.handedness == Handedness::left);
  CHECK(config.slab1.theta_front == 0.25);
  CHECK(config.slab1.model.label == "lc-a");
  CHECK(config.slab1.model.debye_static_x == 2.0);
  CHECK(config.slab1.model.oscillators_x.empty());

  // Omitted slab fields fall back to defaults.
  CHECK(config.slab2.handedness == Handedness::right);
  CHECK(config.slab2.theta_front == 0.0);
  CHECK(config.slab2.model.label == "inline-b");
  REQUIRE(config.slab2.model.oscillators_x.size() == 1);
  CHECK(config.slab2.model.oscillators_x[0].resonance == 1.0e15);

  CHECK(config.gap_eps == 1.25);
  CHECK(config.thermal.temperature == 300.0);
  CHECK(config.thermal.max_terms == 120);
  CHECK(config.thermal.rel_tol == 1e-9);

  // Micrometers in the file, meters in the struct.
  REQUIRE(config.separations.size() == 3);
  CHECK(config.separations[0] == doctest::Approx(1.0e-6).epsilon(1e-15));
  CHECK(config.separations[2] == doctest::Approx(1.0e-5).epsilon(1e-15));

  CHECK(config.quadrature.n_eta == 16);
  CHECK(config.quadrature.n_krho == 24);
  CHECK(config.quadrature.krho_cut == 50.0);
  CHECK(config.quadrature.phi_points == 32);
  CHECK(config.fourier_orders == 3);
  CHECK(config.output.path == "runs/out.csv");
  CHECK(config.output.format == "json");
}

TEST_CASE("run config: defaults when optional sections are omitted") {
  const auto path = write_temp_config("chiralcas-minimal-config.json", R"({
    "slabs": [
      {"d_tot_m": 2.0e-6, "pitch_m": 0.8e-6,
       "dielectric": {"label": "m", "debye_static_x": 2.0,
                      "debye_static_y": 3.0}},
      {"d_tot_m": 2.0e-6, "pitch_m": 0.8e-6,
       "dielectric": {"label": "m", "debye_static_x": 2.0,
                      "debye_static_y": 3.0}}
    ],
    "separations_um": [5.0]
  })");
  const RunConfig config = load_run_config(path.string());
  std::filesystem::remove(path);

  CHECK(config.gap_eps == 1.0);
  CHECK(config.thermal.temperature == 298.15);
  CHECK(config.thermal.max_terms == 5000);
  CHECK(config.thermal.rel_tol == 1e-8);
  CHECK(config.quadrature.n_eta == 32);
  CHECK(config.quadrature.n_krho == 40);
  CHECK(config.quadrature.krho_cut == 60.0);
  CHECK(config.quadrature.phi_points == 64);
  CHECK(config.fourier_orders == 2);
  CHECK(config.output.format == "csv");
  CHECK(config.output.path.empty());
}

TEST_CASE("run config: missing file and malformed JSON") {
  CHECK_THROWS_AS(load_run_config("/nonexistent/nowhere.json"), IoError);
  const auto path =
      write_temp_config("chiralcas-broken.json", "{ not json ]");
  CHECK_THROWS_AS(load_run_config(path.string()), ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("run config: errors name the offending field") {
  const std::string good(kValidConfig);

  auto replaced_in = [](std::string body, const std::string& from,
                        const std::string& to) {
    const auto pos = body.find(from);
    REQUIRE(pos != std::string::npos);
    body.replace(pos, from.size(), to);
    return body;
  };
  auto replaced = [&](const std::string& from, const std::string& to) {
    return replaced_in(good, from, to);
  };

  CHECK(capture_error(replaced("\"separations_um\": [1.0, 2.5, 10.0]",
                               "\"separations_um\": []"))
            .find("separations_um") != std::string::npos);
  CHECK(capture_error(replaced("\"separations_um\": [1.0, 2.5, 10.0]",
                               "\"separations_um\": [2.5, 1.0]"))
            .find("ascending") != std::string::npos);
  CHECK(capture_error(replaced("\"separations_um\": [1.0, 2.5, 10.0]",
                               "\"separations_um\": [-1.0, 2.5]"))
            .find("positive") != std::string::npos);
  CHECK(capture_error(replaced("\"gap_eps\": 1.25", "\"gap_eps\": 0.5"))
            .find("gap_eps") != std::string::npos);
  CHECK(capture_error(replaced("\"handedness\": \"left\"",
                               "\"handedness\": \"sideways\""))
            .find("handedness") != std::string::npos);
  CHECK(capture_error(replaced("\"dielectric\": \"lc-a\"",
                               "\"dielectric\": \"missing-label\""))
            .find("missing-label") != std::string::npos);
  CHECK(capture_error(replaced_in(replaced("\"phi_points\": 32",
                                           "\"phi_points\": 8"),
                                  "\"fourier_orders\": 3",
                                  "\"fourier_orders\": 4"))
            .find("fourier_orders") != std::string::npos);
  CHECK(capture_error(replaced("\"fourier_orders\": 3",
                               "\"fourier_orders\": 0"))
            .find("fourier_orders") != std::string::npos);
  CHECK(capture_error(replaced("\"format\": \"json\"",
                               "\"format\": \"yaml\""))
            .find("output.format") != std::string::npos);
  CHECK(capture_error(replaced("\"phi_points\": 32", "\"phi_points\": 32.5"))
            .find("phi_points") != std::string::npos);
  CHECK(capture_error(replaced("\"pitch_m\": 0.8e-6", "\"pitch_m\": 5.0e-6"))
            .find("slabs[0]") != std::string::npos);

  // The slab array must hold exactly two entries.
  CHECK(capture_error(R"({
    "slabs": [{"d_tot_m": 2.0e-6, "pitch_m": 0.8e-6,
               "dielectric": {"label": "m", "debye_static_x": 2.0,
                              "debye_static_y": 3.0}}],
    "separations_um": [5.0]
  })").find("slabs") != std::string::npos);
  CHECK(capture_error(R"({"separations_um": [5.0]})").find("slabs") !=
        std::string::npos);
}

TEST_CASE("fourier order aliasing guard covers config validation") {
  RunConfig config = load_valid();
  validate_run_config(config);
  config.fourier_orders = config.quadrature.phi_points / 2;
  CHECK_THROWS_AS(validate_run_config(config), ConfigError);
}

TEST_CASE("canonical rendering is stable and hash-faithful") {
  const RunConfig a = load_valid();
  const RunConfig b = load_valid();

  const std::string ja = canonical_json(a);
  CHECK(ja == canonical_json(b));
  CHECK(config_hash(a) == config_hash(b));

  // Compact single line, lexicographically keyed.
  CHECK(ja.find('\n') == std::string::npos);
  CHECK(ja.rfind("{\"fourier_orders\":", 0) == 0);
  // Separations are stored in meters in the canonical record.
  CHECK(ja.find("separations_m") != std::string::npos);

  const std::string hash = config_hash(a);
  CHECK(hash.size() == 16);
  CHECK(hash.find_first_not_of("0123456789abcdef") == std::string::npos);

  // Any semantic change moves the hash, including the output path.
  RunConfig moved = a;
  moved.output.path = "elsewhere.csv";
  CHECK(config_hash(moved) != hash);
  RunConfig closer = a;
  closer.separations[0] *= 0.5;
  CHECK(config_hash(closer) != hash);
}

TEST_CASE("interaction assembly copies the run config") {
  const RunConfig config = load_valid();
  const InteractionConfig interaction =
      make_interaction(config, config.separations[1], 3);
  CHECK(interaction.slab1.d_tot == config.slab1.d_tot);
  CHECK(interaction.slab2.pitch == config.slab2.pitch);
  CHECK(interaction.gap_eps == config.gap_eps);
  CHECK(interaction.separation == config.separations[1]);
  CHECK(interaction.thermal.max_terms == config.thermal.max_terms);
  CHECK(interaction.quadrature.phi_points == config.quadrature.phi_points);
  CHECK(interaction.threads == 3);
}
