// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include "chiralcas/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "chiralcas/constants.hpp"
#include "chiralcas/errors.hpp"
#include "chiralcas/parallel.hpp"
#include "chiralcas/quadrature.hpp"

namespace chiralcas {

void validate_quadrature(const QuadratureSpec& spec) {
  if (spec.n_eta < 8 || spec.n_eta % 2 != 0) {
    throw ConfigError("quadrature.n_eta must be an even integer >= 8");
  }
  if (spec.n_krho < 1) throw ConfigError("quadrature.n_krho must be >= 1");
  if (!(spec.krho_cut > 0.0)) {
    throw ConfigError("quadrature.krho_cut must be > 0");
  }
  if (spec.phi_points < 8 || spec.phi_points % 2 != 0) {
    throw ConfigError("quadrature.phi_points must be an even integer >= 8");
  }
}

void validate_interaction_config(const InteractionConfig& config) {
  validate_slab(config.slab1);
  validate_slab(config.slab2);
  validate_dielectric_model(config.slab1.model);
  validate_dielectric_model(config.slab2.model);
  if (!(config.separation > 0.0)) {
    throw ConfigError("separation must be > 0");
  }
  if (!(config.gap_eps >= 1.0)) throw ConfigError("gap_eps must be >= 1");
  if (!(config.thermal.temperature > 0.0)) {
    throw ConfigError("temperature must be > 0");
  }
  if (config.thermal.max_terms < 1) {
    throw ConfigError("matsubara max_terms must be >= 1");
  }
  if (!(config.thermal.rel_tol > 0.0)) {
    throw ConfigError("matsubara rel_tol must be > 0");
  }
  validate_quadrature(config.quadrature);
}

double log_det_D(const ReflectionMatrix& r1, const ReflectionMatrix& r2,
                 double k3, double a) {
  if (!(k3 > 0.0)) throw DomainError("log_det_D: k3 must be > 0");
  if (!(a > 0.0)) throw DomainError("log_det_D: a must be > 0");
  const double t = std::exp(-2.0 * k3 * a);
  const double trace = r1.r_ss * r2.r_ss + r1.r_ps * r2.r_sp +
                       r1.r_sp * r2.r_ps + r1.r_pp * r2.r_pp;
  const double det1 = r1.r_ss * r1.r_pp - r1.r_ps * r1.r_sp;
  const double det2 = r2.r_ss * r2.r_pp - r2.r_ps * r2.r_sp;
  const double x = t * (t * det1 * det2 - trace);
  if (x <= -1.0) {
    throw NonpositiveDeterminantError(
        "log_det_D: determinant argument <= 0 (reflection data implies a "
        "round-trip gain)");
  }
  return std::log1p(x);
}

namespace {

// Radial panel edges in u = 2 k_3 a, clipped to (lo, krho_cut).
std::vector<std::pair<double, double>> radial_panels(double lo, double cut) {
  std::vector<double> edges{0.0, 5.0, 20.0};
  std::vector<std::pair<double, double>> panels;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double e_lo = std::max(edges[i], lo);
    const double e_hi = (i + 1 < edges.size()) ? edges[i + 1] : cut;
    const double hi = std::min(e_hi, cut);
    if (hi > e_lo) panels.emplace_back(e_lo, hi);
    if (hi >= cut) break;
  }
  return panels;
}

// Integral of ln det D over (k_rho, eta) for one Matsubara frequency, in
// the u-substituted form: int u/(4a^2) du int_0^{2pi} deta ln det D.
double frequency_integral(const InteractionConfig& config,
                          const CholestericSlab& slab2_eff, double zeta) {
  const double a = config.separation;
  const double z = zeta / kSpeedOfLight;
  const double u_min = 2.0 * a * std::sqrt(config.gap_eps) * z;
  const auto panels = radial_panels(u_min, config.quadrature.krho_cut);
  if (panels.empty()) return 0.0;

  const GaussLegendre& rule = gauss_legendre(config.quadrature.n_krho);
  const int n_eta = config.quadrature.n_eta;
  const double eta_weight = 2.0 * std::numbers::pi / n_eta;

  double total = 0.0;
  for (const auto& [lo, hi] : panels) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double u = mid + half * rule.x[i];
      const double k3 = u / (2.0 * a);
      const double krho2 = k3 * k3 - config.gap_eps * z * z;
      const double k_rho = std::sqrt(std::max(krho2, 0.0));
      const WaveIndices base{k_rho, 0.0, zeta};
      const SlabWaveData d1 = slab_wave_data(config.slab1, base);
      const SlabWaveData d2 = slab_wave_data(slab2_eff, base);
      std::optional<ModeBasis> iso;
      if (zeta > 0.0) iso = iso_basis(config.gap_eps, base);
      const ModeBasis* iso_ptr = iso ? &*iso : nullptr;

      double eta_sum = 0.0;
      CholestericSlab slab1_seen = config.slab1;
      for (int j = 0; j < n_eta; ++j) {
        WaveIndices w = base;
        w.eta = eta_weight * j;
        // Slab 1 sits below the gap, so the gap-side wave meets it through a
        // z-mirror of the canonical slab-above geometry. That mirror flips
        // the helix handedness and conjugates the s/p off-diagonals, which
        // is equivalent to reflecting the front angle about the incidence
        // azimuth while keeping the handedness. Without this flip the pair
        // would lose slab-exchange symmetry and the heterochiral energy
        // would not be even in phi.
        slab1_seen.theta_front = 2.0 * w.eta - config.slab1.theta_front;
        const ReflectionMatrix r1 =
            slab_reflection_with(slab1_seen, w, config.gap_eps, d1, iso_ptr);
        const ReflectionMatrix r2 =
            slab_reflection_with(slab2_eff, w, config.gap_eps, d2, iso_ptr);
        eta_sum += log_det_D(r1, r2, k3, a);
      }
      total += rule.w[i] * half * (u / (4.0 * a * a)) * eta_sum * eta_weight;
    }
  }
  return total;
}

} // namespace

EnergyResult energy_per_area(const InteractionConfig& config, double phi) {
  validate_interaction_config(config);
  if (!std::isfinite(phi)) throw DomainError("energy_per_area: phi not finite");

  // Pairing convention: phi is the angle between the front-face optic axes,
  // so slab 2 enters at theta_front_1 + phi.
  CholestericSlab slab2_eff = config.slab2;
  slab2_eff.theta_front = config.slab1.theta_front + phi;

  const double prefactor = kBoltzmann * config.thermal.temperature /
                           (4.0 * std::numbers::pi * std::numbers::pi);

  EnergyResult result;
  double sum = 0.0;
  int small_streak = 0;
  for (int n = 0; n < config.thermal.max_terms; ++n) {
    const double zeta = matsubara_frequency(n, config.thermal);
    const double weight = (n == 0) ? 0.5 : 1.0;
    const double term =
        weight * prefactor * frequency_integral(config, slab2_eff, zeta);
    sum += term;
    result.term_magnitudes.push_back(std::fabs(term));
    result.terms_used = n + 1;
    if (n >= 1) {
      if (std::fabs(term) <= config.thermal.rel_tol * std::fabs(sum)) {
        if (++small_streak >= 3) {
          result.energy = sum;
          return result;
        }
      } else {
        small_streak = 0;
      }
    }
  }
  std::ostringstream msg;
  msg << "energy_per_area: Matsubara sum not converged after "
      << config.thermal.max_terms << " terms (last |term| = "
      << (result.term_magnitudes.empty() ? 0.0
                                         : result.term_magnitudes.back())
      << ", |partial sum| = " << std::fabs(sum)
      << ", rel_tol = " << config.thermal.rel_tol << ")";
  throw ConvergenceError(msg.str());
}

TorqueCurve torque_curve(const InteractionConfig& config) {
  validate_interaction_config(config);
  const int P = config.quadrature.phi_points;
  TorqueCurve curve;
  curve.separation = config.separation;
  curve.phi_grid.resize(static_cast<std::size_t>(P));
  curve.energy.resize(static_cast<std::size_t>(P));
  for (int k = 0; k < P; ++k) {
    curve.phi_grid[static_cast<std::size_t>(k)] =
        std::numbers::pi * k / P;
  }
  parallel_for(static_cast<std::size_t>(P), config.threads,
               [&](std::size_t k) {
                 curve.energy[k] =
                     energy_per_area(config, curve.phi_grid[k]).energy;
               });

  // Discrete Fourier series of E over its pi period. The optic axes are
  // headless, so E contains only cos(2 m phi) / sin(2 m phi) harmonics.
  const int half = P / 2;
  std::vector<double> A(static_cast<std::size_t>(half)),
      B(static_cast<std::size_t>(half));
  for (int m = 1; m < half; ++m) {
    double am = 0.0, bm = 0.0;
    for (int k = 0; k < P; ++k) {
      const double arg = 2.0 * m * curve.phi_grid[static_cast<std::size_t>(k)];
      am += curve.energy[static_cast<std::size_t>(k)] * std::cos(arg);
      bm += curve.energy[static_cast<std::size_t>(k)] * std::sin(arg);
    }
    A[static_cast<std::size_t>(m)] = 2.0 * am / P;
    B[static_cast<std::size_t>(m)] = 2.0 * bm / P;
  }
  // tau = -dE/dphi; the Nyquist harmonic's derivative vanishes at the nodes.
  curve.torque.assign(static_cast<std::size_t>(P), 0.0);
  for (int k = 0; k < P; ++k) {
    double tau = 0.0;
    for (int m = 1; m < half; ++m) {
      const double arg = 2.0 * m * curve.phi_grid[static_cast<std::size_t>(k)];
      tau += 2.0 * m *
             (A[static_cast<std::size_t>(m)] * std::sin(arg) -
              B[static_cast<std::size_t>(m)] * std::cos(arg));
    }
    curve.torque[static_cast<std::size_t>(k)] = tau;
  }
  // Independent cross-check column: 5-point central differences on the
  // periodic grid.
  curve.torque_fd.assign(static_cast<std::size_t>(P), 0.0);
  const double h = std::numbers::pi / P;
  const auto wrap = [P](int k) { return ((k % P) + P) % P; };
  for (int k = 0; k < P; ++k) {
    const double d = (-curve.energy[static_cast<std::size_t>(wrap(k + 2))] +
                      8.0 * curve.energy[static_cast<std::size_t>(wrap(k + 1))] -
                      8.0 * curve.energy[static_cast<std::size_t>(wrap(k - 1))] +
                      curve.energy[static_cast<std::size_t>(wrap(k - 2))]) /
                     (12.0 * h);
    curve.torque_fd[static_cast<std::size_t>(k)] = -d;
  }
  return curve;
}

FourierSpectrum fourier_components(const TorqueCurve& curve, int max_order) {
  const std::size_t P = curve.phi_grid.size();
  if (P < 2 || curve.torque.size() != P) {
    throw DomainError("fourier_components: curve grids empty or mismatched");
  }
  const double h = std::numbers::pi / static_cast<double>(P);
  for (std::size_t k = 0; k < P; ++k) {
    if (std::fabs(curve.phi_grid[k] - h * static_cast<double>(k)) >
        1e-12 * std::numbers::pi) {
      throw DomainError("fourier_components: phi grid is not uniform on "
                        "[0, pi)");
    }
  }
  if (max_order < 1) throw DomainError("fourier_components: max_order < 1");
  if (2 * static_cast<std::size_t>(max_order) >= P) {
    throw DomainError("fourier_components: order exceeds the grid Nyquist "
                      "limit (2 M must be < phi_points; coefficients would "
                      "alias)");
  }
  FourierSpectrum spec;
  spec.separation = curve.separation;
  for (int m = 1; m <= max_order; ++m) {
    double am = 0.0, bm = 0.0;
    for (std::size_t k = 0; k < P; ++k) {
      const double arg = 2.0 * m * curve.phi_grid[k];
      am += curve.torque[k] * std::cos(arg);
      bm += curve.torque[k] * std::sin(arg);
    }
    spec.orders.push_back(m);
    spec.a.push_back(2.0 * am / static_cast<double>(P));
    spec.b.push_back(2.0 * bm / static_cast<double>(P));
  }
  return spec;
}

std::vector<SweepItem> sweep(const std::vector<SweepCase>& cases) {
  std::vector<SweepItem> items;
  items.reserve(cases.size());
  for (const auto& c : cases) {
    SweepItem item;
    item.label = c.label;
    try {
      item.curve = torque_curve(c.config);
      item.spectrum = fourier_components(item.curve, c.fourier_orders);
      item.ok = true;
    } catch (const std::exception& e) {
      item.ok = false;
      item.error = e.what();
      item.curve = TorqueCurve{};
      item.spectrum = FourierSpectrum{};
    }
    items.push_back(std::move(item));
  }
  return items;
}

} // namespace chiralcas
