// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include "chiralcas/berreman.hpp"

#include <algorithm>
#include <cmath>

#include "chiralcas/constants.hpp"
#include "chiralcas/errors.hpp"

namespace chiralcas {

void validate_wave(const WaveIndices& wave) {
  if (wave.k_rho < 0.0) throw DomainError("wave: k_rho must be >= 0");
  if (wave.zeta < 0.0) throw DomainError("wave: zeta must be >= 0");
  if (!std::isfinite(wave.k_rho) || !std::isfinite(wave.eta) ||
      !std::isfinite(wave.zeta)) {
    throw DomainError("wave: non-finite component");
  }
}

double gap_k3(double eps_gap, const WaveIndices& wave) {
  const double z = wave.zeta / kSpeedOfLight;
  return std::sqrt(eps_gap * z * z + wave.k_rho * wave.k_rho);
}

namespace {

void require_propagating(const WaveIndices& wave) {
  validate_wave(wave);
  if (wave.zeta == 0.0 && wave.k_rho == 0.0) {
    throw DomainError("degenerate static mode: zeta = k_rho = 0");
  }
  if (wave.zeta == 0.0) {
    // Every entry of the system matrix carries a 1/omega factor; the static
    // limit is served by the closed-form zero-frequency reflection instead.
    throw DomainError("system matrix undefined at zeta = 0; use the static "
                      "closed form");
  }
}

struct LayerScalars {
  double z;    // zeta / c
  double co;   // cos(theta - eta)
  double si;   // sin(theta - eta)
  double q_o;  // ordinary eigenvalue
  double q_e;  // extraordinary eigenvalue
};

LayerScalars layer_scalars(const LayerOptics& layer, const WaveIndices& wave) {
  LayerScalars s{};
  s.z = wave.zeta / kSpeedOfLight;
  const double psi = layer.theta - wave.eta;
  s.co = std::cos(psi);
  s.si = std::sin(psi);
  const double k2 = wave.k_rho * wave.k_rho;
  s.q_o = std::sqrt(layer.eps_y * s.z * s.z + k2);
  s.q_e = std::sqrt(layer.eps_x * s.z * s.z +
                    (layer.eps_x / layer.eps_y) * k2 * s.co * s.co +
                    k2 * s.si * s.si);
  return s;
}

void renormalize(TransferMatrix4& t) {
  const double s = t.core.max_abs();
  if (s <= 0.0 || !std::isfinite(s)) {
    throw SingularMatrixError("transfer matrix core degenerated to zero or "
                              "non-finite entries");
  }
  if (s < kCoreBandLow || s > kCoreBandHigh) {
    t.core *= 1.0 / s;
    t.log_scale += std::log(s);
  }
}

} // namespace

SystemMatrix build_system_matrix(const LayerOptics& layer,
                                 const WaveIndices& wave) {
  require_propagating(wave);
  const LayerScalars s = layer_scalars(layer, wave);
  const double k2 = wave.k_rho * wave.k_rho;
  const double P = layer.eps_x * s.co * s.co + layer.eps_y * s.si * s.si;
  const double R = layer.eps_y * s.co * s.co + layer.eps_x * s.si * s.si;
  const double W = s.si * s.co * (layer.eps_x - layer.eps_y);

  SystemMatrix out;
  Mat4& A = out.entries;
  // Upper-right block (magnetic response, mu = 1).
  A(0, 3) = s.q_o * s.q_o / (layer.eps_y * s.z);
  A(1, 2) = -s.z;
  // Lower-left block (dielectric response, eps_z = eps_y).
  A(2, 0) = -s.z * W;
  A(2, 1) = -(s.z * R + k2 / s.z);
  A(3, 0) = s.z * P;
  A(3, 1) = s.z * W;
  return out;
}

std::pair<double, double> mode_eigenvalues(const LayerOptics& layer,
                                           const WaveIndices& wave) {
  validate_wave(wave);
  if (wave.zeta == 0.0 && wave.k_rho == 0.0) {
    throw DomainError("degenerate static mode: zeta = k_rho = 0");
  }
  const LayerScalars s = layer_scalars(layer, wave);
  return {s.q_e, s.q_o};
}

ModeBasis mode_basis(const LayerOptics& layer, const WaveIndices& wave) {
  require_propagating(wave);
  const double eps_max = std::max(layer.eps_x, layer.eps_y);
  if (std::fabs(layer.eps_x - layer.eps_y) <= kDegeneracyThreshold * eps_max) {
    throw DegeneracyError("mode_basis: eps_x and eps_y are degenerate; use "
                          "the isotropic branch");
  }
  const LayerScalars s = layer_scalars(layer, wave);
  const double ey = layer.eps_y;
  const double z2 = s.z * s.z;
  const double qo2 = s.q_o * s.q_o;

  // Eigenvector columns (e+, e-, o+, o-); "+" columns have eigenvalue -q.
  // Raw (pre-normalization) entries; each column is rescaled to unit norm
  // below, which provably leaves all Fresnel ratios unchanged.
  const double col[4][4] = {
      {qo2 * s.co, ey * z2 * s.si, ey * s.q_e * s.z * s.si,
       -ey * s.q_e * s.z * s.co},
      {qo2 * s.co, ey * z2 * s.si, -ey * s.q_e * s.z * s.si,
       ey * s.q_e * s.z * s.co},
      {-s.q_o * s.z * s.si, s.q_o * s.z * s.co, qo2 * s.co, ey * z2 * s.si},
      {s.q_o * s.z * s.si, -s.q_o * s.z * s.co, qo2 * s.co, ey * z2 * s.si}};

  ModeBasis basis;
  basis.q_e = s.q_e;
  basis.q_o = s.q_o;
  for (int j = 0; j < 4; ++j) {
    double norm2 = 0.0;
    for (int i = 0; i < 4; ++i) norm2 += col[j][i] * col[j][i];
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < 4; ++i) basis.S(i, j) = col[j][i] * inv;
  }
  basis.S_inv = basis.S.inverse();
  return basis;
}

ModeBasis iso_basis(double eps_gap, const WaveIndices& wave) {
  require_propagating(wave);
  if (eps_gap < 1.0) throw DomainError("iso_basis: eps_gap must be >= 1");
  const double z = wave.zeta / kSpeedOfLight;
  const double k3 = gap_k3(eps_gap, wave);
  const double a = k3 / z;
  const double b = k3 / (eps_gap * z);

  // Columns (s+, s-, p+, p-), entries verbatim from the gap eigenbasis with
  // the omega -> i zeta substitution made real; "+" columns have eigenvalue
  // -k3 (forward-decaying), the same convention as mode_basis.
  ModeBasis basis;
  basis.q_e = k3;
  basis.q_o = k3;
  Mat4& S = basis.S;
  S(0, 2) = b;
  S(0, 3) = b;
  S(1, 0) = 1.0;
  S(1, 1) = 1.0;
  S(2, 0) = a;
  S(2, 1) = -a;
  S(3, 2) = -1.0;
  S(3, 3) = 1.0;

  // Closed-form inverse of the sparse 2x2-coupled structure.
  Mat4& T = basis.S_inv;
  T(0, 1) = 0.5;
  T(0, 2) = 0.5 / a;
  T(1, 1) = 0.5;
  T(1, 2) = -0.5 / a;
  T(2, 0) = 0.5 / b;
  T(2, 3) = -0.5;
  T(3, 0) = 0.5 / b;
  T(3, 3) = 0.5;
  return basis;
}

TransferMatrix4 layer_transfer(const ModeBasis& basis, double thickness) {
  if (thickness < 0.0) throw DomainError("layer_transfer: thickness must be >= 0");
  const double args[4] = {basis.q_e * thickness, -basis.q_e * thickness,
                          basis.q_o * thickness, -basis.q_o * thickness};
  const double m = std::max(args[0], args[2]);
  TransferMatrix4 t;
  t.log_scale = m;
  // S diag(e^{arg - m}) S_inv, so no intermediate ever exceeds e^0.
  Mat4 sd;
  for (int i = 0; i < 4; ++i) {
    const double e = std::exp(args[i] - m);
    for (int r = 0; r < 4; ++r) sd(r, i) = basis.S(r, i) * e;
  }
  t.core = sd * basis.S_inv;
  renormalize(t);
  return t;
}

TransferMatrix4 stack_transfer(const std::vector<TransferMatrix4>& layers) {
  if (layers.empty()) {
    throw DomainError("stack_transfer: layer list must be non-empty");
  }
  TransferMatrix4 acc = layers.front();
  for (std::size_t j = 1; j < layers.size(); ++j) {
    acc.core = acc.core * layers[j].core;
    acc.log_scale += layers[j].log_scale;
    renormalize(acc);
  }
  return acc;
}

TransferMatrix4 to_sp_basis(const TransferMatrix4& stack,
                            const ModeBasis& iso) {
  TransferMatrix4 out;
  out.core = iso.S_inv * stack.core * iso.S;
  out.log_scale = stack.log_scale;
  renormalize(out);
  return out;
}

ReflectionMatrix fresnel_from_transfer(const TransferMatrix4& M) {
  const Mat4& m = M.core;
  const double den = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  const double scale = m.max_abs();
  if (std::fabs(den) < 1e-300 * scale * scale) {
    throw SingularMatrixError("fresnel_from_transfer: singular denominator");
  }
  ReflectionMatrix r;
  r.r_ss = (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) / den;
  r.r_sp = (m(2, 2) * m(3, 0) - m(2, 0) * m(3, 2)) / den;
  r.r_ps = (m(0, 0) * m(1, 2) - m(0, 2) * m(1, 0)) / den;
  r.r_pp = (m(0, 0) * m(3, 2) - m(0, 2) * m(3, 0)) / den;
  return r;
}

} // namespace chiralcas
