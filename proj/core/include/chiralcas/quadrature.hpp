// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <vector>

namespace chiralcas {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;
};

/// Nodes/weights for an n-point rule, computed by Newton iteration on the
/// Legendre polynomial and cached per order (thread-safe).
const GaussLegendre& gauss_legendre(int n);

/// Fixed-order Gauss-Legendre integral of f over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    const GaussLegendre& rule);

/// Adaptive composite Gauss-Legendre (bisection with a 20-point base rule) to
/// the stated relative tolerance. Intended for smooth integrands; throws
/// ConvergenceError if the recursion depth limit is hit.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol);

} // namespace chiralcas
