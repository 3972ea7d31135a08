// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#include "chiralcas/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "chiralcas/errors.hpp"

namespace chiralcas {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre rule;
  rule.x.resize(static_cast<std::size_t>(n));
  rule.w.resize(static_cast<std::size_t>(n));
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Chebyshev-like initial guess for the i-th root of P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Evaluate P_n and its derivative by the three-term recurrence.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.x[static_cast<std::size_t>(i)] = -x;
    rule.x[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.w[static_cast<std::size_t>(i)] = w;
    rule.w[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double b, double whole, double rel_scale, int depth,
                     const GaussLegendre& rule) {
  if (depth > 40) {
    throw ConvergenceError("adaptive quadrature: recursion depth exceeded");
  }
  const double m = 0.5 * (a + b);
  const double left = integrate_gl(f, a, m, rule);
  const double right = integrate_gl(f, m, b, rule);
  const double diff = std::fabs(left + right - whole);
  if (diff <= rel_scale * (std::fabs(left + right) + 1e-300)) {
    return left + right;
  }
  return adaptive_step(f, a, m, left, rel_scale, depth + 1, rule) +
         adaptive_step(f, m, b, right, rel_scale, depth + 1, rule);
}

} // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const GaussLegendre>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<const GaussLegendre>(
                              compute_gauss_legendre(n)))
             .first;
  }
  return *it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    const GaussLegendre& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.x.size(); ++k) {
    sum += rule.w[k] * f(mid + half * rule.x[k]);
  }
  return half * sum;
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol) {
  if (a == b) return 0.0;
  const GaussLegendre& rule = gauss_legendre(20);
  const double whole = integrate_gl(f, a, b, rule);
  return adaptive_step(f, a, b, whole, rel_tol, 0, rule);
}

} // namespace chiralcas
