// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Double-exponential (tanh-sinh) quadrature with adaptive bisection.
//
// Integrands receive the abscissa together with its exact distances to the
// two ends of the integration interval, so that endpoint singularities such
// as (b - x)^{-1/2} or log(x - a) can be evaluated without cancellation.
#pragma once

#include <functional>
#include <limits>
#include <span>

namespace ggc {

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 200;
  // Half-width of the window around a log singularity that is integrated with
  // the analytic primitive of log|t - x| against a locally constant density.
  double singularity_pad = 1e-12;
  // Allow numerical differentiation of the CDF when a density is missing.
  bool numerical_derivative = false;
  // Let engines use closed-form phi/psi attached to a law instead of quadrature.
  bool use_closed_forms = false;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// f(x, x - a, b - x). For b == +inf the second distance is +inf.
using Integrand = std::function<double(double, double, double)>;

// Integrates f over [a, b]; b may be +inf (mapped by x = a + s/(1-s)).
// Throws Error(NonConvergence) when the tolerance is not met within
// cfg.max_subdivisions bisections, or when f returns a non-finite value.
QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg);

// Splits [a, b] at the given interior breakpoints and sums the pieces.
QuadResult integrate(const Integrand& f, double a, double b, std::span<const double> breaks,
                     const QuadConfig& cfg);

// Convenience overload for integrands that need only x.
double integrate_simple(const std::function<double(double)>& f, double a, double b,
                        const QuadConfig& cfg);

}  // namespace ggc
