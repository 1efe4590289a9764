// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ggc/error.hpp"
#include "ggc/mean_density.hpp"

namespace ggc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sigma(double sigma) { require(sigma > 0 && sigma <= 1, "sigma must lie in (0, 1]"); }

void check_unit(double y) { require(y > 0 && y < 1, "y must lie in (0, 1)"); }

const Atom* as_point_mass(const DistSpec& d) {
  return d.continuous_mass() == 0.0 && d.atoms().size() == 1 ? &d.atoms().front() : nullptr;
}

// Splitting points for integrals in the mean variable y of M_1(F_{X Y_sigma}).
std::vector<double> mean_cuts(const DistSpec& d, double x) {
  std::vector<double> cuts{x};
  const Interval s = d.support();
  if (s.lo > 0) cuts.push_back(s.lo);
  for (const Atom& a : d.atoms()) cuts.push_back(a.location);
  if (const ContinuousPart* c = d.continuous())
    cuts.insert(cuts.end(), c->breakpoints.begin(), c->breakpoints.end());
  std::vector<double> out;
  for (double v : cuts)
    if (v > 0 && v < s.hi) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void TiltParams::validate() const { require(c > 0 && std::isfinite(c), "tilt parameter c must be positive"); }

MeanLaw ScaledMeanLaw::as_mean_law() const { return {order, mix_with_atom(base, sigma)}; }

ScaledMeanLaw make_scaled_mean_law(double theta, double sigma, DistSpec base) {
  require(theta > 0, "theta must be positive");
  check_sigma(sigma);
  return {sigma, std::move(base), theta};
}

MeanLaw beta_scale(double theta, double sigma, const DistSpec& dist, const QuadConfig& cfg) {
  check_sigma(sigma);
  return make_mean_law(theta, mix_with_atom(dist, sigma), cfg);
}

double scaled_mean_density(double sigma, const DistSpec& dist, double x, const QuadConfig& cfg) {
  check_sigma(sigma);
  require(x > 0 && std::isfinite(x), "x must be positive");
  const double s = dist.sf(x);
  if (s == 0.0) return 0.0;
  return std::pow(x, sigma - 1) / kPi * std::sin(kPi * sigma * s) *
         std::exp(-sigma * phi(dist, x, cfg));
}

double ggc_density(double sigma, const DistSpec& dist, double x, const QuadConfig& cfg) {
  check_sigma(sigma);
  require(x > 0 && std::isfinite(x), "x must be positive");
  if (const Atom* a = as_point_mass(dist); a && sigma == 1.0) return std::exp(-x / a->location) / a->location;
  // y = x v keeps the integrand at the scale of the density for small x.
  std::vector<double> cuts = mean_cuts(dist, x);
  for (double& v : cuts) v /= x;
  return integrate(
             [&](double v, double, double) {
               const double e = std::exp(-1 / v);
               if (e == 0.0) return 0.0;
               const double y = x * v;
               return y >= dist.support().hi ? 0.0 : e / v * scaled_mean_density(sigma, dist, y, cfg);
             },
             0.0, dist.support().hi / x, cuts, cfg)
      .value;
}

double ggc_cdf(double sigma, const DistSpec& dist, double x, const QuadConfig& cfg) {
  check_sigma(sigma);
  require(x >= 0 && std::isfinite(x), "x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (const Atom* a = as_point_mass(dist); a && sigma == 1.0) return -std::expm1(-x / a->location);
  const std::vector<double> cuts = mean_cuts(dist, x);
  const double v = integrate(
                       [&](double y, double, double) {
                         return -std::expm1(-x / y) * scaled_mean_density(sigma, dist, y, cfg);
                       },
                       0.0, dist.support().hi, cuts, cfg)
                       .value;
  return std::clamp(v, 0.0, 1.0);
}

double tilt_forward_map(double theta, double c, double psi_c,
                        const std::function<double(double)>& xi_x, double y) {
  check_unit(y);
  const double one_minus_y = 1 - y;
  return std::exp(theta * psi_c) / c * std::pow(one_minus_y, theta - 2) *
         xi_x(y / (c * one_minus_y));
}

double tilt_inverse_map(double theta, double c, double psi_c,
                        const std::function<double(double)>& xi_a, double x) {
  require(x > 0 && std::isfinite(x), "x must be positive");
  return c * std::exp(-theta * psi_c) * std::pow(1 + c * x, theta - 2) * xi_a(c * x / (1 + c * x));
}

double tilt_density_forward(double theta, double c, const DistSpec& dist, double y,
                            const QuadConfig& cfg) {
  TiltParams{c}.validate();
  check_unit(y);
  const double psi_c = levy_exponent(dist, c, cfg);
  const MeanLaw law{theta, dist};
  return tilt_forward_map(theta, c, psi_c, [&](double x) { return mean_density(law, x, cfg); }, y);
}

double tilt_density_inverse(double theta, double c, const DistSpec& dist, double x,
                            const QuadConfig& cfg) {
  TiltParams{c}.validate();
  const double psi_c = levy_exponent(dist, c, cfg);
  const MeanLaw tilted{theta, tilt_pushforward(dist, c)};
  return tilt_inverse_map(theta, c, psi_c, [&](double y) { return mean_density(tilted, y, cfg); }, x);
}

double tilted_levy(double theta, double c, const DistSpec& dist, double lambda,
                   const QuadConfig& cfg) {
  TiltParams{c}.validate();
  require(theta > 0, "theta must be positive");
  require(lambda >= 0, "lambda must be nonnegative");
  if (lambda == 0.0) return 0.0;
  return theta * (levy_exponent(dist, c * (1 + lambda), cfg) - levy_exponent(dist, c, cfg));
}

double tilt_scale_density(double sigma, double c, const DistSpec& dist, double y,
                          const QuadConfig& cfg) {
  check_sigma(sigma);
  TiltParams{c}.validate();
  check_unit(y);
  const double x = y / (c * (1 - y));
  const double s = dist.sf(x);
  if (s == 0.0) return 0.0;
  const double psi_c = levy_exponent(dist, c, cfg);
  return std::exp(sigma * psi_c) * std::pow(y, sigma - 1) /
         (kPi * std::pow(c * (1 - y), sigma)) * std::sin(kPi * sigma * s) *
         std::exp(-sigma * phi(dist, x, cfg));
}

double tilted_phi(double c, const DistSpec& dist, double y, const QuadConfig& cfg) {
  TiltParams{c}.validate();
  check_unit(y);
  return phi(dist, y / (c * (1 - y)), cfg) - levy_exponent(dist, c, cfg) + std::log(c * (1 - y));
}

}  // namespace ggc
