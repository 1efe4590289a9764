// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Beta scaling and exponential tilting as maps between mean laws.
#pragma once

#include <functional>

#include "ggc/dist.hpp"

namespace ggc {

struct TiltParams {
  double c;
  void validate() const;
};

// beta_{theta sigma, theta (1 - sigma)} M_{theta sigma}(F_X), which has the
// law of M_theta(F_{X Y_sigma}).
struct ScaledMeanLaw {
  double sigma;
  DistSpec base;
  double order;

  double reduced_order() const { return order * sigma; }
  MeanLaw as_mean_law() const;
};

ScaledMeanLaw make_scaled_mean_law(double theta, double sigma, DistSpec base);

// MeanLaw(theta, mix_with_atom(dist, sigma)).
MeanLaw beta_scale(double theta, double sigma, const DistSpec& dist, const QuadConfig& cfg = {});

// Order-1 density of M_1(F_{X Y_sigma}).
double scaled_mean_density(double sigma, const DistSpec& dist, double x, const QuadConfig& cfg = {});
// Density and CDF of G_sigma M_sigma(F_X) = G_1 M_1(F_{X Y_sigma}).
double ggc_density(double sigma, const DistSpec& dist, double x, const QuadConfig& cfg = {});
double ggc_cdf(double sigma, const DistSpec& dist, double x, const QuadConfig& cfg = {});

// Density maps between xi_{theta F_X} and xi_{theta F_{A_c}}, A_c = cX/(cX+1).
// psi_c is psi_{F_X}(c).
double tilt_forward_map(double theta, double c, double psi_c,
                        const std::function<double(double)>& xi_x, double y);
double tilt_inverse_map(double theta, double c, double psi_c,
                        const std::function<double(double)>& xi_a, double x);

// Density of M_theta(F_{A_c}) at y in (0, 1) from the mean density of X.
double tilt_density_forward(double theta, double c, const DistSpec& dist, double y,
                            const QuadConfig& cfg = {});
// Density of M_theta(F_X) at x > 0 from the mean density of the pushforward A_c.
double tilt_density_inverse(double theta, double c, const DistSpec& dist, double x,
                            const QuadConfig& cfg = {});
// theta [psi(c (1 + lambda)) - psi(c)].
double tilted_levy(double theta, double c, const DistSpec& dist, double lambda,
                   const QuadConfig& cfg = {});
// Density of M_1(F_{A_c Y_sigma}) at y in (0, 1).
double tilt_scale_density(double sigma, double c, const DistSpec& dist, double y,
                          const QuadConfig& cfg = {});
// Phi_{F_{A_c}}(y) through phi and psi of X.
double tilted_phi(double c, const DistSpec& dist, double y, const QuadConfig& cfg = {});

}  // namespace ggc
