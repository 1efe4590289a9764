// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Reference laws with closed-form mean densities, phi and psi.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggc/dist.hpp"
#include "ggc/mc.hpp"

namespace ggc {

using MeanDensityForm = std::function<std::optional<double>(double theta, double x)>;
using CatalogParams = std::map<std::string, double>;

struct CatalogEntry {
  std::string name;
  DistSpec dist;
  MeanDensityForm closed_mean_density;  // nullopt where no closed form is known
  ClosedForm closed_phi;
  ClosedForm closed_psi;
  std::vector<std::string> notes;
};

// Names: uniform, exp-ratio-w, arcsine, rho-half, tilted-arcsine-p (param p,
// default 0.3), bfry-g (param alpha, default 0.5), lamperti (param alpha,
// default 0.5). Throws UnknownEntry for anything else.
CatalogEntry get_entry(std::string_view name, const CatalogParams& params = {});
const std::vector<std::string>& catalog_names();

DistSpec uniform_dist();
DistSpec exp_ratio_w_dist();
DistSpec arcsine_dist();
DistSpec rho_half_dist();
DistSpec tilted_arcsine_dist(double p);
DistSpec lamperti_dist(double alpha);

// Closed-form scalar laws.
double log_gamma(double x);
// Beta(a, b) density.
double beta_density(double a, double b, double x);
// Beta(theta + 1/2, theta + 1/2) density.
double arcsine_mean_density(double theta, double x);
// Gamma(theta + 1) / (Gamma(theta + 1/2) Gamma(1/2)) x^{theta - 1/2} (1 + x)^{-theta - 1}.
double rho_half_mean_density(double theta, double x);
// Mean density of the tilted arcsine law B_{1/2,p}.
double tilted_arcsine_density(double theta, double p, double y);
// Density of the order-1 mean of the uniform law.
double uniform_mean_density_order1(double y);
// Density of the order-1 mean of F_W.
double w_mean_density_order1(double x);

// Monte Carlo check of X_{1/2,theta} = beta_{theta+1/2,1/2} X_{1/2,theta+1/2},
// X_{1/2,t} = G_{t+1/2} / G_{1/2}. For theta > 0 the report also covers the
// comparison with the beta-scaled order-(1 + theta) mean of rho-half; the
// worst statistic is reported.
VerifyReport prop43_identity_check(double theta, std::size_t n, std::uint64_t seed,
                                   const QuadConfig& cfg = {});

}  // namespace ggc
