// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Distribution function and density of the Dirichlet mean M_theta(F_X).
#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ggc/dist.hpp"

namespace ggc {

// (1/pi) sin(pi theta F(t)) exp(-theta phi(t)). Throws JumpTooLarge when
// theta times the largest atom of F is at least 1.
double delta(double theta, const DistSpec& dist, double t, const QuadConfig& cfg = {});

double mean_cdf(const MeanLaw& law, double x, const QuadConfig& cfg = {});

// theta == 1: delta itself; theta > 1: kernel (x - t)^{theta - 2} against
// delta; theta < 1: kernel (x - t)^{theta - 1} against the derivative of
// sin(pi theta F) exp(-theta phi). Zero outside the support hull; +inf at an
// atom where the density blows up.
double mean_density(const MeanLaw& law, double x, const QuadConfig& cfg = {});

// The derivative branch for any theta > 0. Requires a density and no atoms
// in [support.lo, x]; throws MissingDensity otherwise.
double mean_density_general(const MeanLaw& law, double x, const QuadConfig& cfg = {});

struct DensityProfile {
  MeanLaw law;
  std::vector<double> grid;
  std::vector<double> values;
  std::optional<std::vector<double>> cdf_values;
  std::vector<double> infinite_at;  // grid points where the density diverges
};

DensityProfile tabulate_profile(const MeanLaw& law, std::span<const double> grid, bool with_cdf,
                                const QuadConfig& cfg = {});

// Columns x, pdf, cdf; '#' metadata header.
void write_profile_csv(const DensityProfile& profile, std::ostream& os);

}  // namespace ggc
