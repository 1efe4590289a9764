// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Finite-dimensional laws of GGC subordinators and the BFRY family.
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ggc/dist.hpp"

namespace ggc {

struct SubordinatorSpec {
  double theta;
  DistSpec base;
  double horizon;  // 1 / theta
};

SubordinatorSpec make_subordinator(double theta, DistSpec base, const QuadConfig& cfg = {});

struct Partition {
  std::vector<std::pair<std::string, double>> cells;  // (label, length)

  static Partition from_lengths(std::span<const double> lengths);
  // sigma_i = rate * length_i; throws InvalidInput unless they sum to 1.
  std::vector<double> sigmas(double rate) const;
};

struct BfryParams {
  double alpha;
  void validate() const;
};

// Per-cell marginal densities g_{sigma_i}(x_i) of the increments.
std::vector<double> fdd_densities(const SubordinatorSpec& spec, const Partition& partition,
                                  std::span<const double> points, const QuadConfig& cfg = {});
// Joint density of independent increments.
double joint_density(std::span<const double> marginals);

double lamperti_density(double alpha, double y);
double lamperti_cdf(double alpha, double y);
double lamperti_quantile(double alpha, double u);

// Density of G_alpha on (0, 1).
double gfrak_density(double alpha, double u);
// CDF of G_alpha on (0, 1).
double gfrak_cdf(double alpha, double u);
// Law of 1 / G_alpha on (1, inf), with the closed-form phi and psi attached.
DistSpec bfry_base(double alpha);

// phi of the law of 1 / G_alpha.
double r_alpha(double alpha, double x);
// Density of the order-1 mean of F_{Y_sigma / G_alpha}.
double bfry_scaled_mean_density(double alpha, double sigma, double x);
// Marginal density and CDF of one increment with weight sigma.
double bfry_marginal_density(double alpha, double sigma, double x, const QuadConfig& cfg = {});
double bfry_marginal_cdf(double alpha, double sigma, double x, const QuadConfig& cfg = {});
// Cells of (0, 1 / (1 - alpha)]; sigma_i = (1 - alpha) |C_i|.
std::vector<double> bfry_fdd(double alpha, const Partition& partition,
                             std::span<const double> points, const QuadConfig& cfg = {});

// CSV with columns cell, sigma, x, density.
void write_fdd_csv(const Partition& partition, std::span<const double> sigmas,
                   std::span<const double> points, std::span<const double> densities,
                   const std::string& header, std::ostream& os);

}  // namespace ggc
