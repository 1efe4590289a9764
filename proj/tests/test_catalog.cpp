// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "ggc/catalog.hpp"
#include "ggc/error.hpp"
#include "ggc/mc.hpp"
#include "ggc/mean_density.hpp"
#include "ggc/operators.hpp"
#include "oracle.hpp"

using namespace ggc;

namespace {

constexpr double kE = 2.718281828459045;

// Integral of f over (0, inf) through x = tan(u)^2.
double half_line(const std::function<double(double)>& f) {
  return oracle::integrate(
      [&](double u) {
        const double t = std::tan(u);
        const double c = std::cos(u);
        return f(t * t) * 2 * t / (c * c);
      },
      0, oracle::kPi / 2, {oracle::kPi / 4});
}

std::vector<double> grid_for(const Interval& s) {
  std::vector<double> xs;
  for (int i = 0; i < 30; ++i) {
    const double u = (i + 0.5) / 30;
    if (std::isinf(s.hi)) xs.push_back(s.lo + std::pow(10.0, -2 + 3.5 * u));
    else xs.push_back(s.lo + (s.hi - s.lo) * u);
  }
  return xs;
}

}  // namespace

TEST(GetEntry, Examples) {
  const CatalogEntry u = get_entry("uniform");
  EXPECT_NEAR(*u.closed_mean_density(1, 0.5), 2 * kE / oracle::kPi, 1e-12);
  EXPECT_FALSE(u.closed_mean_density(2, 0.5));
  const double y = 0.3;
  const double want = kE / oracle::kPi * std::sin(oracle::kPi * y) * std::pow(y, -y) * std::pow(1 - y, y - 1);
  EXPECT_NEAR(*u.closed_mean_density(1, y), want, 1e-12);

  const CatalogEntry w = get_entry("exp-ratio-w");
  EXPECT_NEAR(w.dist.pdf(3.0), 1.0 / 16, 1e-15);
  EXPECT_NEAR(*w.closed_psi(2.0), 2 * std::log(2.0), 1e-14);
  EXPECT_NEAR(*w.closed_mean_density(1, 1.0), 1 / oracle::kPi, 1e-12);

  const CatalogEntry r = get_entry("rho-half");
  for (double x : {0.25, 1.0, 4.0})
    EXPECT_NEAR(r.dist.pdf(x), 1 / (oracle::kPi * std::sqrt(x) * (1 + x)), 1e-15);

  for (const std::string& name : catalog_names()) {
    const CatalogEntry e = get_entry(name);
    EXPECT_EQ(e.name, name);
    EXPECT_FALSE(e.notes.empty());
  }
}

TEST(GetEntry, UnknownName) {
  try {
    get_entry("gamma");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownEntry);
  }
}

TEST(GetEntry, Parameters) {
  EXPECT_EQ(get_entry("tilted-arcsine-p", {{"p", 0.2}}).dist.provenance().params.at(0).second, 0.2);
  EXPECT_NE(get_entry("bfry-g", {{"alpha", 0.3}}).dist.label(), get_entry("bfry-g").dist.label());
}

TEST(ArcsineMeanDensity, Examples) {
  EXPECT_NEAR(arcsine_mean_density(1, 0.5), 4 / oracle::kPi, 1e-12);
  EXPECT_NEAR(arcsine_mean_density(0.5, 0.5), 1.0, 1e-12);
  for (double theta : {0.3, 1.0, 2.7})
    for (double x : {0.05, 0.2, 0.41}) {
      EXPECT_NEAR(arcsine_mean_density(theta, x), arcsine_mean_density(theta, 1 - x), 1e-12);
      EXPECT_NEAR(arcsine_mean_density(theta, x), oracle::beta_pdf(theta + 0.5, theta + 0.5, x), 1e-11);
    }
  EXPECT_THROW(arcsine_mean_density(0, 0.5), Error);
}

TEST(RhoHalfMeanDensity, Examples) {
  EXPECT_NEAR(rho_half_mean_density(1, 1), 1 / (2 * oracle::kPi), 1e-12);
  EXPECT_NEAR(rho_half_mean_density(2, 1), 0.106103, 1e-6);
  for (double theta : {0.2, 1.0, 3.0})
    for (double x : {0.1, 1.0, 7.0})
      EXPECT_NEAR(rho_half_mean_density(theta, x), oracle::gamma_ratio_pdf(theta + 0.5, 0.5, x), 1e-11);
  EXPECT_THROW(rho_half_mean_density(-1, 1), Error);
}

TEST(RhoHalfMeanDensity, GammaRatioDraws) {
  const SampleBatch b = sample_named("gamma-ratio", {{"a", 1.5}, {"b", 0.5}}, 100000, 11);
  const VerifyReport r =
      ks_statistic(b, [](double x) { return oracle::gamma_ratio_cdf(1.5, 0.5, x); }, 0.01);
  EXPECT_TRUE(r.passed) << r.value;
}

TEST(TiltedArcsineDensity, Examples) {
  for (double theta : {0.5, 1.0, 2.0})
    for (double y : {0.1, 0.5, 0.8})
      EXPECT_NEAR(tilted_arcsine_density(theta, 0.5, y), arcsine_mean_density(theta, y), 1e-12);
  EXPECT_NEAR(tilted_arcsine_density(1, 0.5, 0.5), 4 / oracle::kPi, 1e-12);
  EXPECT_THROW(tilted_arcsine_density(1, 1.0, 0.5), Error);
}

TEST(TiltedArcsineDensity, MatchesTiltOfRhoHalf) {
  for (double p : {0.2, 0.3, 0.7}) {
    const double c = p * p / ((1 - p) * (1 - p));
    for (double theta : {0.5, 1.0, 2.0})
      for (double y : {0.1, 0.35, 0.6, 0.9})
        EXPECT_NEAR(tilted_arcsine_density(theta, p, y), tilt_density_forward(theta, c, rho_half_dist(), y),
                    1e-8)
            << "p=" << p << " theta=" << theta << " y=" << y;
  }
}

TEST(TiltedArcsine, BaseIsPushforwardOfRhoHalf) {
  const double p = 0.3;
  const double c = p * p / ((1 - p) * (1 - p));
  const DistSpec a = tilted_arcsine_dist(p);
  const DistSpec t = tilt_pushforward(rho_half_dist(), c);
  for (double y : {0.05, 0.3, 0.7, 0.95}) {
    EXPECT_NEAR(a.cdf(y), t.cdf(y), 1e-12);
    EXPECT_NEAR(a.pdf(y), t.pdf(y), 1e-10);
  }
}

TEST(GammaFunction, Duplication) {
  for (double z : {0.25, 0.5, 1.0, 1.7, 3.2, 10.5}) {
    const double lhs = log_gamma(z) + log_gamma(z + 0.5);
    const double rhs = (1 - 2 * z) * std::log(2.0) + 0.5 * std::log(oracle::kPi) + log_gamma(2 * z);
    EXPECT_NEAR(lhs, rhs, 1e-12) << z;
    EXPECT_NEAR(log_gamma(z), std::lgamma(z), 1e-13 * std::max(1.0, std::abs(std::lgamma(z))));
  }
  // Arcsine normalizer Gamma(2 theta + 1) / Gamma(theta + 1/2)^2 in duplicated form.
  for (double theta : {0.5, 1.0, 2.0}) {
    const double direct = std::exp(log_gamma(2 * theta + 1) - 2 * log_gamma(theta + 0.5));
    const double dup = std::pow(2.0, 2 * theta) * std::exp(log_gamma(theta + 1) - log_gamma(theta + 0.5)) /
                       std::sqrt(oracle::kPi);
    EXPECT_NEAR(direct, dup, 1e-12 * direct);
  }
}

// Properties.

TEST(CatalogProperties, ClosedMeanDensityMatchesEngine) {
  for (const std::string& name : catalog_names()) {
    const CatalogEntry e = get_entry(name);
    const Interval s = e.dist.support();
    std::vector<double> thetas{0.5, 1.0, 2.0};
    if (name == "bfry-g") thetas = {0.5};
    int checked = 0;
    for (double theta : thetas)
      for (double x : grid_for(s)) {
        const std::optional<double> want = e.closed_mean_density(theta, x);
        if (!want) continue;
        ++checked;
        EXPECT_NEAR(mean_density({theta, e.dist}, x), *want, 1e-6)
            << name << " theta=" << theta << " x=" << x;
      }
    if (name != "lamperti") EXPECT_GE(checked, 30) << name;
  }
}

TEST(CatalogProperties, ClosedPsiMatchesLevyExponent) {
  for (const std::string& name : catalog_names()) {
    const CatalogEntry e = get_entry(name);
    if (!e.closed_psi) continue;
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
      const std::optional<double> want = e.closed_psi(lambda);
      ASSERT_TRUE(want) << name;
      EXPECT_NEAR(levy_exponent(e.dist, lambda), *want, 1e-8) << name << " lambda=" << lambda;
    }
  }
}

TEST(CatalogProperties, ClosedPhiMatchesQuadrature) {
  for (const char* name : {"uniform", "exp-ratio-w", "arcsine", "rho-half", "tilted-arcsine-p"}) {
    const CatalogEntry e = get_entry(name);
    for (double t : {0.1, 0.5, 0.9, 1.5, 4.0}) {
      const std::optional<double> want = e.closed_phi(t);
      if (!want) continue;
      EXPECT_NEAR(phi(e.dist, t), *want, 1e-8) << name << " t=" << t;
    }
  }
}

TEST(CatalogProperties, LinnikLaplace) {
  for (double theta : {0.5, 1.0})
    for (double lambda : {0.5, 1.0, 2.0}) {
      const double lt = half_line([&](double m) {
        return std::pow(1 + lambda * m, -theta) * rho_half_mean_density(theta, m);
      });
      EXPECT_NEAR(lt, std::pow(1 + std::sqrt(lambda), -2 * theta), 1e-6)
          << "theta=" << theta << " lambda=" << lambda;
    }
}

TEST(CatalogProperties, WLawLaplaceAtOne) {
  const double lt = half_line([](double m) { return w_mean_density_order1(m) / (1 + m); });
  EXPECT_NEAR(lt, std::exp(-1.0), 1e-8);
  EXPECT_NEAR(std::exp(-levy_exponent(exp_ratio_w_dist(), 1.0)), std::exp(-1.0), 1e-8);
}

TEST(Prop43, IdentityAcrossTheta) {
  for (double theta : {-0.25, 0.0, 0.5, 1.0}) {
    const VerifyReport r = prop43_identity_check(theta, 100000, 42);
    EXPECT_TRUE(r.passed) << "theta=" << theta << " ks=" << r.value;
    EXPECT_LE(r.value, 0.012);
    if (theta > 0) EXPECT_TRUE(r.metadata.contains("ks_vs_scaled_mean_cdf"));
  }
  EXPECT_THROW(prop43_identity_check(-0.5, 1000, 1), Error);
}
