// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/subordinators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ggc/error.hpp"
#include "ggc/io.hpp"
#include "ggc/operators.hpp"

namespace ggc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha) {
  require(alpha > 0 && alpha < 1 && std::isfinite(alpha), "alpha must lie in (0, 1)");
}

// CDF of Z_a at v via the Lamperti closed form, stable for all v >= 0.
double lamperti_cdf_raw(double a, double v) {
  if (std::isinf(v)) return 1.0;
  return std::atan2(v * std::sin(kPi * a), 1 + v * std::cos(kPi * a)) / (kPi * a);
}

void check_points(const Partition& partition, std::span<const double> points) {
  require(points.size() == partition.cells.size(), "need one evaluation point per cell");
  for (double x : points) require(x > 0 && std::isfinite(x), "evaluation points must be positive");
}

}  // namespace

SubordinatorSpec make_subordinator(double theta, DistSpec base, const QuadConfig& cfg) {
  require(theta > 0 && std::isfinite(theta), "theta must be positive");
  if (!check_existence(base, cfg))
    throw Error(ErrorKind::Divergent, "subordinator base '" + base.label() + "' has infinite psi");
  return {theta, std::move(base), 1 / theta};
}

Partition Partition::from_lengths(std::span<const double> lengths) {
  require(!lengths.empty(), "partition needs at least one cell");
  Partition p;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    require(lengths[i] > 0 && std::isfinite(lengths[i]), "cell lengths must be positive");
    p.cells.push_back({"C" + std::to_string(i + 1), lengths[i]});
  }
  return p;
}

std::vector<double> Partition::sigmas(double rate) const {
  require(!cells.empty(), "partition needs at least one cell");
  std::vector<double> out;
  double total = 0.0;
  for (const auto& [label, len] : cells) {
    require(len > 0, "cell '" + label + "' has nonpositive length");
    out.push_back(rate * len);
    total += rate * len;
  }
  if (std::abs(total - 1) > 1e-12)
    throw Error(ErrorKind::InvalidInput,
                "cell weights sum to " + fmt17(total) + "; the partition must cover the horizon");
  return out;
}

void BfryParams::validate() const { check_alpha(alpha); }

std::vector<double> fdd_densities(const SubordinatorSpec& spec, const Partition& partition,
                                  std::span<const double> points, const QuadConfig& cfg) {
  check_points(partition, points);
  const std::vector<double> sig = partition.sigmas(spec.theta);
  std::vector<double> out;
  for (std::size_t i = 0; i < sig.size(); ++i)
    out.push_back(ggc_density(std::min(sig[i], 1.0), spec.base, points[i], cfg));
  return out;
}

double joint_density(std::span<const double> marginals) {
  double p = 1.0;
  for (double m : marginals) p *= m;
  return p;
}

double lamperti_density(double alpha, double y) {
  check_alpha(alpha);
  require(y >= 0 && std::isfinite(y), "y must be nonnegative");
  return std::sin(kPi * alpha) / (kPi * alpha) / (y * y + 2 * y * std::cos(kPi * alpha) + 1);
}

double lamperti_cdf(double alpha, double y) {
  check_alpha(alpha);
  require(y >= 0, "y must be nonnegative");
  if (std::isinf(y)) return 1.0;
  return lamperti_cdf_raw(alpha, y);
}

double lamperti_quantile(double alpha, double u) {
  check_alpha(alpha);
  require(u >= 0 && u <= 1, "u must lie in [0, 1]");
  if (u == 1) return kInf;
  return std::sin(kPi * alpha * u) / std::sin(kPi * alpha * (1 - u));
}

double gfrak_density(double alpha, double u) {
  check_alpha(alpha);
  require(u > 0 && u < 1, "u must lie in (0, 1)");
  const double ua = std::pow(u, alpha);
  const double va = std::pow(1 - u, alpha);
  return alpha * std::sin(kPi * alpha) / ((1 - alpha) * kPi) * (ua / u) * (va / (1 - u)) /
         (ua * ua - 2 * ua * va * std::cos(kPi * alpha) + va * va);
}

double gfrak_cdf(double alpha, double u) {
  check_alpha(alpha);
  require(u >= 0 && u <= 1, "u must lie in [0, 1]");
  if (u == 0) return 0.0;
  if (u == 1) return 1.0;
  // P(G <= u) = P(Z_{1-alpha} <= (u / (1 - u))^alpha).
  return lamperti_cdf_raw(1 - alpha, std::pow(u / (1 - u), alpha));
}

DistSpec bfry_base(double alpha) {
  check_alpha(alpha);
  const double a = 1 - alpha;
  const double sa = std::sin(kPi * a);
  const double ca = std::cos(kPi * a);
  ContinuousPart c;
  c.support = {1.0, kInf};
  c.cdf = [a, alpha](double x) { return lamperti_cdf_raw(a, std::pow(x - 1, alpha)); };
  // Z_a and 1 / Z_a share a law, so P(Z_a > w) = F_{Z_a}(1 / w).
  c.sf = [a, alpha](double x) { return lamperti_cdf_raw(a, std::pow(x - 1, -alpha)); };
  c.pdf = [a, alpha, sa, ca](const Abscissa& p) {
    const double d = p.from_lo;
    if (d == 0) return kInf;
    if (std::isinf(d)) return 0.0;
    const double w = std::pow(d, alpha);
    return sa / (kPi * a) / (w * w + 2 * w * ca + 1) * alpha * w / d;
  };
  c.quantile = [a, alpha](double u) {
    if (u <= 0) return 1.0;
    if (u >= 1) return kInf;
    return 1 + std::pow(std::sin(kPi * a * u) / std::sin(kPi * a * (1 - u)), 1 / alpha);
  };
  DistSpec d("bfry-g(alpha=" + fmt_short(alpha) + ")", std::move(c), 1.0, {});
  d.set_closed_phi([alpha](double t) -> std::optional<double> {
    if (t == 0) return std::log(1 / alpha) / (1 - alpha);
    return r_alpha(alpha, t);
  });
  d.set_closed_psi([alpha](double lambda) -> std::optional<double> {
    if (lambda == 0) return 0.0;
    return -std::log(std::pow(1 + lambda, alpha) - std::pow(lambda, alpha)) / (1 - alpha);
  });
  Provenance pv;
  pv.kind = Provenance::Kind::NamedFamily;
  pv.family = "bfry-g";
  pv.params = {{"alpha", alpha}};
  d.set_provenance(std::move(pv));
  return d;
}

namespace {

// log(1 + e^2 - 2 e cos(pi alpha)), factored for large e.
double log_r_denominator(double alpha, double e) {
  const double c = std::cos(kPi * alpha);
  if (e <= 1) return std::log1p(e * e - 2 * e * c);
  return 2 * std::log(e) + std::log1p((1 / e - 2 * c) / e);
}

}  // namespace

double r_alpha(double alpha, double x) {
  check_alpha(alpha);
  require(x > 0 && std::isfinite(x), "x must be positive");
  if (x <= 1) {
    // 1 - (1 - x)^alpha without cancellation near x = 0 or x = 1.
    const double denom = -std::expm1(alpha * std::log1p(-x));
    return (std::log(x) - std::log(denom)) / (1 - alpha);
  }
  return (2 * std::log(x) - log_r_denominator(alpha, std::pow(x - 1, alpha))) / (2 * (1 - alpha));
}

double bfry_scaled_mean_density(double alpha, double sigma, double x) {
  check_alpha(alpha);
  require(sigma > 0 && sigma <= 1, "sigma must lie in (0, 1]");
  require(x > 0 && std::isfinite(x), "x must be positive");
  const double lead = (-sigma * alpha / (1 - alpha) - 1) * std::log(x);
  if (x <= 1) {
    // M_1 of a base on [1, inf) has no mass below 1.
    if (sigma == 1) return 0.0;
    const double inner = -std::expm1(alpha * std::log1p(-x));
    return std::exp(lead + sigma / (1 - alpha) * std::log(inner)) / kPi * std::sin(kPi * sigma);
  }
  const double e = std::pow(x - 1, alpha);
  const double q = log_r_denominator(alpha, e);
  // F_G(1/x) = P(Z_{1-alpha} <= (x - 1)^{-alpha}).
  const double fg = lamperti_cdf_raw(1 - alpha, 1 / e);
  return std::exp(lead + sigma / (2 * (1 - alpha)) * q) / kPi * std::sin(kPi * sigma * fg);
}

double bfry_marginal_density(double alpha, double sigma, double x, const QuadConfig& cfg) {
  require(x > 0 && std::isfinite(x), "x must be positive");
  // w = x v keeps the integrand at the scale of the density for small x.
  const double cuts[] = {std::min(1.0, 1 / x), std::max(1.0, 1 / x)};
  return integrate(
             [&](double v, double, double) {
               const double e = std::exp(-1 / v);
               const double w = x * v;
               if (e == 0.0 || std::isinf(w)) return 0.0;
               return e / v * bfry_scaled_mean_density(alpha, sigma, w);
             },
             0.0, kInf, cuts, cfg)
      .value;
}

double bfry_marginal_cdf(double alpha, double sigma, double x, const QuadConfig& cfg) {
  require(x >= 0 && std::isfinite(x), "x must be nonnegative");
  if (x == 0) return 0.0;
  const double cuts[] = {std::min(x, 1.0), std::max(x, 1.0)};
  const double v = integrate(
                       [&](double w, double, double) {
                         return -std::expm1(-x / w) * bfry_scaled_mean_density(alpha, sigma, w);
                       },
                       0.0, kInf, cuts, cfg)
                       .value;
  return std::clamp(v, 0.0, 1.0);
}

std::vector<double> bfry_fdd(double alpha, const Partition& partition,
                             std::span<const double> points, const QuadConfig& cfg) {
  check_alpha(alpha);
  check_points(partition, points);
  const std::vector<double> sig = partition.sigmas(1 - alpha);
  std::vector<double> out;
  for (std::size_t i = 0; i < sig.size(); ++i)
    out.push_back(bfry_marginal_density(alpha, std::min(sig[i], 1.0), points[i], cfg));
  return out;
}

void write_fdd_csv(const Partition& partition, std::span<const double> sigmas,
                   std::span<const double> points, std::span<const double> densities,
                   const std::string& header, std::ostream& os) {
  require(sigmas.size() == partition.cells.size() && points.size() == partition.cells.size() &&
              densities.size() == partition.cells.size(),
          "FDD columns must have one entry per cell");
  std::istringstream lines(header);
  for (std::string line; std::getline(lines, line);) os << "# " << line << '\n';
  os << "# joint_density=" << fmt17(joint_density(densities)) << '\n';
  os << "cell,sigma,x,density\n";
  for (std::size_t i = 0; i < partition.cells.size(); ++i) {
    os << partition.cells[i].first << ',' << fmt17(sigmas[i]) << ',' << fmt17(points[i]) << ','
       << fmt17(densities[i]) << '\n';
  }
}

}  // namespace ggc
