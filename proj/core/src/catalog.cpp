// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ggc/error.hpp"
#include "ggc/io.hpp"
#include "ggc/mean_density.hpp"
#include "ggc/operators.hpp"
#include "ggc/subordinators.hpp"

namespace ggc {

namespace {

constexpr double kPi = std::numbers::pi;

Provenance named(std::string family, std::vector<std::pair<std::string, double>> params = {}) {
  Provenance p;
  p.kind = Provenance::Kind::NamedFamily;
  p.family = std::move(family);
  p.params = std::move(params);
  return p;
}

double get_param(const CatalogParams& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

// log Gamma(theta + 1) - log Gamma(theta + 1/2) - log Gamma(1/2).
double log_bg_constant(double theta) {
  return log_gamma(theta + 1) - log_gamma(theta + 0.5) - 0.5 * std::log(kPi);
}

void check_theta(double theta) { require(theta > 0 && std::isfinite(theta), "theta must be positive"); }

}  // namespace

double log_gamma(double x) {
  require(x > 0 && std::isfinite(x), "log_gamma requires a positive argument");
  return std::lgamma(x);
}

double beta_density(double a, double b, double x) {
  require(a > 0 && b > 0, "beta parameters must be positive");
  if (x <= 0 || x >= 1) return 0.0;
  return std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b) + (a - 1) * std::log(x) +
                  (b - 1) * std::log1p(-x));
}

double arcsine_mean_density(double theta, double x) {
  check_theta(theta);
  return beta_density(theta + 0.5, theta + 0.5, x);
}

double rho_half_mean_density(double theta, double x) {
  check_theta(theta);
  require(x >= 0, "x must be nonnegative");
  if (x == 0) return theta < 0.5 ? kInf : (theta == 0.5 ? std::exp(log_bg_constant(theta)) : 0.0);
  return std::exp(log_bg_constant(theta) + (theta - 0.5) * std::log(x) -
                  (theta + 1) * std::log1p(x));
}

double tilted_arcsine_density(double theta, double p, double y) {
  check_theta(theta);
  require(p > 0 && p < 1, "p must lie in (0, 1)");
  if (y <= 0 || y >= 1) return 0.0;
  const double q = 1 - p;
  const double d = p * p * (1 - y) + q * q * y;
  return p * q *
         std::exp(log_bg_constant(theta) + (theta - 0.5) * (std::log(y) + std::log1p(-y)) -
                  (theta + 1) * std::log(d));
}

double uniform_mean_density_order1(double y) {
  if (y <= 0 || y >= 1) return 0.0;
  return std::numbers::e / kPi * std::sin(kPi * y) *
         std::exp(-y * std::log(y) - (1 - y) * std::log1p(-y));
}

double w_mean_density_order1(double x) {
  if (x <= 0) return 0.0;
  const double r = x / (1 + x);
  return std::sin(kPi * r) / kPi * std::exp(-r * std::log(x));
}

DistSpec uniform_dist() {
  ContinuousPart c;
  c.support = {0.0, 1.0};
  c.cdf = [](double x) { return x; };
  c.sf = [](double x) { return 1 - x; };
  c.pdf = [](const Abscissa&) { return 1.0; };
  c.quantile = [](double u) { return u; };
  DistSpec d("uniform", std::move(c), 1.0, {});
  d.set_closed_phi([](double t) -> std::optional<double> {
    const double a = t == 0 ? 0.0 : t * std::log(t);
    const double b = t == 1 ? 0.0 : (1 - t) * std::log(std::abs(1 - t));
    return a + b - 1;
  });
  d.set_closed_psi([](double lambda) -> std::optional<double> {
    if (lambda == 0) return 0.0;
    if (lambda < 1e-4) return lambda / 2 - lambda * lambda / 6 + lambda * lambda * lambda / 12;
    return (lambda + 1) / lambda * std::log1p(lambda) - 1;
  });
  d.set_provenance(named("uniform"));
  return d;
}

DistSpec exp_ratio_w_dist() {
  ContinuousPart c;
  c.support = {0.0, kInf};
  c.cdf = [](double x) { return x / (1 + x); };
  c.sf = [](double x) { return 1 / (1 + x); };
  c.pdf = [](const Abscissa& a) { return 1 / ((1 + a.x) * (1 + a.x)); };
  c.quantile = [](double u) { return u >= 1 ? kInf : u / (1 - u); };
  DistSpec d("exp-ratio-w", std::move(c), 1.0, {});
  d.set_closed_phi([](double t) -> std::optional<double> {
    return t == 0 ? 0.0 : t / (1 + t) * std::log(t);
  });
  d.set_closed_psi([](double lambda) -> std::optional<double> {
    if (lambda == 0) return 0.0;
    const double e = lambda - 1;
    if (std::abs(e) < 1e-4) return 1 + e / 2 - e * e / 6 + e * e * e / 12;
    return lambda * std::log(lambda) / e;
  });
  d.set_provenance(named("exp-ratio-w"));
  return d;
}

DistSpec arcsine_dist() {
  ContinuousPart c;
  c.support = {0.0, 1.0};
  c.cdf = [](double x) { return 2 / kPi * std::asin(std::sqrt(x)); };
  c.sf = [](double x) { return 2 / kPi * std::asin(std::sqrt(1 - x)); };
  c.pdf = [](const Abscissa& a) { return 1 / (kPi * std::sqrt(a.from_lo * a.to_hi)); };
  c.quantile = [](double u) {
    const double s = std::sin(kPi * u / 2);
    return s * s;
  };
  DistSpec d("arcsine", std::move(c), 1.0, {});
  d.set_closed_phi([](double t) -> std::optional<double> {
    if (t <= 1) return -std::log(4.0);
    return 2 * std::log((std::sqrt(t) + std::sqrt(t - 1)) / 2);
  });
  d.set_closed_psi([](double lambda) -> std::optional<double> {
    return 2 * std::log((1 + std::sqrt(1 + lambda)) / 2);
  });
  d.set_provenance(named("arcsine"));
  return d;
}

DistSpec rho_half_dist() {
  ContinuousPart c;
  c.support = {0.0, kInf};
  c.cdf = [](double x) { return 2 / kPi * std::atan(std::sqrt(x)); };
  c.sf = [](double x) { return 2 / kPi * std::atan(1 / std::sqrt(x)); };
  c.pdf = [](const Abscissa& a) { return 1 / (kPi * std::sqrt(a.from_lo) * (1 + a.x)); };
  c.quantile = [](double u) {
    if (u >= 1) return kInf;
    const double t = std::tan(kPi * u / 2);
    return t * t;
  };
  DistSpec d("rho-half", std::move(c), 1.0, {});
  d.set_closed_phi([](double t) -> std::optional<double> { return std::log1p(t); });
  d.set_closed_psi([](double lambda) -> std::optional<double> {
    return 2 * std::log1p(std::sqrt(lambda));
  });
  d.set_provenance(named("rho-half"));
  return d;
}

DistSpec tilted_arcsine_dist(double p) {
  require(p > 0 && p < 1, "p must lie in (0, 1)");
  const double q = 1 - p;
  ContinuousPart c;
  c.support = {0.0, 1.0};
  c.cdf = [p, q](double y) { return 2 / kPi * std::atan(q / p * std::sqrt(y / (1 - y))); };
  c.sf = [p, q](double y) { return 2 / kPi * std::atan(p / q * std::sqrt((1 - y) / y)); };
  c.pdf = [p, q](const Abscissa& a) {
    const double d = p * p * a.to_hi + q * q * a.x;
    return p * q / (kPi * std::sqrt(a.from_lo * a.to_hi) * d);
  };
  c.quantile = [p, q](double u) {
    const double s = p * std::sin(kPi * u / 2);
    const double k = q * std::cos(kPi * u / 2);
    return s * s / (s * s + k * k);
  };
  DistSpec d("tilted-arcsine(p=" + fmt_short(p) + ")", std::move(c), 1.0, {});
  d.set_closed_phi([p, q](double y) -> std::optional<double> {
    if (y < 0 || y > 1) return std::nullopt;
    return std::log(p * p * (1 - y) + q * q * y);
  });
  d.set_closed_psi([p, q](double lambda) -> std::optional<double> {
    return 2 * std::log(q + p * std::sqrt(1 + lambda));
  });
  d.set_provenance(named("tilted-arcsine-p", {{"p", p}}));
  return d;
}

DistSpec lamperti_dist(double alpha) {
  require(alpha > 0 && alpha < 1, "alpha must lie in (0, 1)");
  const double s = std::sin(kPi * alpha);
  const double k = std::cos(kPi * alpha);
  ContinuousPart c;
  c.support = {0.0, kInf};
  c.cdf = [alpha](double y) { return lamperti_cdf(alpha, y); };
  c.sf = [alpha, s, k](double y) { return std::atan2(s, y + k) / (kPi * alpha); };
  c.pdf = [alpha](const Abscissa& a) { return std::isinf(a.x) ? 0.0 : lamperti_density(alpha, a.x); };
  c.quantile = [alpha](double u) { return lamperti_quantile(alpha, u); };
  DistSpec d("lamperti(alpha=" + fmt_short(alpha) + ")", std::move(c), 1.0, {});
  d.set_provenance(named("lamperti", {{"alpha", alpha}}));
  return d;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"uniform",          "exp-ratio-w", "arcsine",
                                              "rho-half",         "tilted-arcsine-p",
                                              "bfry-g",           "lamperti"};
  return names;
}

CatalogEntry get_entry(std::string_view name, const CatalogParams& params) {
  CatalogEntry e{std::string(name), DistSpec::point_mass(0.0), {}, {}, {}, {}};
  if (name == "uniform") {
    e.dist = uniform_dist();
    e.closed_mean_density = [](double theta, double x) -> std::optional<double> {
      if (theta != 1.0) return std::nullopt;
      return uniform_mean_density_order1(x);
    };
    e.notes = {"uniform law on [0, 1]", "order-1 mean density (e/pi) sin(pi y) y^-y (1-y)^-(1-y)"};
  } else if (name == "exp-ratio-w") {
    e.dist = exp_ratio_w_dist();
    e.closed_mean_density = [](double theta, double x) -> std::optional<double> {
      if (theta != 1.0) return std::nullopt;
      return w_mean_density_order1(x);
    };
    e.notes = {"ratio of independent unit exponentials, density (1 + x)^-2",
               "psi(lambda) = lambda log(lambda) / (lambda - 1)"};
  } else if (name == "arcsine") {
    e.dist = arcsine_dist();
    e.closed_mean_density = [](double theta, double x) -> std::optional<double> {
      return arcsine_mean_density(theta, x);
    };
    e.notes = {"beta(1/2, 1/2)", "order-theta mean is beta(theta + 1/2, theta + 1/2)"};
  } else if (name == "rho-half") {
    e.dist = rho_half_dist();
    e.closed_mean_density = [](double theta, double x) -> std::optional<double> {
      return rho_half_mean_density(theta, x);
    };
    e.notes = {"ratio G_{1/2} / G'_{1/2}, density x^{-1/2} / (pi (1 + x))",
               "order-theta mean has the law of G_{theta+1/2} / G_{1/2}"};
  } else if (name == "tilted-arcsine-p") {
    const double p = get_param(params, "p", 0.3);
    e.dist = tilted_arcsine_dist(p);
    e.closed_mean_density = [p](double theta, double x) -> std::optional<double> {
      return tilted_arcsine_density(theta, p, x);
    };
    e.notes = {"c X / (c X + 1) for X ~ rho-half and c = p^2 / (1 - p)^2",
               "mean density carries the factor (p^2 (1 - y) + q^2 y)^{-(theta + 1)}"};
  } else if (name == "bfry-g") {
    const double alpha = get_param(params, "alpha", 0.5);
    e.dist = bfry_base(alpha);
    e.closed_mean_density = [alpha](double theta, double x) -> std::optional<double> {
      if (theta != 1 - alpha) return std::nullopt;
      return x > 1 ? alpha * std::pow(x, -alpha - 1) : 0.0;
    };
    e.notes = {"law of 1 / G_alpha on (1, inf)", "order-(1 - alpha) mean has the law of U^{-1/alpha}"};
  } else if (name == "lamperti") {
    const double alpha = get_param(params, "alpha", 0.5);
    e.dist = lamperti_dist(alpha);
    e.closed_mean_density = [](double, double) -> std::optional<double> { return std::nullopt; };
    e.notes = {"(S_alpha / S'_alpha)^alpha for independent positive stable laws"};
  } else {
    throw Error(ErrorKind::UnknownEntry, "unknown catalog entry '" + std::string(name) + "'");
  }
  e.closed_phi = e.dist.closed_phi();
  e.closed_psi = e.dist.closed_psi();
  return e;
}

VerifyReport prop43_identity_check(double theta, std::size_t n, std::uint64_t seed,
                                   const QuadConfig& cfg) {
  require(theta > -0.5 && std::isfinite(theta), "theta must exceed -1/2");
  require(n >= 100, "need at least 100 draws");
  const double threshold = 0.012;
  const SampleBatch lhs = sample_named("gamma-ratio", {{"a", theta + 0.5}, {"b", 0.5}}, n, seed);
  const SampleBatch rhs = generate(
      n, seed ^ 0x9E3779B97F4A7C15ull, "beta(theta+1/2,1/2)*X(theta+1/2)", [theta](Philox& r) {
        const double b = beta_variate(r, theta + 0.5, 0.5);
        return b * gamma_variate(r, theta + 1) / gamma_variate(r, 0.5);
      });
  const double d_mc = ks_two_sample_distance(lhs.values, rhs.values);
  std::map<std::string, std::string> meta{{"theta", fmt17(theta)},
                                          {"n", std::to_string(n)},
                                          {"seed", std::to_string(seed)},
                                          {"ks_mc_sides", fmt17(d_mc)}};
  double worst = d_mc;
  if (theta > 0) {
    // Beta-scaled order-(1 + theta) mean of rho-half, tabulated through its CDF.
    QuadConfig q = cfg;
    q.use_closed_forms = true;
    const double order = 1 + theta;
    const double sigma = (theta + 0.5) / (1 + theta);
    const MeanLaw law = beta_scale(order, sigma, rho_half_dist(), q);
    std::vector<double> xs{0.0};
    std::vector<double> fs{0.0};
    for (int k = 0; k <= 160; ++k) {
      const double x = std::pow(10.0, -5 + 13.0 * k / 160);
      xs.push_back(x);
      fs.push_back(mean_cdf(law, x, q));
    }
    const double d_an = ks_distance(lhs.values, interpolated_cdf(xs, fs));
    meta["ks_vs_scaled_mean_cdf"] = fmt17(d_an);
    worst = std::max(worst, d_an);
  }
  return make_report("prop43(theta=" + fmt_short(theta) + ")", StatisticKind::Ks, worst, threshold,
                     std::move(meta));
}

}  // namespace ggc
