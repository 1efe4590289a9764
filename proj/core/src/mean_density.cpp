// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/mean_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "ggc/error.hpp"
#include "ggc/io.hpp"

namespace ggc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCdfSlack = 1e-6;

void check_jumps(double theta, const DistSpec& d) {
  require(theta > 0 && std::isfinite(theta), "theta must be positive");
  if (theta * d.largest_atom() >= 1)
    throw Error(ErrorKind::JumpTooLarge, "theta times the largest atom of '" + d.label() +
                                             "' is " + fmt17(theta * d.largest_atom()) +
                                             ", must be below 1");
}

// Interior points of (lo, x) where the integrand in t is not smooth.
std::vector<double> kinks(const DistSpec& d, double lo, double x) {
  std::vector<double> out;
  for (const Atom& a : d.atoms())
    if (a.location > lo && a.location < x) out.push_back(a.location);
  if (const ContinuousPart* c = d.continuous()) {
    for (double b : c->breakpoints)
      if (b > lo && b < x) out.push_back(b);
    if (c->support.lo > lo && c->support.lo < x) out.push_back(c->support.lo);
    if (c->support.hi > lo && c->support.hi < x) out.push_back(c->support.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Integrates g(t, t - lo, x - t) over [lo, x] split at the cuts, passing
// exact distances to both ends of the whole range.
double integrate_to(const std::function<double(double, double, double)>& g, double lo, double x,
                    const std::vector<double>& cuts, const QuadConfig& cfg) {
  std::vector<double> pts{lo};
  pts.insert(pts.end(), cuts.begin(), cuts.end());
  pts.push_back(x);
  QuadConfig piece = cfg;
  piece.abs_tol = cfg.abs_tol / static_cast<double>(pts.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double off_lo = pts[i] - lo;
    const double off_hi = x - pts[i + 1];
    total += integrate(
                 [&](double t, double da, double db) { return g(t, off_lo + da, off_hi + db); },
                 pts[i], pts[i + 1], piece)
                 .value;
  }
  return total;
}

struct SinCos {
  double sin;
  double cos;
};

// sin and cos of pi theta F(t) without cancellation when F(t) is close to 1:
// pi theta F = pi theta - pi theta S, and the even part of theta drops out.
SinCos sincos_pi_theta_f(double theta, const DistSpec& d, double t) {
  const double f = d.cdf(t);
  if (f <= 0.5) return {std::sin(kPi * theta * f), std::cos(kPi * theta * f)};
  double r = std::fmod(theta, 2.0);
  double sign = 1.0;
  if (r >= 1) {
    r -= 1;
    sign = -1.0;
  }
  const double a = kPi * (r - theta * d.sf(t));
  return {sign * std::sin(a), sign * std::cos(a)};
}

double sin_pi_theta_f(double theta, const DistSpec& d, double t) {
  return sincos_pi_theta_f(theta, d, t).sin;
}

}  // namespace

double delta(double theta, const DistSpec& d, double t, const QuadConfig& cfg) {
  check_jumps(theta, d);
  require(t >= 0 && std::isfinite(t), "delta requires t >= 0");
  if (d.cdf(t) == 0.0) return 0.0;
  const double s = sin_pi_theta_f(theta, d, t);
  if (s == 0.0) return 0.0;
  return s / kPi * std::exp(-theta * phi(d, t, cfg));
}

double mean_cdf(const MeanLaw& law, double x, const QuadConfig& cfg) {
  const DistSpec& d = law.base;
  const double theta = law.theta;
  check_jumps(theta, d);
  require(x >= 0 && std::isfinite(x), "mean_cdf requires x >= 0");
  const Interval s = d.support();
  if (x >= s.hi) return 1.0;
  if (x < s.lo) return 0.0;
  const double v = integrate_to(
      [&](double t, double, double to_x) {
        const double k = theta == 1.0 ? 1.0 : std::pow(to_x, theta - 1);
        if (k == 0.0) return 0.0;
        return k * delta(theta, d, t, cfg);
      },
      s.lo, x, kinks(d, s.lo, x), cfg);
  if (v > 1 + kCdfSlack || v < -kCdfSlack || !std::isfinite(v))
    throw Error(ErrorKind::NotADistribution,
                "mean CDF of '" + d.label() + "' evaluated to " + fmt17(v) + " at x=" + fmt17(x));
  return std::clamp(v, 0.0, 1.0);
}

double mean_density_general(const MeanLaw& law, double x, const QuadConfig& cfg) {
  const DistSpec& d = law.base;
  const double theta = law.theta;
  check_jumps(theta, d);
  require(x >= 0 && std::isfinite(x), "mean_density requires x >= 0");
  const Interval s = d.support();
  if (x < s.lo || x > s.hi) return 0.0;
  const ContinuousPart* c = d.continuous();
  if (!c || !c->pdf)
    throw Error(ErrorKind::MissingDensity, "general density branch needs a density for '" +
                                               d.label() + "'");
  for (const Atom& a : d.atoms())
    if (a.location <= x)
      throw Error(ErrorKind::MissingDensity,
                  "general density branch is restricted to laws without atoms in [lo, x]; '" +
                      d.label() + "' has an atom at " + fmt17(a.location));
  const double lo = c->support.lo;
  const double hi = c->support.hi;
  const double m = d.continuous_mass();
  // t = lo + span u with the factor span^theta taken into the density, so
  // that nothing overflows when x - lo is tiny.
  const double span = x - lo;
  if (span == 0.0) return 0.0;
  const double scale = std::pow(span, theta);
  std::vector<double> ucuts;
  for (double k : kinks(d, lo, x)) ucuts.push_back((k - lo) / span);
  const double v = integrate_to(
      [&](double, double du_lo, double du_x) {
        const double to_x = span * du_x;
        // A node whose distance to an end underflowed lies on it: a null set.
        if (to_x == 0.0 || du_x == 0.0) return 0.0;
        const double k = std::pow(du_x, theta - 1);
        if (k == 0.0) return 0.0;
        const double from_lo = span * du_lo;
        if (from_lo == 0.0) return 0.0;
        const double t = std::min(du_lo <= 0.5 ? lo + from_lo : x - to_x, x);
        const Abscissa at{t, from_lo, std::isfinite(hi) ? (hi - x) + to_x : kInf};
        const double f = scale * m * c->pdf(at);
        const SinCos sc = sincos_pi_theta_f(theta, d, t);
        const double ph = phi(d, t, cfg);
        // With F(t) this small the phi' term is below rounding of the f term.
        const double dph = std::abs(sc.sin) < 1e-30 ? 0.0 : phi_derivative(d, at, cfg);
        // t rounded onto a support end where phi' diverges: a null set.
        if (!std::isfinite(dph)) return 0.0;
        const double hprime =
            std::exp(-theta * ph) * (kPi * theta * f * sc.cos - theta * scale * dph * sc.sin);
        return k * hprime;
      },
      0.0, 1.0, ucuts, cfg);
  return std::max(0.0, v / kPi);
}

double mean_density(const MeanLaw& law, double x, const QuadConfig& cfg) {
  const DistSpec& d = law.base;
  const double theta = law.theta;
  check_jumps(theta, d);
  require(x >= 0 && std::isfinite(x), "mean_density requires x >= 0");
  const Interval s = d.support();
  if (d.continuous_mass() == 0.0 && d.atoms().size() == 1)
    throw Error(ErrorKind::MissingDensity, "mean of a point mass has no density");
  if (x < s.lo || x > s.hi) return 0.0;
  if (theta == 1.0) {
    if (d.atom_weight_at(x) > 0 && d.cdf(x) < 1) return kInf;
    return delta(1.0, d, x, cfg);
  }
  if (theta < 1.0) return mean_density_general(law, x, cfg);
  if (x == s.lo) return 0.0;
  const std::vector<double> cuts = kinks(d, s.lo, x);
  if (theta >= 2.0) {
    const double v = integrate_to(
        [&](double t, double, double to_x) {
          const double k = theta == 2.0 ? 1.0 : std::pow(to_x, theta - 2);
          return k == 0.0 ? 0.0 : k * delta(theta, d, t, cfg);
        },
        s.lo, x, cuts, cfg);
    return std::max(0.0, (theta - 1) * v);
  }
  // theta in (1, 2): t = x - s^{1/(theta-1)} turns the kernel into ds.
  const double p = 1 / (theta - 1);
  const double span = x - s.lo;
  const double s_max = std::pow(span, theta - 1);
  std::vector<double> scuts;
  for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) scuts.push_back(std::pow(x - *it, theta - 1));
  const double v = integrate_to(
      [&](double sv, double, double to_max) {
        double t;
        if (sv < 0.5 * s_max) {
          t = x - std::pow(sv, p);
        } else {
          t = s.lo - span * std::expm1(p * std::log1p(-to_max / s_max));
        }
        t = std::clamp(t, s.lo, x);
        return delta(theta, d, t, cfg);
      },
      0.0, s_max, scuts, cfg);
  return std::max(0.0, v);
}

DensityProfile tabulate_profile(const MeanLaw& law, std::span<const double> grid, bool with_cdf,
                                const QuadConfig& cfg) {
  DensityProfile prof{law, {grid.begin(), grid.end()}, {}, std::nullopt, {}};
  for (std::size_t i = 1; i < grid.size(); ++i)
    require(grid[i] > grid[i - 1], "profile grid must be strictly increasing");
  std::vector<double> cdfs;
  for (double x : grid) {
    const double v = mean_density(law, x, cfg);
    if (std::isinf(v)) prof.infinite_at.push_back(x);
    prof.values.push_back(v);
    if (with_cdf) cdfs.push_back(mean_cdf(law, x, cfg));
  }
  if (with_cdf) prof.cdf_values = std::move(cdfs);
  return prof;
}

void write_profile_csv(const DensityProfile& p, std::ostream& os) {
  os << "# law=mean\n"
     << "# theta=" << fmt17(p.law.theta) << '\n'
     << "# base=" << p.law.base.label() << '\n'
     << "# points=" << p.grid.size() << '\n';
  if (!p.infinite_at.empty()) {
    os << "# infinite_at=";
    for (std::size_t i = 0; i < p.infinite_at.size(); ++i)
      os << (i ? ";" : "") << fmt17(p.infinite_at[i]);
    os << '\n';
  }
  os << "x,pdf,cdf\n";
  for (std::size_t i = 0; i < p.grid.size(); ++i) {
    os << fmt17(p.grid[i]) << ',' << fmt17(p.values[i]) << ','
       << (p.cdf_values ? fmt17((*p.cdf_values)[i]) : std::string("nan")) << '\n';
  }
}

}  // namespace ggc
