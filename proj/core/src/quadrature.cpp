// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "ggc/error.hpp"

namespace ggc {

void QuadConfig::validate() const {
  require(abs_tol > 0 && rel_tol > 0, "quadrature tolerances must be positive");
  require(singularity_pad > 0, "singularity_pad must be positive");
  require(max_subdivisions >= 10, "max_subdivisions must be at least 10");
}

namespace {

constexpr double kTmax = 4.5;
constexpr double kH0 = 0.5;
constexpr int kMaxLevel = 6;
constexpr int kMinLevel = 3;

struct Node {
  double delta;   // normalised distance to the nearer endpoint, in (0, 1]
  double weight;  // (pi/2) cosh t / cosh^2(u)
};

// nodes[k] holds the t >= 0 nodes new at level k (t = 0 included at level 0).
const std::vector<std::vector<Node>>& node_table() {
  static const std::vector<std::vector<Node>> table = [] {
    std::vector<std::vector<Node>> levels(kMaxLevel + 1);
    constexpr double half_pi = std::numbers::pi / 2;
    for (int k = 0; k <= kMaxLevel; ++k) {
      const double h = kH0 / std::ldexp(1.0, k);
      const int stride = k == 0 ? 1 : 2;
      for (int j = k == 0 ? 0 : 1;; j += stride) {
        const double t = j * h;
        if (t > kTmax) break;
        const double u = half_pi * std::sinh(t);
        const double e = std::exp(-2 * u);
        const double delta = 2 * e / (1 + e);  // 1 - tanh(u)
        const double ch = std::cosh(u);
        levels[k].push_back({delta, half_pi * std::cosh(t) / (ch * ch)});
      }
    }
    return levels;
  }();
  return table;
}

class Engine {
 public:
  Engine(const Integrand& g, double lo, double hi, const QuadConfig& cfg)
      : g_(g), lo_(lo), hi_(hi), cfg_(cfg) {}

  QuadResult run() {
    QuadResult r;
    segment(lo_, hi_, cfg_.abs_tol, r);
    return r;
  }

 private:
  double eval(double x, double da, double db, QuadResult& r) const {
    ++r.evaluations;
    const double v = g_(x, da, db);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "non-finite integrand value at x=" << x << " (distances " << da << ", " << db << ")";
      throw Error(ErrorKind::NonConvergence, os.str());
    }
    return v;
  }

  // Level sums for one segment. Returns true on convergence.
  bool tanh_sinh(double a, double b, double abs_tol, double& value, double& err,
                 QuadResult& r) const {
    const auto& table = node_table();
    const double hw = (b - a) / 2;
    const double off_a = a - lo_;
    const double off_b = hi_ - b;
    double sum = 0.0;
    double prev = 0.0;
    for (int k = 0; k <= kMaxLevel; ++k) {
      for (const Node& n : table[k]) {
        const double d = hw * n.delta;
        if (n.delta == 1.0) {
          sum += n.weight * eval(a + hw, off_a + hw, off_b + hw, r);
          continue;
        }
        const double far = 2 * hw - d;
        const double right = eval(b - d, off_a + far, off_b + d, r);
        const double left = eval(a + d, off_a + d, off_b + far, r);
        sum += n.weight * (left + right);
      }
      const double h = kH0 / std::ldexp(1.0, k);
      const double est = hw * h * sum;
      if (k >= kMinLevel) {
        err = std::abs(est - prev);
        value = est;
        if (err <= std::max(abs_tol, cfg_.rel_tol * std::abs(est))) return true;
      }
      prev = est;
    }
    return false;
  }

  void segment(double a, double b, double abs_tol, QuadResult& r) {
    double value = 0.0;
    double err = 0.0;
    // Segments at the resolution of their abscissae cannot be refined further.
    const double floor = std::max(1e-300, 64 * std::numeric_limits<double>::epsilon() *
                                              std::max(std::abs(a), std::abs(b)));
    // Very short segments are accepted once their error is within a small
    // multiple of the caller's tolerance; there the integrand is limited by
    // rounding of x itself. The error still enters the reported total.
    const bool short_ok = b - a <= 1e-9 * std::max({std::abs(a), std::abs(b), 1.0});
    if (tanh_sinh(a, b, abs_tol, value, err, r) || b - a <= floor ||
        (short_ok && err <= 100 * cfg_.abs_tol)) {
      r.value += value;
      r.error += err;
      return;
    }
    if (++r.subdivisions > cfg_.max_subdivisions) {
      std::ostringstream os;
      os.precision(17);
      os << "tanh-sinh quadrature did not converge on [" << a << ", " << b << "] (error " << err
         << ") within " << cfg_.max_subdivisions << " subdivisions";
      throw Error(ErrorKind::NonConvergence, os.str());
    }
    // Segments spanning many decades on one side of zero are split
    // geometrically, so that a singularity just outside an end is reached.
    const double mid = a > 0 && b > 1e3 * a     ? std::sqrt(a) * std::sqrt(b)
                       : b < 0 && a < 1e3 * b ? -std::sqrt(-a) * std::sqrt(-b)
                                              : a + (b - a) / 2;
    // Halve the budget, but not below a fixed fraction of the caller's tolerance.
    const double sub_tol = std::max(abs_tol / 2, 1e-4 * cfg_.abs_tol);
    segment(a, mid, sub_tol, r);
    segment(mid, b, sub_tol, r);
  }

  const Integrand& g_;
  double lo_;
  double hi_;
  const QuadConfig& cfg_;
};

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  if (std::isnan(a) || std::isnan(b)) throw Error(ErrorKind::InvalidInput, "NaN integration limit");
  if (!(a < b)) {
    if (a == b) return {};
    const QuadResult r = integrate(f, b, a, cfg);
    return {-r.value, r.error, r.evaluations, r.subdivisions};
  }
  require(std::isfinite(a), "lower integration limit must be finite");
  if (std::isfinite(b)) return Engine(f, a, b, cfg).run();

  // x = a + L s/(1-s) with L = max(1, |a|); ds_a = s and ds_b = 1 - s are
  // exact near their ends.
  const double scale = std::max(1.0, std::abs(a));
  const Integrand mapped = [&f, a, scale](double s, double ds_a, double ds_b) {
    (void)s;
    const double offset = scale * (ds_a / ds_b);
    return scale * f(a + offset, offset, kInf) / (ds_b * ds_b);
  };
  return Engine(mapped, 0.0, 1.0, cfg).run();
}

QuadResult integrate(const Integrand& f, double a, double b, std::span<const double> breaks,
                     const QuadConfig& cfg) {
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double p : breaks)
    if (p > a && p < b) cuts.push_back(p);
  std::sort(cuts.begin() + 1, cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(b);
  QuadResult total;
  QuadConfig piece = cfg;
  piece.abs_tol = cfg.abs_tol / static_cast<double>(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    // Distances handed to f stay relative to the piece; callers that need
    // distances to other points add the piece offsets themselves.
    const QuadResult r = integrate(f, lo, hi, piece);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.subdivisions += r.subdivisions;
  }
  return total;
}

double integrate_simple(const std::function<double(double)>& f, double a, double b,
                        const QuadConfig& cfg) {
  return integrate([&f](double x, double, double) { return f(x); }, a, b, cfg).value;
}

}  // namespace ggc
