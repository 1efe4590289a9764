// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ggc/error.hpp"

namespace ggc {

namespace {

constexpr double kMassTol = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

DistSpec::DistSpec(std::string label, std::optional<ContinuousPart> continuous,
                   double continuous_mass, std::vector<Atom> atoms)
    : label_(std::move(label)), continuous_mass_(continuous_mass) {
  require(continuous_mass >= 0 && continuous_mass <= 1 + kMassTol,
          "continuous_mass must lie in [0, 1]");
  if (continuous_mass > 0) require(continuous.has_value(), "continuous mass without a component");
  if (continuous) {
    const Interval s = continuous->support;
    require(s.lo >= 0 && s.lo < s.hi, "continuous support must be a nondegenerate subset of [0, inf)");
    require(static_cast<bool>(continuous->cdf), "continuous component needs a cdf");
    if (!continuous->sf) {
      auto cdf = continuous->cdf;
      continuous->sf = [cdf](double t) { return 1.0 - cdf(t); };
    }
    if (continuous_mass > 0) continuous_ = std::make_shared<const ContinuousPart>(*continuous);
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  double total = continuous_mass_;
  for (const Atom& a : atoms) {
    require(std::isfinite(a.location) && a.location >= 0, "atom location must be in [0, inf)");
    require(a.weight > 0 && a.weight <= 1 + kMassTol, "atom weight must lie in (0, 1]");
    total += a.weight;
    if (!atoms_.empty() && atoms_.back().location == a.location) {
      atoms_.back().weight += a.weight;
    } else {
      atoms_.push_back(a);
    }
  }
  if (std::abs(total - 1.0) > kMassTol)
    throw Error(ErrorKind::InvalidInput, "total mass " + fmt(total) + " differs from 1");
  double lo = kInf;
  double hi = -kInf;
  if (continuous_) {
    lo = continuous_->support.lo;
    hi = continuous_->support.hi;
  }
  for (const Atom& a : atoms_) {
    lo = std::min(lo, a.location);
    hi = std::max(hi, a.location);
  }
  support_ = {lo, hi};
}

DistSpec DistSpec::point_mass(double location, std::string label) {
  DistSpec d(std::move(label), std::nullopt, 0.0, {{location, 1.0}});
  Provenance p;
  p.kind = Provenance::Kind::NamedFamily;
  p.family = "point-mass";
  p.params = {{"location", location}};
  d.set_provenance(std::move(p));
  d.set_closed_psi([location](double lambda) -> std::optional<double> {
    return std::log1p(lambda * location);
  });
  return d;
}

bool DistSpec::has_density() const { return !continuous_ || static_cast<bool>(continuous_->pdf); }

double DistSpec::largest_atom() const {
  double w = 0.0;
  for (const Atom& a : atoms_) w = std::max(w, a.weight);
  return w;
}

double DistSpec::atom_weight_at(double x) const {
  for (const Atom& a : atoms_)
    if (a.location == x) return a.weight;
  return 0.0;
}

double DistSpec::cdf(double t) const {
  double f = 0.0;
  for (const Atom& a : atoms_) {
    if (a.location > t) break;
    f += a.weight;
  }
  if (continuous_) {
    const Interval s = continuous_->support;
    if (t >= s.hi) {
      f += continuous_mass_;
    } else if (t > s.lo) {
      f += continuous_mass_ * continuous_->cdf(t);
    }
  }
  return std::min(f, 1.0);
}

double DistSpec::sf(double t) const {
  double s = 0.0;
  for (const Atom& a : atoms_)
    if (a.location > t) s += a.weight;
  if (continuous_) {
    const Interval sup = continuous_->support;
    if (t < sup.lo) {
      s += continuous_mass_;
    } else if (t < sup.hi) {
      s += continuous_mass_ * continuous_->sf(t);
    }
  }
  return std::min(s, 1.0);
}

double DistSpec::pdf(const Abscissa& a) const {
  if (!continuous_) return 0.0;
  if (!continuous_->pdf) throw Error(ErrorKind::MissingDensity, "law '" + label_ + "' has no density");
  const Interval s = continuous_->support;
  if (a.x < s.lo || a.x > s.hi) return 0.0;
  return continuous_mass_ * continuous_->pdf(a);
}

double DistSpec::pdf(double x) const {
  if (!continuous_) return 0.0;
  const Interval s = continuous_->support;
  return pdf(Abscissa{x, x - s.lo, s.hi - x});
}

double DistSpec::quantile(double u) const {
  require(u >= 0 && u <= 1, "quantile level must lie in [0, 1]");
  const ContinuousPart* c = continuous_.get();
  auto continuous_solve = [&](double target) {
    // target is the normalised continuous level in [0, 1].
    target = std::clamp(target, 0.0, 1.0);
    if (c->quantile) return c->quantile(target);
    double lo = c->support.lo;
    double hi = c->support.hi;
    if (!std::isfinite(hi)) {
      hi = std::max(1.0, 2 * lo);
      while (c->cdf(hi) < target && hi < 1e300) hi *= 2;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
      const double mid = lo + (hi - lo) / 2;
      (c->cdf(mid) < target ? lo : hi) = mid;
    }
    return hi;
  };
  double below = 0.0;  // atom mass strictly below the current position
  for (const Atom& a : atoms_) {
    const double cont_below =
        c ? continuous_mass_ * std::clamp(a.location <= c->support.lo ? 0.0
                                          : a.location >= c->support.hi ? 1.0
                                                                        : c->cdf(a.location),
                                          0.0, 1.0)
          : 0.0;
    if (u <= below + cont_below && c && cont_below > 0)
      return continuous_solve((u - below) / continuous_mass_);
    if (u <= below + cont_below + a.weight) return a.location;
    below += a.weight;
  }
  if (!c) return atoms_.back().location;
  return continuous_solve((u - below) / continuous_mass_);
}

DistSpec& DistSpec::set_closed_phi(ClosedForm f) {
  closed_phi_ = std::move(f);
  return *this;
}

DistSpec& DistSpec::set_closed_psi(ClosedForm f) {
  closed_psi_ = std::move(f);
  return *this;
}

DistSpec& DistSpec::set_provenance(Provenance p) {
  provenance_ = std::move(p);
  return *this;
}

DistSpec& DistSpec::set_label(std::string label) {
  label_ = std::move(label);
  return *this;
}

// ---------------------------------------------------------------------------
// Integration against the continuous component

namespace {

// g also receives the piece ends and the exact distances to them.
using PieceIntegrand =
    std::function<double(const Abscissa&, double a, double b, double da, double db)>;

QuadResult integrate_pieces(const DistSpec& d, const PieceIntegrand& g, double lo, double hi,
                            const QuadConfig& cfg, std::vector<double> cuts) {
  const ContinuousPart* c = d.continuous();
  QuadResult total;
  if (!c) return total;
  if (!c->pdf) throw Error(ErrorKind::MissingDensity, "law '" + d.label() + "' has no density");
  const double slo = c->support.lo;
  const double shi = c->support.hi;
  lo = std::max(lo, slo);
  hi = std::min(hi, shi);
  if (!(lo < hi)) return total;
  cuts.insert(cuts.end(), c->breakpoints.begin(), c->breakpoints.end());
  // Ranges spanning many decades above the support start are cut geometrically
  // so that the mass near the start stays resolved.
  if (hi - slo > 1e6)
    for (double step = 1.0; step <= 1e18 && slo + step < hi; step *= 1e6) cuts.push_back(slo + step);
  std::vector<double> pts{lo};
  for (double p : cuts)
    if (p > lo && p < hi) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.push_back(hi);
  QuadConfig piece = cfg;
  piece.abs_tol = cfg.abs_tol / static_cast<double>(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    // Pieces far below double resolution contribute nothing measurable.
    if (b - a < 1e-250) continue;
    const double off_lo = a - slo;
    const double off_hi = shi - b;
    const Integrand f = [&](double x, double da, double db) {
      const Abscissa ab{x, off_lo + da, std::isfinite(shi) ? off_hi + db : kInf};
      const double w = c->pdf(ab);
      if (w == 0.0) return 0.0;
      return g(ab, a, b, da, db) * w;
    };
    const QuadResult r = integrate(f, a, b, piece);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.subdivisions += r.subdivisions;
  }
  return total;
}

}  // namespace

QuadResult integrate_range(const DistSpec& d, const std::function<double(const Abscissa&)>& g,
                           double lo, double hi, const QuadConfig& cfg, std::vector<double> cuts) {
  return integrate_pieces(
      d, [&](const Abscissa& ab, double, double, double, double) { return g(ab); }, lo, hi, cfg,
      std::move(cuts));
}

QuadResult integrate_against_density(const DistSpec& d,
                                     const std::function<double(const Abscissa&)>& g,
                                     const QuadConfig& cfg, std::vector<double> cuts) {
  return integrate_range(d, g, -kInf, kInf, cfg, std::move(cuts));
}

double phi(const DistSpec& d, double t, const QuadConfig& cfg) {
  require(t >= 0 && std::isfinite(t), "phi requires t >= 0");
  if (cfg.use_closed_forms && d.closed_phi()) {
    if (auto v = d.closed_phi()(t)) return *v;
  }
  double value = 0.0;
  for (const Atom& a : d.atoms())
    if (a.location != t) value += a.weight * std::log(std::abs(t - a.location));
  const ContinuousPart* c = d.continuous();
  if (!c) return value;
  const double lo = c->support.lo;
  const double hi = c->support.hi;
  const double m = d.continuous_mass();
  // |t - x| from the abscissa, exact when t is an end of the support.
  auto dist = [&](const Abscissa& a) {
    if (t <= lo) return (lo - t) + a.from_lo;
    if (t >= hi) return (t - hi) + a.to_hi;
    return std::abs(t - a.x);
  };
  // Distances near t come from the piece ends; t - b is exact when b is close to t.
  auto near_t = [&](const Abscissa& ab, double a, double b, double da, double db) {
    double r = dist(ab);
    if (b <= t && t - b <= 0.5 * t) r = (t - b) + db;
    if (a >= t && a - t <= 0.5 * t) r = (a - t) + da;
    // A node that lands on t in subnormal range carries no weight.
    return r > 0 ? std::log(r) : 0.0;
  };
  const double pad = std::max(cfg.singularity_pad, 64 * std::numeric_limits<double>::epsilon() * t);
  double integral = 0.0;
  if (t > lo + 2 * pad && t < hi - 2 * pad) {
    const double ft = c->pdf(Abscissa{t, t - lo, hi - t});
    if (std::isfinite(ft)) {
      integral += integrate_pieces(d, near_t, lo, t - pad, cfg, {}).value;
      integral += integrate_pieces(d, near_t, t + pad, hi, cfg, {}).value;
      integral += ft * 2 * pad * (std::log(pad) - 1);
      return value + m * integral;
    }
  }
  integral = integrate_pieces(d, near_t, lo, hi, cfg, {t}).value;
  return value + m * integral;
}

namespace {

// Principal value of E[1 / (t - X)] over the continuous part, t strictly inside.
double phi_derivative_inside(const DistSpec& d, const Abscissa& at, const QuadConfig& cfg) {
  const ContinuousPart* c = d.continuous();
  const double lo = c->support.lo;
  const double hi = c->support.hi;
  const double t = at.x;
  // Symmetric excision: PV over [t - r, t + r] of f(x)/(t - x) equals
  // the regular integral over u in (0, r] of (f(t - u) - f(t + u)) / u.
  const double left_room = at.from_lo;
  const double right_room = at.to_hi;
  const bool left_limited = left_room <= right_room;
  const double r = left_limited ? left_room : right_room;
  std::vector<double> ucuts;
  for (double p : c->breakpoints)
    if (std::abs(p - t) < r && p != t) ucuts.push_back(std::abs(p - t) / r);
  // u = r v keeps the integrand at the scale of the density when r is tiny.
  const Integrand window = [&](double v, double, double dv) {
    const double u = r * v;
    // r - u, exact near the excision edge that touches the support end.
    const double dr = r * dv;
    // The edge distance underflowed: the node lies on the support end.
    if (dr == 0.0) return 0.0;
    const Abscissa below{std::max(t - u, lo), left_limited ? dr : (left_room - r) + dr, right_room + u};
    const Abscissa above{std::min(t + u, hi), left_room + u, left_limited ? (right_room - r) + dr : dr};
    return (c->pdf(below) - c->pdf(above)) / v;
  };
  // The edge distance dv passed by the engine is piece-relative; keep a single
  // piece when possible so it is the distance to 1.
  double pv = 0.0;
  if (ucuts.empty()) {
    pv += integrate(window, 0.0, 1.0, cfg).value;
  } else {
    std::sort(ucuts.begin(), ucuts.end());
    std::vector<double> pts{0.0};
    pts.insert(pts.end(), ucuts.begin(), ucuts.end());
    pts.push_back(1.0);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double off = 1.0 - pts[i + 1];
      pv += integrate(
                [&](double v, double dv, double dw) { return window(v, dv, off + dw); }, pts[i],
                pts[i + 1], cfg)
                .value;
    }
  }
  // Outside the window |t - x| comes from the piece ends, as in phi. The
  // kernel is scaled by r so that f(x) / (x - t) cannot overflow for tiny r.
  const double scale = std::min(r, 1.0);
  QuadConfig scaled = cfg;
  scaled.abs_tol = cfg.abs_tol * scale;
  double outside = 0.0;
  if (left_limited) {
    const double edge = t + r;
    outside = integrate_pieces(
                  d,
                  [&](const Abscissa&, double a, double, double da, double) {
                    return -scale / ((a == edge ? r : a - t) + da);
                  },
                  edge, hi, scaled, {})
                  .value;
  } else {
    const double edge = t - r;
    outside = integrate_pieces(
                  d,
                  [&](const Abscissa&, double, double b, double, double db) {
                    return scale / ((b == edge ? r : t - b) + db);
                  },
                  lo, edge, scaled, {})
                  .value;
  }
  return pv + outside / scale;
}

}  // namespace

double phi_derivative(const DistSpec& d, double t, const QuadConfig& cfg) {
  require(t >= 0 && std::isfinite(t), "phi_derivative requires t >= 0");
  double value = 0.0;
  for (const Atom& a : d.atoms())
    if (a.location != t) value += a.weight / (t - a.location);
  const ContinuousPart* c = d.continuous();
  if (!c) return value;
  if (!c->pdf) throw Error(ErrorKind::MissingDensity, "law '" + d.label() + "' has no density");
  const double lo = c->support.lo;
  const double hi = c->support.hi;
  const double m = d.continuous_mass();
  if (t == lo || t == hi) {
    const Abscissa end = t == lo ? Abscissa{lo, 0.0, hi - lo} : Abscissa{hi, hi - lo, 0.0};
    if (c->pdf(end) > 0) return t == lo ? -kInf : kInf;
  }
  if (t <= lo || t >= hi) {
    const double pv = integrate_range(
        d, [&](const Abscissa& a) {
          return t <= lo ? -1.0 / ((lo - t) + a.from_lo) : 1.0 / ((t - hi) + a.to_hi);
        },
        lo, hi, cfg, {}).value;
    return value + m * pv;
  }
  return value + m * phi_derivative_inside(d, {t, t - lo, hi - t}, cfg);
}

double phi_derivative(const DistSpec& d, const Abscissa& at, const QuadConfig& cfg) {
  const ContinuousPart* c = d.continuous();
  if (!c || at.from_lo <= 0 || at.to_hi <= 0) return phi_derivative(d, at.x, cfg);
  require(at.x >= 0 && std::isfinite(at.x), "phi_derivative requires t >= 0");
  if (!c->pdf) throw Error(ErrorKind::MissingDensity, "law '" + d.label() + "' has no density");
  double value = 0.0;
  for (const Atom& a : d.atoms())
    if (a.location != at.x) value += a.weight / (at.x - a.location);
  return value + d.continuous_mass() * phi_derivative_inside(d, at, cfg);
}


namespace {

// Integral of log(1 + lambda x) f(x) over [1e64, 1e256], computed in log space.
// For a law with finite psi this is negligible; a non-negligible value means
// the integral diverges (slowly enough to fool the mapped quadrature).
double far_tail_piece(const DistSpec& d, double lambda, const QuadConfig& cfg) {
  const ContinuousPart* c = d.continuous();
  const double lo = c->support.lo;
  const double a = std::log(1e64);
  const double b = std::log(1e256);
  const QuadConfig loose = [&] {
    QuadConfig q = cfg;
    q.abs_tol = 1e-8;
    q.rel_tol = 1e-4;
    return q;
  }();
  return integrate_simple(
      [&](double v) {
        const double x = std::exp(v);
        const double f = c->pdf(Abscissa{x, x - lo, kInf});
        return f == 0.0 ? 0.0 : std::log1p(lambda * x) * f * x;
      },
      a, b, loose);
}

}  // namespace

double levy_exponent(const DistSpec& d, double lambda, const QuadConfig& cfg) {
  require(lambda >= 0 && std::isfinite(lambda), "levy_exponent requires lambda >= 0");
  if (lambda == 0.0) return 0.0;
  if (cfg.use_closed_forms && d.closed_psi()) {
    if (auto v = d.closed_psi()(lambda)) return *v;
  }
  double value = 0.0;
  for (const Atom& a : d.atoms()) value += a.weight * std::log1p(lambda * a.location);
  const ContinuousPart* c = d.continuous();
  if (!c) return value;
  if (!c->pdf) throw Error(ErrorKind::MissingDensity, "law '" + d.label() + "' has no density");
  if (!std::isfinite(c->support.hi)) {
    const double tail = far_tail_piece(d, lambda, cfg);
    if (!(tail < 1e-6)) {
      throw Error(ErrorKind::Divergent, "E[log(1 + lambda X)] diverges for law '" + d.label() +
                                            "' (tail mass " + fmt(tail) + ")");
    }
  }
  QuadResult r;
  try {
    r = integrate_range(
        d, [lambda](const Abscissa& a) { return std::log1p(lambda * a.x); }, -kInf, kInf, cfg, {});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonConvergence && !std::isfinite(c->support.hi))
      throw Error(ErrorKind::Divergent, e.what());
    throw;
  }
  return value + d.continuous_mass() * r.value;
}

bool check_existence(const DistSpec& d, const QuadConfig& cfg) {
  try {
    return std::isfinite(levy_exponent(d, 1.0, cfg));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Divergent || e.kind() == ErrorKind::NonConvergence) return false;
    throw;
  }
}

// ---------------------------------------------------------------------------
// Transforms

DistSpec mix_with_atom(const DistSpec& d, double sigma) {
  require(sigma > 0 && sigma <= 1, "mix_with_atom requires sigma in (0, 1]");
  if (sigma == 1.0) return d;
  std::vector<Atom> atoms{{0.0, 1.0 - sigma}};
  for (const Atom& a : d.atoms()) atoms.push_back({a.location, sigma * a.weight});
  std::optional<ContinuousPart> cont;
  if (d.continuous()) cont = *d.continuous();
  DistSpec out(d.label() + "*Y(" + fmt(sigma) + ")", std::move(cont), sigma * d.continuous_mass(),
               std::move(atoms));
  if (d.closed_phi()) {
    auto base = d.closed_phi();
    out.set_closed_phi([base, sigma](double t) -> std::optional<double> {
      auto v = base(t);
      if (!v) return std::nullopt;
      return t > 0 ? sigma * *v + (1 - sigma) * std::log(t) : sigma * *v;
    });
  }
  if (d.closed_psi()) {
    auto base = d.closed_psi();
    out.set_closed_psi([base, sigma](double lambda) -> std::optional<double> {
      auto v = base(lambda);
      if (!v) return std::nullopt;
      return sigma * *v;
    });
  }
  Provenance p = d.provenance();
  p.transforms.push_back({"mix", {sigma}});
  out.set_provenance(std::move(p));
  return out;
}

DistSpec affine_transform(const DistSpec& d, double scale, double shift) {
  require(scale > 0 && std::isfinite(scale), "affine_transform requires scale > 0");
  require(shift >= 0 && std::isfinite(shift), "affine_transform requires shift >= 0");
  std::vector<Atom> atoms;
  for (const Atom& a : d.atoms()) atoms.push_back({scale * a.location + shift, a.weight});
  std::optional<ContinuousPart> cont;
  if (const ContinuousPart* c = d.continuous()) {
    auto src = std::make_shared<const ContinuousPart>(*c);
    ContinuousPart t;
    t.support = {scale * c->support.lo + shift, scale * c->support.hi + shift};
    t.cdf = [src, scale, shift](double x) { return src->cdf((x - shift) / scale); };
    t.sf = [src, scale, shift](double x) { return src->sf((x - shift) / scale); };
    if (c->pdf) {
      t.pdf = [src, scale, shift](const Abscissa& a) {
        return src->pdf(Abscissa{(a.x - shift) / scale, a.from_lo / scale, a.to_hi / scale}) / scale;
      };
    }
    if (c->quantile) {
      t.quantile = [src, scale, shift](double u) { return scale * src->quantile(u) + shift; };
    }
    for (double b : c->breakpoints) t.breakpoints.push_back(scale * b + shift);
    cont = std::move(t);
  }
  DistSpec out(d.label(), std::move(cont), d.continuous_mass(), std::move(atoms));
  if (d.closed_phi()) {
    auto base = d.closed_phi();
    out.set_closed_phi([base, scale, shift](double t) -> std::optional<double> {
      const double arg = (t - shift) / scale;
      if (arg < 0) return std::nullopt;
      auto v = base(arg);
      if (!v) return std::nullopt;
      return std::log(scale) + *v;
    });
  }
  if (d.closed_psi() && shift == 0.0) {
    auto base = d.closed_psi();
    out.set_closed_psi([base, scale](double lambda) { return base(scale * lambda); });
  }
  Provenance p = d.provenance();
  p.transforms.push_back({"affine", {scale, shift}});
  out.set_provenance(std::move(p));
  return out;
}

DistSpec tilt_pushforward(const DistSpec& d, double c) {
  require(c > 0 && std::isfinite(c), "tilt requires c > 0");
  auto fwd = [c](double x) { return std::isfinite(x) ? c * x / (c * x + 1) : 1.0; };
  std::vector<Atom> atoms;
  for (const Atom& a : d.atoms()) atoms.push_back({fwd(a.location), a.weight});
  std::optional<ContinuousPart> cont;
  if (const ContinuousPart* src_part = d.continuous()) {
    auto src = std::make_shared<const ContinuousPart>(*src_part);
    const double xlo = src->support.lo;
    const double xhi = src->support.hi;
    const bool bounded = std::isfinite(xhi);
    // 1 - y at the upper end of the image support.
    const double top_gap = bounded ? 1.0 / (c * xhi + 1) : 0.0;
    ContinuousPart t;
    t.support = {fwd(xlo), fwd(xhi)};
    auto back = [c](double y) { return y / (c * (1 - y)); };
    t.cdf = [src, back](double y) { return src->cdf(back(y)); };
    t.sf = [src, back](double y) { return src->sf(back(y)); };
    if (src->pdf) {
      t.pdf = [src, c, xlo, xhi, bounded, top_gap](const Abscissa& a) {
        const double one_minus_y = top_gap + a.to_hi;
        const double x = a.x / (c * one_minus_y);
        const double from_lo = a.from_lo * (c * xlo + 1) / (c * one_minus_y);
        const double to_hi = bounded ? a.to_hi * (c * xhi + 1) / (c * one_minus_y) : kInf;
        const double jac = 1.0 / (c * one_minus_y * one_minus_y);
        return src->pdf(Abscissa{x, from_lo, to_hi}) * jac;
      };
    }
    if (src->quantile) t.quantile = [src, fwd](double u) { return fwd(src->quantile(u)); };
    for (double b : src->breakpoints) t.breakpoints.push_back(fwd(b));
    cont = std::move(t);
  }
  DistSpec out(d.label() + "|tilt(" + fmt(c) + ")", std::move(cont), d.continuous_mass(),
               std::move(atoms));
  if (d.closed_psi()) {
    auto psi = d.closed_psi();
    out.set_closed_psi([psi, c](double lambda) -> std::optional<double> {
      auto a = psi(c * (1 + lambda));
      auto b = psi(c);
      if (!a || !b) return std::nullopt;
      return *a - *b;
    });
    if (d.closed_phi()) {
      auto ph = d.closed_phi();
      out.set_closed_phi([ph, psi, c](double y) -> std::optional<double> {
        if (!(y >= 0 && y < 1)) return std::nullopt;
        auto a = ph(y / (c * (1 - y)));
        auto b = psi(c);
        if (!a || !b) return std::nullopt;
        return *a - *b + std::log(c * (1 - y));
      });
    }
  }
  Provenance p = d.provenance();
  p.transforms.push_back({"tilt", {c}});
  out.set_provenance(std::move(p));
  return out;
}

DistSpec tabulated(std::string label, std::vector<std::pair<double, double>> nodes,
                   std::vector<Atom> atoms) {
  require(nodes.size() >= 2, "tabulated law needs at least two nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    require(std::isfinite(nodes[i].first) && nodes[i].first >= 0, "table abscissae must be >= 0");
    if (i > 0) {
      require(nodes[i].first > nodes[i - 1].first, "table abscissae must be strictly increasing");
      require(nodes[i].second >= nodes[i - 1].second, "table CDF values must be non-decreasing");
    }
  }
  require(std::abs(nodes.front().second) <= kMassTol && std::abs(nodes.back().second - 1) <= kMassTol,
          "table CDF must run from 0 to 1");
  double atom_mass = 0.0;
  for (const Atom& a : atoms) atom_mass += a.weight;
  auto tab = std::make_shared<const std::vector<std::pair<double, double>>>(nodes);
  auto segment = [tab](double x) {
    auto it = std::upper_bound(tab->begin(), tab->end(), x,
                               [](double v, const auto& n) { return v < n.first; });
    std::size_t i = static_cast<std::size_t>(it - tab->begin());
    return std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, tab->size() - 2);
  };
  ContinuousPart c;
  c.support = {nodes.front().first, nodes.back().first};
  c.cdf = [tab, segment](double x) {
    const std::size_t i = segment(x);
    const auto& [x0, f0] = (*tab)[i];
    const auto& [x1, f1] = (*tab)[i + 1];
    return std::clamp(f0 + (f1 - f0) * (x - x0) / (x1 - x0), 0.0, 1.0);
  };
  c.pdf = [tab, segment](const Abscissa& a) {
    const std::size_t i = segment(a.x);
    const auto& [x0, f0] = (*tab)[i];
    const auto& [x1, f1] = (*tab)[i + 1];
    return (f1 - f0) / (x1 - x0);
  };
  c.quantile = [tab](double u) {
    auto it = std::lower_bound(tab->begin(), tab->end(), u,
                               [](const auto& n, double v) { return n.second < v; });
    if (it == tab->begin()) return tab->front().first;
    if (it == tab->end()) return tab->back().first;
    const auto& [x1, f1] = *it;
    const auto& [x0, f0] = *(it - 1);
    return f1 > f0 ? x0 + (x1 - x0) * (u - f0) / (f1 - f0) : x1;
  };
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) c.breakpoints.push_back(nodes[i].first);
  DistSpec out(label, std::move(c), 1.0 - atom_mass, atoms);
  Provenance p;
  p.kind = Provenance::Kind::Tabulated;
  p.family = std::move(label);
  p.table = std::move(nodes);
  p.atoms = std::move(atoms);
  out.set_provenance(std::move(p));
  return out;
}

MeanLaw make_mean_law(double theta, DistSpec base, const QuadConfig& cfg) {
  require(theta > 0 && std::isfinite(theta), "theta must be positive");
  if (!check_existence(base, cfg))
    throw Error(ErrorKind::Divergent, "Dirichlet mean of '" + base.label() + "' does not exist");
  return {theta, std::move(base)};
}

GgcLaw make_ggc_law(double theta, DistSpec base, const QuadConfig& cfg) {
  require(theta > 0 && std::isfinite(theta), "theta must be positive");
  if (!check_existence(base, cfg))
    throw Error(ErrorKind::Divergent, "GGC law of '" + base.label() + "' does not exist");
  return {theta, std::move(base)};
}

}  // namespace ggc
