// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Base distributions on [0, inf) and the two functionals every density
// formula consumes: the log-distance functional phi(t) = E[log|t - X|; X != t]
// and the Levy exponent psi(lambda) = E[log(1 + lambda X)].
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggc/quadrature.hpp"

namespace ggc {

// A point of the continuous support with its exact distances to the ends of
// that support (to_hi is +inf for unbounded supports).
struct Abscissa {
  double x;
  double from_lo;
  double to_hi;
};

struct Atom {
  double location;
  double weight;
};

struct Interval {
  double lo;
  double hi;  // may be +inf
};

// Absolutely continuous component, normalised to total mass one.
struct ContinuousPart {
  Interval support;
  std::function<double(double)> cdf;
  std::function<double(double)> sf;             // 1 - cdf, accurate in the upper tail
  std::function<double(const Abscissa&)> pdf;   // may be empty
  std::function<double(double)> quantile;       // may be empty
  std::vector<double> breakpoints;              // interior kinks of pdf
};

// Optional closed forms; std::nullopt means "not available at this argument".
using ClosedForm = std::function<std::optional<double>(double)>;

// How a law was built, kept for serialization.
struct Provenance {
  enum class Kind { NamedFamily, Tabulated, Custom };
  Kind kind = Kind::Custom;
  std::string family;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<double, double>> table;  // (x, F) nodes for tabulated laws
  std::vector<Atom> atoms;                       // atoms given alongside a table
  // Transform chain in application order: ("affine", {scale, shift}),
  // ("mix", {sigma}), ("tilt", {c}).
  std::vector<std::pair<std::string, std::vector<double>>> transforms;
};

class DistSpec {
 public:
  DistSpec(std::string label, std::optional<ContinuousPart> continuous, double continuous_mass,
           std::vector<Atom> atoms);

  static DistSpec point_mass(double location, std::string label = "point-mass");

  const std::string& label() const { return label_; }
  Interval support() const { return support_; }
  double continuous_mass() const { return continuous_mass_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const ContinuousPart* continuous() const { return continuous_.get(); }
  bool has_density() const;
  double largest_atom() const;
  // Weight of the atom located exactly at x (0 when none).
  double atom_weight_at(double x) const;

  // Right-continuous CDF including atoms.
  double cdf(double t) const;
  // P(X > t).
  double sf(double t) const;
  // Density of the continuous component scaled by its mass; throws
  // MissingDensity when the law has no density evaluator.
  double pdf(double x) const;
  double pdf(const Abscissa& a) const;
  // Generalised inverse inf{t : F(t) >= u}.
  double quantile(double u) const;

  const ClosedForm& closed_phi() const { return closed_phi_; }
  const ClosedForm& closed_psi() const { return closed_psi_; }
  DistSpec& set_closed_phi(ClosedForm f);
  DistSpec& set_closed_psi(ClosedForm f);

  const Provenance& provenance() const { return provenance_; }
  DistSpec& set_provenance(Provenance p);
  DistSpec& set_label(std::string label);

 private:
  std::string label_;
  std::shared_ptr<const ContinuousPart> continuous_;
  double continuous_mass_;
  std::vector<Atom> atoms_;  // sorted by location
  Interval support_;
  ClosedForm closed_phi_;
  ClosedForm closed_psi_;
  Provenance provenance_;
};

// Integrates g(a) * pdf(a) over [lo, hi] intersected with the continuous
// support, splitting at breakpoints and at the optional extra cut points.
// g receives the support abscissa; the result excludes continuous_mass.
QuadResult integrate_against_density(const DistSpec& d,
                                     const std::function<double(const Abscissa&)>& g,
                                     const QuadConfig& cfg, std::vector<double> cuts = {});

double phi(const DistSpec& d, double t, const QuadConfig& cfg = {});
// Principal value d/dt phi(t) = PV E[1/(t - X)]; needed for the general-order
// density. Returns +-inf at support endpoints where the density is positive.
double phi_derivative(const DistSpec& d, double t, const QuadConfig& cfg = {});
// Same, with t given by its exact distances to the continuous support ends.
double phi_derivative(const DistSpec& d, const Abscissa& t, const QuadConfig& cfg = {});
double levy_exponent(const DistSpec& d, double lambda, const QuadConfig& cfg = {});
bool check_existence(const DistSpec& d, const QuadConfig& cfg = {});

// Law of X * Y_sigma with Y_sigma ~ Bernoulli(sigma).
DistSpec mix_with_atom(const DistSpec& d, double sigma);
// Law of scale * X + shift.
DistSpec affine_transform(const DistSpec& d, double scale, double shift);
// Law of A_c = cX / (cX + 1).
DistSpec tilt_pushforward(const DistSpec& d, double c);
// Continuous law with linearly interpolated CDF through (x, F) nodes,
// F running from 0 to 1; atoms carry the remaining mass.
DistSpec tabulated(std::string label, std::vector<std::pair<double, double>> nodes,
                   std::vector<Atom> atoms = {});

struct MeanLaw {
  double theta;
  DistSpec base;
};

struct GgcLaw {
  double theta;
  DistSpec base;
};

MeanLaw make_mean_law(double theta, DistSpec base, const QuadConfig& cfg = {});
GgcLaw make_ggc_law(double theta, DistSpec base, const QuadConfig& cfg = {});

}  // namespace ggc
