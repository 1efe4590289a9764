// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ggc/catalog.hpp"
#include "ggc/error.hpp"
#include "ggc/io.hpp"
#include "ggc/mean_density.hpp"
#include "ggc/operators.hpp"
#include "ggc/subordinators.hpp"

namespace ggc {
namespace {

constexpr double kTrunc = 1e-8;

// FNV-1a of the check name, so each check draws from its own key.
std::uint64_t check_seed(std::uint64_t seed, std::string_view name, std::uint64_t side = 0) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : name) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return seed ^ h ^ (side * 0x9E3779B97F4A7C15ull);
}

// 0.012 at 1e5 draws, scaling like 1 / sqrt(n).
double ks_level(std::size_t n, double bias = 0.0) {
  return 3.8 / std::sqrt(static_cast<double>(n)) + 2 * bias;
}

std::vector<double> linear_nodes(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i <= n; ++i) {
    const double s = std::sin(std::numbers::pi / 2 * i / n);
    v.push_back(a + (b - a) * s * s);
  }
  return v;
}

// lo followed by lo + 10^e for e on [e0, e1], plus any extra nodes.
std::vector<double> log_nodes(double lo, double e0, double e1, int n, std::vector<double> extra = {}) {
  std::vector<double> v{lo};
  for (int i = 0; i <= n; ++i) v.push_back(lo + std::pow(10.0, e0 + (e1 - e0) * i / n));
  v.insert(v.end(), extra.begin(), extra.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Interpolated CDF of a density by cumulative quadrature; F(nodes[0]) = 0.
std::function<double(double)> cdf_from_density(const std::function<double(double)>& pdf,
                                               const std::vector<double>& nodes, const QuadConfig& cfg,
                                               double* mass = nullptr) {
  std::vector<double> f{0.0};
  for (std::size_t i = 1; i < nodes.size(); ++i)
    f.push_back(f.back() + integrate_simple(pdf, nodes[i - 1], nodes[i], cfg));
  if (mass) *mass = f.back();
  return interpolated_cdf(nodes, std::move(f));
}

std::function<double(double)> cdf_table(const std::function<double(double)>& cdf,
                                        const std::vector<double>& nodes) {
  std::vector<double> f;
  for (double x : nodes) f.push_back(cdf(x));
  return interpolated_cdf(nodes, std::move(f));
}

// f restricted to the open unit interval; abscissae can round onto the ends.
std::function<double(double)> open_unit(std::function<double(double)> f) {
  return [f = std::move(f)](double u) { return u > 0 && u < 1 ? f(u) : 0.0; };
}

double quad_laplace(const std::function<double(double)>& pdf, double lambda, const QuadConfig& cfg) {
  return integrate_simple([&](double x) { return std::exp(-lambda * x) * pdf(x); }, 0, kInf, cfg);
}

VerifyReport ks_one(const SampleBatch& b, const std::function<double(double)>& cdf) {
  VerifyReport r = ks_statistic(b, cdf, ks_level(b.n, b.truncation_error_bound));
  r.metadata["n"] = std::to_string(b.n);
  r.metadata["seed"] = std::to_string(b.seed);
  r.metadata["law"] = b.law_tag;
  return r;
}

VerifyReport ks_two(const SampleBatch& a, const SampleBatch& b) {
  VerifyReport r = ks_two_sample(a, b, ks_level(a.n) + a.truncation_error_bound + b.truncation_error_bound);
  r.metadata["n"] = std::to_string(a.n);
  r.metadata["seed"] = std::to_string(a.seed);
  r.metadata["laws"] = a.law_tag + " vs " + b.law_tag;
  return r;
}

VerifyReport laplace_mc(const SampleBatch& b, const std::function<double(double)>& closed,
                        std::vector<double> lambdas) {
  VerifyReport r = laplace_check(b, closed, lambdas);
  r.metadata["n"] = std::to_string(b.n);
  r.metadata["seed"] = std::to_string(b.seed);
  r.metadata["law"] = b.law_tag;
  return r;
}

// Max relative error of a quadrature Laplace transform against a closed form.
VerifyReport laplace_quad(const std::function<double(double)>& pdf, const std::function<double(double)>& closed,
                          std::vector<double> lambdas, const QuadConfig& cfg) {
  double worst = 0;
  for (double l : lambdas) {
    const double want = closed(l);
    worst = std::max(worst, std::abs(quad_laplace(pdf, l, cfg) - want) / want);
  }
  return make_report("", StatisticKind::LaplaceRelErr, worst, 1e-6, {{"method", "quadrature"}});
}

std::vector<Check> build_checks() {
  std::vector<Check> c;
  auto add = [&c](std::string name, std::string suite, std::function<VerifyReport(const SuiteOptions&, const std::string&)> f) {
    const std::string n = name;
    c.push_back({std::move(name), std::move(suite), [f, n](const SuiteOptions& o) { return f(o, n); }});
  };

  // beta-scale
  for (double s : {0.25, 0.5, 0.75}) {
    add("beta-scale-ks(sigma=" + fmt_short(s) + ")", "beta-scale", [s](const SuiteOptions& o, const std::string& nm) {
      const DistSpec u = uniform_dist();
      const SampleBatch a = generate(
          o.n, check_seed(o.seed, nm, 1), "beta*M_sigma(U)",
          [&](Philox& r) { return beta_variate(r, s, 1 - s) * stick_breaking_draw(r, s, u, kTrunc); }, kTrunc);
      double raw = 0;
      const DistSpec d = tabulate_density(
          "M_1(UY_sigma)", [&](double x) { return scaled_mean_density(s, u, x, o.cfg); }, 0, 1, 400, o.cfg, &raw);
      const SampleBatch b = generate(o.n, check_seed(o.seed, nm, 2), "inverse-cdf M_1(UY_sigma)",
                                     [&](Philox& r) { return d.quantile(r.uniform()); });
      VerifyReport r = ks_two(a, b);
      r.metadata["raw_mass"] = fmt17(raw);
      return r;
    });
    add("scaled-mean-moment(sigma=" + fmt_short(s) + ")", "beta-scale", [s](const SuiteOptions& o, const std::string&) {
      const DistSpec u = uniform_dist();
      const double m = integrate_simple([&](double x) { return x * scaled_mean_density(s, u, x, o.cfg); }, 0, 1, o.cfg);
      return make_report("", StatisticKind::MomentRelErr, std::abs(m - s / 2) / (s / 2), 1e-6,
                         {{"mean", fmt17(m)}, {"expected", fmt17(s / 2)}});
    });
  }
  add("ggc-reduction(theta=2,sigma=0.5)", "beta-scale", [](const SuiteOptions& o, const std::string& nm) {
    const SampleBatch a = sample_ggc({1.0, uniform_dist()}, o.n, check_seed(o.seed, nm, 1));
    const SampleBatch b = sample_ggc({2.0, mix_with_atom(uniform_dist(), 0.5)}, o.n, check_seed(o.seed, nm, 2));
    return ks_two(a, b);
  });

  // tilt
  add("tilted-arcsine-ks(p=0.3,theta=1)", "tilt", [](const SuiteOptions& o, const std::string& nm) {
    const double p = 0.3, c = p * p / ((1 - p) * (1 - p));
    const SampleBatch b = sample_mean({1, tilt_pushforward(rho_half_dist(), c)}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density([&](double y) { return tilted_arcsine_density(1, p, y); },
                                      linear_nodes(0, 1, 400), o.cfg));
  });
  add("tilt-forward-ks(uniform,c=2,theta=1)", "tilt", [](const SuiteOptions& o, const std::string& nm) {
    const DistSpec u = uniform_dist();
    const SampleBatch b = sample_mean({1, tilt_pushforward(u, 2)}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density(open_unit([&](double y) { return tilt_density_forward(1, 2, u, y, o.cfg); }),
                                      linear_nodes(0, 1, 200), o.cfg));
  });
  add("tilt-inverse-ks(uniform,c=2,theta=1)", "tilt", [](const SuiteOptions& o, const std::string& nm) {
    const DistSpec u = uniform_dist();
    const SampleBatch b = sample_mean({1, u}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density([&](double x) { return tilt_density_inverse(1, 2, u, x, o.cfg); },
                                      linear_nodes(0, 1, 200), o.cfg));
  });
  add("tilt-scale-ks(uniform,c=2,sigma=0.5)", "tilt", [](const SuiteOptions& o, const std::string& nm) {
    const DistSpec u = uniform_dist();
    const SampleBatch b =
        sample_mean({1, mix_with_atom(tilt_pushforward(u, 2), 0.5)}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density(open_unit([&](double y) { return tilt_scale_density(0.5, 2, u, y, o.cfg); }),
                                      linear_nodes(0, 1, 200), o.cfg));
  });

  // fdd
  for (const char* law : {"uniform", "exp-ratio-w"}) {
    const std::string l = law;
    add("fdd-laplace(" + l + ",theta=1,cells=0.5+0.5)", "fdd", [l](const SuiteOptions& o, const std::string&) {
      const SubordinatorSpec spec = make_subordinator(1, get_entry(l).dist, o.cfg);
      const double cells[] = {0.5, 0.5};
      const Partition part = Partition::from_lengths(cells);
      const ClosedForm psi = spec.base.closed_psi();
      double worst = 0;
      for (std::size_t i = 0; i < 2; ++i) {
        const VerifyReport r = laplace_quad(
            [&](double x) {
              const double pts[] = {x, x};
              return fdd_densities(spec, part, pts, o.cfg)[i];
            },
            [&](double lam) { return std::exp(-0.5 * *psi(lam)); }, {0.5, 1.0, 2.0}, o.cfg);
        worst = std::max(worst, r.value);
      }
      return make_report("", StatisticKind::LaplaceRelErr, worst, 1e-6, {{"method", "quadrature"}});
    });
    add("fdd-ks(" + l + ",sigma=0.5)", "fdd", [l](const SuiteOptions& o, const std::string& nm) {
      const DistSpec d = get_entry(l).dist;
      const SampleBatch b = sample_ggc({0.5, d}, o.n, check_seed(o.seed, nm));
      return ks_one(b, cdf_table([&](double x) { return ggc_cdf(0.5, d, x, o.cfg); },
                                 log_nodes(0, -12, l == "uniform" ? 2 : 7, 240)));
    });
  }

  // bfry
  for (double a : {0.3, 0.5, 0.7}) {
    add("bfry-laplace(alpha=" + fmt_short(a) + ")", "bfry", [a](const SuiteOptions& o, const std::string& nm) {
      const SampleBatch b = sample_named("bfry-sigma", {{"alpha", a}}, o.n, check_seed(o.seed, nm));
      return laplace_mc(b, [a](double l) { return std::pow(1 + l, a) - std::pow(l, a); }, {0.5, 1.0, 2.0});
    });
  }
  add("bfry-half-marginal-ks(t=0.5)", "bfry", [](const SuiteOptions& o, const std::string& nm) {
    const double t = 0.5;
    const SampleBatch b = generate(o.n, check_seed(o.seed, nm), "G_{t/2}/beta_{1/2,(1+t)/2}", [t](Philox& r) {
      const double g = gamma_variate(r, t / 2);
      return g / beta_variate(r, 0.5, (1 + t) / 2);
    });
    return ks_one(b, cdf_table([&](double x) { return bfry_marginal_cdf(0.5, 0.5 * t, x, o.cfg); },
                               log_nodes(0, -14, 10, 400)));
  });
  add("bfry-fdd-laplace(alpha=0.5,cells=1+1)", "bfry", [](const SuiteOptions& o, const std::string&) {
    const double cells[] = {1.0, 1.0};
    const Partition part = Partition::from_lengths(cells);
    return laplace_quad(
        [&](double x) {
          const double pts[] = {x, x};
          return bfry_fdd(0.5, part, pts, o.cfg)[0];
        },
        [](double l) { return std::sqrt(1 + l) - std::sqrt(l); }, {0.5, 1.0, 2.0}, o.cfg);
  });
  add("bfry-scaled-mean-ks(alpha=0.5)", "bfry", [](const SuiteOptions& o, const std::string& nm) {
    const double a = 0.5;
    const SampleBatch b = generate(o.n, check_seed(o.seed, nm), "beta_{1-a,a}/U^{1/a}", [a](Philox& r) {
      return beta_variate(r, 1 - a, a) / std::pow(r.uniform(), 1 / a);
    });
    return ks_one(b, cdf_from_density([&](double x) { return bfry_scaled_mean_density(a, 1 - a, x); },
                                      log_nodes(0, -10, 10, 400, {1.0}), o.cfg));
  });
  add("lamperti-ks(alpha=0.5)", "bfry", [](const SuiteOptions& o, const std::string& nm) {
    const SampleBatch b = sample_named("lamperti", {{"alpha", 0.5}}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density([](double y) { return lamperti_density(0.5, y); },
                                      log_nodes(0, -10, 10, 400), o.cfg));
  });
  for (double a : {0.3, 0.5}) {
    add("gfrak-ks(alpha=" + fmt_short(a) + ")", "bfry", [a](const SuiteOptions& o, const std::string& nm) {
      // G_alpha = W / (1 + W) with W = Z_{1-alpha}^{1/alpha}.
      const SampleBatch b = generate(o.n, check_seed(o.seed, nm), "gfrak", [a](Philox& r) {
        const double s = positive_stable(r, 1 - a);
        const double t = positive_stable(r, 1 - a);
        const double w = std::pow(s / t, (1 - a) / a);
        return std::isinf(w) ? 1.0 : w / (1 + w);
      });
      return ks_one(b, cdf_from_density(open_unit([a](double u) { return gfrak_density(a, u); }),
                                        linear_nodes(0, 1, 400), o.cfg));
    });
  }

  // catalog
  for (double th : {-0.25, 0.0, 0.5, 1.0}) {
    add("prop43(theta=" + fmt_short(th) + ")", "catalog", [th](const SuiteOptions& o, const std::string& nm) {
      return prop43_identity_check(th, o.n, check_seed(o.seed, nm), o.cfg);
    });
  }
  add("uniform-order1-ks", "catalog", [](const SuiteOptions& o, const std::string& nm) {
    const SampleBatch b = sample_mean({1, uniform_dist()}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density(uniform_mean_density_order1, linear_nodes(0, 1, 400), o.cfg));
  });
  add("w-order1-ks", "catalog", [](const SuiteOptions& o, const std::string& nm) {
    const SampleBatch b = sample_mean({1, exp_ratio_w_dist()}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density(w_mean_density_order1, log_nodes(0, -10, 10, 400), o.cfg));
  });
  add("arcsine-ks(theta=2)", "catalog", [](const SuiteOptions& o, const std::string& nm) {
    const SampleBatch b = sample_mean({2, arcsine_dist()}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density([](double x) { return arcsine_mean_density(2, x); }, linear_nodes(0, 1, 400),
                                      o.cfg));
  });
  add("rho-half-ks(theta=1)", "catalog", [](const SuiteOptions& o, const std::string& nm) {
    const SampleBatch b = sample_named("gamma-ratio", {{"a", 1.5}, {"b", 0.5}}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density([](double x) { return rho_half_mean_density(1, x); },
                                      log_nodes(0, -10, 10, 400), o.cfg));
  });
  add("rho-half-mean-ks(theta=2)", "catalog", [](const SuiteOptions& o, const std::string& nm) {
    const SampleBatch b = sample_mean({2, rho_half_dist()}, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density([](double x) { return rho_half_mean_density(2, x); },
                                      log_nodes(0, -10, 10, 400), o.cfg));
  });
  add("mean-density-ks(uniform,theta=2)", "catalog", [](const SuiteOptions& o, const std::string& nm) {
    const MeanLaw law{2, uniform_dist()};
    const SampleBatch b = sample_mean(law, o.n, check_seed(o.seed, nm));
    return ks_one(b, cdf_from_density([&](double x) { return mean_density(law, x, o.cfg); },
                                      linear_nodes(0, 1, 50), o.cfg));
  });
  add("w-laplace", "catalog", [](const SuiteOptions& o, const std::string& nm) {
    const SampleBatch b = sample_ggc({1, exp_ratio_w_dist()}, o.n, check_seed(o.seed, nm));
    return laplace_mc(b, [](double l) { return l == 1 ? std::exp(-1.0) : std::exp(-l * std::log(l) / (l - 1)); },
                      {0.5, 1.0, 2.0});
  });
  for (double th : {0.5, 1.0}) {
    add("linnik-laplace(theta=" + fmt_short(th) + ")", "catalog", [th](const SuiteOptions& o, const std::string& nm) {
      const SampleBatch b = sample_ggc({th, rho_half_dist()}, o.n, check_seed(o.seed, nm));
      return laplace_mc(b, [th](double l) { return std::pow(1 + std::sqrt(l), -2 * th); }, {0.5, 1.0, 2.0});
    });
  }
  return c;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"beta-scale", "tilt", "fdd", "bfry", "catalog", "all"};
  return names;
}

const std::vector<Check>& registered_checks() {
  static const std::vector<Check> checks = build_checks();
  return checks;
}

std::vector<VerifyReport> run_suite(std::string_view suite, const SuiteOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw Error(ErrorKind::UnknownEntry, "unknown suite '" + std::string(suite) + "'");
  require(opt.n >= 100, "need at least 100 draws");
  opt.cfg.validate();
  std::vector<VerifyReport> out;
  for (const Check& c : registered_checks()) {
    if (suite != "all" && c.suite != suite) continue;
    VerifyReport r = c.run(opt);
    r.name = c.name;
    r.metadata["suite"] = c.suite;
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<ManifestEntry>& suite_manifest() {
  static const std::vector<ManifestEntry> m{
      {"uniform_mean_density_order1", {"uniform-order1-ks"}},
      {"w_mean_density_order1", {"w-order1-ks", "w-laplace"}},
      {"arcsine_mean_density", {"arcsine-ks(theta=2)"}},
      {"rho_half_mean_density", {"rho-half-ks(theta=1)", "rho-half-mean-ks(theta=2)", "prop43(theta=0.5)"}},
      {"tilted_arcsine_density", {"tilted-arcsine-ks(p=0.3,theta=1)"}},
      {"mean_density", {"mean-density-ks(uniform,theta=2)"}},
      {"scaled_mean_density",
       {"beta-scale-ks(sigma=0.25)", "beta-scale-ks(sigma=0.5)", "beta-scale-ks(sigma=0.75)",
        "scaled-mean-moment(sigma=0.5)"}},
      {"ggc_density", {"fdd-laplace(uniform,theta=1,cells=0.5+0.5)", "fdd-laplace(exp-ratio-w,theta=1,cells=0.5+0.5)"}},
      {"ggc_cdf", {"fdd-ks(uniform,sigma=0.5)", "fdd-ks(exp-ratio-w,sigma=0.5)"}},
      {"tilt_density_forward", {"tilt-forward-ks(uniform,c=2,theta=1)"}},
      {"tilt_density_inverse", {"tilt-inverse-ks(uniform,c=2,theta=1)"}},
      {"tilt_scale_density", {"tilt-scale-ks(uniform,c=2,sigma=0.5)"}},
      {"lamperti_density", {"lamperti-ks(alpha=0.5)"}},
      {"gfrak_density", {"gfrak-ks(alpha=0.3)", "gfrak-ks(alpha=0.5)"}},
      {"bfry_scaled_mean_density", {"bfry-scaled-mean-ks(alpha=0.5)"}},
      {"bfry_marginal_density", {"bfry-fdd-laplace(alpha=0.5,cells=1+1)"}},
      {"bfry_marginal_cdf", {"bfry-half-marginal-ks(t=0.5)"}},
  };
  return m;
}

}  // namespace ggc
