// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "ggc/catalog.hpp"
#include "ggc/dist_io.hpp"
#include "ggc/error.hpp"
#include "ggc/io.hpp"
#include "ggc/mean_density.hpp"
#include "ggc/operators.hpp"
#include "ggc/subordinators.hpp"
#include "ggc/verify.hpp"

namespace ggc::cli {
namespace {

double parse_double(const std::string& s, const std::string& what) {
  double v = 0;
  const char* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end || s.empty())
    throw Error(ErrorKind::Parse, "bad number '" + s + "' in " + what);
  return v;
}

struct LawArgs {
  std::string catalog;
  std::string dist_file;
  std::vector<std::string> params;
};

struct QuadArgs {
  std::optional<double> abs_tol;
  std::optional<double> rel_tol;
  std::optional<int> max_subdivisions;
  bool closed_forms = false;

  QuadConfig config() const {
    QuadConfig c;
    if (abs_tol) c.abs_tol = *abs_tol;
    if (rel_tol) c.rel_tol = *rel_tol;
    if (max_subdivisions) c.max_subdivisions = *max_subdivisions;
    c.use_closed_forms = closed_forms;
    c.validate();
    return c;
  }
};

void add_law_options(CLI::App* app, LawArgs& law) {
  auto* cat = app->add_option("--catalog", law.catalog, "Catalog law name");
  auto* file = app->add_option("--dist", law.dist_file, "DistSpec JSON file");
  cat->excludes(file);
  app->add_option("--param", law.params, "Catalog parameter key=value (repeatable)");
}

void add_quad_options(CLI::App* app, QuadArgs& q) {
  app->add_option("--abs-tol", q.abs_tol, "Quadrature absolute tolerance");
  app->add_option("--rel-tol", q.rel_tol, "Quadrature relative tolerance");
  app->add_option("--max-subdivisions", q.max_subdivisions, "Quadrature bisection budget");
  app->add_flag("--closed-forms", q.closed_forms, "Use closed-form phi and psi where attached");
}

DistSpec load_law(const LawArgs& a) {
  if (!a.dist_file.empty()) return load_dist(a.dist_file);
  if (a.catalog.empty()) throw Error(ErrorKind::InvalidInput, "one of --catalog or --dist is required");
  CatalogParams params;
  for (const std::string& kv : a.params) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::Parse, "--param expects key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = parse_double(kv.substr(eq + 1), "--param");
  }
  return get_entry(a.catalog, params).dist;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") out << content;
  else write_file_atomic(path, content);
}

std::string two_column_csv(const std::vector<std::pair<std::string, std::string>>& meta, const std::string& header,
                           const std::vector<double>& xs, const std::vector<double>& ys) {
  std::ostringstream os;
  for (const auto& [k, v] : meta) os << "# " << k << '=' << v << '\n';
  os << header << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) os << fmt17(xs[i]) << ',' << fmt17(ys[i]) << '\n';
  return os.str();
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GGC_MEANS_SEED");
  if (!env || !*env) return 42;
  std::uint64_t v = 0;
  const std::string s(env);
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Error(ErrorKind::Parse, "GGC_MEANS_SEED must be an unsigned integer, got '" + s + "'");
  return v;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonConvergence:
    case ErrorKind::Divergent:
    case ErrorKind::NotADistribution:
      return kNumerical;
    default:
      return kValidation;
  }
}

}  // namespace

std::vector<double> Grid::points() const {
  std::vector<double> v;
  for (int i = 0; i < count; ++i) v.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  if (count > 1) v.back() = hi;
  return v;
}

Grid parse_grid(const std::string& text) {
  const std::size_t a = text.find(':');
  const std::size_t b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos || text.find(':', b + 1) != std::string::npos)
    throw Error(ErrorKind::Parse, "grid must be lo:hi:count, got '" + text + "'");
  Grid g{parse_double(text.substr(0, a), "grid"), parse_double(text.substr(a + 1, b - a - 1), "grid"), 0};
  const std::string c = text.substr(b + 1);
  const auto r = std::from_chars(c.data(), c.data() + c.size(), g.count);
  if (r.ec != std::errc() || r.ptr != c.data() + c.size() || g.count < 0)
    throw Error(ErrorKind::Parse, "grid count must be a nonnegative integer, got '" + c + "'");
  if (!std::isfinite(g.lo) || !std::isfinite(g.hi) || (g.count > 1 && !(g.lo < g.hi)))
    throw Error(ErrorKind::Parse, "grid needs finite lo < hi, got '" + text + "'");
  return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Densities of Dirichlet means, GGC laws and their subordinators", "ggc-means"};
  app.require_subcommand(1);

  LawArgs law;
  QuadArgs quad;
  std::string out_path, grid_text;
  double theta = 1, sigma = 0.5, c = 1, alpha = 0.5;
  bool with_cdf = false, inverse = false;
  std::vector<double> cells, points;
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::size_t n = 100000;

  auto* density = app.add_subcommand("density", "Tabulate the mean density");
  auto* cdf = app.add_subcommand("cdf", "Tabulate the mean CDF");
  auto* psi = app.add_subcommand("psi", "Levy exponent over a lambda grid");
  auto* phi = app.add_subcommand("phi", "Phi = E log|t - X| over a t grid");
  auto* tilt = app.add_subcommand("tilt", "Mean density of the tilted law A_c = cX / (cX + 1)");
  auto* scale = app.add_subcommand("scale", "Mean density of the beta-scaled law M_theta(F_{XY_sigma})");
  auto* fdd = app.add_subcommand("fdd", "Marginal densities of a GGC subordinator over a partition");
  auto* bfry = app.add_subcommand("bfry", "Marginal densities of the BFRY subordinator over a partition");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  auto* catalog = app.add_subcommand("catalog", "List catalog laws");

  for (CLI::App* s : {density, cdf, psi, phi, tilt, scale, fdd}) {
    add_law_options(s, law);
    add_quad_options(s, quad);
  }
  for (CLI::App* s : {density, cdf, psi, phi, tilt, scale, fdd, bfry, verify})
    s->add_option("--out", out_path, "Output path (stdout when omitted)");
  add_quad_options(bfry, quad);
  add_quad_options(verify, quad);
  for (CLI::App* s : {density, cdf, psi, phi, tilt, scale})
    s->add_option("--grid", grid_text, "Grid lo:hi:count")->required();
  for (CLI::App* s : {density, cdf, tilt}) s->add_option("--theta", theta, "Order theta")->required();
  scale->add_option("--theta", theta, "Order theta")->capture_default_str();
  fdd->add_option("--theta", theta, "Rate theta")->required();
  density->add_flag("--with-cdf", with_cdf, "Add the CDF column");
  tilt->add_option("--c", c, "Tilt parameter c > 0")->required();
  tilt->add_flag("--inverse", inverse, "Map the tilted mean density back to the base");
  scale->add_option("--sigma", sigma, "Scale sigma in (0, 1]")->required();
  for (CLI::App* s : {fdd, bfry}) {
    s->add_option("--cells", cells, "Cell lengths, comma separated")->delimiter(',')->required();
    s->add_option("--points", points, "Evaluation points, one per cell")->delimiter(',')->required();
  }
  bfry->add_option("--alpha", alpha, "Stable index alpha in (0, 1)")->capture_default_str();
  verify->add_option("--suite", suite, "beta-scale | tilt | fdd | bfry | catalog | all")->capture_default_str();
  verify->add_option("--seed", seed, "Seed (default GGC_MEANS_SEED or 42)");
  verify->add_option("--n", n, "Draws per Monte Carlo check")->capture_default_str();
  catalog->add_option("--catalog", law.catalog, "Show one entry");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kValidation;
  }

  try {
    const QuadConfig cfg = quad.config();
    if (density->parsed() || cdf->parsed()) {
      const MeanLaw ml = make_mean_law(theta, load_law(law), cfg);
      const std::vector<double> g = parse_grid(grid_text).points();
      std::ostringstream os;
      write_profile_csv(tabulate_profile(ml, g, cdf->parsed() || with_cdf, cfg), os);
      emit(out_path, os.str(), out);
    } else if (psi->parsed() || phi->parsed()) {
      const DistSpec d = load_law(law);
      const std::vector<double> g = parse_grid(grid_text).points();
      std::vector<double> ys;
      for (double x : g) ys.push_back(psi->parsed() ? levy_exponent(d, x, cfg) : ggc::phi(d, x, cfg));
      emit(out_path,
           two_column_csv({{"verb", psi->parsed() ? "psi" : "phi"}, {"base", d.label()}},
                          psi->parsed() ? "lambda,psi" : "t,phi", g, ys),
           out);
    } else if (tilt->parsed()) {
      const DistSpec d = load_law(law);
      const std::vector<double> g = parse_grid(grid_text).points();
      std::vector<double> ys;
      for (double x : g)
        ys.push_back(inverse ? tilt_density_inverse(theta, c, d, x, cfg) : tilt_density_forward(theta, c, d, x, cfg));
      emit(out_path,
           two_column_csv({{"verb", inverse ? "tilt-inverse" : "tilt"},
                           {"theta", fmt17(theta)},
                           {"c", fmt17(c)},
                           {"base", d.label()}},
                          inverse ? "x,density" : "y,density", g, ys),
           out);
    } else if (scale->parsed()) {
      const MeanLaw ml = beta_scale(theta, sigma, load_law(law), cfg);
      const std::vector<double> g = parse_grid(grid_text).points();
      std::vector<double> ys;
      for (double x : g) ys.push_back(mean_density(ml, x, cfg));
      emit(out_path,
           two_column_csv({{"verb", "scale"}, {"theta", fmt17(theta)}, {"sigma", fmt17(sigma)}, {"base", ml.base.label()}},
                          "x,pdf", g, ys),
           out);
    } else if (fdd->parsed() || bfry->parsed()) {
      if (points.size() != cells.size())
        throw Error(ErrorKind::InvalidInput, "--points needs one value per cell");
      const Partition part = Partition::from_lengths(cells);
      std::vector<double> sig, dens;
      std::string header;
      if (fdd->parsed()) {
        const SubordinatorSpec spec = make_subordinator(theta, load_law(law), cfg);
        sig = part.sigmas(theta);
        dens = fdd_densities(spec, part, points, cfg);
        header = "verb=fdd\ntheta=" + fmt17(theta) + "\nbase=" + spec.base.label();
      } else {
        BfryParams{alpha}.validate();
        sig = part.sigmas(1 - alpha);
        dens = bfry_fdd(alpha, part, points, cfg);
        header = "verb=bfry\nalpha=" + fmt17(alpha);
      }
      std::ostringstream os;
      write_fdd_csv(part, sig, points, dens, header, os);
      emit(out_path, os.str(), out);
    } else if (verify->parsed()) {
      SuiteOptions opt;
      opt.seed = seed ? *seed : default_seed();
      opt.n = n;
      opt.cfg = cfg;
      const std::vector<VerifyReport> reports = run_suite(suite, opt);
      write_reports_text(reports, out);
      if (!out_path.empty()) {
        std::ostringstream os;
        os << "# suite=" << suite << "\n# seed=" << opt.seed << "\n# n=" << opt.n << '\n';
        write_reports_csv(reports, os);
        write_file_atomic(out_path, os.str());
      }
      for (const VerifyReport& r : reports)
        if (!r.passed) return kVerifyFailed;
    } else if (catalog->parsed()) {
      for (const std::string& name : catalog_names()) {
        if (!law.catalog.empty() && name != law.catalog) continue;
        const CatalogEntry e = get_entry(name);
        out << name << '\t' << e.dist.label();
        for (const std::string& note : e.notes) out << '\t' << note;
        out << '\n';
      }
      if (!law.catalog.empty()) get_entry(law.catalog);
    }
  } catch (const Error& e) {
    err << "ggc-means: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "ggc-means: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}

}  // namespace ggc::cli
