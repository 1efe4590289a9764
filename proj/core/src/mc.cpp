// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <thread>

#include "ggc/error.hpp"
#include "ggc/io.hpp"

namespace ggc {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

double param(const std::map<std::string, double>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw Error(ErrorKind::InvalidInput, "missing parameter '" + key + "'");
  return it->second;
}

}  // namespace

Philox::Philox(std::uint64_t seed, std::uint64_t stream)
    : ctr_{0u, 0u, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)},
      key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

std::array<std::uint32_t, 4> Philox::block(std::array<std::uint32_t, 4> c,
                                           std::array<std::uint32_t, 2> k) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
         static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
    k[0] += kW0;
    k[1] += kW1;
  }
  return c;
}

void Philox::refill() {
  buf_ = block(ctr_, key_);
  if (++ctr_[0] == 0) ++ctr_[1];
  pos_ = 0;
}

std::uint32_t Philox::next_u32() {
  if (pos_ == 4) refill();
  return buf_[pos_++];
}

double Philox::uniform() {
  const std::uint32_t a = next_u32() >> 5;
  const std::uint32_t b = next_u32() >> 6;
  return (a * 67108864.0 + b + 0.5) * (1.0 / 9007199254740992.0);
}

double std_normal(Philox& rng) {
  const double u = rng.uniform();
  const double v = rng.uniform();
  return std::sqrt(-2 * std::log(u)) * std::cos(2 * std::numbers::pi * v);
}

double std_exponential(Philox& rng) { return -std::log(rng.uniform()); }

double gamma_variate(Philox& rng, double shape) {
  require(shape > 0 && std::isfinite(shape), "gamma shape must be positive");
  if (shape < 1) {
    const double g = gamma_variate(rng, shape + 1);
    return g * std::exp(std::log(rng.uniform()) / shape);
  }
  const double d = shape - 1.0 / 3;
  const double c = 1 / std::sqrt(9 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = std_normal(rng);
      v = 1 + c * x;
    } while (v <= 0);
    v = v * v * v;
    const double u = rng.uniform();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
  }
}

double beta_variate(Philox& rng, double a, double b) {
  require(a > 0 && b > 0, "beta parameters must be positive");
  const double x = gamma_variate(rng, a);
  const double y = gamma_variate(rng, b);
  return x / (x + y);
}

double positive_stable(Philox& rng, double alpha) {
  require(alpha > 0 && alpha < 1, "stable index must lie in (0, 1)");
  const double u = std::numbers::pi * rng.uniform();
  const double e = std_exponential(rng);
  return std::sin(alpha * u) / std::pow(std::sin(u), 1 / alpha) *
         std::pow(std::sin((1 - alpha) * u) / e, (1 - alpha) / alpha);
}

SampleBatch generate(std::size_t n, std::uint64_t seed, std::string law_tag,
                     const std::function<double(Philox&)>& draw, double truncation_bound) {
  SampleBatch batch;
  batch.seed = seed;
  batch.n = n;
  batch.law_tag = std::move(law_tag);
  batch.truncation_error_bound = truncation_bound;
  batch.values.resize(n);
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 4096)));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Philox rng(seed, i);
      batch.values[i] = draw(rng);
    }
  };
  if (threads <= 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(std::min(n, t * chunk), std::min(n, (t + 1) * chunk));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (double v : batch.values) {
    if (!std::isfinite(v) || v < 0)
      throw Error(ErrorKind::NonConvergence, "sampler '" + batch.law_tag + "' produced " + fmt17(v));
  }
  return batch;
}

double stick_breaking_draw(Philox& rng, double theta, const DistSpec& base, double trunc_eps,
                           double* residual) {
  // A degenerate base gives a degenerate mean; skip the rounding of the weight sum.
  if (base.continuous_mass() == 0 && base.atoms().size() == 1) {
    if (residual) *residual = 0.0;
    return base.atoms().front().location;
  }
  double remaining = 1.0;
  double sum = 0.0;
  while (remaining > trunc_eps) {
    const double e = std::log(rng.uniform()) / theta;  // log(1 - v), v ~ beta(1, theta)
    const double w = -remaining * std::expm1(e);
    sum += w * base.quantile(rng.uniform());
    remaining *= std::exp(e);
  }
  sum += remaining * base.quantile(rng.uniform());
  if (residual) *residual = remaining;
  return sum;
}

SampleBatch sample_mean(const MeanLaw& law, std::size_t n, std::uint64_t seed, double trunc_eps) {
  require(law.theta > 0, "theta must be positive");
  require(trunc_eps > 0 && trunc_eps < 1, "trunc_eps must lie in (0, 1)");
  const DistSpec& base = law.base;
  const double theta = law.theta;
  return generate(
      n, seed, "mean(theta=" + fmt_short(theta) + "," + base.label() + ")",
      [&](Philox& rng) { return stick_breaking_draw(rng, theta, base, trunc_eps); }, trunc_eps);
}

SampleBatch sample_ggc(const GgcLaw& law, std::size_t n, std::uint64_t seed, double trunc_eps) {
  require(law.theta > 0, "theta must be positive");
  require(trunc_eps > 0 && trunc_eps < 1, "trunc_eps must lie in (0, 1)");
  const DistSpec& base = law.base;
  const double theta = law.theta;
  return generate(
      n, seed, "ggc(theta=" + fmt_short(theta) + "," + base.label() + ")",
      [&](Philox& rng) {
        const double g = gamma_variate(rng, theta);
        return g * stick_breaking_draw(rng, theta, base, trunc_eps);
      },
      trunc_eps);
}

SampleBatch sample_named(const std::string& name, const std::map<std::string, double>& p,
                         std::size_t n, std::uint64_t seed) {
  std::function<double(Philox&)> draw;
  std::string tag = name;
  for (const auto& [k, v] : p) tag += "," + k + "=" + fmt_short(v);
  if (name == "gamma") {
    const double shape = param(p, "shape");
    require(shape > 0, "gamma shape must be positive");
    draw = [shape](Philox& r) { return gamma_variate(r, shape); };
  } else if (name == "beta") {
    const double a = param(p, "a");
    const double b = param(p, "b");
    require(a > 0 && b > 0, "beta parameters must be positive");
    draw = [a, b](Philox& r) { return beta_variate(r, a, b); };
  } else if (name == "uniform") {
    const double lo = p.count("lo") ? p.at("lo") : 0.0;
    const double hi = p.count("hi") ? p.at("hi") : 1.0;
    require(lo >= 0 && lo < hi, "uniform needs 0 <= lo < hi");
    draw = [lo, hi](Philox& r) { return lo + (hi - lo) * r.uniform(); };
  } else if (name == "stable") {
    const double a = param(p, "alpha");
    require(a > 0 && a < 1, "stable alpha must lie in (0, 1)");
    draw = [a](Philox& r) { return positive_stable(r, a); };
  } else if (name == "lamperti") {
    const double a = param(p, "alpha");
    require(a > 0 && a < 1, "lamperti alpha must lie in (0, 1)");
    draw = [a](Philox& r) {
      const double s = positive_stable(r, a);
      const double t = positive_stable(r, a);
      return std::pow(s / t, a);
    };
  } else if (name == "bfry-sigma") {
    const double a = param(p, "alpha");
    require(a > 0 && a < 1, "bfry alpha must lie in (0, 1)");
    draw = [a](Philox& r) {
      const double g = gamma_variate(r, 1 - a);
      return g * std::exp(-std::log(r.uniform()) / a);
    };
  } else if (name == "gamma-ratio") {
    const double a = param(p, "a");
    const double b = param(p, "b");
    require(a > 0 && b > 0, "gamma-ratio parameters must be positive");
    draw = [a, b](Philox& r) {
      const double x = gamma_variate(r, a);
      return x / gamma_variate(r, b);
    };
  } else {
    throw Error(ErrorKind::UnknownEntry, "unknown sampler '" + name + "'");
  }
  return generate(n, seed, tag, draw);
}

const char* to_string(StatisticKind k) noexcept {
  switch (k) {
    case StatisticKind::Ks: return "ks";
    case StatisticKind::LaplaceRelErr: return "laplace-relerr";
    case StatisticKind::MomentRelErr: return "moment-relerr";
  }
  return "unknown";
}

VerifyReport make_report(std::string name, StatisticKind kind, double value, double threshold,
                         std::map<std::string, std::string> metadata) {
  VerifyReport r;
  r.name = std::move(name);
  r.kind = kind;
  r.value = value;
  r.threshold = threshold;
  r.passed = value <= threshold;
  r.metadata = std::move(metadata);
  return r;
}

double ks_default_threshold(std::size_t n, double bias) {
  return std::max(1.63 / std::sqrt(static_cast<double>(n)), 2 * bias);
}

double ks_distance(std::vector<double> v, const std::function<double(double)>& cdf,
                   const std::function<double(double)>& cdf_left) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    const double f = cdf(v[i]);
    const double fl = cdf_left ? cdf_left(v[i]) : f;
    d = std::max({d, std::abs(f - j / n), std::abs(fl - i / n)});
    i = j;
  }
  return d;
}

VerifyReport ks_statistic(const SampleBatch& batch, const std::function<double(double)>& cdf,
                          double threshold) {
  if (threshold < 0) threshold = ks_default_threshold(batch.n, batch.truncation_error_bound);
  return make_report("ks:" + batch.law_tag, StatisticKind::Ks, ks_distance(batch.values, cdf),
                     threshold,
                     {{"n", std::to_string(batch.n)}, {"seed", std::to_string(batch.seed)},
                      {"law", batch.law_tag}});
}

VerifyReport ks_statistic(const SampleBatch& batch, const DistSpec& law, double threshold) {
  if (threshold < 0) threshold = ks_default_threshold(batch.n, batch.truncation_error_bound);
  const double d = ks_distance(
      batch.values, [&](double t) { return law.cdf(t); },
      [&](double t) { return law.cdf(t) - law.atom_weight_at(t); });
  return make_report("ks:" + batch.law_tag + "~" + law.label(), StatisticKind::Ks, d, threshold,
                     {{"n", std::to_string(batch.n)}, {"seed", std::to_string(batch.seed)},
                      {"law", batch.law_tag}, {"reference", law.label()}});
}

double ks_two_sample_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return d;
}

VerifyReport ks_two_sample(const SampleBatch& a, const SampleBatch& b, double threshold) {
  if (threshold < 0) {
    const double n = static_cast<double>(a.n);
    const double m = static_cast<double>(b.n);
    threshold = 1.63 * std::sqrt((n + m) / (n * m)) + a.truncation_error_bound +
                b.truncation_error_bound;
  }
  return make_report("ks2:" + a.law_tag + "|" + b.law_tag, StatisticKind::Ks,
                     ks_two_sample_distance(a.values, b.values), threshold,
                     {{"n", std::to_string(a.n)}, {"m", std::to_string(b.n)},
                      {"seed_a", std::to_string(a.seed)}, {"seed_b", std::to_string(b.seed)},
                      {"law_a", a.law_tag}, {"law_b", b.law_tag}});
}

VerifyReport laplace_check(const SampleBatch& batch, const std::function<double(double)>& closed,
                           std::span<const double> lambdas, double threshold) {
  double worst = 0.0;
  std::string detail;
  for (double lambda : lambdas) {
    require(lambda > 0, "Laplace check needs positive lambda");
    long double s = 0.0L;
    for (double v : batch.values) s += std::exp(-lambda * v);
    const double emp = static_cast<double>(s / static_cast<long double>(batch.n));
    const double ref = closed(lambda);
    const double rel = std::abs(emp - ref) / std::abs(ref);
    worst = std::max(worst, rel);
    detail += (detail.empty() ? "" : ";") + fmt17(lambda) + ":" + fmt17(emp) + "/" + fmt17(ref);
  }
  return make_report("laplace:" + batch.law_tag, StatisticKind::LaplaceRelErr, worst, threshold,
                     {{"n", std::to_string(batch.n)}, {"seed", std::to_string(batch.seed)},
                      {"law", batch.law_tag}, {"empirical/closed", detail}});
}

DistSpec tabulate_density(std::string label, const std::function<double(double)>& pdf, double lo,
                          double hi, std::size_t n_nodes, const QuadConfig& cfg, double* raw_mass) {
  require(n_nodes >= 8, "tabulate_density needs at least 8 nodes");
  require(lo >= 0 && lo < hi, "tabulate_density needs 0 <= lo < hi");
  const bool bounded = std::isfinite(hi);
  // Double-exponential node clustering in s in (0, 1); x = lo + (hi - lo) s
  // on bounded ranges and x = lo + s / (1 - s) otherwise.
  const double t_lo = -3.2;
  const double t_hi = bounded ? 3.2 : 2.9;
  std::vector<double> xs{lo};
  for (std::size_t k = 0; k < n_nodes; ++k) {
    const double t = t_lo + (t_hi - t_lo) * static_cast<double>(k) / static_cast<double>(n_nodes - 1);
    const double u = std::numbers::pi / 2 * std::sinh(t);
    // s = (1 + tanh u) / 2 and 1 - s, both without cancellation.
    const double s = u < 0 ? 1 / (1 + std::exp(-2 * u)) : 1 - 1 / (1 + std::exp(2 * u));
    const double one_minus_s = u < 0 ? 1 - s : 1 / (1 + std::exp(2 * u));
    const double x = bounded ? lo + (hi - lo) * s : lo + s / one_minus_s;
    if (x > xs.back() && (!bounded || x < hi)) xs.push_back(x);
  }
  if (bounded) xs.push_back(hi);
  std::vector<double> cum(xs.size(), 0.0);
  QuadConfig q = cfg;
  q.abs_tol = std::min(cfg.abs_tol, 1e-14);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    cum[i + 1] = cum[i] + integrate_simple(pdf, xs[i], xs[i + 1], q);
  const double mass = cum.back();
  if (raw_mass) *raw_mass = mass;
  require(mass > 0 && std::isfinite(mass), "tabulated density has no mass");
  std::vector<std::pair<double, double>> nodes;
  for (std::size_t i = 0; i < xs.size(); ++i) nodes.push_back({xs[i], cum[i] / mass});
  nodes.back().second = 1.0;
  return tabulated(std::move(label), std::move(nodes));
}

std::function<double(double)> interpolated_cdf(std::vector<double> x, std::vector<double> f) {
  require(x.size() == f.size() && x.size() >= 2, "interpolated_cdf needs matching node arrays");
  for (std::size_t i = 1; i < x.size(); ++i) {
    require(x[i] > x[i - 1], "interpolation nodes must increase");
    f[i] = std::max(f[i], f[i - 1]);
  }
  return [x = std::move(x), f = std::move(f)](double t) {
    if (t <= x.front()) return std::clamp(f.front(), 0.0, 1.0);
    if (t >= x.back()) return std::clamp(f.back(), 0.0, 1.0);
    const auto it = std::upper_bound(x.begin(), x.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    const double w = (t - x[i]) / (x[i + 1] - x[i]);
    return std::clamp(f[i] + w * (f[i + 1] - f[i]), 0.0, 1.0);
  };
}

void write_batch_csv(const SampleBatch& batch, std::ostream& os) {
  os << "# law_tag=" << batch.law_tag << '\n'
     << "# seed=" << batch.seed << '\n'
     << "# n=" << batch.n << '\n'
     << "# truncation_error_bound=" << fmt17(batch.truncation_error_bound) << '\n'
     << "value\n";
  for (double v : batch.values) os << fmt17(v) << '\n';
}

void write_reports_text(std::span<const VerifyReport> reports, std::ostream& os) {
  for (const VerifyReport& r : reports) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " " << to_string(r.kind)
       << " value=" << fmt17(r.value) << " threshold=" << fmt17(r.threshold);
    for (const auto& [k, v] : r.metadata) os << " " << k << "=" << v;
    os << '\n';
  }
}

void write_reports_csv(std::span<const VerifyReport> reports, std::ostream& os) {
  os << "name,kind,value,threshold,passed\n";
  for (const VerifyReport& r : reports) {
    std::string quoted;
    for (char ch : r.name) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    os << '"' << quoted << '"' << ',' << to_string(r.kind) << ',' << fmt17(r.value) << ','
       << fmt17(r.threshold) << ',' << (r.passed ? "pass" : "fail") << '\n';
  }
}

}  // namespace ggc
