// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo oracle: counter-based RNG, exact variate generators, a
// stick-breaking sampler for Dirichlet means, and goodness-of-fit checks.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ggc/dist.hpp"

namespace ggc {

// Philox4x32-10. The key is the user seed; the stream id occupies the upper
// half of the counter, so every (seed, stream) pair is an independent
// sequence and draw i of a batch always uses stream i.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key);

 private:
  void refill();

  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
};

double std_normal(Philox& rng);
double std_exponential(Philox& rng);
double gamma_variate(Philox& rng, double shape);
double beta_variate(Philox& rng, double a, double b);
// Positive alpha-stable with E exp(-lambda S) = exp(-lambda^alpha).
double positive_stable(Philox& rng, double alpha);

struct SampleBatch {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<double> values;
  std::string law_tag;
  double truncation_error_bound = 0.0;
};

// Fills values[i] = draw(Philox(seed, i)) for i < n, using several threads
// when available. The result does not depend on the thread count.
SampleBatch generate(std::size_t n, std::uint64_t seed, std::string law_tag,
                     const std::function<double(Philox&)>& draw, double truncation_bound = 0.0);

// One stick-breaking draw of M_theta(F_X). Sticks are broken until the
// unassigned mass is at most trunc_eps; that remainder goes to one extra
// location draw. The final remainder is stored in *residual when given.
double stick_breaking_draw(Philox& rng, double theta, const DistSpec& base, double trunc_eps,
                           double* residual = nullptr);

SampleBatch sample_mean(const MeanLaw& law, std::size_t n, std::uint64_t seed,
                        double trunc_eps = 1e-8);
SampleBatch sample_ggc(const GgcLaw& law, std::size_t n, std::uint64_t seed,
                       double trunc_eps = 1e-8);

// name in {gamma, beta, uniform, stable, lamperti, bfry-sigma, gamma-ratio}.
// Parameters: gamma{shape}, beta{a, b}, uniform{lo, hi}, stable{alpha},
// lamperti{alpha}, bfry-sigma{alpha}, gamma-ratio{a, b}.
SampleBatch sample_named(const std::string& name, const std::map<std::string, double>& params,
                         std::size_t n, std::uint64_t seed);

enum class StatisticKind { Ks, LaplaceRelErr, MomentRelErr };
const char* to_string(StatisticKind k) noexcept;

struct VerifyReport {
  std::string name;
  StatisticKind kind = StatisticKind::Ks;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::map<std::string, std::string> metadata;
};

VerifyReport make_report(std::string name, StatisticKind kind, double value, double threshold,
                         std::map<std::string, std::string> metadata = {});

// max(1.63 / sqrt(n), 2 * bias).
double ks_default_threshold(std::size_t n, double bias);

// One-sample KS statistic against a CDF. When cdf_left is given it supplies
// left limits F(t-), needed for laws with atoms.
double ks_distance(std::vector<double> values, const std::function<double(double)>& cdf,
                   const std::function<double(double)>& cdf_left = {});
VerifyReport ks_statistic(const SampleBatch& batch, const std::function<double(double)>& cdf,
                          double threshold = -1.0);
VerifyReport ks_statistic(const SampleBatch& batch, const DistSpec& law, double threshold = -1.0);
double ks_two_sample_distance(std::vector<double> a, std::vector<double> b);
// Default threshold 1.63 sqrt((n + m) / (n m)) plus both truncation bounds.
VerifyReport ks_two_sample(const SampleBatch& a, const SampleBatch& b, double threshold = -1.0);

// Max relative error of the empirical Laplace transform; threshold 1%.
VerifyReport laplace_check(const SampleBatch& batch, const std::function<double(double)>& closed,
                           std::span<const double> lambdas, double threshold = 0.01);

// Inverse-CDF sampling support: tabulates the CDF of a density on n nodes
// clustered at the ends of [lo, hi] (hi may be +inf) and returns the
// linearly interpolated law, normalised to mass one. *raw_mass receives the
// integral before normalisation.
DistSpec tabulate_density(std::string label, const std::function<double(double)>& pdf, double lo,
                          double hi, std::size_t n_nodes, const QuadConfig& cfg = {},
                          double* raw_mass = nullptr);

// Monotone interpolant of a CDF known at increasing nodes; clamped to
// [0, 1], constant outside the node range.
std::function<double(double)> interpolated_cdf(std::vector<double> x, std::vector<double> f);

void write_batch_csv(const SampleBatch& batch, std::ostream& os);
void write_reports_text(std::span<const VerifyReport> reports, std::ostream& os);
void write_reports_csv(std::span<const VerifyReport> reports, std::ostream& os);

}  // namespace ggc
