// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <sstream>

#include "ggc/catalog.hpp"
#include "ggc/error.hpp"
#include "ggc/mc.hpp"
#include "ggc/subordinators.hpp"
#include "oracle.hpp"

#include <boost/math/special_functions/gamma.hpp>

using namespace ggc;

namespace {

// CDF of a density on [lo, inf) by cumulative quadrature over the nodes.
std::function<double(double)> cumulative_cdf(const std::function<double(double)>& pdf, double lo,
                                             std::vector<double> nodes) {
  std::vector<double> xs{lo}, fs{0.0};
  for (double x : nodes) {
    fs.push_back(fs.back() + oracle::integrate(pdf, xs.back(), x));
    xs.push_back(x);
  }
  return interpolated_cdf(xs, fs);
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 1; i <= n; ++i) v.push_back(a + (b - a) * i / n);
  return v;
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i <= n; ++i) v.push_back(std::pow(10.0, a + (b - a) * i / n));
  return v;
}

double mean_of(const SampleBatch& b) {
  double s = 0;
  for (double v : b.values) s += v;
  return s / static_cast<double>(b.n);
}

}  // namespace

TEST(Philox, KnownAnswers) {
  using B = std::array<std::uint32_t, 4>;
  EXPECT_EQ(Philox::block({0, 0, 0, 0}, {0, 0}), (B{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(Philox::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
            (B{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(Philox::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
            (B{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Philox, UniformIsOpenAndStreamsDiffer) {
  Philox a(1, 0), b(1, 1), c(2, 0);
  EXPECT_NE(a.next_u32(), b.next_u32());
  EXPECT_NE(Philox(1, 0).next_u32(), c.next_u32());
  Philox r(3, 4);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Generate, Deterministic) {
  const MeanLaw law{1, uniform_dist()};
  const SampleBatch a = sample_mean(law, 20000, 5);
  const SampleBatch b = sample_mean(law, 20000, 5);
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, sample_mean(law, 20000, 6).values);
  // A shorter batch runs with fewer threads yet sees the same streams.
  const SampleBatch c = sample_mean(law, 3000, 5);
  for (std::size_t i = 0; i < c.n; ++i) ASSERT_EQ(c.values[i], a.values[i]);
  EXPECT_EQ(a.law_tag, b.law_tag);
  EXPECT_EQ(a.truncation_error_bound, 1e-8);
}

TEST(Generate, RejectsNonFiniteDraws) {
  EXPECT_THROW(generate(10, 1, "bad", [](Philox&) { return -1.0; }), Error);
}

TEST(Variates, Moments) {
  const std::size_t n = 200000;
  const SampleBatch g = sample_named("gamma", {{"shape", 0.3}}, n, 1);
  EXPECT_NEAR(mean_of(g), 0.3, 4 * std::sqrt(0.3 / n));
  const SampleBatch g2 = sample_named("gamma", {{"shape", 4.5}}, n, 2);
  EXPECT_TRUE(ks_statistic(g2, [](double x) { return boost::math::gamma_p(4.5, x); }).passed);
  const SampleBatch be = sample_named("beta", {{"a", 0.5}, {"b", 2.5}}, n, 3);
  EXPECT_TRUE(ks_statistic(be, [](double x) { return oracle::beta_cdf(0.5, 2.5, x); }).passed);
  const SampleBatch u = sample_named("uniform", {{"lo", 2}, {"hi", 4}}, n, 4);
  EXPECT_TRUE(ks_statistic(u, [](double x) { return std::clamp((x - 2) / 2, 0.0, 1.0); }).passed);
  const SampleBatch s = sample_named("stable", {{"alpha", 0.5}}, n, 5);
  // S_{1/2} has the law of 1 / (4 G_{1/2}).
  EXPECT_TRUE(ks_statistic(s, [](double x) { return boost::math::gamma_q(0.5, 0.25 / x); }).passed);
}

TEST(SampleNamed, Errors) {
  try {
    sample_named("cauchy", {}, 10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownEntry);
  }
  EXPECT_THROW(sample_named("gamma", {{"shape", -1}}, 10, 1), Error);
  EXPECT_THROW(sample_named("stable", {{"alpha", 1.5}}, 10, 1), Error);
}

TEST(SampleMean, PointMass) {
  const SampleBatch b = sample_mean({0.7, DistSpec::point_mass(2.5)}, 1000, 3);
  for (double v : b.values) ASSERT_EQ(v, 2.5);
  const VerifyReport r = ks_statistic(b, DistSpec::point_mass(2.5));
  EXPECT_LE(r.value, 1.0 / 1000);
}

TEST(SampleMean, UniformOrderOneMatchesClosedForm) {
  const SampleBatch b = sample_mean({1, uniform_dist()}, 1000000, 17);
  const auto cdf = cumulative_cdf(uniform_mean_density_order1, 0, linspace(0, 1, 2000));
  const VerifyReport r = ks_statistic(b, cdf, 0.005);
  EXPECT_TRUE(r.passed) << r.value;
}

TEST(SampleMean, ArcsineMeanIsHalf) {
  const SampleBatch b = sample_mean({1, arcsine_dist()}, 100000, 8);
  double m = mean_of(b), v = 0;
  for (double x : b.values) v += (x - m) * (x - m);
  const double se = std::sqrt(v / static_cast<double>(b.n - 1) / static_cast<double>(b.n));
  EXPECT_NEAR(m, 0.5, 3 * se);
}

TEST(SampleMean, TruncationBound) {
  for (double eps : {1e-3, 1e-8}) {
    double worst = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      Philox r(99, i);
      double resid = 0;
      stick_breaking_draw(r, 2.0, uniform_dist(), eps, &resid);
      worst = std::max(worst, resid);
    }
    EXPECT_LE(worst, 10 * eps);
  }
}

TEST(SampleGgc, PointMassIsExponential) {
  const SampleBatch b = sample_ggc({1, DistSpec::point_mass(1.0)}, 1000000, 21);
  const VerifyReport r = ks_statistic(b, [](double x) { return -std::expm1(-x); }, 0.005);
  EXPECT_TRUE(r.passed) << r.value;
  const std::array<double, 3> ls{0.5, 1.0, 2.0};
  EXPECT_TRUE(laplace_check(b, [](double l) { return 1 / (1 + l); }, ls).passed);
}

TEST(SampleGgc, LinnikLaplace) {
  const SampleBatch b = sample_ggc({0.5, rho_half_dist()}, 200000, 22);
  const std::array<double, 1> ls{1.0};
  const VerifyReport r = laplace_check(b, [](double l) { return 1 / (1 + std::sqrt(l)); }, ls);
  EXPECT_TRUE(r.passed) << r.value;
}

TEST(SampleGgc, UniformLaplace) {
  const SampleBatch b = sample_ggc({1, uniform_dist()}, 1000000, 23);
  const std::array<double, 3> ls{0.5, 1.0, 2.0};
  const VerifyReport r = laplace_check(
      b, [](double l) { return std::exp(1.0) * std::pow(1 + l, -(l + 1) / l); }, ls);
  EXPECT_TRUE(r.passed) << r.value;
}

TEST(SampleGgc, ThetaSigmaReduction) {
  const SampleBatch a = sample_ggc({1.0, uniform_dist()}, 100000, 31);
  const SampleBatch b = sample_ggc({2.0, mix_with_atom(uniform_dist(), 0.5)}, 100000, 32);
  const VerifyReport r = ks_two_sample(a, b, 0.012);
  EXPECT_TRUE(r.passed) << r.value;
}

TEST(SampleNamed, LampertiMatchesDensity) {
  const SampleBatch b = sample_named("lamperti", {{"alpha", 0.5}}, 1000000, 41);
  const auto pdf = [](double y) { return lamperti_density(0.5, y); };
  const auto cdf = cumulative_cdf(pdf, 0, logspace(-6, 6, 1200));
  const VerifyReport r = ks_statistic(b, cdf, 0.005);
  EXPECT_TRUE(r.passed) << r.value;
  EXPECT_NEAR(cdf(1.0), 0.5, 1e-6);
}

TEST(SampleNamed, BfrySigmaLaplace) {
  const SampleBatch b = sample_named("bfry-sigma", {{"alpha", 0.5}}, 1000000, 42);
  const std::array<double, 1> ls{1.0};
  const VerifyReport r = laplace_check(b, [](double) { return std::sqrt(2.0) - 1; }, ls);
  EXPECT_TRUE(r.passed) << r.value;
  const std::array<double, 3> more{0.5, 1.0, 2.0};
  EXPECT_TRUE(laplace_check(b, [](double l) { return std::sqrt(1 + l) - std::sqrt(l); }, more).passed);
}

TEST(SampleNamed, GammaRatioMatchesMeanDensity) {
  const SampleBatch b = sample_named("gamma-ratio", {{"a", 1.5}, {"b", 0.5}}, 1000000, 43);
  const auto pdf = [](double x) { return rho_half_mean_density(1, x); };
  const auto cdf = cumulative_cdf(pdf, 0, logspace(-8, 8, 1600));
  const VerifyReport r = ks_statistic(b, cdf, 0.005);
  EXPECT_TRUE(r.passed) << r.value;
}

TEST(KsStatistic, NegativeControl) {
  const SampleBatch b = sample_named("uniform", {}, 10000, 51);
  const VerifyReport r = ks_statistic(b, arcsine_dist());
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.value, 0.1);
}

TEST(KsStatistic, DefaultThreshold) {
  EXPECT_DOUBLE_EQ(ks_default_threshold(10000, 0), 0.0163);
  EXPECT_DOUBLE_EQ(ks_default_threshold(10000, 0.05), 0.1);
  const SampleBatch b = sample_named("uniform", {}, 10000, 52);
  const VerifyReport r = ks_statistic(b, uniform_dist());
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.passed, r.value <= r.threshold);
  EXPECT_EQ(r.kind, StatisticKind::Ks);
}

TEST(KsStatistic, TwoSampleSameLaw) {
  const SampleBatch a = sample_named("gamma", {{"shape", 2}}, 50000, 61);
  const SampleBatch b = sample_named("gamma", {{"shape", 2}}, 50000, 62);
  EXPECT_TRUE(ks_two_sample(a, b).passed);
  EXPECT_EQ(ks_two_sample_distance({1, 2, 3}, {1, 2, 3}), 0.0);
  EXPECT_EQ(ks_two_sample_distance({1, 2}, {3, 4}), 1.0);
}

TEST(TabulateDensity, InverseCdfSampling) {
  double raw = 0;
  const DistSpec d = tabulate_density(
      "beta(2,3)", [](double x) { return oracle::beta_pdf(2, 3, x); }, 0, 1, 400, {}, &raw);
  EXPECT_NEAR(raw, 1.0, 1e-9);
  const SampleBatch b = generate(100000, 71, "tab", [&](Philox& r) { return d.quantile(r.uniform()); });
  EXPECT_TRUE(ks_statistic(b, [](double x) { return oracle::beta_cdf(2, 3, x); }).passed);
}

TEST(Writers, BatchCsv) {
  const SampleBatch b = sample_named("uniform", {}, 3, 9);
  std::ostringstream os;
  write_batch_csv(b, os);
  const std::string s = os.str();
  EXPECT_NE(s.find("# seed=9\n"), std::string::npos);
  EXPECT_NE(s.find("# law_tag=uniform\n"), std::string::npos);
  EXPECT_NE(s.find("value\n"), std::string::npos);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 8);
}

TEST(Writers, Reports) {
  const std::vector<VerifyReport> rs{make_report("a", StatisticKind::Ks, 0.001, 0.01, {{"n", "10"}}),
                                     make_report("b \"q\"", StatisticKind::LaplaceRelErr, 0.5, 0.01)};
  EXPECT_TRUE(rs[0].passed);
  EXPECT_FALSE(rs[1].passed);
  std::ostringstream text, csv;
  write_reports_text(rs, text);
  write_reports_csv(rs, csv);
  EXPECT_EQ(text.str().substr(0, 7), "PASS a ");
  EXPECT_NE(text.str().find("FAIL b"), std::string::npos);
  EXPECT_NE(csv.str().find("\"b \"\"q\"\"\",laplace-relerr,0.5,0.01,fail"), std::string::npos) << csv.str();
}
