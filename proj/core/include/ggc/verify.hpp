// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Named verification suites: Monte Carlo and quadrature oracles for every
// closed-form density in the library.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ggc/mc.hpp"
#include "ggc/quadrature.hpp"

namespace ggc {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t n = 100000;
  QuadConfig cfg;
};

struct Check {
  std::string name;
  std::string suite;  // beta-scale | tilt | fdd | bfry | catalog
  std::function<VerifyReport(const SuiteOptions&)> run;
};

// Suites in run order, followed by "all".
const std::vector<std::string>& suite_names();
const std::vector<Check>& registered_checks();
// Runs every check of the suite ("all" runs everything). Throws UnknownEntry.
std::vector<VerifyReport> run_suite(std::string_view suite, const SuiteOptions& opt);

struct ManifestEntry {
  std::string density;              // library function name
  std::vector<std::string> checks;  // registered check names
};
const std::vector<ManifestEntry>& suite_manifest();

}  // namespace ggc
