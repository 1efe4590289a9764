// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// ggc-means command-line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ggc::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kValidation = 2, kNumerical = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Grid {
  double lo;
  double hi;
  int count;
  std::vector<double> points() const;
};
// "lo:hi:count"; throws Error(Parse).
Grid parse_grid(const std::string& text);

}  // namespace ggc::cli
