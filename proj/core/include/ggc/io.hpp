// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace ggc {

// %.17g, the shortest fixed format that round-trips every double.
std::string fmt17(double v);
// Shortest decimal text that parses back to the same double.
std::string fmt_short(double v);

// Writes content to path through a temporary file in the same directory
// followed by rename. Throws Error(Io) naming the path on failure.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace ggc
