// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Plain-text key = value documents describing a DistSpec. See README for
// the grammar.
#pragma once

#include <string>
#include <string_view>

#include "ggc/dist.hpp"

namespace ggc {

// Canonical text of a law built from catalog families, point masses or
// tables plus a chain of transforms. Throws InvalidInput for laws built
// from arbitrary callables.
std::string serialize(const DistSpec& d);

// Throws Error(Parse) with the offending line number.
DistSpec parse_dist(std::string_view text);

DistSpec load_dist(const std::string& path);
void save_dist(const DistSpec& d, const std::string& path);

}  // namespace ggc
