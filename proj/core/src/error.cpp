// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/error.hpp"

namespace ggc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::MissingDensity: return "MissingDensity";
    case ErrorKind::JumpTooLarge: return "JumpTooLarge";
    case ErrorKind::NotADistribution: return "NotADistribution";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace ggc
