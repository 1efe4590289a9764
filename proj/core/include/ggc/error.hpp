// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ggc {

enum class ErrorKind {
  InvalidInput,
  NonConvergence,
  Divergent,
  MissingDensity,
  JumpTooLarge,
  NotADistribution,
  UnknownEntry,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Throws InvalidInput when cond is false.
inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InvalidInput, what);
}

}  // namespace ggc
