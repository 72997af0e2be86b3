// Copyright (C) 2026 The hoikit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hoikit {

// Bad user-supplied input: malformed files, unknown ids, invalid boxes,
// inconsistent shapes. The CLI maps this to exit code 1; anything else
// that escapes is a runtime failure (exit code 2).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hoikit
