// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace segre {

/// Failure classes surfaced by the library. The CLI maps every code to
/// exit status 2 with a one-line diagnostic.
enum class ErrorCode {
    LengthMismatch,
    ZeroState,
    NotNormalized,
    BadArity,
    UnnormalizedFactor,
    BadPartition,
    EmptyPartition,
    DegenerateMode,
    WrongArity,
    WrongShape,
    TooManySubsystems,
    ParseError,
    BadConfig,
    BadShape,
    ShapeTooLarge,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace segre
