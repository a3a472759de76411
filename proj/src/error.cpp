// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/error.hpp"

namespace segre {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ZeroState: return "ZeroState";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::BadArity: return "BadArity";
        case ErrorCode::UnnormalizedFactor: return "UnnormalizedFactor";
        case ErrorCode::BadPartition: return "BadPartition";
        case ErrorCode::EmptyPartition: return "EmptyPartition";
        case ErrorCode::DegenerateMode: return "DegenerateMode";
        case ErrorCode::WrongArity: return "WrongArity";
        case ErrorCode::WrongShape: return "WrongShape";
        case ErrorCode::TooManySubsystems: return "TooManySubsystems";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BadConfig: return "BadConfig";
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::ShapeTooLarge: return "ShapeTooLarge";
    }
    return "UnknownError";
}

} // namespace segre
