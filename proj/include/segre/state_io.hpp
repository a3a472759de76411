// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/// State file format (JSON):
///   {"dims": [2,2,2], "amps": [[re,im], ...], "normalize": true}
/// Amplitudes are row-major with the last subsystem index fastest, matching
/// the in-memory layout; indices are 1-based in all documentation and
/// reports. The optional "normalize" flag (default false) selects
/// AutoNormalize instead of RequireNormalized.

#pragma once

#include <iosfwd>
#include <string>

#include "segre/state.hpp"

namespace segre {

/// Parse a state file. `force_normalize` overrides the file's flag (used by
/// the CLI --normalize option). Malformed documents throw ParseError;
/// semantic failures propagate the tensor-construction errors.
PureStateTensor read_state_json(std::istream& in, bool force_normalize = false);
PureStateTensor read_state_file(const std::string& path, bool force_normalize = false);

/// Serialize in the same format. `digits` caps the significant digits of
/// each amplitude component (the CLI prints 12 everywhere).
std::string write_state_json(const PureStateTensor& state, int digits = 12);
void write_state_file(const PureStateTensor& state, const std::string& path, int digits = 12);

} // namespace segre
