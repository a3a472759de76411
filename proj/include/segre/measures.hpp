// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file measures.hpp
 * @brief Generalized concurrence and the multipartite entanglement measure
 *        built from squared 2x2 minors.
 *
 * All formulas are evaluated as 4 x (sums over unordered minors), which
 * reproduces the ordered-index double sums exactly: each unordered minor
 * arises four times under the k<->l swaps with |.|^2 invariant.
 *
 * Conventions for m = 2: concurrence_bipartite sums the single mode-1
 * family (the two unfoldings are transposes of each other and expose the
 * same minors), while measure_multipartite follows the all-modes sum and
 * therefore counts that family twice, giving sqrt(2) x the concurrence at
 * equal normalization. Callers that print both should label which
 * convention produced each number.
 */

#pragma once

#include <utility>
#include <vector>

#include "segre/minors.hpp"

namespace segre {

struct MeasureConfig {
    double norm_const = 1.0;      ///< the arbitrary positive prefactor under the root
    bool report_breakdown = true; ///< include per-mode partial sums in the result
};

struct MeasureResult {
    double value = 0.0;
    /// (mode, 4 * sum of |minor|^2 over that mode), when report_breakdown.
    std::vector<std::pair<int, double>> per_mode;
    MeasureConfig config;
};

/// Bipartite concurrence: sqrt(norm_const * 4 * sum |minor|^2) over the
/// mode-1 minors of an m = 2 state. For two qubits at norm_const = 1 this
/// is 2|a11 a22 - a12 a21|, the standard concurrence (1 for Bell states).
MeasureResult concurrence_bipartite(const PureStateTensor& state,
                                    const MeasureConfig& cfg = {},
                                    Exec exec = Exec::Parallel);

/// Multipartite measure: sqrt(norm_const * sum_j 4 * sum |mode-j minor|^2).
/// Zero iff the state is fully separable. Requires every N_j >= 2.
MeasureResult measure_multipartite(const PureStateTensor& state,
                                   const MeasureConfig& cfg = {},
                                   Exec exec = Exec::Parallel);

/// Three-qubit specialization evaluated literally as the 12-term weighted
/// expansion (six doubly-counted binomials and six singly-counted ones),
/// reading amplitudes directly. Independent of the unfolding code path;
/// must agree with measure_multipartite to floating-point accuracy.
MeasureResult three_qubit_explicit(const PureStateTensor& state,
                                   const MeasureConfig& cfg = {});

} // namespace segre
