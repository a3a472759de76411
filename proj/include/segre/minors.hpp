// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file minors.hpp
 * @brief Enumeration of the 2x2 determinantal minors whose simultaneous
 *        vanishing characterizes fully separable (rank-one) tensors.
 *
 * For each subsystem j the mode-j unfolding is an N_j x (prod_{i!=j} N_i)
 * matrix; its 2x2 minors are the degree-two binomials cutting out the
 * separable locus. A minor that fixes all but one coordinate is exposed by
 * more than one mode and is deliberately NOT deduplicated across modes:
 * summing per mode reproduces the weighted expansion used by the
 * three-partite measure.
 *
 * Enumeration order is deterministic: modes ascending, then row pairs
 * (k < l) lexicographic, then column pairs (c < c') lexicographic over the
 * linearized complementary index.
 */

#pragma once

#include <optional>
#include <vector>

#include "segre/kernels.hpp"
#include "segre/state.hpp"

namespace segre {

using kernels::Exec;

/// Default absolute threshold for "this minor vanishes" on unit-normalized
/// states. Minors are degree-2 in the amplitudes, so an absolute cut is
/// meaningful after normalization.
inline constexpr double kDefaultEps = 1e-9;

/// Index data of one 2x2 minor, all 1-based.
struct MinorId {
    int mode = 0;                  ///< subsystem whose unfolding exposes the minor
    int row_k = 0, row_l = 0;      ///< row pair, k < l, values in 1..N_mode
    std::int64_t col_c = 0, col_cp = 0; ///< column pair, c < c', linearized complement

    bool operator==(const MinorId&) const = default;
};

struct MinorValue {
    MinorId id;
    cplx value; ///< a_{k,c} a_{l,c'} - a_{k,c'} a_{l,c} read from the unfolding
};

/// Number of minors exposed by mode j: C(N_j,2) * C(prod_{i!=j} N_i, 2).
std::int64_t minor_count(const Shape& shape, int mode);

/// Total over all modes (no deduplication).
std::int64_t total_minor_count(const Shape& shape);

/// All mode-j minors in enumeration order. Throws DegenerateMode when either
/// side of the unfolding has dimension 1.
std::vector<MinorValue> enumerate_minors(const PureStateTensor& state, int mode,
                                         Exec exec = Exec::Parallel);

/// Concatenation of enumerate_minors over modes 1..m.
std::vector<MinorValue> all_minors(const PureStateTensor& state, Exec exec = Exec::Parallel);

/// Sum of |value|^2 over the unordered mode-j minors (streaming; does not
/// materialize the list). The measures module multiplies this by 4 to match
/// the ordered-index sum convention.
double mode_minor_sum_sq(const PureStateTensor& state, int mode, Exec exec = Exec::Parallel);

/// Largest-modulus mode-j minor.
MinorValue mode_max_minor(const PureStateTensor& state, int mode, Exec exec = Exec::Parallel);

struct SegreTest {
    bool on_variety = false;
    /// Minor of maximal modulus (first in enumeration order among ties);
    /// present when the test fails.
    std::optional<MinorValue> witness;
};

/// True iff every minor over every mode has modulus < eps, i.e. the
/// coefficient tensor is (numerically) a point of the rank-one locus.
SegreTest on_segre_variety(const PureStateTensor& state, double eps = kDefaultEps,
                           Exec exec = Exec::Parallel);

} // namespace segre
