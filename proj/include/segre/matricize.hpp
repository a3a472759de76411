// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file matricize.hpp
 * @brief Tensor unfoldings: reshape the coefficient tensor into a dense
 *        matrix for an arbitrary bipartition of the subsystems.
 *
 * matrix[r, c] is the amplitude at the multi-index obtained by interleaving
 * the row-subsystem indices (decoded from r) and the column-subsystem
 * indices (decoded from c) back into tensor order. Row and column
 * linearization are row-major over the ordered subsystems, last fastest.
 * Reshaping moves amplitudes without arithmetic, so the Frobenius norm of
 * the matrix equals the 2-norm of the tensor and reassembly is bitwise.
 */

#pragma once

#include <vector>

#include "segre/state.hpp"

namespace segre {

struct Matricization {
    std::vector<int> row_subsystems; ///< 1-based, ascending
    std::vector<int> col_subsystems; ///< complement, 1-based, ascending
    std::vector<int> dims;           ///< full shape snapshot
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<cplx> matrix;        ///< row-major, rows x cols

    const cplx& at(std::int64_t r, std::int64_t c) const {
        return matrix[static_cast<std::size_t>(r * cols + c)];
    }
};

/// Unfold `state` with the given 1-based subsystems as rows. `rows` must be
/// a nonempty proper subset of {1..m}; order and duplicates are ignored.
Matricization matricize(const PureStateTensor& state, const std::vector<int>& rows);

/// Copy the matrix entries back into tensor order. Exact inverse of
/// matricize (pure data movement).
std::vector<cplx> reassemble(const Matricization& mat);

/// Tr(rho_j^2) for rho_j = M M^dagger, M the mode-j unfolding. In
/// [1/N_j, 1] for a normalized state; equals 1 exactly when subsystem j
/// factors out.
double mode_purity(const PureStateTensor& state, int j);

} // namespace segre
