// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file svd.hpp
 * @brief Singular values of small dense complex matrices via one-sided
 *        (Hestenes) Jacobi.
 *
 * Only singular values are needed here, on matrices whose smaller dimension
 * stays modest (<= 64 for supported shapes). One-sided Jacobi orthogonalizes
 * the columns of the taller orientation with complex plane rotations; the
 * final column norms are the singular values. Unlike an eigendecomposition
 * of the Gram matrix this never squares the condition number, so trailing
 * singular values near 1e-16 come out at full absolute accuracy -- which is
 * what the rank-one tests rely on.
 */

#pragma once

#include <vector>

#include "segre/kernels.hpp"

namespace segre {

/// All min(rows, cols) singular values, descending.
std::vector<double> singular_values(kernels::MatrixView m);

} // namespace segre
