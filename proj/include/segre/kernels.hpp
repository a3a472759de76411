// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file kernels.hpp
 * @brief Numeric inner loops over 2x2 subdeterminants of a dense complex
 *        matrix, in serial and OpenMP-parallel variants.
 *
 * Every reduction is defined over a fixed chunk decomposition of the
 * iteration space: each chunk is summed serially with compensated (Kahan)
 * accumulation, and chunk partials are combined in fixed chunk order. The
 * parallel variant only distributes chunk evaluation across threads, so
 * serial and parallel results are bit-identical for any thread count. The
 * serial variant is the reference the tests compare against.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace segre::kernels {

using cplx = std::complex<double>;

enum class Exec { Serial, Parallel };

/// Non-owning view of a row-major rows x cols complex matrix.
struct MatrixView {
    const cplx* data = nullptr;
    std::int64_t rows = 0;
    std::int64_t cols = 0;

    const cplx& at(std::int64_t r, std::int64_t c) const { return data[r * cols + c]; }
};

/// Number of unordered index pairs {a < b} in 0..n-1.
inline std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

/// Rank of the pair (a, b), a < b, in lexicographic order (0-based).
std::int64_t pair_rank(std::int64_t n, std::int64_t a, std::int64_t b);

/// Inverse of pair_rank.
void pair_unrank(std::int64_t n, std::int64_t rank, std::int64_t& a, std::int64_t& b);

/// Sum of |det|^2 over all 2x2 minors (unordered row pairs x unordered
/// column pairs, lexicographic).
double minor_sum_sq(MatrixView m, Exec exec);

struct MinorMax {
    double modulus = 0.0;   ///< |det| of the largest minor
    std::int64_t flat = -1; ///< pair_rank(rows)*pair_count(cols) + pair_rank(cols); -1 if no minors
};

/// Largest-modulus minor; ties resolve to the first minor in enumeration
/// order.
MinorMax minor_max(MatrixView m, Exec exec);

/// Values of all 2x2 minors in enumeration order, written to out
/// (pair_count(rows) * pair_count(cols) entries).
void minor_values(MatrixView m, cplx* out, Exec exec);

/// Tr((M M^dagger)^2) via the Gram matrix; equals the sum of fourth powers
/// of the singular values.
double gram_purity(MatrixView m, Exec exec);

} // namespace segre::kernels
