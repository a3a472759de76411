// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state.hpp
 * @brief Pure-state coefficient tensor and constructors for named and
 *        random states.
 *
 * A PureStateTensor owns the flat complex amplitude array of a composite
 * pure state. Instances are immutable after construction and safe to share
 * across threads.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "segre/shape.hpp"

namespace segre {

using cplx = std::complex<double>;

/// Construction-time normalization contract.
enum class NormPolicy {
    RequireNormalized, ///< reject input unless | ||a||_2 - 1 | <= 1e-9
    AutoNormalize,     ///< rescale input to unit norm (zero vector rejected)
};

/// Accepted deviation from unit norm under NormPolicy::RequireNormalized.
inline constexpr double kNormTolerance = 1e-9;

class PureStateTensor {
  public:
    PureStateTensor(Shape shape, std::vector<cplx> amps,
                    NormPolicy policy = NormPolicy::RequireNormalized);

    const Shape& shape() const noexcept { return shape_; }
    int order() const noexcept { return shape_.order(); }
    std::span<const cplx> amps() const noexcept { return amps_; }
    NormPolicy policy() const noexcept { return policy_; }

    /// Amplitude at a flat row-major offset (last subsystem fastest).
    const cplx& operator[](std::int64_t flat) const { return amps_[static_cast<std::size_t>(flat)]; }

    /// Amplitude at a 1-based multi-index (i_1,...,i_m).
    const cplx& at(std::span<const int> multi_index) const;

    /// Flat offset of a 1-based multi-index.
    std::int64_t flat_index(std::span<const int> multi_index) const;

  private:
    Shape shape_;
    std::vector<cplx> amps_;
    NormPolicy policy_;
};

// ---------------------------------------------------------------------------
// Named fixtures
// ---------------------------------------------------------------------------

/// The four Bell states on shape (2,2), k = 1..4: Phi+, Phi-, Psi+, Psi-.
PureStateTensor bell_state(int k);

/// GHZ(m) = (|1..1> + |2..2>)/sqrt(2) on m qubits, m >= 2.
PureStateTensor ghz_state(int m);

/// W(m): the m amplitudes with exactly one subsystem index equal to 2 are
/// 1/sqrt(m), all else 0. m >= 2.
PureStateTensor w_state(int m);

/// Outer product of per-subsystem unit vectors (each normalized to 1e-9).
PureStateTensor product_state(const std::vector<std::vector<cplx>>& factors);

// ---------------------------------------------------------------------------
// Random states
// ---------------------------------------------------------------------------

/// Haar-uniform state on the full Hilbert space: i.i.d. standard complex
/// Gaussian amplitudes, normalized. The generator is a fixed, documented
/// construction (mt19937_64 bits -> 53-bit uniforms -> Box-Muller), so a
/// given seed reproduces the same amplitudes on every platform.
PureStateTensor random_haar_state(const Shape& shape, std::uint64_t seed);

/// Independent Haar states on each block of a partition of {1..m}, tensored
/// together. Blocks are canonicalized (sorted, ordered by smallest member)
/// before sampling, so the result depends only on the partition and seed.
PureStateTensor random_product_haar_state(const Shape& shape,
                                          std::vector<std::vector<int>> blocks,
                                          std::uint64_t seed);

} // namespace segre
