// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file shape.hpp
 * @brief Subsystem dimension list (N_1,...,N_m) of a composite pure state.
 *
 * Index conventions used throughout the library:
 *  - subsystems are numbered 1..m in every public interface (files, CLI,
 *    symbolic variable names); internal storage is 0-based;
 *  - amplitude storage is row-major with the LAST subsystem index varying
 *    fastest, so the mode-1 unfolding of a three-qubit state prints as the
 *    familiar 2x4 coefficient array.
 */

#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "segre/error.hpp"

namespace segre {

/// Hard cap on the flat amplitude count (2^24). Larger tensors are rejected
/// at construction.
inline constexpr std::int64_t kMaxTotalDim = std::int64_t(1) << 24;

/// Immutable dimension vector. Every N_j >= 1; N_j = 1 is accepted here but
/// rejected by the analysis operations (they need two rows to form a minor).
class Shape {
  public:
    explicit Shape(std::vector<int> dims);
    Shape(std::initializer_list<int> dims) : Shape(std::vector<int>(dims)) {}

    int order() const noexcept { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const noexcept { return dims_; }

    /// Dimension of subsystem j, 1-based.
    int dim(int j) const { return dims_.at(static_cast<std::size_t>(j - 1)); }

    std::int64_t total_dim() const noexcept { return total_; }

    /// Product of dimensions over all subsystems except j (1-based).
    std::int64_t codim(int j) const { return total_ / dim(j); }

    bool operator==(const Shape& other) const noexcept { return dims_ == other.dims_; }

  private:
    std::vector<int> dims_;
    std::int64_t total_ = 0;
};

} // namespace segre
