// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/shape.hpp"

#include <string>

namespace segre {

Shape::Shape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw Error(ErrorCode::BadShape, "shape needs at least one subsystem");
    }
    total_ = 1;
    for (int d : dims_) {
        if (d < 1) {
            throw Error(ErrorCode::BadShape,
                        "subsystem dimension must be positive, got " + std::to_string(d));
        }
        total_ *= d;
        if (total_ > kMaxTotalDim) {
            throw Error(ErrorCode::ShapeTooLarge,
                        "total dimension exceeds 2^24 amplitudes");
        }
    }
}

} // namespace segre
