// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/matricize.hpp"

#include <algorithm>

#include "segre/kernels.hpp"

namespace segre {

namespace {

/// Flat tensor strides of the chosen subsystems, and the offset map shared
/// by matricize and reassemble: entry (r, c) of the unfolding sits at
/// sum_s idx_s * stride_s in the flat tensor.
struct UnfoldPlan {
    std::vector<int> row_subsystems, col_subsystems;
    std::vector<int> dims;
    std::int64_t rows = 1, cols = 1;
    std::vector<std::int64_t> row_strides, col_strides;
    std::vector<int> row_dims, col_dims;

    std::int64_t offset(std::int64_t r, std::int64_t c) const {
        std::int64_t off = 0;
        for (std::size_t s = row_dims.size(); s-- > 0;) {
            off += (r % row_dims[s]) * row_strides[s];
            r /= row_dims[s];
        }
        for (std::size_t s = col_dims.size(); s-- > 0;) {
            off += (c % col_dims[s]) * col_strides[s];
            c /= col_dims[s];
        }
        return off;
    }
};

UnfoldPlan make_plan(const Shape& shape, const std::vector<int>& rows_in) {
    const int m = shape.order();
    std::vector<int> rows = rows_in;
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    if (rows.empty() || static_cast<int>(rows.size()) == m) {
        throw Error(ErrorCode::EmptyPartition,
                    "row subsystems must be a nonempty proper subset");
    }
    for (int j : rows) {
        if (j < 1 || j > m) {
            throw Error(ErrorCode::EmptyPartition,
                        "subsystem index " + std::to_string(j) + " out of range");
        }
    }

    UnfoldPlan plan;
    plan.dims = shape.dims();
    std::vector<std::int64_t> strides(static_cast<std::size_t>(m), 1);
    for (int j = m - 2; j >= 0; --j) {
        strides[static_cast<std::size_t>(j)] =
            strides[static_cast<std::size_t>(j + 1)] * plan.dims[static_cast<std::size_t>(j + 1)];
    }

    std::size_t next = 0;
    for (int j = 1; j <= m; ++j) {
        const bool is_row = next < rows.size() && rows[next] == j;
        if (is_row) ++next;
        auto& subs = is_row ? plan.row_subsystems : plan.col_subsystems;
        auto& dims = is_row ? plan.row_dims : plan.col_dims;
        auto& strd = is_row ? plan.row_strides : plan.col_strides;
        auto& count = is_row ? plan.rows : plan.cols;
        subs.push_back(j);
        dims.push_back(plan.dims[static_cast<std::size_t>(j - 1)]);
        strd.push_back(strides[static_cast<std::size_t>(j - 1)]);
        count *= plan.dims[static_cast<std::size_t>(j - 1)];
    }
    return plan;
}

} // namespace

Matricization matricize(const PureStateTensor& state, const std::vector<int>& rows) {
    const UnfoldPlan plan = make_plan(state.shape(), rows);
    Matricization out;
    out.row_subsystems = plan.row_subsystems;
    out.col_subsystems = plan.col_subsystems;
    out.dims = plan.dims;
    out.rows = plan.rows;
    out.cols = plan.cols;
    out.matrix.resize(static_cast<std::size_t>(plan.rows * plan.cols));
    const auto amps = state.amps();
    for (std::int64_t r = 0; r < plan.rows; ++r) {
        for (std::int64_t c = 0; c < plan.cols; ++c) {
            out.matrix[static_cast<std::size_t>(r * plan.cols + c)] =
                amps[static_cast<std::size_t>(plan.offset(r, c))];
        }
    }
    return out;
}

std::vector<cplx> reassemble(const Matricization& mat) {
    std::vector<int> all = mat.row_subsystems;
    const UnfoldPlan plan = make_plan(Shape(mat.dims), all);
    std::vector<cplx> amps(mat.matrix.size());
    for (std::int64_t r = 0; r < plan.rows; ++r) {
        for (std::int64_t c = 0; c < plan.cols; ++c) {
            amps[static_cast<std::size_t>(plan.offset(r, c))] =
                mat.matrix[static_cast<std::size_t>(r * plan.cols + c)];
        }
    }
    return amps;
}

double mode_purity(const PureStateTensor& state, int j) {
    if (j < 1 || j > state.order()) {
        throw Error(ErrorCode::EmptyPartition,
                    "subsystem index " + std::to_string(j) + " out of range");
    }
    const Matricization mat = matricize(state, {j});
    return kernels::gram_purity({mat.matrix.data(), mat.rows, mat.cols},
                                kernels::Exec::Parallel);
}

} // namespace segre
