// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/minors.hpp"

#include <cassert>
#include <cmath>

#include "segre/matricize.hpp"

namespace segre {

namespace {

using kernels::MatrixView;
using kernels::pair_count;
using kernels::pair_unrank;

void require_analyzable(const Shape& shape, int mode) {
    if (mode < 1 || mode > shape.order()) {
        throw Error(ErrorCode::DegenerateMode,
                    "mode " + std::to_string(mode) + " out of range");
    }
    if (shape.order() < 2 || shape.dim(mode) < 2 || shape.codim(mode) < 2) {
        throw Error(ErrorCode::DegenerateMode,
                    "mode " + std::to_string(mode) +
                        " unfolding has a side of dimension < 2");
    }
}

MinorId decode_flat(const Shape& shape, int mode, std::int64_t flat) {
    const std::int64_t cols = shape.codim(mode);
    const std::int64_t cp = pair_count(cols);
    std::int64_t k, l, c, cpr;
    pair_unrank(shape.dim(mode), flat / cp, k, l);
    pair_unrank(cols, flat % cp, c, cpr);
    return {mode, static_cast<int>(k + 1), static_cast<int>(l + 1), c + 1, cpr + 1};
}

} // namespace

std::int64_t minor_count(const Shape& shape, int mode) {
    require_analyzable(shape, mode);
    return pair_count(shape.dim(mode)) * pair_count(shape.codim(mode));
}

std::int64_t total_minor_count(const Shape& shape) {
    std::int64_t total = 0;
    for (int j = 1; j <= shape.order(); ++j) total += minor_count(shape, j);
    return total;
}

std::vector<MinorValue> enumerate_minors(const PureStateTensor& state, int mode, Exec exec) {
    const std::int64_t count = minor_count(state.shape(), mode);
    const Matricization mat = matricize(state, {mode});

    std::vector<cplx> values(static_cast<std::size_t>(count));
    kernels::minor_values({mat.matrix.data(), mat.rows, mat.cols}, values.data(), exec);

    std::vector<MinorValue> out(static_cast<std::size_t>(count));
    for (std::int64_t t = 0; t < count; ++t) {
        out[static_cast<std::size_t>(t)] = {decode_flat(state.shape(), mode, t),
                                            values[static_cast<std::size_t>(t)]};
        // Loose Cauchy-Schwarz bound on a unit tensor.
        assert(std::abs(values[static_cast<std::size_t>(t)]) <= 1.0 + 1e-9);
    }
    return out;
}

std::vector<MinorValue> all_minors(const PureStateTensor& state, Exec exec) {
    std::vector<MinorValue> out;
    out.reserve(static_cast<std::size_t>(total_minor_count(state.shape())));
    for (int j = 1; j <= state.order(); ++j) {
        auto mv = enumerate_minors(state, j, exec);
        out.insert(out.end(), mv.begin(), mv.end());
    }
    return out;
}

double mode_minor_sum_sq(const PureStateTensor& state, int mode, Exec exec) {
    require_analyzable(state.shape(), mode);
    const Matricization mat = matricize(state, {mode});
    return kernels::minor_sum_sq({mat.matrix.data(), mat.rows, mat.cols}, exec);
}

MinorValue mode_max_minor(const PureStateTensor& state, int mode, Exec exec) {
    require_analyzable(state.shape(), mode);
    const Matricization mat = matricize(state, {mode});
    const auto mm = kernels::minor_max({mat.matrix.data(), mat.rows, mat.cols}, exec);
    const MinorId id = decode_flat(state.shape(), mode, mm.flat);
    const cplx det = mat.at(id.row_k - 1, id.col_c - 1) * mat.at(id.row_l - 1, id.col_cp - 1) -
                     mat.at(id.row_k - 1, id.col_cp - 1) * mat.at(id.row_l - 1, id.col_c - 1);
    return {id, det};
}

SegreTest on_segre_variety(const PureStateTensor& state, double eps, Exec exec) {
    if (eps <= 0.0) {
        throw Error(ErrorCode::BadConfig, "eps must be positive");
    }
    MinorValue best{};
    double best_mod = -1.0;
    for (int j = 1; j <= state.order(); ++j) {
        const MinorValue mv = mode_max_minor(state, j, exec);
        const double mod = std::abs(mv.value);
        if (mod > best_mod) {
            best_mod = mod;
            best = mv;
        }
    }
    SegreTest result;
    result.on_variety = best_mod < eps;
    if (!result.on_variety) result.witness = best;
    return result;
}

} // namespace segre
