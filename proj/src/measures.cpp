// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/measures.hpp"

#include <cmath>

namespace segre {

namespace {

void check_config(const MeasureConfig& cfg) {
    if (!(cfg.norm_const > 0.0)) {
        throw Error(ErrorCode::BadConfig, "norm_const must be positive");
    }
}

MeasureResult from_partials(std::vector<std::pair<int, double>> per_mode,
                            const MeasureConfig& cfg) {
    double sum = 0.0, comp = 0.0;
    for (const auto& [mode, partial] : per_mode) {
        const double y = partial - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    MeasureResult result;
    result.value = std::sqrt(cfg.norm_const * sum);
    if (cfg.report_breakdown) result.per_mode = std::move(per_mode);
    result.config = cfg;
    return result;
}

} // namespace

MeasureResult concurrence_bipartite(const PureStateTensor& state, const MeasureConfig& cfg,
                                    Exec exec) {
    check_config(cfg);
    if (state.order() != 2) {
        throw Error(ErrorCode::WrongArity,
                    "bipartite concurrence needs exactly 2 subsystems, got " +
                        std::to_string(state.order()));
    }
    const double partial = 4.0 * mode_minor_sum_sq(state, 1, exec);
    return from_partials({{1, partial}}, cfg);
}

MeasureResult measure_multipartite(const PureStateTensor& state, const MeasureConfig& cfg,
                                   Exec exec) {
    check_config(cfg);
    if (state.order() < 2) {
        throw Error(ErrorCode::DegenerateMode, "measure needs at least 2 subsystems");
    }
    std::vector<std::pair<int, double>> per_mode;
    per_mode.reserve(static_cast<std::size_t>(state.order()));
    for (int j = 1; j <= state.order(); ++j) {
        per_mode.emplace_back(j, 4.0 * mode_minor_sum_sq(state, j, exec));
    }
    return from_partials(std::move(per_mode), cfg);
}

MeasureResult three_qubit_explicit(const PureStateTensor& state, const MeasureConfig& cfg) {
    check_config(cfg);
    if (!(state.shape() == Shape({2, 2, 2}))) {
        throw Error(ErrorCode::WrongShape, "explicit three-qubit form needs shape (2,2,2)");
    }

    // The twelve binomials of the weighted expansion, written against flat
    // offsets of the (2,2,2) tensor (abc -> 4a+2b+c, 0-based). The six
    // doubly-weighted binomials fix one coordinate and belong to two
    // unfoldings; the six singly-weighted ones move every coordinate.
    struct Term {
        int a, b, c, d;    // value = amps[a]*amps[b] - amps[c]*amps[d]
        int mode1, mode2;  // owning unfoldings (mode2 = 0 for weight-1 terms)
    };
    static constexpr Term kTerms[12] = {
        {0b000, 0b110, 0b010, 0b100, 1, 2}, // a111 a221 - a121 a211
        {0b001, 0b111, 0b011, 0b101, 1, 2}, // a112 a222 - a122 a212
        {0b000, 0b101, 0b001, 0b100, 1, 3}, // a111 a212 - a112 a211
        {0b010, 0b111, 0b011, 0b110, 1, 3}, // a121 a222 - a122 a221
        {0b000, 0b011, 0b001, 0b010, 2, 3}, // a111 a122 - a112 a121
        {0b100, 0b111, 0b101, 0b110, 2, 3}, // a211 a222 - a212 a221
        {0b000, 0b111, 0b001, 0b110, 3, 0}, // a111 a222 - a112 a221
        {0b000, 0b111, 0b010, 0b101, 2, 0}, // a111 a222 - a121 a212
        {0b000, 0b111, 0b011, 0b100, 1, 0}, // a111 a222 - a122 a211
        {0b001, 0b110, 0b010, 0b101, 1, 0}, // a112 a221 - a121 a212
        {0b001, 0b110, 0b011, 0b100, 2, 0}, // a112 a221 - a122 a211
        {0b010, 0b101, 0b011, 0b100, 3, 0}, // a121 a212 - a122 a211
    };

    const auto amps = state.amps();
    double mode_sums[3] = {0.0, 0.0, 0.0};
    for (const Term& term : kTerms) {
        const cplx det = amps[static_cast<std::size_t>(term.a)] * amps[static_cast<std::size_t>(term.b)] -
                         amps[static_cast<std::size_t>(term.c)] * amps[static_cast<std::size_t>(term.d)];
        const double sq = std::norm(det);
        mode_sums[term.mode1 - 1] += sq;
        if (term.mode2 != 0) mode_sums[term.mode2 - 1] += sq;
    }
    return from_partials({{1, 4.0 * mode_sums[0]}, {2, 4.0 * mode_sums[1]}, {3, 4.0 * mode_sums[2]}},
                         cfg);
}

} // namespace segre
