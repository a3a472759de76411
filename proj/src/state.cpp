// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace segre {

namespace {

double norm2(const std::vector<cplx>& amps) {
    // Compensated accumulation keeps the normalization check honest for
    // long amplitude vectors.
    double sum = 0.0, comp = 0.0;
    for (const cplx& a : amps) {
        double y = std::norm(a) - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return std::sqrt(sum);
}

/// Uniform double in [0, 1) from the top 53 bits of the generator output.
/// Spelled out rather than using std::uniform_real_distribution so that a
/// seed pins the exact amplitude stream on every implementation.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard complex Gaussian via Box-Muller.
cplx next_gaussian(std::mt19937_64& rng) {
    double u1 = next_uniform(rng);
    // u1 must be > 0 for the log; the all-zeros draw has probability 2^-53.
    while (u1 == 0.0) u1 = next_uniform(rng);
    const double u2 = next_uniform(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

std::vector<cplx> sample_gaussian(std::int64_t n, std::mt19937_64& rng) {
    std::vector<cplx> amps(static_cast<std::size_t>(n));
    for (auto& a : amps) a = next_gaussian(rng);
    return amps;
}

} // namespace

PureStateTensor::PureStateTensor(Shape shape, std::vector<cplx> amps, NormPolicy policy)
    : shape_(std::move(shape)), amps_(std::move(amps)), policy_(policy) {
    if (static_cast<std::int64_t>(amps_.size()) != shape_.total_dim()) {
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(shape_.total_dim()) + " amplitudes, got " +
                        std::to_string(amps_.size()));
    }
    const double n = norm2(amps_);
    if (n == 0.0) {
        throw Error(ErrorCode::ZeroState, "amplitude vector is identically zero");
    }
    switch (policy_) {
        case NormPolicy::RequireNormalized:
            if (std::abs(n - 1.0) > kNormTolerance) {
                throw Error(ErrorCode::NotNormalized,
                            "2-norm deviates from 1 by " + std::to_string(std::abs(n - 1.0)));
            }
            break;
        case NormPolicy::AutoNormalize: {
            const double inv = 1.0 / n;
            for (auto& a : amps_) a *= inv;
            break;
        }
    }
}

std::int64_t PureStateTensor::flat_index(std::span<const int> multi_index) const {
    const auto& dims = shape_.dims();
    if (multi_index.size() != dims.size()) {
        throw Error(ErrorCode::LengthMismatch, "multi-index arity mismatch");
    }
    std::int64_t flat = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        const int i = multi_index[j];
        if (i < 1 || i > dims[j]) {
            throw Error(ErrorCode::LengthMismatch,
                        "index " + std::to_string(i) + " out of range for subsystem " +
                            std::to_string(j + 1));
        }
        flat = flat * dims[j] + (i - 1);
    }
    return flat;
}

const cplx& PureStateTensor::at(std::span<const int> multi_index) const {
    return amps_[static_cast<std::size_t>(flat_index(multi_index))];
}

PureStateTensor bell_state(int k) {
    if (k < 1 || k > 4) {
        throw Error(ErrorCode::BadArity, "Bell index must be 1..4, got " + std::to_string(k));
    }
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<cplx> amps(4, cplx(0.0));
    switch (k) {
        case 1: amps[0] = s; amps[3] = s; break;  // Phi+
        case 2: amps[0] = s; amps[3] = -s; break; // Phi-
        case 3: amps[1] = s; amps[2] = s; break;  // Psi+
        case 4: amps[1] = s; amps[2] = -s; break; // Psi-
    }
    return PureStateTensor(Shape({2, 2}), std::move(amps), NormPolicy::RequireNormalized);
}

PureStateTensor ghz_state(int m) {
    if (m < 2) {
        throw Error(ErrorCode::BadArity, "GHZ needs m >= 2 subsystems");
    }
    Shape shape(std::vector<int>(static_cast<std::size_t>(m), 2));
    std::vector<cplx> amps(static_cast<std::size_t>(shape.total_dim()), cplx(0.0));
    const double s = 1.0 / std::sqrt(2.0);
    amps.front() = s;
    amps.back() = s;
    return PureStateTensor(std::move(shape), std::move(amps), NormPolicy::RequireNormalized);
}

PureStateTensor w_state(int m) {
    if (m < 2) {
        throw Error(ErrorCode::BadArity, "W needs m >= 2 subsystems");
    }
    Shape shape(std::vector<int>(static_cast<std::size_t>(m), 2));
    std::vector<cplx> amps(static_cast<std::size_t>(shape.total_dim()), cplx(0.0));
    const double s = 1.0 / std::sqrt(static_cast<double>(m));
    // Exactly one subsystem index equal to 2: flat offsets are the powers
    // of two (last subsystem fastest).
    for (int j = 0; j < m; ++j) {
        amps[std::size_t(1) << j] = s;
    }
    return PureStateTensor(std::move(shape), std::move(amps), NormPolicy::RequireNormalized);
}

PureStateTensor product_state(const std::vector<std::vector<cplx>>& factors) {
    if (factors.empty()) {
        throw Error(ErrorCode::BadArity, "product state needs at least one factor");
    }
    std::vector<int> dims;
    dims.reserve(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const auto& f = factors[j];
        if (f.empty()) {
            throw Error(ErrorCode::BadArity,
                        "factor " + std::to_string(j + 1) + " is empty");
        }
        double n = 0.0;
        for (const cplx& a : f) n += std::norm(a);
        if (std::abs(std::sqrt(n) - 1.0) > kNormTolerance) {
            throw Error(ErrorCode::UnnormalizedFactor,
                        "factor " + std::to_string(j + 1) + " is not a unit vector");
        }
        dims.push_back(static_cast<int>(f.size()));
    }
    Shape shape(dims);
    std::vector<cplx> amps(static_cast<std::size_t>(shape.total_dim()));
    for (std::int64_t flat = 0; flat < shape.total_dim(); ++flat) {
        std::int64_t rem = flat;
        cplx prod(1.0);
        for (std::size_t j = dims.size(); j-- > 0;) {
            prod *= factors[j][static_cast<std::size_t>(rem % dims[j])];
            rem /= dims[j];
        }
        amps[static_cast<std::size_t>(flat)] = prod;
    }
    return PureStateTensor(std::move(shape), std::move(amps), NormPolicy::AutoNormalize);
}

PureStateTensor random_haar_state(const Shape& shape, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto amps = sample_gaussian(shape.total_dim(), rng);
    return PureStateTensor(shape, std::move(amps), NormPolicy::AutoNormalize);
}

PureStateTensor random_product_haar_state(const Shape& shape,
                                          std::vector<std::vector<int>> blocks,
                                          std::uint64_t seed) {
    const int m = shape.order();
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());

    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (const auto& b : blocks) {
        if (b.empty()) throw Error(ErrorCode::BadPartition, "empty block");
        for (int j : b) {
            if (j < 1 || j > m || seen[static_cast<std::size_t>(j - 1)]) {
                throw Error(ErrorCode::BadPartition,
                            "blocks must partition {1.." + std::to_string(m) + "}");
            }
            seen[static_cast<std::size_t>(j - 1)] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw Error(ErrorCode::BadPartition, "blocks do not cover every subsystem");
    }

    std::mt19937_64 rng(seed);
    std::vector<std::vector<cplx>> block_amps;
    block_amps.reserve(blocks.size());
    for (const auto& b : blocks) {
        std::int64_t bd = 1;
        for (int j : b) bd *= shape.dim(j);
        block_amps.push_back(sample_gaussian(bd, rng));
    }

    const auto& dims = shape.dims();
    std::vector<cplx> amps(static_cast<std::size_t>(shape.total_dim()));
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (std::int64_t flat = 0; flat < shape.total_dim(); ++flat) {
        std::int64_t rem = flat;
        for (int j = m; j-- > 0;) {
            idx[static_cast<std::size_t>(j)] = static_cast<int>(rem % dims[static_cast<std::size_t>(j)]);
            rem /= dims[static_cast<std::size_t>(j)];
        }
        cplx prod(1.0);
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            std::int64_t sub = 0;
            for (int j : blocks[bi]) {
                sub = sub * dims[static_cast<std::size_t>(j - 1)] + idx[static_cast<std::size_t>(j - 1)];
            }
            prod *= block_amps[bi][static_cast<std::size_t>(sub)];
        }
        amps[static_cast<std::size_t>(flat)] = prod;
    }
    return PureStateTensor(shape, std::move(amps), NormPolicy::AutoNormalize);
}

} // namespace segre
