// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/separability.hpp"

#include <algorithm>
#include <cmath>

#include "segre/matricize.hpp"
#include "segre/svd.hpp"

namespace segre {

PartitionSpec::PartitionSpec(std::vector<int> block, int m) : m_(m) {
    if (m < 2) {
        throw Error(ErrorCode::EmptyPartition, "a bipartition needs at least 2 subsystems");
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    if (block.empty() || static_cast<int>(block.size()) >= m) {
        throw Error(ErrorCode::EmptyPartition,
                    "block must be a nonempty proper subset of {1.." + std::to_string(m) + "}");
    }
    for (int j : block) {
        if (j < 1 || j > m) {
            throw Error(ErrorCode::EmptyPartition,
                        "subsystem " + std::to_string(j) + " out of range");
        }
    }
    if (block.front() != 1) {
        // Canonical side is the one containing subsystem 1.
        std::vector<int> comp;
        comp.reserve(static_cast<std::size_t>(m) - block.size());
        std::size_t next = 0;
        for (int j = 1; j <= m; ++j) {
            if (next < block.size() && block[next] == j) {
                ++next;
            } else {
                comp.push_back(j);
            }
        }
        block = std::move(comp);
    }
    block_ = std::move(block);
}

std::vector<int> PartitionSpec::complement() const {
    std::vector<int> comp;
    comp.reserve(static_cast<std::size_t>(m_) - block_.size());
    std::size_t next = 0;
    for (int j = 1; j <= m_; ++j) {
        if (next < block_.size() && block_[next] == j) {
            ++next;
        } else {
            comp.push_back(j);
        }
    }
    return comp;
}

std::vector<PartitionSpec> enumerate_bipartitions(int m) {
    // Canonical blocks all contain subsystem 1: subsets of {2..m} joined
    // with {1}, minus the full set. Sorted by size, then lexicographically.
    std::vector<std::vector<int>> blocks;
    const std::uint32_t limit = std::uint32_t(1) << (m - 1);
    for (std::uint32_t bits = 0; bits + 1 < limit; ++bits) {
        std::vector<int> block{1};
        for (int j = 2; j <= m; ++j) {
            if (bits & (std::uint32_t(1) << (j - 2))) block.push_back(j);
        }
        blocks.push_back(std::move(block));
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<PartitionSpec> out;
    out.reserve(blocks.size());
    for (auto& b : blocks) out.emplace_back(std::move(b), m);
    return out;
}

BipartitionVerdict bipartition_factorable(const PureStateTensor& state,
                                          const PartitionSpec& part, double eps) {
    if (part.order() != state.order()) {
        throw Error(ErrorCode::EmptyPartition, "partition arity does not match the state");
    }
    const Matricization mat = matricize(state, part.block());
    const auto sv = singular_values({mat.matrix.data(), mat.rows, mat.cols});
    const double sigma2 = sv.size() > 1 ? sv[1] : 0.0;
    return {sigma2 < eps, sigma2};
}

IdealVerdict ideal_satisfied(const PureStateTensor& state, const PartitionSpec& part,
                             double eps) {
    std::vector<int> modes = part.block();
    if (modes.size() != 1) {
        // The per-subsystem ideals are indexed by a single mode; the caller
        // canonicalized {j} to its complement when j != 1.
        modes = part.complement();
    }
    if (modes.size() != 1) {
        throw Error(ErrorCode::BadPartition, "ideal_satisfied needs a singleton block");
    }
    const MinorValue worst = mode_max_minor(state, modes.front());
    const double mod = std::abs(worst.value);
    return {mod < eps, mod};
}

SeparabilityReport analyze(const PureStateTensor& state, double eps, const MeasureConfig& cfg) {
    if (eps <= 0.0) {
        throw Error(ErrorCode::BadConfig, "eps must be positive");
    }
    const int m = state.order();
    if (m > kMaxAnalyzeSubsystems) {
        throw Error(ErrorCode::TooManySubsystems,
                    "analysis sweeps 2^(m-1)-1 bipartitions; m is capped at " +
                        std::to_string(kMaxAnalyzeSubsystems));
    }
    for (int j = 1; j <= m; ++j) {
        if (state.shape().dim(j) < 2) {
            throw Error(ErrorCode::DegenerateMode,
                        "subsystem " + std::to_string(j) + " has dimension 1");
        }
    }

    SeparabilityReport report;
    report.tolerance = eps;
    report.measure = measure_multipartite(state, cfg);

    const auto parts = enumerate_bipartitions(m);
    report.per_bipartition.resize(parts.size(),
                                  BipartitionEntry{PartitionSpec({1}, std::max(m, 2)), false, 0.0, 0.0});

    const std::int64_t n = static_cast<std::int64_t>(parts.size());
#pragma omp parallel for schedule(dynamic, 1) if (n > 4)
    for (std::int64_t i = 0; i < n; ++i) {
        const PartitionSpec& part = parts[static_cast<std::size_t>(i)];
        const Matricization mat = matricize(state, part.block());
        const kernels::MatrixView view{mat.matrix.data(), mat.rows, mat.cols};
        const auto sv = singular_values(view);
        const double sigma2 = sv.size() > 1 ? sv[1] : 0.0;
        const auto mm = kernels::minor_max(view, Exec::Serial);
        report.per_bipartition[static_cast<std::size_t>(i)] =
            {part, sigma2 < eps, sigma2, mm.modulus};
    }

    bool fully = true;
    for (const auto& entry : report.per_bipartition) {
        const auto size = static_cast<int>(entry.part.block().size());
        if (size == 1 || size == m - 1) fully = fully && entry.factorable;
    }
    report.fully_separable = fully;
    report.on_segre = on_segre_variety(state, eps).on_variety;
    report.consistency_ok = (report.fully_separable == report.on_segre);
    return report;
}

} // namespace segre
