// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/svd.hpp"

#include <algorithm>
#include <cmath>

namespace segre {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kOrthTol = 1e-15; // relative off-diagonal threshold per pair

} // namespace

std::vector<double> singular_values(kernels::MatrixView m) {
    // Orthogonalize the columns of the taller orientation; for rows < cols
    // work on the conjugate transpose (same singular values).
    const bool transpose = m.rows < m.cols;
    const std::int64_t height = transpose ? m.cols : m.rows;
    const std::int64_t width = transpose ? m.rows : m.cols;

    // Column-major working copy: col(j) is contiguous.
    std::vector<kernels::cplx> work(static_cast<std::size_t>(height * width));
    for (std::int64_t r = 0; r < m.rows; ++r) {
        for (std::int64_t c = 0; c < m.cols; ++c) {
            const kernels::cplx v = m.at(r, c);
            if (transpose) {
                work[static_cast<std::size_t>(r * height + c)] = std::conj(v);
            } else {
                work[static_cast<std::size_t>(c * height + r)] = v;
            }
        }
    }
    auto col = [&](std::int64_t j) { return work.data() + j * height; };

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::int64_t p = 0; p < width - 1; ++p) {
            for (std::int64_t q = p + 1; q < width; ++q) {
                kernels::cplx* cp = col(p);
                kernels::cplx* cq = col(q);
                double app = 0.0, aqq = 0.0;
                kernels::cplx apq(0.0);
                for (std::int64_t r = 0; r < height; ++r) {
                    app += std::norm(cp[r]);
                    aqq += std::norm(cq[r]);
                    apq += std::conj(cp[r]) * cq[r];
                }
                const double off = std::abs(apq);
                if (off <= kOrthTol * std::sqrt(app * aqq) || off == 0.0) continue;
                rotated = true;

                // Phase-rotate column q so the inner product becomes real
                // positive, then apply the classic symmetric Jacobi rotation.
                const kernels::cplx phase = std::conj(apq) / off;
                const double tau = (aqq - app) / (2.0 * off);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::int64_t r = 0; r < height; ++r) {
                    const kernels::cplx wp = cp[r];
                    const kernels::cplx wq = phase * cq[r];
                    cp[r] = c * wp - s * wq;
                    cq[r] = s * wp + c * wq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sv(static_cast<std::size_t>(width));
    for (std::int64_t j = 0; j < width; ++j) {
        double sq = 0.0;
        const kernels::cplx* cj = col(j);
        for (std::int64_t r = 0; r < height; ++r) sq += std::norm(cj[r]);
        sv[static_cast<std::size_t>(j)] = std::sqrt(sq);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

} // namespace segre
