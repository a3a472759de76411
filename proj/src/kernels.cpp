// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/kernels.hpp"

#include <cassert>
#include <cmath>

namespace segre::kernels {

namespace {

/// Column-pair chunk length. Each chunk is one deterministic unit of work;
/// the decomposition is fixed independently of thread count so serial and
/// parallel runs reduce the same partials in the same order.
constexpr std::int64_t kChunk = 4096;

struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct ChunkTask {
    std::int64_t row_a, row_b; // 0-based row pair
    std::int64_t t0, t1;       // column-pair rank range [t0, t1)
};

std::vector<ChunkTask> make_chunks(std::int64_t rows, std::int64_t cols) {
    const std::int64_t cp = pair_count(cols);
    std::vector<ChunkTask> tasks;
    for (std::int64_t a = 0; a < rows; ++a) {
        for (std::int64_t b = a + 1; b < rows; ++b) {
            for (std::int64_t t0 = 0; t0 < cp; t0 += kChunk) {
                tasks.push_back({a, b, t0, std::min(t0 + kChunk, cp)});
            }
        }
    }
    return tasks;
}

/// Walks column pairs (c, cp) of the task range in lexicographic order.
template <typename Fn>
void for_each_pair(const MatrixView& m, const ChunkTask& task, Fn&& fn) {
    std::int64_t c, cp;
    pair_unrank(m.cols, task.t0, c, cp);
    const cplx* ra = m.data + task.row_a * m.cols;
    const cplx* rb = m.data + task.row_b * m.cols;
    for (std::int64_t t = task.t0; t < task.t1; ++t) {
        fn(t, ra[c] * rb[cp] - ra[cp] * rb[c]);
        if (++cp == m.cols) {
            ++c;
            cp = c + 1;
        }
    }
}

} // namespace

std::int64_t pair_rank(std::int64_t n, std::int64_t a, std::int64_t b) {
    assert(0 <= a && a < b && b < n);
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

void pair_unrank(std::int64_t n, std::int64_t rank, std::int64_t& a, std::int64_t& b) {
    assert(rank >= 0 && rank < pair_count(n));
    // First index from the quadratic bound, then a guard step for rounding.
    const double nn = static_cast<double>(n);
    double guess = std::floor(nn - 0.5 - std::sqrt((nn - 0.5) * (nn - 0.5) - 2.0 * static_cast<double>(rank)));
    a = static_cast<std::int64_t>(guess);
    if (a < 0) a = 0;
    while (a > 0 && pair_rank(n, a, a + 1) > rank) --a;
    while (pair_rank(n, a, a + 1) + (n - a - 2) < rank) ++a;
    b = rank - pair_rank(n, a, a + 1) + a + 1;
}

double minor_sum_sq(MatrixView m, Exec exec) {
    const auto tasks = make_chunks(m.rows, m.cols);
    std::vector<double> partials(tasks.size(), 0.0);

    const std::int64_t n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel && n > 1)
    for (std::int64_t i = 0; i < n; ++i) {
        Kahan acc;
        for_each_pair(m, tasks[static_cast<std::size_t>(i)],
                      [&](std::int64_t, const cplx& det) { acc.add(std::norm(det)); });
        partials[static_cast<std::size_t>(i)] = acc.sum;
    }

    Kahan total;
    for (double p : partials) total.add(p);
    return total.sum;
}

MinorMax minor_max(MatrixView m, Exec exec) {
    const auto tasks = make_chunks(m.rows, m.cols);
    const std::int64_t cp = pair_count(m.cols);

    struct Best {
        double sq = -1.0;
        std::int64_t flat = -1;
    };
    std::vector<Best> best(tasks.size());

    const std::int64_t n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel && n > 1)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& task = tasks[static_cast<std::size_t>(i)];
        const std::int64_t base = pair_rank(m.rows, task.row_a, task.row_b) * cp;
        Best b;
        for_each_pair(m, task, [&](std::int64_t t, const cplx& det) {
            const double sq = std::norm(det);
            if (sq > b.sq) {
                b.sq = sq;
                b.flat = base + t;
            }
        });
        best[static_cast<std::size_t>(i)] = b;
    }

    // Ties keep the earliest flat index, i.e. the first minor in
    // enumeration order attaining the maximum.
    Best out;
    for (const Best& b : best) {
        if (b.sq > out.sq || (b.sq == out.sq && b.flat >= 0 && (out.flat < 0 || b.flat < out.flat))) {
            out = b;
        }
    }
    if (out.flat < 0) return {};
    return {std::sqrt(out.sq), out.flat};
}

void minor_values(MatrixView m, cplx* out, Exec exec) {
    const auto tasks = make_chunks(m.rows, m.cols);
    const std::int64_t cp = pair_count(m.cols);

    const std::int64_t n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel && n > 1)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& task = tasks[static_cast<std::size_t>(i)];
        const std::int64_t base = pair_rank(m.rows, task.row_a, task.row_b) * cp;
        for_each_pair(m, task, [&](std::int64_t t, const cplx& det) { out[base + t] = det; });
    }
}

double gram_purity(MatrixView m, Exec exec) {
    // Tr((M M^dagger)^2) = sum_{i,j} |G_ij|^2 with G = M M^dagger Hermitian;
    // off-diagonal entries each count twice.
    const std::int64_t n = m.rows;
    const std::int64_t entries = n * (n + 1) / 2;
    std::vector<double> partials(static_cast<std::size_t>(entries), 0.0);

#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::Parallel && entries > 8)
    for (std::int64_t e = 0; e < entries; ++e) {
        // Upper triangle including diagonal, row-major: e -> (i, j), i <= j.
        std::int64_t i = 0, rem = e;
        while (rem >= n - i) {
            rem -= n - i;
            ++i;
        }
        const std::int64_t j = i + rem;
        const cplx* ri = m.data + i * m.cols;
        const cplx* rj = m.data + j * m.cols;
        Kahan re, im;
        for (std::int64_t c = 0; c < m.cols; ++c) {
            const cplx p = ri[c] * std::conj(rj[c]);
            re.add(p.real());
            im.add(p.imag());
        }
        const double sq = re.sum * re.sum + im.sum * im.sum;
        partials[static_cast<std::size_t>(e)] = (i == j) ? sq : 2.0 * sq;
    }

    Kahan total;
    for (double p : partials) total.add(p);
    return total.sum;
}

} // namespace segre::kernels
