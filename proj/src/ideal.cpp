// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "segre/kernels.hpp"

namespace segre {

namespace {

using kernels::pair_count;

std::string index_str(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

/// One symbolic unfolding entry: the multi-index at (row r, col c) of the
/// mode unfolding with `rows` as row subsystems.
struct SymbolicUnfolding {
    std::vector<int> row_subsystems, col_subsystems;
    std::vector<int> row_dims, col_dims;
    std::int64_t rows = 1, cols = 1;
    int m = 0;

    std::vector<int> entry(std::int64_t r, std::int64_t c) const {
        std::vector<int> idx(static_cast<std::size_t>(m));
        for (std::size_t s = row_dims.size(); s-- > 0;) {
            idx[static_cast<std::size_t>(row_subsystems[s] - 1)] = static_cast<int>(r % row_dims[s]) + 1;
            r /= row_dims[s];
        }
        for (std::size_t s = col_dims.size(); s-- > 0;) {
            idx[static_cast<std::size_t>(col_subsystems[s] - 1)] = static_cast<int>(c % col_dims[s]) + 1;
            c /= col_dims[s];
        }
        return idx;
    }
};

SymbolicUnfolding make_symbolic(const Shape& shape, const std::vector<int>& block) {
    SymbolicUnfolding u;
    u.m = shape.order();
    std::size_t next = 0;
    for (int j = 1; j <= u.m; ++j) {
        const bool is_row = next < block.size() && block[next] == j;
        if (is_row) ++next;
        auto& subs = is_row ? u.row_subsystems : u.col_subsystems;
        auto& dims = is_row ? u.row_dims : u.col_dims;
        auto& count = is_row ? u.rows : u.cols;
        subs.push_back(j);
        dims.push_back(shape.dim(j));
        count *= shape.dim(j);
    }
    if (u.rows < 2 || u.cols < 2) {
        throw Error(ErrorCode::DegenerateMode, "unfolding has a side of dimension < 2");
    }
    return u;
}

SymbolicGenerator make_generator(const SymbolicUnfolding& u, std::int64_t k, std::int64_t l,
                                 std::int64_t c, std::int64_t cp) {
    SymbolicGenerator g;
    g.pos = {u.entry(k, c), u.entry(l, cp)};
    g.neg = {u.entry(k, cp), u.entry(l, c)};
    if (g.pos[1] < g.pos[0]) std::swap(g.pos[0], g.pos[1]);
    if (g.neg[1] < g.neg[0]) std::swap(g.neg[0], g.neg[1]);
    // Sign normal form: the lexicographically smaller term is positive. For
    // generators enumerated from an unfolding the positive term already
    // contains the smallest index, so this never fires there, but keeps the
    // normal form total.
    if (g.neg < g.pos) std::swap(g.pos, g.neg);
    return g;
}

std::vector<SymbolicGenerator> block_generators(const Shape& shape, const std::vector<int>& block) {
    const SymbolicUnfolding u = make_symbolic(shape, block);
    std::vector<SymbolicGenerator> gens;
    gens.reserve(static_cast<std::size_t>(pair_count(u.rows) * pair_count(u.cols)));
    for (std::int64_t k = 0; k < u.rows; ++k) {
        for (std::int64_t l = k + 1; l < u.rows; ++l) {
            for (std::int64_t c = 0; c < u.cols; ++c) {
                for (std::int64_t cp = c + 1; cp < u.cols; ++cp) {
                    gens.push_back(make_generator(u, k, l, c, cp));
                }
            }
        }
    }
    return gens;
}

} // namespace

std::string SymbolicGenerator::canonical_key() const {
    std::string s = index_str(pos[0]);
    s += '|';
    s += index_str(pos[1]);
    s += '-';
    s += index_str(neg[0]);
    s += '|';
    s += index_str(neg[1]);
    return s;
}

cplx SymbolicGenerator::evaluate(const PureStateTensor& state) const {
    return state.at(pos[0]) * state.at(pos[1]) - state.at(neg[0]) * state.at(neg[1]);
}

IdealGenerators mode_ideal(const Shape& shape, int j) {
    if (j < 1 || j > shape.order()) {
        throw Error(ErrorCode::DegenerateMode, "mode " + std::to_string(j) + " out of range");
    }
    IdealGenerators ideal{IdealLabel::Mode, j, {}, shape, block_generators(shape, {j})};
    return ideal;
}

IdealGenerators bipartition_ideal(const Shape& shape, const PartitionSpec& part) {
    if (part.order() != shape.order()) {
        throw Error(ErrorCode::EmptyPartition, "partition arity does not match the shape");
    }
    IdealGenerators ideal{IdealLabel::Bipartition, 0, part.block(), shape,
                          block_generators(shape, part.block())};
    return ideal;
}

IdealGenerators segre_ideal(const Shape& shape) {
    IdealGenerators ideal{IdealLabel::Segre, 0, {}, shape, {}};
    std::unordered_set<std::string> seen;
    for (int j = 1; j <= shape.order(); ++j) {
        for (auto& g : block_generators(shape, {j})) {
            if (seen.insert(g.canonical_key()).second) {
                ideal.gens.push_back(std::move(g));
            }
        }
    }
    return ideal;
}

std::string render(const IdealGenerators& ideal, RenderFormat format) {
    std::ostringstream out;
    switch (format) {
        case RenderFormat::PlainText:
            for (const auto& g : ideal.gens) {
                out << "a_{" << index_str(g.pos[0]) << "}*a_{" << index_str(g.pos[1]) << "} - a_{"
                    << index_str(g.neg[0]) << "}*a_{" << index_str(g.neg[1]) << "}\n";
            }
            break;
        case RenderFormat::LatexLike:
            for (const auto& g : ideal.gens) {
                out << "\\alpha_{" << index_str(g.pos[0]) << "}\\alpha_{" << index_str(g.pos[1])
                    << "} - \\alpha_{" << index_str(g.neg[0]) << "}\\alpha_{" << index_str(g.neg[1])
                    << "}\n";
            }
            break;
        case RenderFormat::MachineJSON: {
            nlohmann::ordered_json doc;
            switch (ideal.label) {
                case IdealLabel::Mode: doc["label"] = "mode-" + std::to_string(ideal.mode); break;
                case IdealLabel::Segre: doc["label"] = "segre"; break;
                case IdealLabel::Bipartition: doc["label"] = "block-" + index_str(ideal.block); break;
            }
            doc["dims"] = ideal.shape.dims();
            doc["count"] = ideal.gens.size();
            auto& gens = doc["generators"] = nlohmann::ordered_json::array();
            for (const auto& g : ideal.gens) {
                gens.push_back({{"pos", {g.pos[0], g.pos[1]}}, {"neg", {g.neg[0], g.neg[1]}}});
            }
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

} // namespace segre
