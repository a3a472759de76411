// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ideal.hpp
 * @brief Symbolic generators of the determinantal ideals: the binomials
 *        a_{v1} a_{v2} - a_{v3} a_{v4} whose common zero locus is the
 *        separable (rank-one) variety.
 *
 * Canonical form: within each term the two index tuples are sorted
 * lexicographically, the lexicographically smaller term is kept positive,
 * and generator lists are deduplicated by this normal form modulo overall
 * sign. Variables are named by 1-based index tuples so rendered output
 * lines up with the usual alpha_{i1,...,im} notation.
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "segre/separability.hpp"

namespace segre {

/// One binomial generator, pos[0]*pos[1] - neg[0]*neg[1], indices 1-based.
struct SymbolicGenerator {
    std::array<std::vector<int>, 2> pos;
    std::array<std::vector<int>, 2> neg;

    /// Normal-form string used for ordering and deduplication.
    std::string canonical_key() const;

    /// Substitute amplitudes: amps[pos0]*amps[pos1] - amps[neg0]*amps[neg1].
    cplx evaluate(const PureStateTensor& state) const;

    bool operator==(const SymbolicGenerator&) const = default;
};

enum class IdealLabel { Mode, Segre, Bipartition };

struct IdealGenerators {
    IdealLabel label = IdealLabel::Mode;
    int mode = 0;                     ///< set when label == Mode
    std::vector<int> block;           ///< set when label == Bipartition
    Shape shape;
    std::vector<SymbolicGenerator> gens;
};

/// Generators of all 2x2 minors of the symbolic mode-j unfolding, in
/// enumeration order (row pairs then column pairs, lexicographic).
IdealGenerators mode_ideal(const Shape& shape, int j);

/// Minors of the unfolding with the partition block as rows; reduces to
/// mode_ideal for a singleton block.
IdealGenerators bipartition_ideal(const Shape& shape, const PartitionSpec& part);

/// Union of the mode ideals over j = 1..m, deduplicated by canonical key
/// (first occurrence kept). For shape (2,2,2) this yields 12 of the 18 raw
/// generators; the six binomials fixing one coordinate are shared pairwise
/// between modes.
IdealGenerators segre_ideal(const Shape& shape);

enum class RenderFormat { PlainText, LatexLike, MachineJSON };

/// Byte-deterministic rendering. PlainText writes one
/// `a_{..}*a_{..} - a_{..}*a_{..}` line per generator; LatexLike uses
/// alpha subscripts; MachineJSON emits the index tuples plus label and
/// dimensions.
std::string render(const IdealGenerators& ideal, RenderFormat format);

} // namespace segre
