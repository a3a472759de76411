// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "segre/matricize.hpp"
#include "segre/minors.hpp"
#include "segre/separability.hpp"
#include "test_util.hpp"

using namespace segre;

TEST_CASE("minor counts follow the counting law") {
    struct Row {
        Shape shape;
        std::int64_t total;
    };
    // Totals: sum_j C(N_j,2) * C(prod_{i!=j} N_i, 2).
    const Row rows[] = {
        {Shape({2, 2}), 2},          {Shape({2, 3}), 6},    {Shape({3, 3}), 18},
        {Shape({2, 2, 2}), 18},      {Shape({2, 2, 3}), 48}, {Shape({2, 3, 2}), 48},
        {Shape({2, 2, 2, 2}), 112},
    };
    for (const auto& row : rows) {
        CHECK(total_minor_count(row.shape) == row.total);
        const auto psi = random_haar_state(row.shape, 1);
        CHECK(static_cast<std::int64_t>(all_minors(psi).size()) == row.total);
    }
    CHECK(minor_count(Shape({2, 2, 2}), 1) == 6);
}

TEST_CASE("ghz mode-1 minors") {
    const auto minors = enumerate_minors(ghz_state(3), 1);
    REQUIRE(minors.size() == 6);
    std::size_t nonzero = 0;
    for (const auto& mv : minors) {
        if (std::abs(mv.value) > 1e-14) {
            ++nonzero;
            CHECK(mv.id.mode == 1);
            CHECK(mv.id.row_k == 1);
            CHECK(mv.id.row_l == 2);
            CHECK(mv.id.col_c == 1);
            CHECK(mv.id.col_cp == 4);
            CHECK(mv.value.real() == doctest::Approx(0.5).epsilon(1e-14));
            CHECK(mv.value.imag() == 0.0);
        }
    }
    CHECK(nonzero == 1);
}

TEST_CASE("product states have vanishing minors") {
    const auto psi = random_product_haar_state(Shape({2, 3, 2}), {{1}, {2}, {3}}, 99);
    for (const auto& mv : all_minors(psi)) {
        CHECK(std::abs(mv.value) < 1e-12);
    }
}

TEST_CASE("two-qubit modes expose the same determinant") {
    const auto psi = random_haar_state(Shape({2, 2}), 12);
    const auto minors = all_minors(psi);
    REQUIRE(minors.size() == 2);
    // Mode-2 unfolding is the transpose; the single 2x2 determinant agrees.
    CHECK(std::abs(minors[0].value - minors[1].value) <= 1e-15);
}

TEST_CASE("enumeration agrees with the plain-loop reference") {
    for (const Shape& shape : {Shape({2, 3}), Shape({2, 2, 2}), Shape({2, 2, 3})}) {
        const auto psi = random_haar_state(shape, 31);
        for (int j = 1; j <= shape.order(); ++j) {
            const auto lib = enumerate_minors(psi, j);
            const auto ref = testutil::naive_mode_minors(psi, j);
            REQUIRE(lib.size() == ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) {
                CHECK(lib[i].value == ref[i]); // same arithmetic, same order
            }
        }
    }
}

TEST_CASE("minor-purity identity") {
    // 4 * sum |mode-j minor|^2 == 2 * (1 - Tr rho_j^2): the Gram-route
    // cross-check between the minors and the reductions.
    for (const Shape& shape :
         {Shape({2, 2}), Shape({2, 3}), Shape({3, 3}), Shape({2, 2, 2}), Shape({2, 2, 2, 2})}) {
        for (std::uint64_t seed = 100; seed < 140; ++seed) {
            const auto psi = random_haar_state(shape, seed);
            for (int j = 1; j <= shape.order(); ++j) {
                double sum = 0.0;
                for (const auto& mv : enumerate_minors(psi, j)) sum += std::norm(mv.value);
                CHECK(std::abs(4.0 * sum - 2.0 * (1.0 - mode_purity(psi, j))) <= 1e-10);
            }
        }
    }
}

TEST_CASE("phase invariance of the segre test") {
    const auto psi = random_haar_state(Shape({2, 2, 2}), 41);
    std::vector<cplx> rotated(psi.amps().begin(), psi.amps().end());
    const cplx phase = std::polar(1.0, 0.837);
    for (auto& a : rotated) a *= phase;
    const PureStateTensor psi2(psi.shape(), std::move(rotated));

    const auto t1 = on_segre_variety(psi);
    const auto t2 = on_segre_variety(psi2);
    CHECK(t1.on_variety == t2.on_variety);
    // minors scale by phase^2, moduli are unchanged
    REQUIRE(t1.witness.has_value());
    REQUIRE(t2.witness.has_value());
    CHECK(std::abs(t1.witness->value) == doctest::Approx(std::abs(t2.witness->value)).epsilon(1e-13));
}

TEST_CASE("segre membership examples") {
    SUBCASE("product states lie on the variety") {
        const auto psi = random_product_haar_state(Shape({2, 2, 2, 2}), {{1}, {2}, {3}, {4}}, 7);
        CHECK(on_segre_variety(psi).on_variety);
    }
    SUBCASE("bell is off the variety with witness 1/2") {
        const auto result = on_segre_variety(bell_state(1));
        CHECK_FALSE(result.on_variety);
        REQUIRE(result.witness.has_value());
        CHECK(std::abs(result.witness->value) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(result.witness->id.mode == 1); // first mode in enumeration order wins ties
    }
    SUBCASE("ghz(4) is off the variety") {
        const auto result = on_segre_variety(ghz_state(4));
        CHECK_FALSE(result.on_variety);
        REQUIRE(result.witness.has_value());
        CHECK(std::abs(result.witness->value) == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("rank equivalence against the SVD oracle") {
    // Minor vanishing across every mode <=> every mode unfolding has
    // sigma_2 below threshold; 200 haar + product states per shape.
    for (const Shape& shape : {Shape({2, 2}), Shape({2, 3}), Shape({3, 3}), Shape({2, 2, 2})}) {
        std::vector<std::vector<int>> singletons;
        for (int j = 1; j <= shape.order(); ++j) singletons.push_back({j});
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto haar = random_haar_state(shape, seed);
            const auto prod = random_product_haar_state(shape, singletons, seed);
            for (const auto& psi : {haar, prod}) {
                bool rank_one = true;
                for (int j = 1; j <= shape.order(); ++j) {
                    rank_one = rank_one &&
                               bipartition_factorable(psi, PartitionSpec({j}, shape.order()), 1e-9)
                                   .factorable;
                }
                CHECK(on_segre_variety(psi, 1e-9).on_variety == rank_one);
            }
        }
    }
}

TEST_CASE("degenerate modes are rejected") {
    const PureStateTensor psi(Shape({2, 1}), {1.0, 0.0}, NormPolicy::RequireNormalized);
    CHECK_THROWS_WITH_AS(enumerate_minors(psi, 1), doctest::Contains("DegenerateMode"), Error);
    CHECK_THROWS_WITH_AS(enumerate_minors(psi, 2), doctest::Contains("DegenerateMode"), Error);
    const PureStateTensor single(Shape({4}), {1.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_WITH_AS(all_minors(single), doctest::Contains("DegenerateMode"), Error);
}
