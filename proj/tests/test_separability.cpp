// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "segre/separability.hpp"
#include "test_util.hpp"

using namespace segre;

namespace {

/// Phi+ (x) Phi+ on subsystems (1,2) and (3,4).
PureStateTensor two_bell_pairs() {
    std::vector<cplx> amps(16, cplx(0.0));
    const double half = 0.5;
    // (|11> + |22>)/sqrt2 twice: nonzero at (i1,i2,i3,i4) with i1=i2, i3=i4.
    for (int a : {0, 1}) {
        for (int b : {0, 1}) {
            amps[static_cast<std::size_t>(a * 8 + a * 4 + b * 2 + b)] = half;
        }
    }
    return PureStateTensor(Shape({2, 2, 2, 2}), std::move(amps));
}

} // namespace

TEST_CASE("partition canonicalization") {
    const PartitionSpec p({3, 4}, 4);
    CHECK(p.block() == std::vector<int>{1, 2});
    CHECK(p.complement() == std::vector<int>{3, 4});
    CHECK(p == PartitionSpec({1, 2}, 4));
    CHECK(PartitionSpec({2}, 3).block() == std::vector<int>{1, 3});
    CHECK_THROWS_WITH_AS(PartitionSpec({}, 3), doctest::Contains("EmptyPartition"), Error);
    CHECK_THROWS_WITH_AS(PartitionSpec({1, 2, 3}, 3), doctest::Contains("EmptyPartition"), Error);
    CHECK_THROWS_WITH_AS(PartitionSpec({0}, 3), doctest::Contains("EmptyPartition"), Error);
}

TEST_CASE("bipartition enumeration") {
    const auto parts = enumerate_bipartitions(4);
    REQUIRE(parts.size() == 7);
    const std::vector<std::vector<int>> expected = {
        {1}, {1, 2}, {1, 3}, {1, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(parts[i].block() == expected[i]);
    }
    CHECK(enumerate_bipartitions(2).size() == 1);
    CHECK(enumerate_bipartitions(5).size() == 15);
}

TEST_CASE("bipartition factorability") {
    SUBCASE("two bell pairs factor only across the matching cut") {
        const auto psi = two_bell_pairs();
        const auto matching = bipartition_factorable(psi, PartitionSpec({1, 2}, 4));
        CHECK(matching.factorable);
        CHECK(matching.second_singular_value < 1e-12);

        const auto crossing = bipartition_factorable(psi, PartitionSpec({1, 3}, 4));
        CHECK_FALSE(crossing.factorable);
        CHECK(crossing.second_singular_value == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("ghz against a single subsystem") {
        const auto verdict = bipartition_factorable(ghz_state(3), PartitionSpec({1}, 3));
        CHECK_FALSE(verdict.factorable);
        CHECK(verdict.second_singular_value ==
              doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    }
}

TEST_CASE("single-mode ideal evaluation") {
    SUBCASE("qubit attached to a bell pair") {
        // |1>_1 (x) Phi+_23: a_{1,1,1} = a_{1,2,2} = 1/sqrt2.
        const double s = 1.0 / std::sqrt(2.0);
        std::vector<cplx> amps(8, cplx(0.0));
        amps[0] = s;
        amps[3] = s;
        const PureStateTensor psi(Shape({2, 2, 2}), std::move(amps));

        const auto first = ideal_satisfied(psi, PartitionSpec({1}, 3));
        CHECK(first.satisfied);
        CHECK(first.max_minor_modulus < 1e-15);

        const auto second = ideal_satisfied(psi, PartitionSpec({2}, 3));
        CHECK_FALSE(second.satisfied);
        CHECK(second.max_minor_modulus == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("ghz fails every single-mode ideal at 1/2") {
        for (int j = 1; j <= 3; ++j) {
            const auto verdict = ideal_satisfied(ghz_state(3), PartitionSpec({j}, 3));
            CHECK_FALSE(verdict.satisfied);
            CHECK(verdict.max_minor_modulus == doctest::Approx(0.5).epsilon(1e-14));
        }
    }
    SUBCASE("product state satisfies all ideals") {
        const auto psi = random_product_haar_state(Shape({2, 2, 2}), {{1}, {2}, {3}}, 2);
        for (int j = 1; j <= 3; ++j) {
            CHECK(ideal_satisfied(psi, PartitionSpec({j}, 3)).satisfied);
        }
    }
    SUBCASE("non-singleton blocks are rejected") {
        CHECK_THROWS_WITH_AS(ideal_satisfied(ghz_state(4), PartitionSpec({1, 2}, 4)),
                             doctest::Contains("BadPartition"), Error);
    }
}

TEST_CASE("analyze") {
    SUBCASE("product of four qubits") {
        const auto psi =
            random_product_haar_state(Shape({2, 2, 2, 2}), {{1}, {2}, {3}, {4}}, 21);
        const auto report = analyze(psi);
        CHECK(report.fully_separable);
        CHECK(report.on_segre);
        CHECK(report.consistency_ok);
        REQUIRE(report.per_bipartition.size() == 7);
        for (const auto& entry : report.per_bipartition) CHECK(entry.factorable);
        CHECK(report.measure.value < 1e-9);
    }
    SUBCASE("two bell pairs: exactly one factorable cut, measure stays positive") {
        const auto report = analyze(two_bell_pairs());
        CHECK_FALSE(report.fully_separable);
        CHECK(report.consistency_ok);
        int factorable = 0;
        for (const auto& entry : report.per_bipartition) {
            if (entry.factorable) {
                ++factorable;
                CHECK(entry.part.block() == std::vector<int>{1, 2});
            }
        }
        CHECK(factorable == 1);
        CHECK(report.measure.value == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("ghz(4): no factorable cut") {
        const auto report = analyze(ghz_state(4));
        CHECK_FALSE(report.fully_separable);
        for (const auto& entry : report.per_bipartition) {
            CHECK_FALSE(entry.factorable);
            CHECK(entry.second_singular_value ==
                  doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
        }
    }
    SUBCASE("subsystem cap") {
        const auto psi = ghz_state(12);
        CHECK_THROWS_WITH_AS(analyze(psi), doctest::Contains("TooManySubsystems"), Error);
    }
}

TEST_CASE("threshold boundary behaviour") {
    // sqrt(1-e^2)|11> + e|22>: singular values are exactly (sqrt(1-e^2), e).
    auto nearly_product = [](double e) {
        return PureStateTensor(Shape({2, 2}),
                               {std::sqrt(1.0 - e * e), 0.0, 0.0, e});
    };
    const PartitionSpec cut({1}, 2);
    const auto below = bipartition_factorable(nearly_product(1e-10), cut, 1e-9);
    CHECK(below.factorable);
    CHECK(below.second_singular_value == doctest::Approx(1e-10).epsilon(1e-6));
    const auto above = bipartition_factorable(nearly_product(1e-8), cut, 1e-9);
    CHECK_FALSE(above.factorable);
    CHECK(above.second_singular_value == doctest::Approx(1e-8).epsilon(1e-6));
    // the minor route agrees on both sides: the single minor equals
    // e*sqrt(1-e^2)
    CHECK(ideal_satisfied(nearly_product(1e-10), cut, 1e-9).satisfied);
    CHECK_FALSE(ideal_satisfied(nearly_product(1e-8), cut, 1e-9).satisfied);
}

TEST_CASE("oracle agreement between ideal and svd routes") {
    for (const Shape& shape :
         {Shape({2, 2}), Shape({2, 2, 2}), Shape({2, 2, 2, 2}), Shape({2, 3, 2})}) {
        std::vector<std::vector<int>> singletons;
        for (int j = 1; j <= shape.order(); ++j) singletons.push_back({j});
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            const auto haar = random_haar_state(shape, seed);
            const auto prod = random_product_haar_state(shape, singletons, seed + 1000);
            for (const auto& psi : {haar, prod}) {
                for (int j = 1; j <= shape.order(); ++j) {
                    const PartitionSpec part({j}, shape.order());
                    CHECK(ideal_satisfied(psi, part).satisfied ==
                          bipartition_factorable(psi, part).factorable);
                }
            }
        }
    }
}

TEST_CASE("full-separability equivalence chain") {
    const MeasureConfig cfg{1.0, false};
    for (const Shape& shape : {Shape({2, 2}), Shape({2, 2, 2}), Shape({2, 2, 2, 2})}) {
        std::vector<std::vector<int>> singletons;
        for (int j = 1; j <= shape.order(); ++j) singletons.push_back({j});
        const double scale = std::sqrt(cfg.norm_const * shape.order());
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            for (const auto& psi : {random_haar_state(shape, seed),
                                    random_product_haar_state(shape, singletons, seed)}) {
                const auto report = analyze(psi, 1e-9, cfg);
                CHECK(report.consistency_ok);
                CHECK(report.fully_separable == report.on_segre);
                CHECK(report.fully_separable == (report.measure.value < 1e-9 * scale));
            }
        }
    }
}

TEST_CASE("permutation equivariance of the verdict table") {
    // Swap subsystems 1 and 3 of a tripartite state: the multiset of
    // (block size, factorable, sigma2) entries must be preserved and the
    // {1}<->{3} verdicts exchange.
    const auto psi = random_product_haar_state(Shape({2, 2, 2}), {{1, 2}, {3}}, 77);
    std::vector<cplx> swapped(8);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                swapped[static_cast<std::size_t>(c * 4 + b * 2 + a)] =
                    psi[a * 4 + b * 2 + c];
            }
        }
    }
    const PureStateTensor pi_psi(Shape({2, 2, 2}), std::move(swapped));

    const auto r1 = analyze(psi);
    const auto r2 = analyze(pi_psi);
    REQUIRE(r1.per_bipartition.size() == r2.per_bipartition.size());

    auto find = [](const SeparabilityReport& r, const std::vector<int>& block) {
        const PartitionSpec want(block, 3);
        for (const auto& e : r.per_bipartition) {
            if (e.part == want) return e;
        }
        REQUIRE(false);
        return r.per_bipartition.front();
    };
    // {3}|{1,2} is factorable for psi; after the swap it is {1}|{2,3}.
    CHECK(find(r1, {3}).factorable);
    CHECK(find(r2, {1}).factorable);
    CHECK_FALSE(find(r1, {1}).factorable);
    CHECK_FALSE(find(r2, {3}).factorable);
    CHECK(find(r1, {3}).second_singular_value ==
          doctest::Approx(find(r2, {1}).second_singular_value).epsilon(1e-12));
    CHECK(find(r1, {2}).second_singular_value ==
          doctest::Approx(find(r2, {2}).second_singular_value).epsilon(1e-12));
}
