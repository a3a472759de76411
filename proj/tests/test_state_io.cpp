// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "segre/state_io.hpp"
#include "test_util.hpp"

using namespace segre;

TEST_CASE("state json round trip") {
    const auto psi = random_haar_state(Shape({2, 3}), 77);
    const std::string text = write_state_json(psi, 17);
    std::istringstream in(text);
    const auto back = read_state_json(in);
    CHECK(back.shape() == psi.shape());
    for (std::size_t i = 0; i < psi.amps().size(); ++i) {
        CHECK(std::abs(back.amps()[i] - psi.amps()[i]) <= 1e-15);
    }
}

TEST_CASE("normalize flag in the document") {
    std::istringstream in(R"({"dims":[2,2],"amps":[[1,0],[0,0],[0,0],[1,0]],"normalize":true})");
    const auto psi = read_state_json(in);
    CHECK(psi[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("unnormalized without the flag is rejected") {
    std::istringstream in(R"({"dims":[2,2],"amps":[[1,0],[0,0],[0,0],[1,0]]})");
    CHECK_THROWS_WITH_AS(read_state_json(in), doctest::Contains("NotNormalized"), Error);
    std::istringstream again(R"({"dims":[2,2],"amps":[[1,0],[0,0],[0,0],[1,0]]})");
    CHECK(read_state_json(again, /*force_normalize=*/true)[0].real() ==
          doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("malformed documents raise ParseError") {
    const char* bad[] = {
        "{ not json",
        R"({"amps":[[1,0]]})",
        R"({"dims":[2,2]})",
        R"({"dims":[2,2],"amps":[[1,0],[0,0],[0,0],1]})",
        R"({"dims":[2,2],"amps":[[1,0],[0,0],[0],[0,1]]})",
        R"({"dims":"x","amps":[]})",
    };
    for (const char* doc : bad) {
        std::istringstream in(doc);
        CHECK_THROWS_WITH_AS(read_state_json(in), doctest::Contains("ParseError"), Error);
    }
}

TEST_CASE("semantic errors keep their own codes") {
    std::istringstream len(R"({"dims":[2,2],"amps":[[1,0]]})");
    CHECK_THROWS_WITH_AS(read_state_json(len), doctest::Contains("LengthMismatch"), Error);
    std::istringstream zero(R"({"dims":[2],"amps":[[0,0],[0,0]],"normalize":true})");
    CHECK_THROWS_WITH_AS(read_state_json(zero), doctest::Contains("ZeroState"), Error);
}

TEST_CASE("serialization caps significant digits") {
    const PureStateTensor psi(Shape({2}), {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    const std::string text = write_state_json(psi, 12);
    CHECK(text.find("0.707106781187") != std::string::npos);
    CHECK(text.find("0.7071067811865476") == std::string::npos);
}
