// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "segre/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace segre {

namespace {

double round_digits(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

} // namespace

PureStateTensor read_state_json(std::istream& in, bool force_normalize) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }

    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("amps")) {
        throw Error(ErrorCode::ParseError, "state document needs \"dims\" and \"amps\"");
    }
    std::vector<int> dims;
    std::vector<cplx> amps;
    bool normalize = force_normalize;
    try {
        dims = doc.at("dims").get<std::vector<int>>();
        for (const auto& pair : doc.at("amps")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw Error(ErrorCode::ParseError, "amplitudes must be [re, im] pairs");
            }
            amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        if (doc.contains("normalize")) {
            normalize = normalize || doc.at("normalize").get<bool>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return PureStateTensor(Shape(dims), std::move(amps),
                           normalize ? NormPolicy::AutoNormalize : NormPolicy::RequireNormalized);
}

PureStateTensor read_state_file(const std::string& path, bool force_normalize) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    return read_state_json(in, force_normalize);
}

std::string write_state_json(const PureStateTensor& state, int digits) {
    nlohmann::ordered_json doc;
    doc["dims"] = state.shape().dims();
    auto& amps = doc["amps"] = nlohmann::ordered_json::array();
    for (const cplx& a : state.amps()) {
        amps.push_back({round_digits(a.real(), digits), round_digits(a.imag(), digits)});
    }
    return doc.dump(2) + "\n";
}

void write_state_file(const PureStateTensor& state, const std::string& path, int digits) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::ParseError, "cannot open " + path + " for writing");
    }
    out << write_state_json(state, digits);
}

} // namespace segre
