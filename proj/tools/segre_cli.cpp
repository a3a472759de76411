// Copyright 2026 The segre Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file segre_cli.cpp
 * @brief Command-line front end: analyze state files, list minors, emit
 *        ideal generators, and generate fixture states.
 *
 * Exit codes: 0 = fully separable (or command succeeded), 1 = entangled
 * (analyze only), 2 = any input or usage error.
 */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "segre/ideal.hpp"
#include "segre/state_io.hpp"

namespace {

using namespace segre;

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

std::string fmt_complex(const cplx& z) {
    std::string s = fmt12(z.real());
    s += (z.imag() < 0.0 ? "-" : "+");
    s += fmt12(std::abs(z.imag()));
    s += "i";
    return s;
}

std::string fmt_block(const std::vector<int>& block) {
    std::string s = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(block[i]);
    }
    return s + "}";
}

std::string fmt_dims(const std::vector<int>& dims) {
    std::string s = "(";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + ")";
}

std::vector<int> parse_dims(const std::string& txt) {
    std::vector<int> dims;
    std::stringstream ss(txt);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            dims.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad dimension list '" + txt + "'");
        }
    }
    if (dims.empty()) {
        throw Error(ErrorCode::ParseError, "empty dimension list");
    }
    return dims;
}

struct AnalyzeOpts {
    std::string file;
    double eps = kDefaultEps;
    double norm_const = 1.0;
    bool normalize = false;
    bool json = false;
};

int cmd_analyze(const AnalyzeOpts& opt) {
    const PureStateTensor state = read_state_file(opt.file, opt.normalize);
    const MeasureConfig cfg{opt.norm_const, true};
    const SeparabilityReport report = analyze(state, opt.eps, cfg);
    std::optional<MeasureResult> conc;
    if (state.order() == 2) conc = concurrence_bipartite(state, cfg);

    if (opt.json) {
        nlohmann::ordered_json doc;
        doc["dims"] = state.shape().dims();
        doc["eps"] = opt.eps;
        doc["norm_const"] = opt.norm_const;
        doc["fully_separable"] = report.fully_separable;
        doc["on_segre_variety"] = report.on_segre;
        doc["consistency_ok"] = report.consistency_ok;
        nlohmann::ordered_json measure;
        measure["convention"] = "all-modes";
        measure["value"] = round12(report.measure.value);
        auto& pm = measure["per_mode"] = nlohmann::ordered_json::array();
        for (const auto& [mode, partial] : report.measure.per_mode) {
            pm.push_back({{"mode", mode}, {"sum4", round12(partial)}});
        }
        doc["measure"] = std::move(measure);
        if (conc) {
            doc["concurrence"] = {{"convention", "bipartite"}, {"value", round12(conc->value)}};
        }
        auto& cuts = doc["bipartitions"] = nlohmann::ordered_json::array();
        for (const auto& entry : report.per_bipartition) {
            cuts.push_back({{"block", entry.part.block()},
                            {"complement", entry.part.complement()},
                            {"factorable", entry.factorable},
                            {"second_singular_value", round12(entry.second_singular_value)},
                            {"max_minor_modulus", round12(entry.max_minor_modulus)}});
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "state: dims " << fmt_dims(state.shape().dims()) << ", "
                  << state.shape().total_dim() << " amplitudes\n";
        std::cout << "measure E (all-modes convention, norm-const " << fmt12(opt.norm_const)
                  << "): " << fmt12(report.measure.value) << "\n";
        for (const auto& [mode, partial] : report.measure.per_mode) {
            std::cout << "  mode " << mode << " partial (4*sum|minor|^2): " << fmt12(partial)
                      << "\n";
        }
        if (conc) {
            std::cout << "concurrence (bipartite convention): " << fmt12(conc->value) << "\n";
        }
        std::cout << "bipartitions (eps = " << fmt12(opt.eps) << "):\n";
        for (const auto& entry : report.per_bipartition) {
            std::cout << "  " << fmt_block(entry.part.block()) << " | "
                      << fmt_block(entry.part.complement()) << "  "
                      << (entry.factorable ? "factorable" : "entangled ")
                      << "  sigma2 = " << fmt12(entry.second_singular_value)
                      << "  max|minor| = " << fmt12(entry.max_minor_modulus) << "\n";
        }
        std::cout << "fully separable: " << (report.fully_separable ? "yes" : "no") << "\n";
        std::cout << "segre minor test agrees: " << (report.consistency_ok ? "yes" : "no") << "\n";
    }
    if (!report.consistency_ok) {
        std::cerr << "warning: SVD and minor separability tests disagree at this tolerance\n";
    }
    return report.fully_separable ? 0 : 1;
}

struct MinorsOpts {
    std::string file;
    int mode = 0; // 0 = all modes
    bool nonzero = false;
    double eps = kDefaultEps;
    bool normalize = false;
};

int cmd_minors(const MinorsOpts& opt) {
    const PureStateTensor state = read_state_file(opt.file, opt.normalize);
    std::vector<MinorValue> minors;
    if (opt.mode > 0) {
        minors = enumerate_minors(state, opt.mode);
    } else {
        minors = all_minors(state);
    }
    std::cout << "mode  rows    cols    value\n";
    std::size_t shown = 0;
    for (const MinorValue& mv : minors) {
        if (opt.nonzero && std::abs(mv.value) < opt.eps) continue;
        std::cout << mv.id.mode << "     (" << mv.id.row_k << "," << mv.id.row_l << ")   ("
                  << mv.id.col_c << "," << mv.id.col_cp << ")   " << fmt_complex(mv.value)
                  << "\n";
        ++shown;
    }
    std::cout << "# " << shown << " of " << minors.size() << " minors shown\n";
    return 0;
}

struct IdealOpts {
    std::string dims_txt;
    int mode = 0;
    bool segre = false;
    std::string format = "plain";
    std::string out;
};

int cmd_ideal(const IdealOpts& opt) {
    const Shape shape(parse_dims(opt.dims_txt));
    if (opt.segre == (opt.mode > 0)) {
        throw Error(ErrorCode::BadConfig, "choose exactly one of --segre and --mode");
    }
    RenderFormat format;
    if (opt.format == "plain") {
        format = RenderFormat::PlainText;
    } else if (opt.format == "latex") {
        format = RenderFormat::LatexLike;
    } else if (opt.format == "json") {
        format = RenderFormat::MachineJSON;
    } else {
        throw Error(ErrorCode::BadConfig, "unknown format '" + opt.format + "'");
    }
    const IdealGenerators ideal = opt.segre ? segre_ideal(shape) : mode_ideal(shape, opt.mode);
    const std::string text = render(ideal, format);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out);
        if (!f) throw Error(ErrorCode::ParseError, "cannot open " + opt.out + " for writing");
        f << text;
    }
    return 0;
}

struct GenOpts {
    std::string kind;
    std::string arg;
    std::uint64_t seed = 0;
    std::string out;
};

int parse_count(const std::string& txt, const char* what) {
    try {
        return std::stoi(txt);
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError,
                    std::string("expected ") + what + ", got '" + txt + "'");
    }
}

int cmd_gen(const GenOpts& opt) {
    std::optional<PureStateTensor> state;
    if (opt.kind == "bell") {
        state = bell_state(opt.arg.empty() ? 1 : parse_count(opt.arg, "a Bell index 1..4"));
    } else if (opt.kind == "ghz") {
        state = ghz_state(parse_count(opt.arg, "a subsystem count"));
    } else if (opt.kind == "w") {
        state = w_state(parse_count(opt.arg, "a subsystem count"));
    } else if (opt.kind == "haar") {
        state = random_haar_state(Shape(parse_dims(opt.arg)), opt.seed);
    } else if (opt.kind == "product") {
        const Shape shape(parse_dims(opt.arg));
        std::vector<std::vector<int>> blocks;
        for (int j = 1; j <= shape.order(); ++j) blocks.push_back({j});
        state = random_product_haar_state(shape, blocks, opt.seed);
    } else {
        throw Error(ErrorCode::BadConfig,
                    "unknown kind '" + opt.kind + "' (want bell, ghz, w, haar, product)");
    }
    write_state_file(*state, opt.out);
    std::cout << "wrote " << opt.out << " (dims " << fmt_dims(state->shape().dims()) << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement analysis of pure multipartite states via 2x2 minors"};
    app.require_subcommand(1);

    AnalyzeOpts analyze_opts;
    auto* analyze_cmd = app.add_subcommand("analyze", "Separability report for a state file");
    analyze_cmd->add_option("file", analyze_opts.file, "state JSON file")->required();
    analyze_cmd->add_option("--eps", analyze_opts.eps, "vanishing threshold");
    analyze_cmd->add_option("--norm-const", analyze_opts.norm_const, "measure normalization constant");
    analyze_cmd->add_flag("--normalize", analyze_opts.normalize, "rescale input to unit norm");
    analyze_cmd->add_flag("--json", analyze_opts.json, "machine-readable report");

    MinorsOpts minors_opts;
    auto* minors_cmd = app.add_subcommand("minors", "List 2x2 minors of the unfoldings");
    minors_cmd->add_option("file", minors_opts.file, "state JSON file")->required();
    minors_cmd->add_option("--mode", minors_opts.mode, "restrict to one subsystem (default: all)");
    minors_cmd->add_flag("--nonzero", minors_opts.nonzero, "only minors with |value| >= eps");
    minors_cmd->add_option("--eps", minors_opts.eps, "threshold for --nonzero");
    minors_cmd->add_flag("--normalize", minors_opts.normalize, "rescale input to unit norm");

    IdealOpts ideal_opts;
    auto* ideal_cmd = app.add_subcommand("ideal", "Print symbolic ideal generators");
    ideal_cmd->add_option("--dims", ideal_opts.dims_txt, "comma-separated dimensions")->required();
    ideal_cmd->add_option("--mode", ideal_opts.mode, "per-subsystem ideal for this mode");
    ideal_cmd->add_flag("--segre", ideal_opts.segre, "deduplicated union over all modes");
    ideal_cmd->add_option("--format", ideal_opts.format, "plain | latex | json");
    ideal_cmd->add_option("--out", ideal_opts.out, "write to file instead of stdout");

    GenOpts gen_opts;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a state file");
    gen_cmd->add_option("kind", gen_opts.kind, "bell | ghz | w | haar | product")->required();
    gen_cmd->add_option("arg", gen_opts.arg, "Bell index, subsystem count, or dims");
    gen_cmd->add_option("--seed", gen_opts.seed, "PRNG seed for haar/product");
    gen_cmd->add_option("--out", gen_opts.out, "output path")->required();

    try {
        app.parse(argc, argv);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_opts);
        if (minors_cmd->parsed()) return cmd_minors(minors_opts);
        if (ideal_cmd->parsed()) return cmd_ideal(ideal_opts);
        if (gen_cmd->parsed()) return cmd_gen(gen_opts);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
