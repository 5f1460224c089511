// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

// Command line front-end over the logsurf C interface.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logsurf/logsurf.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitInvalid = 2;

struct Invocation {
    std::string command;
    json inputs = json::object();
    std::function<logsurf_status(char**)> run;
    // Optional CSV side output.
    std::string csv_path;
    std::function<logsurf_status(char**)> csv;
};

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("scene", "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

// Owns a parsed scene for the lifetime of the process.
struct SceneHandle {
    logsurf_scene* ptr = nullptr;
    ~SceneHandle() { logsurf_scene_free(ptr); }
};

std::string status_name(logsurf_status s) {
    switch (s) {
        case LOGSURF_OK: return "ok";
        case LOGSURF_MATH_SIGNAL: return "math_signal";
        case LOGSURF_INVALID_INPUT: return "invalid_input";
        default: return "internal_error";
    }
}

int exit_code(logsurf_status s) {
    switch (s) {
        case LOGSURF_OK: return 0;
        case LOGSURF_MATH_SIGNAL: return 1;
        case LOGSURF_INVALID_INPUT: return kExitInvalid;
        default: return 3;
    }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& field) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(field, "expected comma separated integers, got '" + text + "'");
        }
    }
    return out;
}

int execute(const Invocation& inv, bool timing) {
    const auto start = std::chrono::steady_clock::now();
    char* out = nullptr;
    const logsurf_status status = inv.run(&out);

    json report;
    report["command"] = inv.command;
    report["inputs"] = inv.inputs;
    report["inputs_digest"] = hex(fnv1a(inv.command + "\n" + inv.inputs.dump()));
    report["status"] = status_name(status);
    if (out) {
        report["result"] = json::parse(out);
        logsurf_string_free(out);
    }
    if (status == LOGSURF_INVALID_INPUT || status == LOGSURF_INTERNAL_ERROR)
        report["error"] = logsurf_last_error();

    logsurf_status final_status = status;
    if (status == LOGSURF_OK && inv.csv) {
        char* csv = nullptr;
        const logsurf_status cs = inv.csv(&csv);
        if (cs == LOGSURF_OK) {
            std::ofstream file(inv.csv_path, std::ios::binary);
            if (!file) {
                report["status"] = status_name(LOGSURF_INVALID_INPUT);
                report["error"] = "csv: cannot write '" + inv.csv_path + "'";
                final_status = LOGSURF_INVALID_INPUT;
            } else {
                file << csv;
                report["csv"] = inv.csv_path;
            }
        } else {
            report["status"] = status_name(cs);
            report["error"] = std::string("csv: ") + logsurf_last_error();
            final_status = cs;
        }
        logsurf_string_free(csv);
    }

    std::cout << report.dump(2) << "\n";
    if (report.contains("error")) std::cerr << "logsurf: " << report["error"].get<std::string>() << "\n";
    if (timing) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cerr << "wall time: " << elapsed.count() << " s\n";
    }
    return exit_code(final_status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection theory and volume computations for log surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    bool timing = false;
    app.add_flag("--timing", timing, "Print wall time to stderr");
    app.set_version_flag("--version", std::string(logsurf_version()));

    Invocation inv;
    SceneHandle scene;
    std::string scene_path;
    auto load_scene = [&] {
        const std::string text = read_input(scene_path);
        if (logsurf_scene_parse(text.c_str(), &scene.ptr) != LOGSURF_OK)
            throw CLI::ValidationError("scene", logsurf_last_error());
        inv.inputs["scene"] = json::parse(text, nullptr, false);
    };

    // volume
    auto* volume = app.add_subcommand("volume", "Volume of K+B with its certificate");
    volume->add_option("scene", scene_path, "Scene JSON file ('-' for stdin)")->required();
    volume->callback([&] {
        load_scene();
        inv.command = "volume";
        inv.run = [&](char** out) { return logsurf_scene_volume(scene.ptr, out); };
    });

    // zariski
    std::string divisor = "K+B";
    auto* zar = app.add_subcommand("zariski", "Zariski decomposition relative to the configuration");
    zar->add_option("scene", scene_path, "Scene JSON file")->required();
    zar->add_option("--divisor", divisor, "K+B or name:coef,... over K, curves and generators");
    zar->callback([&] {
        load_scene();
        inv.command = "zariski";
        inv.inputs["divisor"] = divisor;
        inv.run = [&](char** out) { return logsurf_scene_zariski(scene.ptr, divisor.c_str(), out); };
    });

    // lc-check
    auto* lc = app.add_subcommand("lc-check", "Log canonical check of an snc pair");
    lc->add_option("scene", scene_path, "Scene JSON file")->required();
    lc->callback([&] {
        load_scene();
        inv.command = "lc-check";
        inv.run = [&](char** out) { return logsurf_scene_lc_check(scene.ptr, out); };
    });

    // different
    std::string chain, hits;
    auto* diff = app.add_subcommand("different", "Different coefficient along a Hirzebruch-Jung chain");
    diff->add_option("--chain", chain, "Self-intersection negatives, e.g. 2,3,6 (empty for a smooth point)");
    diff->add_option("--hits", hits, "Boundary hits i:mult:b,...");
    diff->callback([&] {
        inv.command = "different";
        inv.inputs["chain"] = chain;
        inv.inputs["hits"] = hits;
        inv.run = [&](char** out) { return logsurf_different(chain.c_str(), hits.c_str(), out); };
    });

    // tm
    std::string set = "C2";
    int m = 1;
    auto* tm = app.add_subcommand("tm", "t_m: the largest (1-b)/{mb} over the set, and at least 1");
    tm->add_option("--set", set, "C0, C1, C2 or a JSON coefficient set");
    tm->add_option("--m", m, "Index m")->required();
    tm->callback([&] {
        inv.command = "tm";
        inv.inputs["set"] = set;
        inv.inputs["m"] = m;
        inv.run = [&](char** out) { return logsurf_tm(set.c_str(), m, out); };
    });

    // sums
    int target = 2, max_len = 8;
    auto* sums = app.add_subcommand("sums", "Tuples with sum of (1 - 1/n_j) equal to the target");
    sums->add_option("--target", target, "1 or 2")->required();
    sums->add_option("--max-len", max_len, "Maximal tuple length");
    sums->callback([&] {
        inv.command = "sums";
        inv.inputs["target"] = target;
        inv.inputs["max_len"] = max_len;
        inv.run = [&](char** out) { return logsurf_sums(target, max_len, out); };
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Table of volume bounds");
    bounds->callback([&] {
        inv.command = "bounds";
        inv.run = [](char** out) { return logsurf_bounds(out); };
    });

    // construct
    auto* construct = app.add_subcommand("construct", "Explicit families of log surfaces");
    construct->require_subcommand(1);
    construct->fallthrough();
    bool emit = false;
    int n = 0, s = 1;
    std::string s_list, b1, b2, targets, approach = "standard", csv_path;

    auto* even = construct->add_subcommand("even", "Quadric with 3 + n rulings, volume 2(n-2)");
    even->add_option("--n", n, "Number of rulings in the second family")->required();
    even->add_flag("--emit-scene", emit, "Embed the constructed scene");
    even->callback([&] {
        inv.command = "construct even";
        inv.inputs["n"] = n;
        inv.inputs["emit_scene"] = emit;
        inv.run = [&](char** out) { return logsurf_construct_even(n, emit, out); };
    });

    auto* odd = construct->add_subcommand("odd", "First Hirzebruch surface with n fibres, volume 2n-3");
    odd->add_option("--n", n, "Number of fibres")->required();
    odd->add_flag("--emit-scene", emit, "Embed the constructed scene");
    odd->callback([&] {
        inv.command = "construct odd";
        inv.inputs["n"] = n;
        inv.inputs["emit_scene"] = emit;
        inv.run = [&](char** out) { return logsurf_construct_odd(n, emit, out); };
    });

    auto* nklt = construct->add_subcommand("nklt", "Chain of s blow-ups at a node of a coefficient-1 curve");
    nklt->add_option("scene", scene_path, "Scene JSON file")->required();
    nklt->add_option("--b1", b1, "Curve with coefficient 1")->required();
    nklt->add_option("--b2", b2, "Second curve through the node")->required();
    nklt->add_option("--s", s, "Chain length")->required();
    nklt->add_option("--csv", csv_path, "Write the table for 1..s to this file");
    nklt->add_flag("--emit-scene", emit, "Embed the constructed scene");
    nklt->callback([&] {
        load_scene();
        inv.command = "construct nklt";
        inv.inputs["b1"] = b1;
        inv.inputs["b2"] = b2;
        inv.inputs["s"] = s;
        inv.inputs["emit_scene"] = emit;
        inv.run = [&](char** out) {
            return logsurf_construct_nklt(scene.ptr, b1.c_str(), b2.c_str(), s, emit, out);
        };
        if (!csv_path.empty()) {
            inv.csv_path = csv_path;
            inv.csv = [&](char** out) {
                return logsurf_construct_nklt_table(scene.ptr, b1.c_str(), b2.c_str(), s, out);
            };
        }
    });

    std::vector<int> lengths;
    auto* iter = construct->add_subcommand("iterated", "Lines in the plane with chains at the nodes on the last line");
    iter->add_option("--n", n, "Number of lines")->required();
    iter->add_option("--s", s_list, "Chain lengths s_1,...,s_k")->required();
    iter->add_flag("--emit-scene", emit, "Embed the constructed scene");
    iter->callback([&] {
        lengths = parse_int_list(s_list, "--s");
        inv.command = "construct iterated";
        inv.inputs["n"] = n;
        inv.inputs["s"] = lengths;
        inv.inputs["emit_scene"] = emit;
        inv.run = [&](char** out) {
            return logsurf_construct_iterated(n, lengths.data(), lengths.size(), emit, out);
        };
    });

    auto* perturb = construct->add_subcommand("perturb", "Lower boundary coefficients along an approach sequence");
    perturb->add_option("scene", scene_path, "Scene JSON file")->required();
    perturb->add_option("--targets", targets, "Comma separated boundary curves")->required();
    perturb->add_option("--s", s, "Index in the approach sequence")->required();
    perturb->add_option("--approach", approach, "standard (1-1/s) or scaled (b(1-1/s))")
        ->check(CLI::IsMember({"standard", "scaled"}));
    perturb->add_option("--csv", csv_path, "Write the table for 2..s to this file");
    perturb->add_flag("--emit-scene", emit, "Embed the constructed scene");
    perturb->callback([&] {
        load_scene();
        inv.command = "construct perturb";
        inv.inputs["targets"] = targets;
        inv.inputs["approach"] = approach;
        inv.inputs["s"] = s;
        inv.inputs["emit_scene"] = emit;
        inv.run = [&](char** out) {
            return logsurf_construct_perturb(scene.ptr, targets.c_str(), approach.c_str(), s, emit, out);
        };
        if (!csv_path.empty()) {
            inv.csv_path = csv_path;
            inv.csv = [&](char** out) {
                return logsurf_construct_perturb_table(scene.ptr, targets.c_str(), approach.c_str(), 2, s, out);
            };
        }
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->callback([&] {
        inv.command = "verify";
        inv.run = [](char** out) { return logsurf_verify(out); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }
    return execute(inv, timing);
}
