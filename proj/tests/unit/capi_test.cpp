// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

#include "logsurf/logsurf.h"

using json = nlohmann::json;

namespace {

struct Result {
    logsurf_status status;
    json doc;
};

template <typename Fn>
Result call(Fn&& fn) {
    char* out = nullptr;
    const logsurf_status st = fn(&out);
    Result r{st, nullptr};
    if (out) {
        r.doc = json::parse(out);
        logsurf_string_free(out);
    }
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), {}};
}

struct Scene {
    logsurf_scene* ptr = nullptr;
    explicit Scene(const std::string& text) { REQUIRE(logsurf_scene_parse(text.c_str(), &ptr) == LOGSURF_OK); }
    ~Scene() { logsurf_scene_free(ptr); }
};

const std::string data_dir = LOGSURF_TEST_DATA;

}  // namespace

TEST_CASE("version and error text") {
    CHECK(std::string(logsurf_version()) == "1.0.0");
    logsurf_scene* s = nullptr;
    CHECK(logsurf_scene_parse("{\"base\": \"P3\"}", &s) == LOGSURF_INVALID_INPUT);
    CHECK(s == nullptr);
    CHECK(std::string(logsurf_last_error()).find("base") != std::string::npos);
    CHECK(logsurf_scene_parse(nullptr, &s) == LOGSURF_INVALID_INPUT);
}

TEST_CASE("volume through the C interface") {
    Scene s(read_file(data_dir + "/quadric_even3.json"));
    const auto r = call([&](char** out) { return logsurf_scene_volume(s.ptr, out); });
    CHECK(r.status == LOGSURF_OK);
    CHECK(r.doc["volume"] == "2");
    CHECK(r.doc["big"] == true);
}

TEST_CASE("lc verdicts through the C interface") {
    Scene bad(read_file(data_dir + "/four_lines_not_lc.json"));
    const auto r = call([&](char** out) { return logsurf_scene_lc_check(bad.ptr, out); });
    CHECK(r.status == LOGSURF_MATH_SIGNAL);
    CHECK(r.doc["verdict"] == "not_lc");
    CHECK(r.doc["signal"] == "not_lc");

    Scene lc(read_file(data_dir + "/four_lines_lc.json"));
    CHECK(call([&](char** out) { return logsurf_scene_lc_check(lc.ptr, out); }).doc["verdict"] == "lc");
    Scene klt(read_file(data_dir + "/four_lines_klt.json"));
    CHECK(call([&](char** out) { return logsurf_scene_lc_check(klt.ptr, out); }).doc["verdict"] == "klt");
}

TEST_CASE("Zariski through the C interface") {
    Scene s(read_file(data_dir + "/blowup_plane.json"));
    const auto r = call([&](char** out) { return logsurf_scene_zariski(s.ptr, "L:1,E:1", out); });
    CHECK(r.status == LOGSURF_OK);
    CHECK(r.doc["positive"] == json{{"L", "1"}});
    CHECK(r.doc["negative"] == json{{"E", "1"}});
    CHECK(r.doc["positive_square"] == "1");

    const auto bad = call([&](char** out) { return logsurf_scene_zariski(s.ptr, "L:-1", out); });
    CHECK(bad.status == LOGSURF_MATH_SIGNAL);
    CHECK(bad.doc["signal"] == "no_configuration_zariski");

    CHECK(call([&](char** out) { return logsurf_scene_zariski(s.ptr, "Q:1", out); }).status == LOGSURF_INVALID_INPUT);
}

TEST_CASE("numeric entry points") {
    auto d = call([](char** out) { return logsurf_different("2,2", "", out); });
    CHECK(d.status == LOGSURF_OK);
    CHECK(d.doc["b_prime"] == "2/3");
    CHECK(d.doc["standard"]["n"] == "3");

    auto bad = call([](char** out) { return logsurf_different("2,3,6", "1:1:1/2", out); });
    CHECK(bad.status == LOGSURF_MATH_SIGNAL);
    CHECK(bad.doc["signal"] == "not_lc");

    CHECK(call([](char** out) { return logsurf_different("1", "", out); }).status == LOGSURF_INVALID_INPUT);
    CHECK(call([](char** out) { return logsurf_tm("C2", 9, out); }).doc["t_m"] == "1");
    CHECK(call([](char** out) { return logsurf_tm("{\"finite\": [\"3/5\"]}", 2, out); }).doc["t_m"] == "2");
    CHECK(call([](char** out) { return logsurf_sums(2, 8, out); }).doc["solutions"].size() == 4);

    const auto b = call([](char** out) { return logsurf_bounds(out); });
    bool found = false;
    for (const auto& e : b.doc["bounds"]) found = found || e["value"] == "1/86436";
    CHECK(found);
}

TEST_CASE("constructions through the C interface") {
    CHECK(call([](char** out) { return logsurf_construct_even(4, 0, out); }).doc["volume"] == "4");
    CHECK(call([](char** out) { return logsurf_construct_odd(7, 0, out); }).doc["volume"] == "11");
    CHECK(call([](char** out) { return logsurf_construct_even(2, 0, out); }).status == LOGSURF_INVALID_INPUT);

    const int s[] = {4, 4, 4};
    CHECK(call([&](char** out) { return logsurf_construct_iterated(4, s, 3, 0, out); }).doc["self_intersection"] ==
          "1/4");
    const int flat[] = {2, 2, 2};
    CHECK(call([&](char** out) { return logsurf_construct_iterated(4, flat, 3, 0, out); }).status ==
          LOGSURF_MATH_SIGNAL);

    Scene base(read_file(data_dir + "/quadric_even3.json"));
    const auto n = call([&](char** out) { return logsurf_construct_nklt(base.ptr, "H1", "V1", 4, 0, out); });
    CHECK(n.doc["self_intersection"] == "7/4");
    CHECK(n.doc["exceptional"][3]["pairing"] == "1/4");

    char* csv = nullptr;
    REQUIRE(logsurf_construct_nklt_table(base.ptr, "H1", "V1", 3, &csv) == LOGSURF_OK);
    CHECK(std::string(csv) == "s,volume,volume_decimal\n1,1,1\n2,3/2,1.5\n3,5/3,1.66666666667\n");
    logsurf_string_free(csv);

    const auto p = call([&](char** out) { return logsurf_construct_perturb(base.ptr, "H1,V1", "standard", 6, 0, out); });
    CHECK(p.doc["volume"] == "25/18");
}

TEST_CASE("emitted scenes reparse to the same configuration") {
    Scene base(read_file(data_dir + "/quadric_even3.json"));
    const int s[] = {2, 3, 4, 5};
    const std::vector<Result> built = {
        call([](char** out) { return logsurf_construct_even(5, 1, out); }),
        call([](char** out) { return logsurf_construct_odd(4, 1, out); }),
        call([&](char** out) { return logsurf_construct_nklt(base.ptr, "H2", "V3", 5, 1, out); }),
        call([&](char** out) { return logsurf_construct_iterated(5, s, 4, 1, out); }),
        call([&](char** out) { return logsurf_construct_perturb(base.ptr, "H1", "scaled", 3, 1, out); }),
    };
    for (const auto& b : built) {
        REQUIRE(b.status == LOGSURF_OK);
        const std::string text = b.doc["scene"].dump();
        Scene once(text);
        char* emitted = nullptr;
        REQUIRE(logsurf_scene_emit(once.ptr, &emitted) == LOGSURF_OK);
        Scene twice(emitted);
        logsurf_string_free(emitted);
        const auto a = call([&](char** out) { return logsurf_scene_summary(once.ptr, out); });
        const auto c = call([&](char** out) { return logsurf_scene_summary(twice.ptr, out); });
        CHECK(a.doc == c.doc);
        CHECK(a.doc["gram"].size() == a.doc["basis"].size());
    }
}

TEST_CASE("null handles are rejected") {
    CHECK(call([](char** out) { return logsurf_scene_volume(nullptr, out); }).status == LOGSURF_INVALID_INPUT);
}
