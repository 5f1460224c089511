// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/logsurf.h"

#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "logsurf/chains.hpp"
#include "logsurf/coeffsets.hpp"
#include "logsurf/constructions.hpp"
#include "logsurf/errors.hpp"
#include "logsurf/scene.hpp"
#include "logsurf/surfaces.hpp"
#include "logsurf/verify.hpp"

struct logsurf_scene {
    logsurf::LogPair pair;
};

namespace {

using json = nlohmann::ordered_json;
using namespace logsurf;

thread_local std::string last_error;

// Result of a computation that finished but hit a mathematical signal.
struct Signalled {
    json doc;
    MathSignal::Kind kind;
};

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
logsurf_status guarded(char** out, Fn&& fn) {
    last_error.clear();
    if (out) *out = nullptr;
    try {
        std::string text = fn();
        if (out) *out = dup(text);
        return LOGSURF_OK;
    } catch (Signalled& s) {
        s.doc["signal"] = to_string(s.kind);
        if (out) *out = dup(s.doc.dump(2));
        last_error = to_string(s.kind);
        return LOGSURF_MATH_SIGNAL;
    } catch (const MathSignal& e) {
        json doc{{"signal", to_string(e.kind())}, {"message", e.what()}};
        if (out) *out = dup(doc.dump(2));
        last_error = e.what();
        return LOGSURF_MATH_SIGNAL;
    } catch (const InvalidInput& e) {
        last_error = e.what();
        return LOGSURF_INVALID_INPUT;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return LOGSURF_INTERNAL_ERROR;
    }
}

const LogPair& pair_of(const logsurf_scene* scene) {
    if (!scene) throw InvalidInput("scene handle is null");
    return scene->pair;
}

std::string str_or_empty(const char* s) { return s ? s : ""; }

json class_json(const SurfaceConfig& s, const ClassVector& v) {
    json out = json::object();
    for (std::size_t i = 0; i < v.size() && i < s.basis().size(); ++i)
        if (!v[i].is_zero()) out[s.basis()[i]] = v[i].str();
    return out;
}

json divisor_json(const Divisor& d) {
    json out = json::object();
    for (const auto& [name, c] : d) out[name] = c.str();
    return out;
}

json certificate_json(const VolumeCertificate& c) {
    return json{{"config_nef", c.config_nef},
                {"contracted", c.contracted},
                {"null_curves", c.null_curves},
                {"assumption", "all K+B-negative curves are tracked configuration curves"},
                {"ampleness", "unverified"}};
}

json scene_json(const LogPair& pair) { return json::parse(emit_scene(pair)); }

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

Approach parse_approach(const std::string& text) {
    if (text.empty() || text == "standard") return {Approach::Kind::StandardToOne, {}};
    if (text == "scaled") return {Approach::Kind::Scaled, {}};
    throw InvalidInput("approach: expected 'standard' or 'scaled', got '" + text + "'");
}

}  // namespace

extern "C" {

const char* logsurf_version(void) { return "1.0.0"; }

const char* logsurf_last_error(void) { return last_error.c_str(); }

void logsurf_string_free(char* s) { std::free(s); }

logsurf_status logsurf_scene_parse(const char* text, logsurf_scene** out) {
    last_error.clear();
    if (!out) {
        last_error = "output handle is null";
        return LOGSURF_INVALID_INPUT;
    }
    *out = nullptr;
    try {
        if (!text) throw InvalidInput("scene: text is null");
        *out = new logsurf_scene{parse_scene(text)};
        return LOGSURF_OK;
    } catch (const InvalidInput& e) {
        last_error = e.what();
        return LOGSURF_INVALID_INPUT;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return LOGSURF_INTERNAL_ERROR;
    }
}

void logsurf_scene_free(logsurf_scene* scene) { delete scene; }

logsurf_status logsurf_scene_emit(const logsurf_scene* scene, char** out_json) {
    return guarded(out_json, [&] { return emit_scene(pair_of(scene)); });
}

logsurf_status logsurf_scene_summary(const logsurf_scene* scene, char** out_json) {
    return guarded(out_json, [&] {
        const LogPair& p = pair_of(scene);
        const SurfaceConfig& s = p.surface;
        const Matrix g = s.gram();
        json gram = json::array();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(g(i, j).str());
            gram.push_back(row);
        }
        json curves = json::object();
        for (const auto& c : s.curves()) curves[c.name] = class_json(s, s.to_rational(c.cls));
        json doc{{"basis", s.basis()},
                 {"gram", gram},
                 {"canonical", class_json(s, s.canonical_class())},
                 {"curves", curves},
                 {"boundary", divisor_json(p.boundary)}};
        return doc.dump(2);
    });
}

logsurf_status logsurf_scene_volume(const logsurf_scene* scene, char** out_json) {
    return guarded(out_json, [&] {
        const VolumeResult v = volume(pair_of(scene));
        json doc{{"volume", v.value.str()}, {"big", v.big}, {"certificate", certificate_json(v.certificate)}};
        if (!v.big) throw Signalled{doc, MathSignal::Kind::NotBig};
        return doc.dump(2);
    });
}

logsurf_status logsurf_scene_zariski(const logsurf_scene* scene, const char* divisor, char** out_json) {
    return guarded(out_json, [&] {
        const LogPair& p = pair_of(scene);
        const ClassVector d = parse_divisor_class(p, str_or_empty(divisor));
        const ZariskiResult z = zariski(p.surface, d);
        json doc{{"divisor", class_json(p.surface, d)},
                 {"positive", class_json(p.surface, z.positive)},
                 {"positive_square", p.surface.intersect(z.positive, z.positive).str()},
                 {"negative", divisor_json(z.negative)},
                 {"config_nef", z.config_nef},
                 {"support_negative_definite", z.support_negative_definite}};
        return doc.dump(2);
    });
}

logsurf_status logsurf_scene_lc_check(const logsurf_scene* scene, char** out_json) {
    return guarded(out_json, [&] {
        const LogPair& p = pair_of(scene);
        const LcReport r = lc_check(p);
        json nodes = json::array();
        for (const auto& n : r.nodes)
            nodes.push_back(json{{"curves", json::array({n.first, n.second})}, {"codiscrepancy", n.value.str()}});
        json doc{{"verdict", to_string(r.verdict)},
                 {"witness", r.witness ? json(*r.witness) : json(nullptr)},
                 {"max_coefficient", r.max_coefficient.str()},
                 {"nodes", nodes},
                 {"nodes_within_bound", r.nodes_within_bound}};
        if (r.verdict == LcVerdict::NotLc) throw Signalled{doc, MathSignal::Kind::NotLogCanonical};
        json accessible = json::array();
        for (const auto& w : find_accessible_nklt(p))
            accessible.push_back(json{{"curve", w.curve}, {"meets", w.meets}});
        doc["accessible_nklt"] = accessible;
        return doc.dump(2);
    });
}

logsurf_status logsurf_different(const char* chain_text, const char* hits_text, char** out_json) {
    return guarded(out_json, [&] {
        const Chain chain = parse_chain(str_or_empty(chain_text));
        const ChainBoundary hits = parse_hits(str_or_empty(hits_text));
        const DifferentResult d = different_coefficient(chain, hits);
        json n = json::array();
        for (const auto& v : d.n) n.push_back(v.get_str());
        json doc{{"chain", chain.p()}, {"m", d.m.get_str()}, {"n_j", n}, {"b_prime", d.b_prime.str()}};
        json disc = json::array();
        if (!chain.empty()) {
            const auto ld = log_discrepancies(chain, hits);
            for (const auto& v : ld) disc.push_back(v.str());
            doc["routes_agree"] = ld.front() == d.b_prime;
        }
        doc["discrepancies"] = disc;
        doc["log_canonical"] = d.log_canonical;
        if (!d.log_canonical) throw Signalled{doc, MathSignal::Kind::NotLogCanonical};
        try {
            const auto sd = verify_standard_different(chain, hits);
            doc["standard"] = json{{"n", sd.n.get_str()}, {"m", sd.m.get_str()}, {"n_prime", sd.n_prime.get_str()},
                                   {"case", sd.case_number}};
        } catch (const MathSignal&) {
            doc["standard"] = nullptr;
        }
        return doc.dump(2);
    });
}

logsurf_status logsurf_tm(const char* coeffset, int m, char** out_json) {
    return guarded(out_json, [&] {
        const CoeffSet set = parse_coeffset(coeffset ? coeffset : "C2");
        json doc{{"set", json::parse(emit_coeffset(set))}, {"m", m}, {"t_m", t_m(set, m).str()}};
        return doc.dump(2);
    });
}

logsurf_status logsurf_sums(int target, int max_len, char** out_json) {
    return guarded(out_json, [&] {
        const auto tuples = enumerate_standard_sums(target, max_len);
        json sols = json::array();
        for (const auto& t : tuples) {
            Integer l = 1;
            for (int v : t) l = lcm(l, Integer(v));
            sols.push_back(json{{"tuple", t}, {"lcm", l.get_str()}});
        }
        json doc{{"target", target}, {"max_len", max_len}, {"solutions", sols}};
        return doc.dump(2);
    });
}

logsurf_status logsurf_bounds(char** out_json) {
    return guarded(out_json, [&] {
        json table = json::array();
        for (const auto& e : bounds_table().entries())
            table.push_back(json{{"key", e.key}, {"value", e.value.str()}, {"meaning", e.meaning}});
        const auto c = cartier_multiples_C2();
        json multiples = json::array();
        for (const auto& m : c.multiples) multiples.push_back(m.get_str());
        json doc{{"bounds", table},
                 {"cartier_multiples_C2", json{{"multiples", multiples}, {"lcm", c.lcm.get_str()}, {"note", c.note}}},
                 {"t_m_C2", "1"}};
        return doc.dump(2);
    });
}

logsurf_status logsurf_construct_even(int n, int emit, char** out_json) {
    return guarded(out_json, [&] {
        const BuiltPair b = example_even(n);
        json doc{{"construction", "even"}, {"n", n}, {"volume", b.volume.str()}, {"certificate", certificate_json(b.certificate)}};
        if (emit) doc["scene"] = scene_json(b.pair);
        return doc.dump(2);
    });
}

logsurf_status logsurf_construct_odd(int n, int emit, char** out_json) {
    return guarded(out_json, [&] {
        const BuiltPair b = example_odd(n);
        json doc{{"construction", "odd"}, {"n", n}, {"volume", b.volume.str()}, {"certificate", certificate_json(b.certificate)}};
        if (emit) doc["scene"] = scene_json(b.pair);
        return doc.dump(2);
    });
}

logsurf_status logsurf_construct_nklt(const logsurf_scene* scene, const char* b1, const char* b2, int s, int emit,
                                      char** out_json) {
    return guarded(out_json, [&] {
        const LogPair& p = pair_of(scene);
        const auto r = nklt_blowup_sequence(p, str_or_empty(b1), str_or_empty(b2), s);
        const VolumeResult base = volume(p);
        json ex = json::array();
        for (std::size_t i = 0; i < r.exceptional.size(); ++i) {
            const auto it = r.pair.boundary.find(r.exceptional[i]);
            ex.push_back(json{{"name", r.exceptional[i]},
                              {"coefficient", it == r.pair.boundary.end() ? "0" : it->second.str()},
                              {"pairing", r.exceptional_pairings[i].str()}});
        }
        json doc{{"construction", "nklt"},
                 {"b1", str_or_empty(b1)},
                 {"b2", str_or_empty(b2)},
                 {"s", s},
                 {"base_volume", base.value.str()},
                 {"self_intersection", r.self_intersection.str()},
                 {"exceptional", ex},
                 {"nonpositive_curves", r.nonpositive_curves}};
        if (emit) doc["scene"] = scene_json(r.pair);
        return doc.dump(2);
    });
}

logsurf_status logsurf_construct_nklt_table(const logsurf_scene* scene, const char* b1, const char* b2, int max_s,
                                            char** out_csv) {
    return guarded(out_csv, [&] {
        const auto seq = nklt_volume_sequence(pair_of(scene), str_or_empty(b1), str_or_empty(b2), max_s);
        std::string csv = "s,volume,volume_decimal\n";
        for (const auto& [s, v] : seq.entries) csv += std::to_string(s) + "," + v.str() + "," + v.decimal(12) + "\n";
        return csv;
    });
}

logsurf_status logsurf_construct_iterated(int n, const int* s, size_t count, int emit, char** out_json) {
    return guarded(out_json, [&] {
        if (!s && count > 0) throw InvalidInput("s: null array");
        const std::vector<int> lengths(s, s + count);
        const auto r = iterated_sequence(n, lengths);
        json lines = json::array();
        for (const auto& v : r.line_pairings) lines.push_back(v.str());
        json doc{{"construction", "iterated"},
                 {"n", n},
                 {"s", lengths},
                 {"self_intersection", r.self_intersection.str()},
                 {"line_pairings", lines},
                 {"exceptional_nonnegative", r.exceptional_nonnegative}};
        if (emit) doc["scene"] = scene_json(r.pair);
        return doc.dump(2);
    });
}

logsurf_status logsurf_construct_perturb(const logsurf_scene* scene, const char* targets, const char* approach, int s,
                                         int emit, char** out_json) {
    return guarded(out_json, [&] {
        const auto names = split_names(str_or_empty(targets));
        const BuiltPair b = perturb_coefficients(pair_of(scene), names, parse_approach(str_or_empty(approach)), s);
        json doc{{"construction", "perturb"},
                 {"targets", names},
                 {"s", s},
                 {"boundary", divisor_json(b.pair.boundary)},
                 {"volume", b.volume.str()},
                 {"certificate", certificate_json(b.certificate)}};
        if (emit) doc["scene"] = scene_json(b.pair);
        return doc.dump(2);
    });
}

logsurf_status logsurf_construct_perturb_table(const logsurf_scene* scene, const char* targets, const char* approach,
                                               int from, int to, char** out_csv) {
    return guarded(out_csv, [&] {
        if (from < 1 || to < from) throw InvalidInput("table range must satisfy 1 <= from <= to");
        const auto names = split_names(str_or_empty(targets));
        const Approach a = parse_approach(str_or_empty(approach));
        std::string csv = "s,volume,volume_decimal\n";
        for (int s = from; s <= to; ++s) {
            const Rational v = perturb_coefficients(pair_of(scene), names, a, s).volume;
            csv += std::to_string(s) + "," + v.str() + "," + v.decimal(12) + "\n";
        }
        return csv;
    });
}

logsurf_status logsurf_verify(char** out_json) {
    return guarded(out_json, [&] {
        const auto results = run_verification();
        json checks = json::array();
        bool all = true;
        for (const auto& r : results) {
            all = all && r.pass;
            checks.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        json doc{{"checks", checks}, {"all_pass", all}};
        if (!all) throw Signalled{doc, MathSignal::Kind::NotApplicable};
        return doc.dump(2);
    });
}

}  // extern "C"
