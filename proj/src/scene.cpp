// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/scene.hpp"

#include <algorithm>
#include <charconv>

#include <json.hpp>

#include "logsurf/errors.hpp"

namespace logsurf {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw InvalidInput(field + ": " + why);
}

const json& member(const json& obj, const char* key, const std::string& field) {
    if (!obj.is_object()) fail(field, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(field + "." + key, "missing");
    return *it;
}

std::string as_string(const json& v, const std::string& field) {
    if (!v.is_string()) fail(field, "expected a string");
    return v.get<std::string>();
}

std::int64_t as_integer(const json& v, const std::string& field) {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    return v.get<std::int64_t>();
}

Rational as_rational(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    if (!v.is_string()) fail(field, "expected a rational string \"p/q\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const InvalidInput& e) {
        fail(field, e.what());
    }
}

std::string base_kind_name(BaseKind k) {
    switch (k) {
        case BaseKind::ProjectivePlane: return "P2";
        case BaseKind::QuadricP1xP1: return "P1xP1";
        case BaseKind::Hirzebruch: return "F";
    }
    return "?";
}

SurfaceConfig parse_base(const json& base) {
    if (base.is_string()) {
        try {
            return SurfaceConfig::make_base(base.get<std::string>());
        } catch (const InvalidInput& e) {
            fail("base", e.what());
        }
    }
    const std::string kind = as_string(member(base, "kind", "base"), "base.kind");
    int n = 0;
    if (const auto it = base.find("n"); it != base.end()) n = static_cast<int>(as_integer(*it, "base.n"));
    try {
        return SurfaceConfig::make_base(kind, n);
    } catch (const InvalidInput& e) {
        fail("base", e.what());
    }
}

PointSpec parse_point(const json& at, const std::string& field) {
    if (at.is_string()) {
        if (at.get<std::string>() == "general") return GeneralPoint{};
        fail(field, "expected \"general\", {\"node\": [..]} or {\"on\": ..}");
    }
    if (!at.is_object()) fail(field, "expected an object");
    if (const auto it = at.find("node"); it != at.end()) {
        if (!it->is_array() || it->size() != 2) fail(field + ".node", "expected two curve names");
        return Node{as_string((*it)[0], field + ".node[0]"), as_string((*it)[1], field + ".node[1]")};
    }
    if (const auto it = at.find("on"); it != at.end()) return OnCurve{as_string(*it, field + ".on")};
    fail(field, "expected \"general\", {\"node\": [..]} or {\"on\": ..}");
}

json emit_point(const PointSpec& at) {
    if (const auto* n = std::get_if<Node>(&at)) return json{{"node", json::array({n->first, n->second})}};
    if (const auto* o = std::get_if<OnCurve>(&at)) return json{{"on", o->curve}};
    return "general";
}

struct PendingCurve {
    std::string name;
    json cls;
    std::size_t stage;
    std::string field;
};

void add_pending(SurfaceConfig& s, const PendingCurve& c) {
    try {
        if (c.cls.is_array()) {
            IntClass v;
            for (std::size_t i = 0; i < c.cls.size(); ++i)
                v.push_back(as_integer(c.cls[i], c.field + ".class[" + std::to_string(i) + "]"));
            s.add_curve(c.name, std::move(v));
        } else if (c.cls.is_object()) {
            std::map<std::string, std::int64_t> m;
            for (const auto& [k, v] : c.cls.items()) m[k] = as_integer(v, c.field + ".class." + k);
            s.add_curve(c.name, m);
        } else {
            fail(c.field + ".class", "expected an object or array");
        }
    } catch (const InvalidInput& e) {
        const std::string what = e.what();
        if (what.rfind(c.field, 0) == 0) throw;
        fail(c.field, what);
    }
}

}  // namespace

LogPair parse_scene(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("scene: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("scene", "expected a JSON object");
    SurfaceConfig s = parse_base(member(doc, "base", "scene"));

    std::vector<PendingCurve> pending;
    if (const auto it = doc.find("curves"); it != doc.end()) {
        if (!it->is_array()) fail("curves", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string field = "curves[" + std::to_string(i) + "]";
            const json& c = (*it)[i];
            PendingCurve p{as_string(member(c, "name", field), field + ".name"), member(c, "class", field), 0, field};
            if (const auto st = c.find("stage"); st != c.end()) {
                const auto v = as_integer(*st, field + ".stage");
                if (v < 0) fail(field + ".stage", "must be >= 0");
                p.stage = static_cast<std::size_t>(v);
            }
            pending.push_back(std::move(p));
        }
    }
    std::stable_sort(pending.begin(), pending.end(), [](const auto& a, const auto& b) { return a.stage < b.stage; });

    std::vector<std::pair<PointSpec, std::string>> script;
    if (const auto it = doc.find("blowups"); it != doc.end()) {
        if (!it->is_array()) fail("blowups", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string field = "blowups[" + std::to_string(i) + "]";
            const json& b = (*it)[i];
            script.emplace_back(parse_point(member(b, "at", field), field + ".at"),
                                as_string(member(b, "name", field), field + ".name"));
        }
    }

    auto next = pending.begin();
    for (std::size_t k = 0; k <= script.size(); ++k) {
        for (; next != pending.end() && next->stage == k; ++next) add_pending(s, *next);
        if (k == script.size()) break;
        try {
            s.blow_up(script[k].first, script[k].second);
        } catch (const InvalidInput& e) {
            fail("blowups[" + std::to_string(k) + "]", e.what());
        }
    }
    if (next != pending.end()) fail(next->field + ".stage", "exceeds the number of blow-ups");

    Divisor boundary;
    if (const auto it = doc.find("boundary"); it != doc.end()) {
        if (!it->is_object()) fail("boundary", "expected an object");
        for (const auto& [name, v] : it->items()) {
            if (!s.find_curve(name)) fail("boundary." + name, "unknown curve");
            boundary[name] = as_rational(v, "boundary." + name);
        }
    }
    return LogPair(std::move(s), std::move(boundary));
}

std::string emit_scene(const LogPair& pair) {
    const SurfaceConfig& s = pair.surface;
    json doc;
    json base{{"kind", base_kind_name(s.base().kind)}};
    if (s.base().kind == BaseKind::Hirzebruch) base["n"] = s.base().n;
    doc["base"] = base;
    // Curves store strict transforms; emit the class each had when added.
    json curves = json::array();
    for (const auto& c : s.curves()) {
        if (c.exceptional) continue;
        IntClass orig = c.cls;
        orig.resize(s.basis().size(), 0);
        for (std::size_t k = c.stage; k < s.blowups().size(); ++k) {
            const auto& through = s.blowups()[k].through;
            if (std::find(through.begin(), through.end(), c.name) != through.end())
                orig[s.generator_count() + k] += 1;
        }
        json cls = json::object();
        for (std::size_t i = 0; i < orig.size(); ++i)
            if (orig[i] != 0) cls[s.basis()[i]] = orig[i];
        json entry{{"name", c.name}, {"class", cls}};
        if (c.stage != 0) entry["stage"] = c.stage;
        curves.push_back(std::move(entry));
    }
    doc["curves"] = curves;
    json blowups = json::array();
    for (const auto& b : s.blowups()) blowups.push_back(json{{"at", emit_point(b.at)}, {"name", b.name}});
    doc["blowups"] = blowups;
    json boundary = json::object();
    for (const auto& [name, coeff] : pair.boundary) boundary[name] = coeff.str();
    doc["boundary"] = boundary;
    return doc.dump(2);
}

ClassVector parse_divisor_class(const LogPair& pair, std::string_view text) {
    const SurfaceConfig& s = pair.surface;
    auto trim = [](std::string_view t) {
        while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
        while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
        return t;
    };
    text = trim(text);
    if (text.empty() || text == "K+B") return pair.log_canonical_class();

    ClassVector out(s.basis().size());
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto term = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        const auto colon = term.find(':');
        if (colon == std::string_view::npos) fail("divisor", "term '" + std::string(term) + "' is not name:coef");
        const std::string name(trim(term.substr(0, colon)));
        Rational coeff;
        try {
            coeff = Rational::parse(term.substr(colon + 1));
        } catch (const InvalidInput& e) {
            fail("divisor." + name, e.what());
        }
        ClassVector add;
        if (name == "K") {
            add = s.canonical_class();
        } else if (s.find_curve(name)) {
            add = s.to_rational(s.curve(name).cls);
        } else if (const auto idx = s.find_basis(name); idx && *idx < s.generator_count()) {
            add.assign(s.basis().size(), Rational(0));
            add[*idx] = 1;
        } else {
            fail("divisor." + name, "unknown curve or generator");
        }
        for (std::size_t i = 0; i < add.size(); ++i) out[i] += coeff * add[i];
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

Chain parse_chain(std::string_view text) {
    std::vector<int> p;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto comma = text.find(',', pos);
        const auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("chain", "bad entry '" + std::string(tok) + "'");
        p.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    try {
        return Chain(std::move(p));
    } catch (const InvalidInput& e) {
        fail("chain", e.what());
    }
}

ChainBoundary parse_hits(std::string_view text) {
    ChainBoundary out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto comma = text.find(',', pos);
        const auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        const auto c1 = tok.find(':');
        const auto c2 = c1 == std::string_view::npos ? c1 : tok.find(':', c1 + 1);
        if (c2 == std::string_view::npos) fail("hits", "term '" + std::string(tok) + "' is not i:mult:b");
        int idx = 0, mult = 0;
        const auto a = tok.substr(0, c1);
        const auto b = tok.substr(c1 + 1, c2 - c1 - 1);
        if (std::from_chars(a.data(), a.data() + a.size(), idx).ec != std::errc() || idx < 1)
            fail("hits", "bad curve index in '" + std::string(tok) + "'");
        if (std::from_chars(b.data(), b.data() + b.size(), mult).ec != std::errc())
            fail("hits", "bad multiplicity in '" + std::string(tok) + "'");
        try {
            out.push_back({static_cast<std::size_t>(idx), mult, Rational::parse(tok.substr(c2 + 1))});
        } catch (const InvalidInput& e) {
            fail("hits", e.what());
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

CoeffSet parse_coeffset(std::string_view text) {
    if (text == "C0" || text == "C1" || text == "C2") return CoeffSet::preset(text);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error&) {
        fail("coeffset", "expected C0, C1, C2 or a JSON object");
    }
    if (!doc.is_object()) fail("coeffset", "expected a JSON object");
    std::vector<Rational> finite;
    if (const auto it = doc.find("finite"); it != doc.end()) {
        if (!it->is_array()) fail("coeffset.finite", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            finite.push_back(as_rational((*it)[i], "coeffset.finite[" + std::to_string(i) + "]"));
    }
    auto flag = [&](const char* key) {
        const auto it = doc.find(key);
        if (it == doc.end()) return false;
        if (!it->is_boolean()) fail(std::string("coeffset.") + key, "expected a boolean");
        return it->get<bool>();
    };
    try {
        return CoeffSet(std::move(finite), flag("standard_family"), flag("one"));
    } catch (const InvalidInput& e) {
        fail("coeffset.finite", e.what());
    }
}

std::string emit_coeffset(const CoeffSet& set) {
    json doc;
    json finite = json::array();
    for (const auto& q : set.finite_part()) finite.push_back(q.str());
    doc["finite"] = finite;
    doc["standard_family"] = set.has_standard_family();
    doc["one"] = set.has_one();
    return doc.dump();
}

}  // namespace logsurf
