// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/surfaces.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

template <typename T>
T entry(const std::vector<T>& v, std::size_t i) {
    return i < v.size() ? v[i] : T(0);
}

const Rational& rational_entry(const ClassVector& v, std::size_t i) {
    static const Rational zero(0);
    return i < v.size() ? v[i] : zero;
}

}  // namespace

SurfaceConfig SurfaceConfig::make_base(BaseKind kind, int n) {
    SurfaceConfig c;
    c.base_ = {kind, kind == BaseKind::Hirzebruch ? n : 0};
    switch (kind) {
        case BaseKind::ProjectivePlane:
            c.generators_ = 1;
            c.basis_ = {"L"};
            c.gen_gram_[0][0] = 1;
            c.canonical_ = {-3};
            break;
        case BaseKind::QuadricP1xP1:
            c.generators_ = 2;
            c.basis_ = {"f1", "f2"};
            c.gen_gram_[0][1] = c.gen_gram_[1][0] = 1;
            c.canonical_ = {-2, -2};
            break;
        case BaseKind::Hirzebruch:
            if (n < 0) throw InvalidInput("Hirzebruch surface needs n >= 0");
            c.generators_ = 2;
            c.basis_ = {"sigma", "f"};
            c.gen_gram_[0][0] = -n;
            c.gen_gram_[0][1] = c.gen_gram_[1][0] = 1;
            c.canonical_ = {-2, -(n + 2)};
            break;
    }
    return c;
}

SurfaceConfig SurfaceConfig::make_base(std::string_view kind, int n) {
    if (kind == "P2") return make_base(BaseKind::ProjectivePlane);
    if (kind == "P1xP1") return make_base(BaseKind::QuadricP1xP1);
    if (kind == "F") return make_base(BaseKind::Hirzebruch, n);
    if (kind.size() > 1 && kind.front() == 'F') {
        int parsed = 0;
        const auto* first = kind.data() + 1;
        const auto* last = kind.data() + kind.size();
        const auto [ptr, ec] = std::from_chars(first, last, parsed);
        if (ec == std::errc() && ptr == last) return make_base(BaseKind::Hirzebruch, parsed);
    }
    throw InvalidInput("unknown base surface kind '" + std::string(kind) + "'");
}

std::optional<std::size_t> SurfaceConfig::find_curve(std::string_view name) const {
    const auto it = curve_index_.find(std::string(name));
    if (it == curve_index_.end()) return std::nullopt;
    return it->second;
}

const Curve& SurfaceConfig::curve(std::string_view name) const {
    const auto idx = find_curve(name);
    if (!idx) throw InvalidInput("unknown curve '" + std::string(name) + "'");
    return curves_[*idx];
}

std::optional<std::size_t> SurfaceConfig::find_basis(std::string_view name) const {
    const auto it = std::find(basis_.begin(), basis_.end(), name);
    if (it == basis_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - basis_.begin());
}

std::int64_t SurfaceConfig::intersect(const IntClass& a, const IntClass& b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < generators_; ++i)
        for (std::size_t j = 0; j < generators_; ++j) s += entry(a, i) * gen_gram_[i][j] * entry(b, j);
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = generators_; k < n; ++k) s -= a[k] * b[k];
    return s;
}

Rational SurfaceConfig::intersect(const ClassVector& a, const ClassVector& b) const {
    Rational s;
    for (std::size_t i = 0; i < generators_; ++i)
        for (std::size_t j = 0; j < generators_; ++j) {
            if (gen_gram_[i][j] == 0) continue;
            s += rational_entry(a, i) * Rational(static_cast<long>(gen_gram_[i][j])) * rational_entry(b, j);
        }
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = generators_; k < n; ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s -= a[k] * b[k];
    return s;
}

Rational SurfaceConfig::intersect(const ClassVector& a, const IntClass& b) const {
    Rational s;
    for (std::size_t i = 0; i < generators_; ++i)
        for (std::size_t j = 0; j < generators_; ++j) {
            const std::int64_t w = gen_gram_[i][j] * entry(b, j);
            if (w != 0) s += rational_entry(a, i) * Rational(static_cast<long>(w));
        }
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = generators_; k < n; ++k)
        if (b[k] != 0) s -= a[k] * Rational(static_cast<long>(b[k]));
    return s;
}

ClassVector SurfaceConfig::to_rational(const IntClass& c) const {
    ClassVector out(basis_.size());
    for (std::size_t i = 0; i < c.size() && i < out.size(); ++i)
        if (c[i] != 0) out[i] = Rational(static_cast<long>(c[i]));
    return out;
}

ClassVector SurfaceConfig::class_of(const Divisor& d) const {
    ClassVector out(basis_.size());
    for (const auto& [name, coeff] : d) {
        if (coeff.is_zero()) continue;
        const Curve& c = curve(name);
        for (std::size_t i = 0; i < c.cls.size(); ++i)
            if (c.cls[i] != 0) out[i] += coeff * Rational(static_cast<long>(c.cls[i]));
    }
    return out;
}

Matrix SurfaceConfig::gram() const {
    const std::size_t n = basis_.size();
    Matrix g(n, n);
    for (std::size_t i = 0; i < generators_; ++i)
        for (std::size_t j = 0; j < generators_; ++j) g(i, j) = Rational(static_cast<long>(gen_gram_[i][j]));
    for (std::size_t k = generators_; k < n; ++k) g(k, k) = Rational(-1);
    return g;
}

const Curve& SurfaceConfig::add_curve(std::string name, IntClass cls) {
    if (name.empty()) throw InvalidInput("curve name must be nonempty");
    if (find_curve(name)) throw InvalidInput("duplicate curve name '" + name + "'");
    if (find_basis(name)) throw InvalidInput("curve name '" + name + "' clashes with a basis class");
    if (cls.size() > basis_.size())
        throw InvalidInput("class of '" + name + "' has more entries than the basis");
    if (std::all_of(cls.begin(), cls.end(), [](std::int64_t v) { return v == 0; }))
        throw InvalidInput("curve '" + name + "' has the zero class");
    const std::int64_t twice_genus_minus_two = intersect(cls, cls) + intersect(canonical_, cls);
    if (twice_genus_minus_two < -2 || twice_genus_minus_two % 2 != 0)
        throw InvalidInput("class of '" + name + "' violates the genus formula (C^2 + K.C = " +
                           std::to_string(twice_genus_minus_two) + ")");
    for (const auto& other : curves_)
        if (intersect(other.cls, cls) < 0)
            throw InvalidInput("curve '" + name + "' meets '" + other.name + "' negatively");
    curve_index_.emplace(name, curves_.size());
    curves_.push_back({std::move(name), std::move(cls), stage(), false});
    return curves_.back();
}

const Curve& SurfaceConfig::add_curve(std::string name, const std::map<std::string, std::int64_t>& by_basis_name) {
    IntClass cls(basis_.size());
    for (const auto& [basis_name, v] : by_basis_name) {
        const auto idx = find_basis(basis_name);
        if (!idx) throw InvalidInput("unknown basis class '" + basis_name + "' in curve '" + name + "'");
        cls[*idx] = v;
    }
    return add_curve(std::move(name), std::move(cls));
}

const Curve& SurfaceConfig::blow_up(const PointSpec& at, std::string name) {
    if (name.empty()) throw InvalidInput("exceptional curve name must be nonempty");
    if (find_curve(name) || find_basis(name)) throw InvalidInput("duplicate name '" + name + "' for blow-up");

    std::vector<std::string> through;
    if (const auto* node = std::get_if<Node>(&at)) {
        if (node->first == node->second) throw InvalidInput("node needs two distinct curves");
        const Curve& a = curve(node->first);
        const Curve& b = curve(node->second);
        if (intersect(a.cls, b.cls) <= 0)
            throw InvalidInput("curves '" + node->first + "' and '" + node->second +
                               "' have no remaining intersection point");
        through = {node->first, node->second};
    } else if (const auto* on = std::get_if<OnCurve>(&at)) {
        curve(on->curve);
        through = {on->curve};
    }

    const std::size_t k = basis_.size();
    basis_.push_back(name);
    for (const auto& t : through) {
        IntClass& cls = curves_[*find_curve(t)].cls;
        cls.resize(k + 1, 0);
        cls[k] -= 1;
    }
    canonical_.resize(k + 1, 0);
    canonical_[k] += 1;
    blowups_.push_back({at, name, std::move(through)});

    IntClass e(k + 1, 0);
    e[k] = 1;
    curve_index_.emplace(name, curves_.size());
    curves_.push_back({std::move(name), std::move(e), stage(), true});
    return curves_.back();
}

Rational intersect(const SurfaceConfig& config, const Divisor& a, const Divisor& b) {
    return config.intersect(config.class_of(a), config.class_of(b));
}

namespace {

Divisor transport(const SurfaceConfig& after, const Divisor& d, std::size_t stage, const Rational& shift) {
    if (stage > after.stage())
        throw InvalidInput("stage " + std::to_string(stage) + " is beyond the blow-up script");
    for (const auto& [name, coeff] : d) {
        const auto idx = after.find_curve(name);
        if (!idx) throw InvalidInput("unknown curve '" + name + "' in divisor");
        if (after.curves()[*idx].stage > stage)
            throw InvalidInput("curve '" + name + "' does not exist at stage " + std::to_string(stage));
    }
    Divisor out = d;
    const auto& script = after.blowups();
    for (std::size_t k = stage; k < script.size(); ++k) {
        Rational c = shift;
        for (const auto& t : script[k].through) {
            const auto it = out.find(t);
            if (it != out.end()) c += it->second;
        }
        out[script[k].name] = c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

Divisor pullback(const SurfaceConfig& after, const Divisor& d, std::size_t stage) {
    return transport(after, d, stage, Rational(0));
}

Divisor log_pullback(const SurfaceConfig& after, const Divisor& boundary, std::size_t stage) {
    return transport(after, boundary, stage, Rational(-1));
}

LogPair::LogPair(SurfaceConfig s, Divisor b) : surface(std::move(s)), boundary(std::move(b)) {
    for (const auto& [name, coeff] : boundary)
        if (!surface.find_curve(name)) throw InvalidInput("boundary names unknown curve '" + name + "'");
    std::erase_if(boundary, [](const auto& kv) { return kv.second.is_zero(); });
}

bool LogPair::is_boundary() const {
    return std::all_of(boundary.begin(), boundary.end(),
                       [](const auto& kv) { return kv.second.sign() > 0 && kv.second <= Rational(1); });
}

ClassVector LogPair::log_canonical_class() const {
    ClassVector k = surface.canonical_class();
    const ClassVector b = surface.class_of(boundary);
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += b[i];
    return k;
}

const char* to_string(LcVerdict v) {
    switch (v) {
        case LcVerdict::Klt: return "klt";
        case LcVerdict::Lc: return "lc";
        case LcVerdict::NotLc: return "not_lc";
    }
    return "unknown";
}

LcReport lc_check(const LogPair& pair) {
    LcReport report;
    const Rational one(1);
    std::string argmax;
    for (const auto& [name, coeff] : pair.boundary)
        if (argmax.empty() || coeff > report.max_coefficient) {
            report.max_coefficient = coeff;
            argmax = name;
        }
    if (report.max_coefficient > one)
        report.verdict = LcVerdict::NotLc;
    else if (report.max_coefficient == one)
        report.verdict = LcVerdict::Lc;
    if (report.verdict != LcVerdict::Klt) report.witness = argmax;

    // Codiscrepancy of the blow-up of each node of positive boundary curves.
    const auto& curves = pair.surface.curves();
    for (auto a = pair.boundary.begin(); a != pair.boundary.end(); ++a) {
        if (a->second.sign() <= 0) continue;
        for (auto b = std::next(a); b != pair.boundary.end(); ++b) {
            if (b->second.sign() <= 0) continue;
            const auto& ca = curves[*pair.surface.find_curve(a->first)];
            const auto& cb = curves[*pair.surface.find_curve(b->first)];
            if (pair.surface.intersect(ca.cls, cb.cls) <= 0) continue;
            Rational v = a->second + b->second - one;
            if (v > one) report.nodes_within_bound = false;
            report.nodes.push_back({a->first, b->first, std::move(v)});
        }
    }
    return report;
}

std::vector<AccessibleWitness> find_accessible_nklt(const LogPair& pair) {
    std::vector<AccessibleWitness> out;
    const Rational one(1);
    for (const auto& [name, coeff] : pair.boundary) {
        if (coeff != one) continue;
        const Curve& c = pair.surface.curve(name);
        AccessibleWitness w{name, {}};
        for (const auto& [other, oc] : pair.boundary) {
            if (other == name || oc.sign() <= 0) continue;
            if (pair.surface.intersect(c.cls, pair.surface.curve(other).cls) > 0) w.meets.push_back(other);
        }
        if (!w.meets.empty()) out.push_back(std::move(w));
    }
    return out;
}

ZariskiResult zariski(const SurfaceConfig& config, const ClassVector& d) {
    const auto& curves = config.curves();
    std::vector<std::size_t> support;
    std::vector<bool> in_support(curves.size(), false);
    std::vector<Rational> coeffs;
    ClassVector p = d;
    p.resize(config.basis().size());

    for (;;) {
        std::vector<std::size_t> negative;
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (!in_support[i] && config.intersect(p, curves[i].cls).sign() < 0) negative.push_back(i);
        if (negative.empty()) break;
        for (auto i : negative) {
            support.push_back(i);
            in_support[i] = true;
        }

        const std::size_t s = support.size();
        Matrix g(s, s);
        std::vector<Rational> rhs(s);
        for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t b = 0; b < s; ++b)
                g(a, b) = Rational(static_cast<long>(config.intersect(curves[support[a]].cls, curves[support[b]].cls)));
            rhs[a] = config.intersect(d, curves[support[a]].cls);
        }
        if (!is_negative_definite(g))
            throw MathSignal(MathSignal::Kind::NoConfigZariski,
                             "negative-part support is not negative definite (curve '" +
                                 curves[negative.front()].name + "')");
        auto x = solve(std::move(g), std::move(rhs));
        if (!x) throw std::logic_error("negative definite matrix reported singular");
        coeffs = std::move(*x);
        p = d;
        p.resize(config.basis().size());
        for (std::size_t a = 0; a < s; ++a) {
            const IntClass& c = curves[support[a]].cls;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i] != 0) p[i] -= coeffs[a] * Rational(static_cast<long>(c[i]));
        }
    }

    ZariskiResult out;
    for (std::size_t a = 0; a < support.size(); ++a) {
        if (coeffs[a].sign() < 0)
            throw MathSignal(MathSignal::Kind::NoConfigZariski,
                             "negative part has coefficient " + coeffs[a].str() + " on '" + curves[support[a]].name + "'");
        if (!coeffs[a].is_zero()) out.negative[curves[support[a]].name] = coeffs[a];
    }
    out.positive = std::move(p);
    out.config_nef = true;
    out.support_negative_definite = true;
    return out;
}

VolumeResult volume(const LogPair& pair) {
    const LcReport lc = lc_check(pair);
    if (lc.verdict == LcVerdict::NotLc)
        throw MathSignal(MathSignal::Kind::NotLogCanonical,
                         "pair is not log canonical (curve '" + lc.witness.value_or("?") + "')");
    const ZariskiResult z = zariski(pair.surface, pair.log_canonical_class());

    VolumeResult out;
    out.value = pair.surface.intersect(z.positive, z.positive);
    out.big = out.value.sign() > 0;
    out.certificate.config_nef = z.config_nef;
    for (const auto& [name, c] : z.negative) out.certificate.contracted.push_back(name);
    for (const auto& c : pair.surface.curves())
        if (!z.negative.count(c.name) && pair.surface.intersect(z.positive, c.cls).is_zero())
            out.certificate.null_curves.push_back(c.name);
    return out;
}

}  // namespace logsurf
