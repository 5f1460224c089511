// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/constructions.hpp"

#include <algorithm>
#include <functional>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

BuiltPair finish(LogPair pair) {
    VolumeResult v = volume(pair);
    if (!v.big) throw MathSignal(MathSignal::Kind::NotBig, "K+B is not big relative to the configuration");
    return {std::move(pair), std::move(v.value), std::move(v.certificate)};
}

std::string indexed(const std::string& prefix, int i) { return prefix + std::to_string(i); }

}  // namespace

BuiltPair example_even(int n) {
    if (n < 3) throw InvalidInput("example_even needs n >= 3");
    auto s = SurfaceConfig::make_base(BaseKind::QuadricP1xP1);
    Divisor b;
    for (int i = 1; i <= 3; ++i) {
        s.add_curve(indexed("H", i), IntClass{1, 0});
        b[indexed("H", i)] = 1;
    }
    for (int j = 1; j <= n; ++j) {
        s.add_curve(indexed("V", j), IntClass{0, 1});
        b[indexed("V", j)] = 1;
    }
    return finish(LogPair(std::move(s), std::move(b)));
}

BuiltPair example_odd(int n) {
    if (n < 2) throw InvalidInput("example_odd needs n >= 2");
    auto s = SurfaceConfig::make_base(BaseKind::Hirzebruch, 1);
    Divisor b;
    s.add_curve("Gamma0", IntClass{1, 0});
    s.add_curve("Gamma1", IntClass{1, 1});
    s.add_curve("Gamma2", IntClass{1, 1});
    b["Gamma0"] = b["Gamma1"] = b["Gamma2"] = 1;
    for (int j = 1; j <= n; ++j) {
        s.add_curve(indexed("F", j), IntClass{0, 1});
        b[indexed("F", j)] = 1;
    }
    return finish(LogPair(std::move(s), std::move(b)));
}

Rational Approach::at(const Rational& b, int s) const {
    if (s < 1) throw InvalidInput("approach index must be >= 1");
    switch (kind) {
        case Kind::StandardToOne:
            if (b != Rational(1)) throw InvalidInput("standard approach targets coefficient 1, got " + b.str());
            return Rational(1) - Rational(1, s);
        case Kind::Scaled:
            return b * (Rational(1) - Rational(1, s));
        case Kind::Explicit:
            if (static_cast<std::size_t>(s) > values.size())
                throw InvalidInput("explicit approach sequence has no entry " + std::to_string(s));
            return values[s - 1];
    }
    return b;
}

BuiltPair perturb_coefficients(const LogPair& pair, const std::vector<std::string>& targets,
                               const Approach& approach, int s) {
    const ZariskiResult base = zariski(pair.surface, pair.log_canonical_class());
    if (!base.negative.empty()) throw InvalidInput("K+B must be config-nef before perturbation");
    if (pair.surface.intersect(base.positive, base.positive).sign() <= 0)
        throw MathSignal(MathSignal::Kind::NotBig, "K+B is not big before perturbation");
    if (lc_check(pair).verdict == LcVerdict::NotLc)
        throw MathSignal(MathSignal::Kind::NotLogCanonical, "pair is not log canonical");

    Divisor b = pair.boundary;
    for (const auto& t : targets) {
        const auto it = b.find(t);
        if (it == b.end()) throw InvalidInput("target '" + t + "' is not a boundary curve");
        Rational next = approach.at(it->second, s);
        if (next.sign() <= 0 || next >= it->second)
            throw InvalidInput("approach value " + next.str() + " for '" + t + "' is not in (0, " +
                               it->second.str() + ")");
        it->second = std::move(next);
    }
    return finish(LogPair(pair.surface, std::move(b)));
}

NkltChainResult nklt_blowup_sequence(const LogPair& pair, const std::string& b1_curve,
                                     const std::string& b2_curve, int s, const std::string& prefix) {
    if (s < 1) throw InvalidInput("nklt chain needs s >= 1");
    const auto c1 = pair.boundary.find(b1_curve);
    const auto c2 = pair.boundary.find(b2_curve);
    if (c1 == pair.boundary.end() || c1->second != Rational(1))
        throw InvalidInput("'" + b1_curve + "' must have coefficient 1");
    if (c2 == pair.boundary.end() || c2->second.sign() <= 0 || c2->second > Rational(1))
        throw InvalidInput("'" + b2_curve + "' must have a coefficient in (0,1]");
    if (lc_check(pair).verdict == LcVerdict::NotLc)
        throw MathSignal(MathSignal::Kind::NotLogCanonical, "pair is not log canonical");
    const Rational b2 = c2->second;

    SurfaceConfig y = pair.surface;
    const std::size_t stage = y.stage();
    NkltChainResult out{LogPair(pair.surface, {}), {}, {}, {}, {}, {}};
    out.exceptional.reserve(s);
    y.blow_up(Node{b1_curve, b2_curve}, indexed(prefix, 1));
    out.exceptional.push_back(indexed(prefix, 1));
    for (int i = 2; i <= s; ++i) {
        y.blow_up(Node{b1_curve, out.exceptional.back()}, indexed(prefix, i));
        out.exceptional.push_back(indexed(prefix, i));
    }

    Divisor boundary = log_pullback(y, pair.boundary, stage);
    for (int i = 1; i <= s; ++i) boundary[out.exceptional[i - 1]] -= b2 * Rational(i, s);
    out.pair = LogPair(std::move(y), std::move(boundary));

    const ClassVector d = out.pair.log_canonical_class();
    const SurfaceConfig& z = out.pair.surface;
    out.self_intersection = z.intersect(d, d);
    for (const auto& name : out.exceptional) out.exceptional_pairings.push_back(z.intersect(d, z.curve(name).cls));
    for (const auto& c : z.curves()) {
        Rational v = z.intersect(d, c.cls);
        if (v.sign() <= 0) out.nonpositive_curves.push_back(c.name);
        out.curve_pairings.emplace(c.name, std::move(v));
    }
    return out;
}

VolumeSequence nklt_volume_sequence(const LogPair& pair, const std::string& b1_curve,
                                    const std::string& b2_curve, int max_s) {
    if (max_s < 1) throw InvalidInput("sequence length must be >= 1");
    VolumeSequence seq;
    seq.parameters = {{"b1", b1_curve}, {"b2", b2_curve}, {"max_s", std::to_string(max_s)}};
    const VolumeResult v = volume(pair);
    if (!v.big) throw MathSignal(MathSignal::Kind::NotBig, "K+B is not big");
    seq.limit = v.value;
    for (int s = 1; s <= max_s; ++s)
        seq.entries.emplace_back(s, nklt_blowup_sequence(pair, b1_curve, b2_curve, s).self_intersection);
    seq.strictly_increasing = std::adjacent_find(seq.entries.begin(), seq.entries.end(), [](const auto& a, const auto& b) {
                                  return a.second >= b.second;
                              }) == seq.entries.end();
    seq.below_limit = std::all_of(seq.entries.begin(), seq.entries.end(),
                                  [&](const auto& e) { return e.second < seq.limit; });
    return seq;
}

IteratedResult iterated_sequence(int n, const std::vector<int>& s) {
    if (n < 4) throw InvalidInput("iterated construction needs n >= 4");
    if (s.size() != static_cast<std::size_t>(n - 1))
        throw InvalidInput("iterated construction needs n-1 chain lengths");
    for (int v : s)
        if (v < 2) throw InvalidInput("chain lengths must be >= 2");

    auto y = SurfaceConfig::make_base(BaseKind::ProjectivePlane);
    Divisor b;
    for (int j = 1; j <= n; ++j) {
        y.add_curve(indexed("L", j), IntClass{1});
        b[indexed("L", j)] = 1;
    }
    const std::string last = indexed("L", n);
    std::vector<std::vector<std::string>> chains(n - 1);
    for (int j = 1; j < n; ++j) {
        const std::string line = indexed("L", j);
        const std::string stem = "E" + std::to_string(j) + "_";
        auto& chain = chains[j - 1];
        y.blow_up(Node{line, last}, indexed(stem, 1));
        chain.push_back(indexed(stem, 1));
        for (int i = 2; i <= s[j - 1]; ++i) {
            y.blow_up(Node{line, chain.back()}, indexed(stem, i));
            chain.push_back(indexed(stem, i));
        }
    }

    Divisor boundary = log_pullback(y, b, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= s[j - 1]; ++i) boundary[chains[j - 1][i - 1]] -= Rational(i, s[j - 1]);

    IteratedResult out{LogPair(std::move(y), std::move(boundary)), {}, {}, true, {}};
    const ClassVector d = out.pair.log_canonical_class();
    const SurfaceConfig& z = out.pair.surface;
    out.self_intersection = z.intersect(d, d);
    for (int j = 1; j <= n; ++j) out.line_pairings.push_back(z.intersect(d, z.curve(indexed("L", j)).cls));
    for (const auto& chain : chains)
        for (const auto& e : chain) {
            Rational v = z.intersect(d, z.curve(e).cls);
            if (v.sign() < 0) out.exceptional_nonnegative = false;
            out.exceptional_pairings.emplace(e, std::move(v));
        }
    if (out.self_intersection.sign() <= 0)
        throw MathSignal(MathSignal::Kind::NotBig, "(K+B')^2 = " + out.self_intersection.str() + " is not positive");
    return out;
}

Rational lower_bound(const Rational& v1, int m, const Rational& t) {
    if (v1.sign() <= 0) throw InvalidInput("lower_bound needs v1 > 0");
    if (m < 1) throw InvalidInput("lower_bound needs m >= 1");
    const Rational denom = Rational(1) + Rational(m) * t;
    return v1 / (denom * denom);
}

std::vector<std::vector<int>> enumerate_standard_sums(int target, int max_len) {
    if (target != 1 && target != 2) throw InvalidInput("target must be 1 or 2");
    if (max_len < 1) throw InvalidInput("max_len must be >= 1");
    // Every term is ≥ 1/2, so at most 2·target of them fit.
    const int len_cap = std::min(max_len, 2 * target);
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    const Rational one(1);

    // Fill `left` more terms, each with index ≥ lo, summing to `rest`.
    std::function<void(int, int, const Rational&)> extend = [&](int left, int lo, const Rational& rest) {
        if (left == 1) {
            if (rest >= one || rest.sign() <= 0) return;
            const Rational n = (one - rest).inverse();
            if (n.is_integer() && n >= Rational(lo)) {
                current.push_back(static_cast<int>(n.numerator().get_si()));
                out.push_back(current);
                current.pop_back();
            }
            return;
        }
        // The smallest of the remaining terms is 1 - 1/lo: left·(1 - 1/n) ≤ rest.
        const Rational avg = rest / Rational(left);
        if (avg >= one) return;
        const Integer hi = (one - avg).inverse().floor();
        for (int n = lo; Integer(n) <= hi; ++n) {
            current.push_back(n);
            extend(left - 1, n, rest - (one - Rational(1, n)));
            current.pop_back();
        }
    };
    for (int k = 1; k <= len_cap; ++k) extend(k, 2, Rational(target));
    std::sort(out.begin(), out.end());
    return out;
}

CartierMultiples cartier_multiples_C2() {
    CartierMultiples out;
    out.lcm = 1;
    out.multiples.insert(Integer(1));
    for (int target : {1, 2})
        for (auto& tuple : enumerate_standard_sums(target, 8)) {
            Integer l = 1;
            for (int v : tuple) l = lcm(l, Integer(v));
            out.multiples.insert(l);
            out.lcm = lcm(out.lcm, l);
            out.per_tuple.emplace_back(std::move(tuple), std::move(l));
        }
    out.note =
        "multiples are per-tuple least common multiples together with 1 (the Cartier case); "
        "per-tuple greatest common divisors would give only {1,2,3}";
    return out;
}

const Rational& BoundsTable::at(std::string_view key) const {
    for (const auto& e : entries_)
        if (e.key == key) return e.value;
    throw InvalidInput("unknown bound '" + std::string(key) + "'");
}

const BoundsTable& bounds_table() {
    static const BoundsTable table({
        {"v1_C2", Rational(1, 1764),
         "minimal volume of ample lc pairs with standard coefficients and nonzero reduced boundary (1/42^2, Kollar)"},
        {"lower_bound_C2", lower_bound(Rational(1, 1764), 6, Rational(1)),
         "lower bound for accumulation points of volumes with standard coefficients: v1/(1+6*1)^2 = 1/(7^2*42^2)"},
        {"upper_acc_C2", Rational(1, 1764),
         "an accumulation point of volumes with standard coefficients (Kollar's example, reduced boundary)"},
        {"upper_acc_C0_C1", Rational(1, 462),
         "an accumulation point of volumes with empty or reduced coefficients: 1/(11*42) (Alexeev-Liu surface)"},
        {"elliptic_bound", Rational(1, 143),
         "volume bound for ample lc surfaces with a simple elliptic singularity (Liu)"},
        {"delta1_C2", Rational(1, 42),
         "sup t with K+B-tB0 big for a smooth reduced component B0 (Kollar)"},
        {"kollar_record_C2", Rational(1, 3261636),
         "smallest known volume with standard coefficients: 1/(42^2*43^2) (Kollar)"},
        {"record_C0_C1", Rational(1, 48983),
         "smallest known volume with empty or reduced coefficients (Alexeev-Liu)"},
    });
    return table;
}

}  // namespace logsurf
