// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/random_config.hpp"

namespace logsurf {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

SurfaceConfig random_config(std::mt19937_64& rng, int max_blowups, std::vector<SurfaceConfig>* snapshots) {
    SurfaceConfig s;
    std::vector<IntClass> catalog;
    switch (uniform(rng, 0, 2)) {
        case 0:
            s = SurfaceConfig::make_base(BaseKind::ProjectivePlane);
            catalog = {{1}};
            break;
        case 1:
            s = SurfaceConfig::make_base(BaseKind::QuadricP1xP1);
            catalog = {{1, 0}, {0, 1}, {1, 1}};
            break;
        default: {
            const int n = uniform(rng, 0, 3);
            s = SurfaceConfig::make_base(BaseKind::Hirzebruch, n);
            // σ is the negative section and can appear only once.
            s.add_curve("S0", IntClass{1, 0});
            catalog = {{0, 1}, {1, n}};
            break;
        }
    }
    const int count = uniform(rng, 2, 5);
    for (int i = 0; i < count; ++i)
        s.add_curve("C" + std::to_string(i), catalog[uniform(rng, 0, static_cast<int>(catalog.size()) - 1)]);

    const int blowups = uniform(rng, 0, max_blowups);
    for (int k = 0; k < blowups; ++k) {
        if (snapshots) snapshots->push_back(s);
        const auto& curves = s.curves();
        std::vector<std::pair<std::size_t, std::size_t>> nodes;
        for (std::size_t a = 0; a < curves.size(); ++a)
            for (std::size_t b = a + 1; b < curves.size(); ++b)
                if (s.intersect(curves[a].cls, curves[b].cls) > 0) nodes.emplace_back(a, b);
        const std::string name = "X" + std::to_string(k);
        const int kind = uniform(rng, 0, 9);
        if (kind < 6 && !nodes.empty()) {
            const auto [a, b] = nodes[uniform(rng, 0, static_cast<int>(nodes.size()) - 1)];
            s.blow_up(Node{curves[a].name, curves[b].name}, name);
        } else if (kind < 9) {
            s.blow_up(OnCurve{curves[uniform(rng, 0, static_cast<int>(curves.size()) - 1)].name}, name);
        } else {
            s.blow_up(GeneralPoint{}, name);
        }
    }
    if (snapshots) snapshots->push_back(s);
    return s;
}

Divisor random_divisor(std::mt19937_64& rng, const SurfaceConfig& config, std::size_t stage, int lo, int hi,
                       int den) {
    Divisor d;
    for (const auto& c : config.curves()) {
        if (c.stage > stage) continue;
        const int k = uniform(rng, lo, hi);
        if (k != 0) d[c.name] = Rational(k, den);
    }
    return d;
}

ClassVector base_nef_class(const SurfaceConfig& config) {
    ClassVector out(config.basis().size());
    switch (config.base().kind) {
        case BaseKind::ProjectivePlane: out[0] = 1; break;
        case BaseKind::QuadricP1xP1: out[0] = out[1] = 1; break;
        case BaseKind::Hirzebruch:
            out[0] = 1;
            out[1] = config.base().n;
            break;
    }
    return out;
}

}  // namespace logsurf
