// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <vector>

#include "logsurf/surfaces.hpp"

namespace logsurf {

/// Random snc configuration for property checks: a random catalog base,
/// a few rational curves (lines, rulings, sections, conics) and up to
/// max_blowups blow-ups at random nodes, curve points or general points.
/// `snapshots` receives the configuration before each blow-up and the
/// final one (size stage()+1).
SurfaceConfig random_config(std::mt19937_64& rng, int max_blowups,
                            std::vector<SurfaceConfig>* snapshots = nullptr);

/// Random divisor with coefficients k/den, k ∈ [lo, hi], on curves that
/// exist at `stage`.
Divisor random_divisor(std::mt19937_64& rng, const SurfaceConfig& config, std::size_t stage,
                       int lo, int hi, int den);

/// A nef class on the base (pulled back): L, f1 + f2 or σ + n f.
ClassVector base_nef_class(const SurfaceConfig& config);

}  // namespace logsurf
