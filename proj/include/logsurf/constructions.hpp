// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "logsurf/surfaces.hpp"

namespace logsurf {

struct BuiltPair {
    LogPair pair;
    Rational volume;
    VolumeCertificate certificate;
};

/// P1 x P1 with three horizontal (H1..H3, class f1) and n vertical
/// (V1..Vn, class f2) lines, all with coefficient 1. Requires n ≥ 3.
BuiltPair example_even(int n);

/// F1 with Gamma0 (σ), Gamma1, Gamma2 (σ + f) and n fibers F1..Fn, all with
/// coefficient 1. Requires n ≥ 2.
BuiltPair example_odd(int n);

/// How a targeted coefficient b is replaced at step s.
struct Approach {
    enum class Kind {
        StandardToOne,  // 1 - 1/s, for targets with b = 1
        Scaled,         // b (1 - 1/s)
        Explicit,       // values[s - 1]
    };
    Kind kind = Kind::StandardToOne;
    std::vector<Rational> values;

    Rational at(const Rational& b, int s) const;
};

/// Lowers the targeted coefficients along the approach sequence and returns
/// the s-th pair with its volume. Requires K + B config-nef and big; throws
/// MathSignal(NotBig) when the perturbed K + B^(s) is not big.
BuiltPair perturb_coefficients(const LogPair& pair, const std::vector<std::string>& targets,
                               const Approach& approach, int s);

struct NkltChainResult {
    LogPair pair;                        // boundary B' on the blown-up surface
    Rational self_intersection;          // (K + B')^2
    std::vector<std::string> exceptional;        // E_1..E_s
    std::vector<Rational> exceptional_pairings;  // (K + B')·E_i
    std::map<std::string, Rational> curve_pairings;  // (K + B')·C for every tracked curve
    std::vector<std::string> nonpositive_curves;     // would be contracted on the lc model
};

/// Blows up the node of b1_curve (coefficient 1) and b2_curve (coefficient
/// b2 > 0), then s - 1 more times at the point where the newest exceptional
/// curve meets the strict transform of b1_curve. The exceptional E_i gets
/// coefficient b2 (s - i)/s.
NkltChainResult nklt_blowup_sequence(const LogPair& pair, const std::string& b1_curve,
                                     const std::string& b2_curve, int s,
                                     const std::string& prefix = "E");

struct VolumeSequence {
    std::map<std::string, std::string> parameters;
    std::vector<std::pair<int, Rational>> entries;
    Rational limit;
    bool strictly_increasing = false;
    bool below_limit = false;
};

/// nklt_blowup_sequence for s = 1..max_s with limit volume(pair).
VolumeSequence nklt_volume_sequence(const LogPair& pair, const std::string& b1_curve,
                                    const std::string& b2_curve, int max_s);

struct IteratedResult {
    LogPair pair;
    Rational self_intersection;
    std::vector<Rational> line_pairings;  // (K + B')·L_j for j = 1..n
    bool exceptional_nonnegative = false;
    std::map<std::string, Rational> exceptional_pairings;
};

/// P2 with n general lines; an s_j-step chain at L_j ∩ L_n for each j < n.
/// Requires n ≥ 4 and s.size() == n - 1, s_j ≥ 2. Throws MathSignal(NotBig)
/// when (K + B')^2 ≤ 0.
IteratedResult iterated_sequence(int n, const std::vector<int>& s);

/// v1 / (1 + m t)^2.
Rational lower_bound(const Rational& v1, int m, const Rational& t);

/// All n_1 ≤ ... ≤ n_k, n_i ≥ 2, k ≤ max_len with Σ (1 - 1/n_i) = target.
std::vector<std::vector<int>> enumerate_standard_sums(int target, int max_len);

struct CartierMultiples {
    std::vector<std::pair<std::vector<int>, Integer>> per_tuple;  // tuple -> lcm
    std::set<Integer> multiples;  // per-tuple lcms together with 1
    Integer lcm;
    std::string note;
};

CartierMultiples cartier_multiples_C2();

struct BoundEntry {
    std::string key;
    Rational value;
    std::string meaning;
};

class BoundsTable {
public:
    explicit BoundsTable(std::vector<BoundEntry> entries) : entries_(std::move(entries)) {}
    const std::vector<BoundEntry>& entries() const { return entries_; }
    /// Throws InvalidInput for an unknown key.
    const Rational& at(std::string_view key) const;

private:
    std::vector<BoundEntry> entries_;
};

const BoundsTable& bounds_table();

}  // namespace logsurf
