// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "logsurf/rational.hpp"

namespace logsurf {

/// A DCC coefficient set of the form  finite ∪ {1 - 1/n : n ≥ 2} ∪ {1},
/// each of the last two parts optional.
class CoeffSet {
public:
    CoeffSet() = default;
    /// Throws InvalidInput when a finite value lies outside (0,1].
    CoeffSet(std::vector<Rational> finite, bool standard_family, bool one);

    static CoeffSet empty() { return {}; }                        // C0
    static CoeffSet reduced() { return CoeffSet({}, false, true); }  // C1
    static CoeffSet standard() { return CoeffSet({}, true, true); }  // C2
    /// "C0", "C1" or "C2".
    static CoeffSet preset(std::string_view name);

    const std::vector<Rational>& finite_part() const { return finite_; }
    bool has_standard_family() const { return standard_family_; }
    bool has_one() const { return one_; }

    bool contains(const Rational& q) const;

    /// Every member b with b = 1 - 1/n for n ≤ max_family_index, plus the
    /// finite part and 1. Sorted, distinct.
    std::vector<Rational> enumerate(int max_family_index) const;

    friend bool operator==(const CoeffSet&, const CoeffSet&) = default;

private:
    std::vector<Rational> finite_;
    bool standard_family_ = false;
    bool one_ = false;
};

/// True iff q = 1 - 1/n for some integer n ≥ 2.
bool is_standard_coefficient(const Rational& q);

CoeffSet accumulation_points(const CoeffSet& set);

struct DerivativeBounds {
    int max_m = 1;
    int max_terms = 0;
    /// Cap on n for standard-family members 1 - 1/n used as b_j.
    int max_family_index = 12;
};

struct DerivativeEnumeration {
    std::vector<Rational> members;
    DerivativeBounds bounds;
};

/// Values 1 - (1 - Σ n_j b_j)/m in (0,1] with m ≤ max_m and Σ n_j ≤ max_terms,
/// plus 1. Complete relative to the bounds only.
DerivativeEnumeration derivative_members(const CoeffSet& set, const DerivativeBounds& bounds);

/// max({(1-b)/{mb} : b ∈ set, {mb} ≠ 0} ∪ {1}).
Rational t_m(const CoeffSet& set, int m);

/// b + t_m {mb} ≥ 1 when {mb} ≠ 0; true when {mb} = 0.
bool t_m_lower_bound_check(const CoeffSet& set, int m, const Rational& b);

}  // namespace logsurf
