// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/coeffsets.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "logsurf/errors.hpp"

namespace logsurf {

CoeffSet::CoeffSet(std::vector<Rational> finite, bool standard_family, bool one)
    : finite_(std::move(finite)), standard_family_(standard_family), one_(one) {
    for (const auto& q : finite_)
        if (q.sign() <= 0 || q > Rational(1))
            throw InvalidInput("coefficient " + q.str() + " outside (0,1]");
    std::sort(finite_.begin(), finite_.end());
    finite_.erase(std::unique(finite_.begin(), finite_.end()), finite_.end());
}

CoeffSet CoeffSet::preset(std::string_view name) {
    if (name == "C0") return empty();
    if (name == "C1") return reduced();
    if (name == "C2") return standard();
    throw InvalidInput("unknown coefficient set preset '" + std::string(name) + "'");
}

bool is_standard_coefficient(const Rational& q) {
    if (q.sign() <= 0 || q >= Rational(1)) return false;
    const Rational n = (Rational(1) - q).inverse();
    return n.is_integer();
}

bool CoeffSet::contains(const Rational& q) const {
    if (one_ && q == Rational(1)) return true;
    if (standard_family_ && is_standard_coefficient(q)) return true;
    return std::binary_search(finite_.begin(), finite_.end(), q);
}

std::vector<Rational> CoeffSet::enumerate(int max_family_index) const {
    std::set<Rational> out(finite_.begin(), finite_.end());
    if (one_) out.insert(Rational(1));
    if (standard_family_)
        for (int n = 2; n <= max_family_index; ++n) out.insert(Rational(n - 1, n));
    return {out.begin(), out.end()};
}

CoeffSet accumulation_points(const CoeffSet& set) {
    // 1 - 1/n → 1; finite parts are isolated.
    return CoeffSet({}, false, set.has_standard_family());
}

DerivativeEnumeration derivative_members(const CoeffSet& set, const DerivativeBounds& bounds) {
    if (bounds.max_m < 1 || bounds.max_terms < 0)
        throw InvalidInput("derivative_members needs max_m >= 1 and max_terms >= 0");
    const std::vector<Rational> pool = set.enumerate(bounds.max_family_index);
    const Rational one(1);

    std::set<Rational> sums;
    std::function<void(std::size_t, int, const Rational&)> walk =
        [&](std::size_t from, int terms_left, const Rational& sum) {
            sums.insert(sum);
            if (terms_left == 0) return;
            for (std::size_t i = from; i < pool.size(); ++i) {
                Rational next = sum + pool[i];
                // pool is sorted, so every later b overshoots as well
                if (next > one) break;
                walk(i, terms_left - 1, next);
            }
        };
    walk(0, bounds.max_terms, Rational(0));

    std::set<Rational> values{one};
    for (const auto& s : sums)
        for (int m = 1; m <= bounds.max_m; ++m) {
            Rational v = one - (one - s) / Rational(m);
            if (v.sign() > 0) values.insert(std::move(v));
        }
    return {{values.begin(), values.end()}, bounds};
}

namespace {

void consider(Rational& best, const Rational& b, int m) {
    const Rational f = (Rational(m) * b).frac();
    if (f.is_zero()) return;
    Rational v = (Rational(1) - b) / f;
    if (v > best) best = std::move(v);
}

}  // namespace

Rational t_m(const CoeffSet& set, int m) {
    if (m < 1) throw InvalidInput("t_m needs m >= 1");
    Rational best(1);
    for (const auto& b : set.finite_part()) consider(best, b, m);
    // For b = 1 - 1/n the ratio is 1/(n - (m mod n)) ≤ 1, and for n > m+1 it
    // is 1/(n - m) < 1, so n ≤ m+1 suffices.
    if (set.has_standard_family())
        for (int n = 2; n <= m + 1; ++n) consider(best, Rational(n - 1, n), m);
    return best;
}

bool t_m_lower_bound_check(const CoeffSet& set, int m, const Rational& b) {
    if (!set.contains(b)) throw InvalidInput("t_m_lower_bound_check: b not in the set");
    const Rational f = (Rational(m) * b).frac();
    if (f.is_zero()) return true;
    return b + t_m(set, m) * f >= Rational(1);
}

}  // namespace logsurf
