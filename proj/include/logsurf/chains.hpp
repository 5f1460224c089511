// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "logsurf/linalg.hpp"
#include "logsurf/rational.hpp"

namespace logsurf {

/// Hirzebruch–Jung chain F_1 - F_2 - ... - F_r with F_i^2 = -p_i, p_i ≥ 2.
/// The exceptional curve E of the adjunction is attached to F_1 once.
class Chain {
public:
    Chain() = default;
    /// Throws InvalidInput when some p_i < 2.
    explicit Chain(std::vector<int> p);

    const std::vector<int>& p() const { return p_; }
    std::size_t length() const { return p_.size(); }
    bool empty() const { return p_.empty(); }

    /// -p_i on the diagonal, +1 for adjacent curves.
    Matrix gram() const;

private:
    std::vector<int> p_;
};

/// A boundary component Δ_j meeting F_index (1-based) with the given local
/// intersection multiplicity and coefficient b_j ∈ (0,1].
struct ChainHit {
    std::size_t index = 1;
    int multiplicity = 1;
    Rational coefficient;
};

using ChainBoundary = std::vector<ChainHit>;

/// det of the tridiagonal matrix with p_i on the diagonal and -1 beside it;
/// 1 for the empty list. Throws InvalidInput on p_i < 2.
Integer continuant(std::span<const int> p);

/// Index of the cyclic quotient singularity; rejects the empty chain.
Integer chain_index(const Chain& chain);

struct DifferentResult {
    Integer m;
    std::vector<Integer> n;  // one per hit
    Rational b_prime;
    /// false when b' > 1: the data is not log canonical.
    bool log_canonical = true;
};

/// b' = 1 - (1 - Σ n_j b_j)/m via continuants. The empty chain models a
/// smooth point (m = 1, n_j = local multiplicities).
DifferentResult different_coefficient(const Chain& chain, const ChainBoundary& boundary);

/// Codiscrepancies (c_1..c_r) of F_1..F_r for K + E + Δ, from the linear
/// system M c = (p_i - 2) + [i = 1] + Σ_hits at i (mult · b).
std::vector<Rational> log_discrepancies(const Chain& chain, const ChainBoundary& boundary);

struct StandardDifferent {
    Integer n;
    Integer m;
    Integer n_prime;
    /// 1: boundary meets only F_r, once; 2: boundary disjoint from the chain.
    int case_number = 0;
};

/// Decomposition n = m n' for standard coefficients. Throws MathSignal
/// (NotApplicable) when the incidence pattern matches neither case or b' is
/// not of the form 1 - 1/n.
StandardDifferent verify_standard_different(const Chain& chain, const ChainBoundary& boundary);

}  // namespace logsurf
