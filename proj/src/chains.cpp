// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/chains.hpp"

#include <string>

#include "logsurf/coeffsets.hpp"
#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

void require_valid(std::span<const int> p) {
    for (int v : p)
        if (v < 2) throw InvalidInput("chain entry " + std::to_string(v) + " < 2");
}

void require_valid_hits(const Chain& chain, const ChainBoundary& boundary) {
    for (const auto& h : boundary) {
        if (h.index < 1 || h.index > chain.length())
            throw InvalidInput("boundary hit on F_" + std::to_string(h.index) + " outside the chain");
        if (h.multiplicity < 1) throw InvalidInput("boundary hit multiplicity must be positive");
        if (h.coefficient.sign() <= 0 || h.coefficient > Rational(1))
            throw InvalidInput("boundary coefficient " + h.coefficient.str() + " outside (0,1]");
    }
}

void require_valid_smooth_hits(const ChainBoundary& boundary) {
    for (const auto& h : boundary) {
        if (h.multiplicity < 1) throw InvalidInput("boundary hit multiplicity must be positive");
        if (h.coefficient.sign() <= 0 || h.coefficient > Rational(1))
            throw InvalidInput("boundary coefficient " + h.coefficient.str() + " outside (0,1]");
    }
}

}  // namespace

Chain::Chain(std::vector<int> p) : p_(std::move(p)) { require_valid(p_); }

Matrix Chain::gram() const {
    const std::size_t r = p_.size();
    Matrix g(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        g(i, i) = Rational(-p_[i]);
        if (i + 1 < r) g(i, i + 1) = g(i + 1, i) = Rational(1);
    }
    return g;
}

Integer continuant(std::span<const int> p) {
    require_valid(p);
    // Backward recurrence d_i = p_i d_{i+1} - d_{i+2}, d_{r+1} = 1, d_{r+2} = 0.
    Integer next(1), after(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        Integer d = *it * next - after;
        after = next;
        next = d;
    }
    return next;
}

Integer chain_index(const Chain& chain) {
    if (chain.empty()) throw InvalidInput("chain_index of the empty chain");
    return continuant(chain.p());
}

DifferentResult different_coefficient(const Chain& chain, const ChainBoundary& boundary) {
    DifferentResult out;
    Rational weighted;
    if (chain.empty()) {
        require_valid_smooth_hits(boundary);
        out.m = 1;
        for (const auto& h : boundary) {
            out.n.emplace_back(h.multiplicity);
            weighted += Rational(h.multiplicity) * h.coefficient;
        }
    } else {
        require_valid_hits(chain, boundary);
        const std::span<const int> p(chain.p());
        out.m = continuant(p);
        for (const auto& h : boundary) {
            Integer nj = h.multiplicity * continuant(p.subspan(h.index));
            weighted += Rational(nj) * h.coefficient;
            out.n.push_back(std::move(nj));
        }
    }
    const Rational one(1);
    out.b_prime = one - (one - weighted) / Rational(out.m);
    out.log_canonical = out.b_prime <= one;
    return out;
}

std::vector<Rational> log_discrepancies(const Chain& chain, const ChainBoundary& boundary) {
    if (chain.empty()) throw InvalidInput("log_discrepancies needs a nonempty chain");
    require_valid_hits(chain, boundary);
    const std::size_t r = chain.length();
    Matrix m(r, r);
    std::vector<Rational> rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        m(i, i) = Rational(chain.p()[i]);
        if (i + 1 < r) m(i, i + 1) = m(i + 1, i) = Rational(-1);
        // K·F_i = p_i - 2 by adjunction on a smooth rational curve.
        rhs[i] = Rational(chain.p()[i] - 2);
    }
    rhs[0] += Rational(1);
    for (const auto& h : boundary) rhs[h.index - 1] += Rational(h.multiplicity) * h.coefficient;
    auto solution = solve(std::move(m), std::move(rhs));
    if (!solution) throw std::logic_error("chain matrix is singular");
    return *solution;
}

StandardDifferent verify_standard_different(const Chain& chain, const ChainBoundary& boundary) {
    for (const auto& h : boundary)
        if (!is_standard_coefficient(h.coefficient))
            throw MathSignal(MathSignal::Kind::NotApplicable,
                             "boundary coefficient " + h.coefficient.str() + " is not of the form 1-1/n");
    const DifferentResult diff = different_coefficient(chain, boundary);
    const Rational one(1);
    if (diff.b_prime >= one)
        throw MathSignal(MathSignal::Kind::NotApplicable, "different coefficient " + diff.b_prime.str() + " is not < 1");
    const Rational n_rational = (one - diff.b_prime).inverse();
    if (!n_rational.is_integer())
        throw MathSignal(MathSignal::Kind::NotApplicable, "different coefficient is not of the form 1-1/n");

    StandardDifferent out;
    out.n = n_rational.numerator();
    out.m = diff.m;
    if (boundary.empty()) {
        out.case_number = 2;
        out.n_prime = 1;
        if (out.n != out.m)
            throw std::logic_error("disjoint boundary but n != m");
        return out;
    }
    const ChainHit& h = boundary.front();
    if (boundary.size() == 1 && !chain.empty() && h.index == chain.length() && h.multiplicity == 1) {
        out.case_number = 1;
        out.n_prime = (one - h.coefficient).inverse().numerator();
        if (out.n != out.m * out.n_prime)
            throw std::logic_error("last-curve boundary but n != m n'");
        return out;
    }
    throw MathSignal(MathSignal::Kind::NotApplicable,
                     "boundary neither meets only the last curve once nor avoids the chain");
}

}  // namespace logsurf
