// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "logsurf/chains.hpp"
#include "logsurf/errors.hpp"

using namespace logsurf;

TEST_CASE("continuants") {
    CHECK(continuant({}) == 1);
    const std::vector<int> a{2, 2, 2}, b{2, 3, 6};
    CHECK(continuant(a) == 4);
    CHECK(continuant(b) == 28);
}

TEST_CASE("chain index") {
    CHECK(chain_index(Chain({2, 2})) == 3);
    CHECK(chain_index(Chain({2})) == 2);
    CHECK(chain_index(Chain({3})) == 3);
    CHECK_THROWS_AS(chain_index(Chain()), InvalidInput);
    CHECK_THROWS_AS(Chain({2, 1}), InvalidInput);
}

TEST_CASE("continuant recurrence matches cofactor determinants") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> len(1, 7), entry(2, 9);
    for (int trial = 0; trial < 250; ++trial) {
        std::vector<int> p(len(rng));
        for (auto& v : p) v = entry(rng);
        CHECK(oracle::Q(continuant(p)) == oracle::cofactor_det(oracle::chain_matrix(p)));
    }
}

TEST_CASE("chains of (-2)-curves have index r+1") {
    for (int r = 1; r <= 12; ++r) CHECK(chain_index(Chain(std::vector<int>(r, 2))) == r + 1);
}

TEST_CASE("chain Gram matrices are negative definite") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> len(1, 8), entry(2, 7);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> p(len(rng));
        for (auto& v : p) v = entry(rng);
        CHECK(is_negative_definite(Chain(p).gram()));
    }
}

TEST_CASE("different coefficients") {
    CHECK(different_coefficient(Chain({2, 2}), {}).b_prime == Rational(2, 3));
    CHECK(different_coefficient(Chain(), {{1, 1, Rational(1, 2)}}).b_prime == Rational(1, 2));
    CHECK(different_coefficient(Chain({2}), {{1, 1, Rational(1, 2)}}).b_prime == Rational(3, 4));

    const auto bad = different_coefficient(Chain({2, 3, 6}), {{1, 1, Rational(1, 2)}});
    CHECK(bad.b_prime == Rational(71, 56));
    CHECK_FALSE(bad.log_canonical);

    CHECK_THROWS_AS(different_coefficient(Chain({2}), {{2, 1, Rational(1, 2)}}), InvalidInput);
    CHECK_THROWS_AS(different_coefficient(Chain({2}), {{1, 0, Rational(1, 2)}}), InvalidInput);
    CHECK_THROWS_AS(different_coefficient(Chain({2}), {{1, 1, Rational(3, 2)}}), InvalidInput);
}

TEST_CASE("log discrepancies along the chain") {
    CHECK(log_discrepancies(Chain({2, 2}), {}) == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    CHECK(log_discrepancies(Chain({2}), {}) == std::vector<Rational>{Rational(1, 2)});
    CHECK(log_discrepancies(Chain({2, 2}), {{2, 1, Rational(1)}}) == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK_THROWS_AS(log_discrepancies(Chain(), {}), InvalidInput);
}

TEST_CASE("determinant formula agrees with the linear system") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> len(1, 8), entry(2, 7), nhits(0, 3), mult(1, 3), den(1, 8);
    for (int trial = 0; trial < 250; ++trial) {
        std::vector<int> p(len(rng));
        for (auto& v : p) v = entry(rng);
        ChainBoundary hits;
        std::vector<oracle::Hit> ref_hits;
        for (int k = nhits(rng); k > 0; --k) {
            const auto idx = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, static_cast<int>(p.size()))(rng));
            const int mu = mult(rng);
            const int d = den(rng);
            const oracle::Q b = oracle::frac(std::max(d - 1, 1), d);
            hits.push_back({idx, mu, Rational(b)});
            ref_hits.push_back({idx, mu, b});
        }
        const auto ref = oracle::chain_codiscrepancies(p, ref_hits);
        CHECK(different_coefficient(Chain(p), hits).b_prime.raw() == ref[0]);
        const auto ld = log_discrepancies(Chain(p), hits);
        REQUIRE(ld.size() == ref.size());
        for (std::size_t i = 0; i < ld.size(); ++i) CHECK(ld[i].raw() == ref[i]);
    }
}

TEST_CASE("standard different decomposition") {
    const auto a = verify_standard_different(Chain({2, 2}), {});
    CHECK(a.n == 3);
    CHECK(a.m == 3);
    CHECK(a.n_prime == 1);
    CHECK(a.case_number == 2);

    const auto b = verify_standard_different(Chain({2}), {{1, 1, Rational(1, 2)}});
    CHECK(b.n == 4);
    CHECK(b.m == 2);
    CHECK(b.n_prime == 2);
    CHECK(b.case_number == 1);

    const auto c = verify_standard_different(Chain({3}), {});
    CHECK(c.n == 3);
    CHECK(c.m == 3);
    CHECK(c.n_prime == 1);
}

TEST_CASE("standard different is not applicable outside the two patterns") {
    CHECK_THROWS_AS(verify_standard_different(Chain({2, 2}), {{1, 1, Rational(1, 2)}}), MathSignal);
    CHECK_THROWS_AS(verify_standard_different(Chain({2}), {{1, 1, Rational(3, 5)}}), MathSignal);
    CHECK_THROWS_AS(verify_standard_different(Chain({2}), {{1, 1, Rational(1)}}), MathSignal);
}
