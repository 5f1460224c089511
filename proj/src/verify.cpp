// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/verify.hpp"

#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "logsurf/chains.hpp"
#include "logsurf/coeffsets.hpp"
#include "logsurf/constructions.hpp"
#include "logsurf/errors.hpp"
#include "logsurf/random_config.hpp"
#include "logsurf/surfaces.hpp"

namespace logsurf {

namespace {

// Collects the first few failures of a check.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) detail_ << (failures_ > 1 ? "; " : "") << what;
    }
    CheckResult result(int id, std::string name, const std::string& summary) const {
        return {id, std::move(name), failures_ == 0,
                failures_ == 0 ? summary : std::to_string(failures_) + " failure(s): " + detail_.str()};
    }

private:
    int failures_ = 0;
    std::ostringstream detail_;
};

CheckResult check_example_volumes() {
    Tally t;
    for (int n = 3; n <= 20; ++n) {
        const Rational v = example_even(n).volume;
        t.expect(v == Rational(2 * (n - 2)), "even n=" + std::to_string(n) + " gave " + v.str());
    }
    for (int n = 2; n <= 20; ++n) {
        const Rational v = example_odd(n).volume;
        t.expect(v == Rational(2 * n - 3), "odd n=" + std::to_string(n) + " gave " + v.str());
    }
    return t.result(1, "Example volumes 2(n-2) and 2n-3", "even n=3..20, odd n=2..20 exact");
}

CheckResult check_nklt_chain() {
    Tally t;
    const LogPair base = example_even(3).pair;
    Rational previous = -1;
    for (int s = 1; s <= 50; ++s) {
        const auto r = nklt_blowup_sequence(base, "H1", "V1", s);
        t.expect(r.self_intersection == Rational(2) - Rational(1, s), "s=" + std::to_string(s) + " (K+B')^2=" +
                                                                         r.self_intersection.str());
        for (int i = 1; i < s; ++i)
            t.expect(r.exceptional_pairings[i - 1].is_zero(), "s=" + std::to_string(s) + " E" + std::to_string(i));
        t.expect(r.exceptional_pairings[s - 1] == Rational(1, s), "s=" + std::to_string(s) + " E_s pairing");
        t.expect(r.self_intersection > previous && r.self_intersection < Rational(2), "monotone s=" + std::to_string(s));
        previous = r.self_intersection;
    }
    return t.result(2, "nklt blow-up chain (K+B')^2 = 2 - 1/s", "s=1..50 exact, strictly increasing below 2");
}

CheckResult check_iterated() {
    Tally t;
    long configurations = 0;
    for (int n = 4; n <= 8; ++n) {
        std::vector<int> s(n - 1, 2);
        for (;;) {
            Rational inv_sum;
            for (int v : s) inv_sum += Rational(1, v);
            const Rational closed = Rational((n - 3) * (n - 3)) - inv_sum;
            if (closed.sign() > 0) {
                ++configurations;
                const auto r = iterated_sequence(n, s);
                t.expect(r.self_intersection == closed, "n=" + std::to_string(n) + " volume " + r.self_intersection.str());
                for (int j = 0; j < n - 1; ++j) t.expect(r.line_pairings[j] == Rational(n - 4), "line pairing");
                t.expect(r.line_pairings[n - 1] == Rational(n - 3) - inv_sum, "L_n pairing");
                t.expect(r.exceptional_nonnegative, "exceptional pairing negative");
            }
            std::size_t k = 0;
            while (k < s.size() && s[k] == 6) s[k++] = 2;
            if (k == s.size()) break;
            ++s[k];
        }
    }
    return t.result(3, "iterated construction (n-3)^2 - sum 1/s_j",
                    std::to_string(configurations) + " configurations, n=4..8, s_j in 2..6");
}

CheckResult check_t_m() {
    Tally t;
    const CoeffSet c2 = CoeffSet::standard();
    for (int m = 1; m <= 200; ++m) t.expect(t_m(c2, m) == Rational(1), "t_" + std::to_string(m) + " != 1");
    for (int m = 1; m <= 50; ++m) {
        Rational brute(1);
        for (int n = 2; n <= 10 * m; ++n) {
            const Rational b(n - 1, n);
            const Rational f = (Rational(m) * b).frac();
            if (f.is_zero()) continue;
            const Rational v = (Rational(1) - b) / f;
            if (v > brute) brute = v;
        }
        t.expect(brute == t_m(c2, m), "brute force disagrees at m=" + std::to_string(m));
    }
    return t.result(4, "t_m(C2) = 1", "m=1..200, brute force n<=10m for m<=50");
}

CheckResult check_sums() {
    Tally t;
    using Tuples = std::vector<std::vector<int>>;
    t.expect(enumerate_standard_sums(2, 8) == Tuples{{2, 2, 2, 2}, {2, 3, 6}, {2, 4, 4}, {3, 3, 3}}, "target 2 list");
    t.expect(enumerate_standard_sums(1, 8) == Tuples{{2, 2}}, "target 1 list");
    const auto c = cartier_multiples_C2();
    t.expect(c.multiples == std::set<Integer>{1, 2, 3, 4, 6}, "Cartier multiples");
    t.expect(c.lcm == 12, "lcm " + c.lcm.get_str());
    return t.result(5, "standard sums and Cartier multiples", "{(3,3,3),(2,4,4),(2,3,6),(2,2,2,2)}, {(2,2)}, {1,2,3,4,6}, lcm 12");
}

CheckResult check_lower_bound() {
    Tally t;
    const Rational lb = lower_bound(Rational(1, 1764), 6, Rational(1));
    t.expect(lb == Rational(1, 86436), "lower_bound gave " + lb.str());
    t.expect(lb == bounds_table().at("lower_bound_C2"), "table lower bound mismatch");
    t.expect(bounds_table().at("v1_C2") == Rational(1, 1764), "v1 mismatch");
    return t.result(6, "lower bound 1/86436 and v1 = 1/1764", "exact");
}

CheckResult check_different() {
    Tally t;
    std::mt19937_64 rng(20260417);
    std::uniform_int_distribution<int> len(1, 8), pick(2, 7), coin(0, 3), nstd(2, 9);
    int cases = 0, standard_cases = 0;
    for (; cases < 400; ++cases) {
        std::vector<int> p(len(rng));
        for (auto& v : p) v = pick(rng);
        const Chain chain(p);
        t.expect(is_negative_definite(chain.gram()), "Gram not negative definite");
        ChainBoundary hits;
        const int h = coin(rng);
        for (int k = 0; k < h; ++k)
            hits.push_back({static_cast<std::size_t>(std::uniform_int_distribution<int>(1, static_cast<int>(p.size()))(rng)),
                            std::uniform_int_distribution<int>(1, 2)(rng),
                            coin(rng) == 0 ? Rational(1) : Rational(1) - Rational(1, nstd(rng))});
        const auto diff = different_coefficient(chain, hits);
        const auto ld = log_discrepancies(chain, hits);
        t.expect(diff.b_prime == ld.front(), "routes disagree on a chain of length " + std::to_string(p.size()));

        const bool last_once = hits.size() == 1 && hits[0].index == p.size() && hits[0].multiplicity == 1 &&
                               hits[0].coefficient < Rational(1);
        if (hits.empty() || last_once) {
            ++standard_cases;
            const auto sd = verify_standard_different(chain, hits);
            t.expect(sd.n == sd.m * sd.n_prime, "n != m n'");
        }
    }
    return t.result(7, "different: continuant formula = linear system",
                    std::to_string(cases) + " random chains, " + std::to_string(standard_cases) + " standard cases");
}

CheckResult check_derivative() {
    Tally t;
    const CoeffSet c2 = CoeffSet::standard();
    const auto d = derivative_members(c2, {12, 6, 12});
    for (const auto& q : d.members) t.expect(c2.contains(q), q.str() + " not in C2");
    return t.result(8, "derivative set of C2 inside C2", std::to_string(d.members.size()) + " members checked");
}

CheckResult check_zariski() {
    Tally t;
    std::mt19937_64 rng(7);
    int runs = 0;
    for (; runs < 150; ++runs) {
        const SurfaceConfig s = random_config(rng, 8);
        const Divisor eff = random_divisor(rng, s, s.stage(), 0, 4, 2);
        ClassVector d = s.class_of(eff);
        const ClassVector nef = base_nef_class(s);
        const int w = std::uniform_int_distribution<int>(0, 2)(rng);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += Rational(w) * nef[i];

        const ZariskiResult z = zariski(s, d);
        const ClassVector n = s.class_of(z.negative);
        bool sum_ok = true;
        for (std::size_t i = 0; i < d.size(); ++i) sum_ok = sum_ok && (z.positive[i] + n[i] == d[i]);
        t.expect(sum_ok, "D != P + N");
        Matrix g(z.negative.size(), z.negative.size());
        std::size_t a = 0;
        for (const auto& [name, coeff] : z.negative) {
            t.expect(coeff.sign() > 0, "negative coefficient");
            t.expect(s.intersect(z.positive, s.curve(name).cls).is_zero(), "P.C != 0 on support");
            std::size_t b = 0;
            for (const auto& [other, oc] : z.negative)
                g(a, b++) = Rational(static_cast<long>(s.intersect(s.curve(name).cls, s.curve(other).cls)));
            ++a;
        }
        t.expect(z.negative.empty() || is_negative_definite(g), "support Gram not negative definite");
        for (const auto& c : s.curves()) t.expect(s.intersect(z.positive, c.cls).sign() >= 0, "P not config-nef");
        t.expect(s.intersect(z.positive, z.positive) >= s.intersect(d, d), "P^2 < D^2");
    }

    auto blp2 = SurfaceConfig::make_base(BaseKind::ProjectivePlane);
    blp2.blow_up(GeneralPoint{}, "E");
    ClassVector d = blp2.to_rational(IntClass{1, 0});
    d[1] += Rational(1);  // L + E
    const ZariskiResult z = zariski(blp2, d);
    t.expect(z.positive == blp2.to_rational(IntClass{1, 0}), "worked example P != L");
    t.expect(z.negative == Divisor{{"E", Rational(1)}}, "worked example N != E");
    t.expect(blp2.intersect(z.positive, z.positive) == Rational(1), "worked example P^2 != 1");
    return t.result(9, "Zariski decomposition contract", std::to_string(runs) + " random configurations + Bl_p P2 example");
}

CheckResult check_structure() {
    Tally t;
    std::mt19937_64 rng(11);
    int runs = 0;
    for (; runs < 150; ++runs) {
        std::vector<SurfaceConfig> stages;
        const SurfaceConfig last = random_config(rng, 8, &stages);
        for (const auto& c : last.curves())
            t.expect(last.intersect(c.cls, c.cls) + last.intersect(last.canonical(), c.cls) == -2,
                     "genus formula fails for " + c.name);
        for (std::size_t k = 0; k < stages.size(); ++k) {
            const Divisor a = random_divisor(rng, stages[k], k, -3, 3, 2);
            const Divisor b = random_divisor(rng, stages[k], k, -3, 3, 3);
            const Rational before = intersect(stages[k], a, b);
            const Divisor pa = pullback(last, a, k);
            const Divisor pb = pullback(last, b, k);
            t.expect(intersect(last, pa, pb) == before, "projection formula at stage " + std::to_string(k));
            const ClassVector pa_class = last.class_of(pa);
            for (std::size_t e = k; e < last.stage(); ++e)
                t.expect(last.intersect(pa_class, last.curve(last.blowups()[e].name).cls).is_zero(),
                         "pull-back meets a later exceptional curve");
            const Divisor lcb = random_divisor(rng, stages[k], k, 0, 2, 2);
            const LogPair after_pair(last, log_pullback(last, lcb, k));
            t.expect(lc_check(after_pair).verdict != LcVerdict::NotLc, "log pull-back of an lc pair is not lc");
        }
    }

    auto p2 = SurfaceConfig::make_base(BaseKind::ProjectivePlane);
    for (int i = 1; i <= 4; ++i) p2.add_curve("L" + std::to_string(i), IntClass{1});
    auto with = [&](const Rational& b) {
        Divisor d;
        for (int i = 1; i <= 4; ++i) d["L" + std::to_string(i)] = b;
        return lc_check(LogPair(p2, d)).verdict;
    };
    t.expect(with(Rational(1)) == LcVerdict::Lc, "four lines with coefficient 1 should be lc, not klt");
    t.expect(with(Rational(3, 2)) == LcVerdict::NotLc, "coefficient 3/2 should be not lc");
    t.expect(with(Rational(1, 2)) == LcVerdict::Klt, "coefficient 1/2 should be klt");
    return t.result(10, "projection formula, genus formula, lc verdicts",
                    std::to_string(runs) + " random scripts + three worked lc examples");
}

}  // namespace

std::vector<CheckResult> run_verification() {
    const std::vector<std::function<CheckResult()>> checks = {
        check_example_volumes, check_nklt_chain, check_iterated, check_t_m, check_sums,
        check_lower_bound, check_different, check_derivative, check_zariski, check_structure,
    };
    std::vector<std::future<CheckResult>> futures;
    for (const auto& c : checks)
        futures.push_back(std::async(std::launch::async, [c, id = futures.size() + 1]() {
            try {
                return c();
            } catch (const std::exception& e) {
                return CheckResult{static_cast<int>(id), "check", false, std::string("exception: ") + e.what()};
            }
        }));
    std::vector<CheckResult> out;
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace logsurf
