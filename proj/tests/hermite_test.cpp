/*
   Copyright 2026 The ppbinom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "ppbinom/classify.hpp"
#include "ppbinom/errors.hpp"
#include "ppbinom/hermite.hpp"
#include "test_support.hpp"

namespace ppbinom {
namespace {

using testing::field_for;
using testing::nonzero_elements;
using testing::q_with_cube_split;

/// x^k by repeated multiplication; shares nothing with FieldCtx::pow.
FieldElem naive_pow(const FieldCtx& ctx, FieldElem x, std::uint64_t k) {
    FieldElem acc = ctx.one();
    for (std::uint64_t t = 0; t < k; ++t) acc = ctx.mul(acc, x);
    return acc;
}

/// The coefficient sum straight from its definition: every pair (i, j),
/// kept when -alpha-1+3(i-j) is a multiple of q+1 inside [lo, hi].
FieldElem s_by_double_sum(const FieldCtx& ctx, FieldElem a, std::int64_t alpha, std::int64_t hi) {
    const auto q = static_cast<std::int64_t>(ctx.q());
    const std::int64_t lo = 2 * alpha + 2 - 3 * q;
    FieldElem acc = ctx.zero();
    for (std::int64_t i = 0; i <= alpha; ++i) {
        for (std::int64_t j = 0; j <= q - 1 - alpha; ++j) {
            const std::int64_t e = -alpha - 1 + 3 * (i - j);
            if (e < lo || e > hi || e % (q + 1) != 0) continue;
            const Residue c = modp::mul(lucas_binom(ctx.p(), static_cast<std::uint64_t>(alpha), i),
                                        lucas_binom(ctx.p(), static_cast<std::uint64_t>(q - 1 - alpha), j), ctx.p());
            acc = ctx.add(acc, ctx.mul(FieldElem{c}, ctx.pow(a, -(i + j * q))));
        }
    }
    return acc;
}

FieldElem identity_rhs(const FieldCtx& ctx, FieldElem a, std::int64_t alpha, FieldElem s) {
    const auto q = static_cast<std::int64_t>(ctx.q());
    return ctx.neg(ctx.mul(ctx.pow(a, (alpha + 1) * (1 - q)), s));
}

// ------------------------------------------------------------ BinomialMap

TEST(BinomialMapTest, EvaluatesTheDefinition) {
    for (std::uint64_t q : {2u, 4u, 5u, 8u}) {
        const FieldCtx ctx = field_for(q);
        const FieldElem a{3 % static_cast<std::uint32_t>(ctx.size())};
        const BinomialMap f(ctx, a);
        EXPECT_EQ(f.exponent(), 3 * q - 2);
        EXPECT_EQ(f(ctx.zero()), ctx.zero());
        for (std::uint64_t c = 0; c < ctx.size(); ++c) {
            const FieldElem x{static_cast<std::uint32_t>(c)};
            EXPECT_EQ(f(x), ctx.add(ctx.mul(a, x), naive_pow(ctx, x, 3 * q - 2)));
        }
    }
}

TEST(BinomialMapTest, RejectsZeroCoefficient) {
    const FieldCtx ctx(5, 1);
    EXPECT_THROW(BinomialMap(ctx, ctx.zero()), Error);
    EXPECT_THROW(brute_pp_test(ctx, ctx.zero()), Error);
    EXPECT_THROW(s_q(ctx, ctx.zero(), 0), Error);
}

// ------------------------------------------------------------- power sums

TEST(PowerSumTest, AgreesWithNaiveSummation) {
    for (std::uint64_t q : {2u, 3u, 4u}) {
        const FieldCtx ctx = field_for(q);
        for (const FieldElem a : nonzero_elements(ctx)) {
            const BinomialMap f(ctx, a);
            for (std::uint64_t s = 1; s < ctx.size(); ++s) {
                FieldElem acc = ctx.zero();
                for (std::uint64_t c = 0; c < ctx.size(); ++c) {
                    acc = ctx.add(acc, naive_pow(ctx, f(FieldElem{static_cast<std::uint32_t>(c)}), s));
                }
                EXPECT_EQ(power_sum(ctx, a, s), acc) << "q=" << q << " a=" << a.code() << " s=" << s;
            }
        }
    }
}

TEST(PowerSumTest, OnlyReducedIndicesCanBeNonzero) {
    // Writing s = alpha + beta*q, the sum vanishes unless alpha + beta = q-1.
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u}) {
        const FieldCtx ctx = field_for(q);
        for (const FieldElem a : nonzero_elements(ctx)) {
            for (std::uint64_t s = 1; s + 2 <= ctx.size(); ++s) {
                const std::uint64_t alpha = s % q, beta = s / q;
                if (alpha + beta == q - 1) continue;
                EXPECT_TRUE(power_sum(ctx, a, s).is_zero()) << "q=" << q << " a=" << a.code() << " s=" << s;
            }
        }
    }
}

TEST(PowerSumTest, QTwoCubeRootMakesEverySumVanish) {
    const FieldCtx ctx(2, 1);
    for (const FieldElem a : nonzero_elements(ctx)) {
        if (!ctx.is_primitive_cube_root(a)) continue;
        for (std::uint64_t s = 1; s <= 2; ++s) EXPECT_TRUE(power_sum(ctx, a, s).is_zero());
    }
}

TEST(PowerSumTest, TopIndexOfAPermutationIsMinusOne) {
    for (std::uint64_t q : {2u, 5u, 8u, 11u}) {
        const FieldCtx ctx = field_for(q);
        for (const FieldElem a : nonzero_elements(ctx)) {
            if (!brute_pp_test(ctx, a)) continue;
            EXPECT_EQ(power_sum(ctx, a, ctx.size() - 1), ctx.from_int(-1)) << "q=" << q << " a=" << a.code();
        }
    }
}

// -------------------------------------------------------- coefficient sums

TEST(CoefficientSumTest, MatchesDefinitionByDoubleSum) {
    for (const auto& pp : prime_powers_up_to(16)) {
        const FieldCtx ctx(pp.p, pp.e);
        const auto q = static_cast<std::int64_t>(pp.q);
        for (const FieldElem a : nonzero_elements(ctx)) {
            for (std::int64_t alpha = 0; alpha < q; ++alpha) {
                ASSERT_EQ(s_q(ctx, a, alpha), s_by_double_sum(ctx, a, alpha, 2 * alpha - 1))
                    << "q=" << q << " a=" << a.code() << " alpha=" << alpha;
            }
        }
    }
}

TEST(CoefficientSumTest, PowerSumIdentityExhaustive) {
    for (std::uint64_t q : {5u, 8u, 11u}) {
        const FieldCtx ctx = field_for(q);
        for (const FieldElem a : nonzero_elements(ctx)) {
            for (std::uint64_t alpha = 0; alpha < q; ++alpha) {
                const auto lhs = power_sum(ctx, a, reduced_index(q, alpha));
                const auto rhs = identity_rhs(ctx, a, static_cast<std::int64_t>(alpha), s_q(ctx, a, alpha));
                ASSERT_EQ(lhs, rhs) << "q=" << q << " a=" << a.code() << " alpha=" << alpha;
            }
        }
    }
}

TEST(CoefficientSumTest, PowerSumIdentitySampled) {
    std::mt19937_64 rng(20240607);
    for (std::uint64_t q : {17u, 23u, 29u, 32u}) {
        const FieldCtx ctx = field_for(q);
        std::uniform_int_distribution<std::uint64_t> pick_alpha(0, q - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const FieldElem a = testing::random_nonzero(ctx, rng);
            const std::uint64_t alpha = pick_alpha(rng);
            const auto lhs = power_sum(ctx, a, reduced_index(q, alpha));
            const auto rhs = identity_rhs(ctx, a, static_cast<std::int64_t>(alpha), s_q(ctx, a, alpha));
            ASSERT_EQ(lhs, rhs) << "q=" << q << " a=" << a.code() << " alpha=" << alpha;
        }
    }
}

TEST(CoefficientSumTest, StatedIntervalWouldBreakTheIdentity) {
    // Using alpha-1 as the upper end drops the multiples of q+1 lying in
    // (alpha-1, 2alpha-1]; the power-sum identity then fails for some a.
    int failures = 0;
    for (std::uint64_t q : {5u, 8u, 11u}) {
        const FieldCtx ctx = field_for(q);
        for (const FieldElem a : nonzero_elements(ctx)) {
            for (std::int64_t alpha = 0; alpha < static_cast<std::int64_t>(q); ++alpha) {
                const auto lhs = power_sum(ctx, a, reduced_index(q, static_cast<std::uint64_t>(alpha)));
                failures += lhs != identity_rhs(ctx, a, alpha, s_by_double_sum(ctx, a, alpha, alpha - 1));
            }
        }
    }
    EXPECT_GT(failures, 0);
}

TEST(CoefficientSumTest, VanishesForSporadicQFive) {
    const FieldCtx ctx(5, 1);
    int seen = 0;
    for (const FieldElem a : nonzero_elements(ctx)) {
        if (ctx.pow(a, 2) != ctx.from_int(4)) continue;
        ++seen;
        for (std::uint64_t alpha = 0; alpha < 5; ++alpha) EXPECT_TRUE(s_q(ctx, a, alpha).is_zero());
    }
    EXPECT_GT(seen, 0);
}

TEST(CoefficientSumTest, QThreeAlphaZeroIsMinusAToTheMinusQ) {
    const FieldCtx ctx(3, 1);
    for (const FieldElem a : nonzero_elements(ctx)) {
        EXPECT_EQ(s_q(ctx, a, 0), ctx.neg(ctx.pow(a, -3)));
        EXPECT_FALSE(s_q(ctx, a, 0).is_zero());
    }
}

// ---------------------------------------------------------- interval census

TEST(IntervalCensusTest, Examples) {
    auto c = interval_census(5, 2);
    EXPECT_EQ(c.multiples, (std::vector<std::int64_t>{-1, 0}));
    EXPECT_EQ(c.lo, -9);
    EXPECT_EQ(c.hi_working, 3);
    EXPECT_EQ(c.hi_stated, 1);

    c = interval_census(8, 2);
    EXPECT_EQ(c.lo, -18);
    EXPECT_EQ(c.hi_working, 3);
    EXPECT_EQ(c.multiples, (std::vector<std::int64_t>{-2, -1, 0}));

    EXPECT_EQ(interval_census(11, 8).multiples.size(), 3u);
    EXPECT_THROW(interval_census(5, 5), Error);
}

TEST(IntervalCensusTest, TwoOrThreeConsecutiveMultiples) {
    for (const std::uint64_t q : q_with_cube_split(64)) {
        for (std::uint64_t alpha = 2; alpha < q; alpha += 3) {
            const auto c = interval_census(q, alpha);
            const bool exceptional = q % 2 == 1 && alpha == (q - 1) / 2;
            ASSERT_EQ(c.multiples.size(), exceptional ? 2u : 3u) << "q=" << q << " alpha=" << alpha;
            for (std::size_t k = 1; k < c.multiples.size(); ++k) EXPECT_EQ(c.multiples[k], c.multiples[k - 1] + 1);
            if (exceptional) {
                EXPECT_EQ(c.multiples, (std::vector<std::int64_t>{-1, 0}));
            }
        }
    }
}

// ---------------------------------------------------------- permutation tests

TEST(BruteTest, SmallExamples) {
    const FieldCtx f4(2, 1);
    for (const FieldElem a : nonzero_elements(f4)) {
        EXPECT_EQ(brute_pp_test(f4, a), f4.is_primitive_cube_root(a)) << a.code();
    }
    EXPECT_FALSE(brute_pp_test(f4, f4.one()));

    const FieldCtx f25(5, 1);
    int count = 0;
    for (const FieldElem a : nonzero_elements(f25)) count += brute_pp_test(f25, a);
    EXPECT_EQ(count, 10);
}

TEST(HermiteTest, AgreesWithBruteForceForAllQUpTo13) {
    for (const auto& pp : prime_powers_up_to(13)) {
        const FieldCtx ctx(pp.p, pp.e);
        for (const FieldElem a : nonzero_elements(ctx)) {
            ASSERT_EQ(hermite_pp_test(ctx, a), brute_pp_test(ctx, a)) << "q=" << pp.q << " a=" << a.code();
        }
    }
}

TEST(HermiteTest, FullRangeAgreesWithBruteForce) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
        const FieldCtx ctx = field_for(q);
        for (const FieldElem a : nonzero_elements(ctx)) {
            ASSERT_EQ(hermite_pp_test_full(ctx, a), brute_pp_test(ctx, a)) << "q=" << q << " a=" << a.code();
        }
    }
    EXPECT_THROW(hermite_pp_test_full(FieldCtx(11, 1), FieldElem{1}), Error);
}

TEST(HermiteTest, NoPermutationWhenThreeDoesNotDivideQPlusOne) {
    for (std::uint64_t q : {3u, 4u, 7u, 9u, 13u, 16u}) {
        const FieldCtx ctx = field_for(q);
        for (const FieldElem a : nonzero_elements(ctx)) EXPECT_FALSE(hermite_pp_test(ctx, a)) << q;
    }
}

TEST(HermiteTest, QEightSporadicCondition) {
    // a^3 must be a root of x^3+x^2+1; the often-quoted x^3+x+1 fails.
    const FieldCtx ctx(2, 3);
    int good = 0, misprint = 0;
    for (const FieldElem a : nonzero_elements(ctx)) {
        const FieldElem y = ctx.pow(a, 3);
        const FieldElem y2 = ctx.mul(y, y), y3 = ctx.mul(y2, y);
        if (ctx.add(ctx.add(y3, y2), ctx.one()).is_zero()) {
            ++good;
            EXPECT_TRUE(hermite_pp_test(ctx, a)) << a.code();
        }
        if (ctx.add(ctx.add(y3, y), ctx.one()).is_zero()) {
            ++misprint;
            EXPECT_FALSE(hermite_pp_test(ctx, a)) << a.code();
        }
    }
    EXPECT_EQ(good, 9);
    EXPECT_EQ(misprint, 9);
}

TEST(HermiteTest, RootCriterion) {
    for (const std::uint64_t q : q_with_cube_split(11)) {
        const FieldCtx ctx = field_for(q);
        for (const FieldElem a : nonzero_elements(ctx)) {
            const bool y_is_one = ctx.pow(a, static_cast<std::int64_t>((q + 1) / 3)) == ctx.one();
            EXPECT_EQ(only_trivial_root(ctx, a), !y_is_one) << "q=" << q << " a=" << a.code();
        }
    }
}

TEST(HermiteTest, CosetInvariance) {
    for (const std::uint64_t q : q_with_cube_split(11)) {
        const FieldCtx ctx = field_for(q);
        const auto k = static_cast<std::int64_t>((q + 1) / 3);
        std::vector<FieldElem> eps;
        for (const FieldElem e : nonzero_elements(ctx)) {
            if (ctx.pow(e, k) == ctx.one()) eps.push_back(e);
        }
        ASSERT_EQ(eps.size(), static_cast<std::size_t>(k));  // k divides q^2-1
        for (const FieldElem a : nonzero_elements(ctx)) {
            const bool base = brute_pp_test(ctx, a);
            for (const FieldElem e : eps) EXPECT_EQ(brute_pp_test(ctx, ctx.mul(e, a)), base);
        }
    }
}

// -------------------------------------------------------- cube-root profile

std::vector<FieldElem> cube_root_parameters(const FieldCtx& ctx) {
    std::vector<FieldElem> out;
    const auto k = static_cast<std::int64_t>((ctx.q() + 1) / 3);
    for (const FieldElem a : nonzero_elements(ctx)) {
        if (ctx.is_primitive_cube_root(ctx.pow(a, k))) out.push_back(a);
    }
    return out;
}

TEST(CubeRootProfileTest, EvenQAllSumsVanish) {
    for (std::uint64_t q : {2u, 8u, 32u}) {
        const FieldCtx ctx = field_for(q);
        const auto as = cube_root_parameters(ctx);
        ASSERT_FALSE(as.empty());
        // q = 32 is sampled: every fifth qualifying a.
        for (std::size_t i = 0; i < as.size(); i += (q == 32 ? 5 : 1)) {
            const auto v = cube_root_profile(ctx, as[i]);
            EXPECT_TRUE(v.holds) << "q=" << q << " a=" << as[i].code();
            EXPECT_FALSE(v.exceptional_index.has_value());
            for (const auto& [s, sum] : v.profile.entries) EXPECT_TRUE(sum.is_zero()) << s;
        }
    }
}

TEST(CubeRootProfileTest, OddQSingleNonzeroEntry) {
    for (std::uint64_t q : {5u, 11u, 17u, 23u, 29u}) {
        const FieldCtx ctx = field_for(q);
        const auto as = cube_root_parameters(ctx);
        ASSERT_FALSE(as.empty());
        for (std::size_t i = 0; i < as.size(); i += (q > 11 ? 7 : 1)) {
            const auto v = cube_root_profile(ctx, as[i]);
            ASSERT_TRUE(v.exceptional_index.has_value());
            EXPECT_EQ(*v.exceptional_index, (q * q - 1) / 2);
            EXPECT_TRUE(v.holds) << "q=" << q << " a=" << as[i].code();
            int nonzero = 0;
            for (const auto& [s, sum] : v.profile.entries) {
                if (sum.is_zero()) continue;
                ++nonzero;
                EXPECT_EQ(s, (q * q - 1) / 2);
                EXPECT_EQ(sum, v.expected_exceptional);
            }
            EXPECT_EQ(nonzero, 1);
        }
    }
}

TEST(CubeRootProfileTest, QFiveExceptionalValue) {
    const FieldCtx ctx(5, 1);
    for (const FieldElem a : cube_root_parameters(ctx)) {
        const auto v = cube_root_profile(ctx, a);
        EXPECT_EQ(*v.exceptional_index, 12u);
        EXPECT_EQ(v.expected_exceptional, ctx.mul(ctx.pow(a, -13), ctx.add(ctx.one(), v.y)));
    }
}

TEST(CubeRootProfileTest, Preconditions) {
    const FieldCtx f9(3, 1);
    EXPECT_THROW(cube_root_profile(f9, f9.one()), Error);
    const FieldCtx f25(5, 1);
    EXPECT_THROW(cube_root_profile(f25, f25.one()), Error);  // y = 1
}

}  // namespace
}  // namespace ppbinom
