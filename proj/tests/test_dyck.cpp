#include "hankelwalk/dyck.hpp"
#include "hankelwalk/error.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace hankelwalk {
namespace {

using oracle::frac;
using oracle::ints;

std::vector<std::string> words(const std::vector<DyckPath>& paths) {
    std::vector<std::string> out;
    for (const auto& p : paths) out.push_back(p.to_string());
    return out;
}

TEST(DyckPath, ValidatesSteps) {
    EXPECT_NO_THROW(DyckPath::from_string("UUDD"));
    EXPECT_THROW(DyckPath::from_string("DU"), Error);
    EXPECT_THROW(DyckPath::from_string("UUD"), Error);
    EXPECT_THROW(DyckPath::from_string("UXDD"), Error);
    EXPECT_EQ(DyckPath::from_string("UUDUDD").heights(), (std::vector<int>{0, 1, 2, 1, 2, 1, 0}));
    EXPECT_EQ(DyckPath::from_string("UUDUDD").max_height(), 2);
}

TEST(EnumerateDyck, SmallCases) {
    EXPECT_EQ(words(enumerate_dyck(0)), (std::vector<std::string>{""}));
    EXPECT_EQ(words(enumerate_dyck(2)), (std::vector<std::string>{"UUDD", "UDUD"}));
    EXPECT_EQ(enumerate_dyck(3).size(), 5u);
}

TEST(EnumerateDyck, MatchesBruteForceFilter) {
    const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto got = words(enumerate_dyck(n));
        EXPECT_EQ(got.size(), catalan[n]);
        const std::set<std::string> unique(got.begin(), got.end());
        EXPECT_EQ(unique.size(), got.size());
        auto expected = oracle::brute_dyck_words(n);
        EXPECT_EQ(unique, std::set<std::string>(expected.begin(), expected.end()));
        // Up sorts before Down.
        auto keyed = got;
        for (auto& w : keyed) std::replace(w.begin(), w.end(), 'U', 'A');
        EXPECT_TRUE(std::is_sorted(keyed.begin(), keyed.end()));
    }
}

TEST(EnumerateDyck, Cap) {
    EXPECT_THROW(enumerate_dyck(13), Error);
    Caps small;
    small.dyck_n = 3;
    try {
        enumerate_dyck(4, small);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
    }
}

TEST(PathWeight, Examples) {
    EXPECT_EQ(path_weight(DyckPath::from_string("UUDD"), {ints({1, 1})}), 1);
    EXPECT_EQ(path_weight(DyckPath::from_string("UDUD"), {ints({2, 3})}), 4);
    EXPECT_EQ(path_weight(DyckPath::from_string("UUDD"), {ints({1, 1, 2, 2})}, 2), 4);
    EXPECT_EQ(path_weight(DyckPath(), {}), 1);
}

TEST(PathWeight, Errors) {
    try {
        path_weight(DyckPath::from_string("UUDD"), {ints({1})});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InsufficientWeights);
    }
    EXPECT_EQ(path_weight(DyckPath::from_string("UUDD"), {ints({5}), true}), 0);
    EXPECT_THROW(path_weight(DyckPath::from_string("UD"), {ints({1, 1})}, 1), Error);
}

TEST(MomentsFromWeights, Catalan) {
    const LevelWeights ones{std::vector<Rational>(6, 1)};
    EXPECT_EQ(moments_from_weights(ones, 1, 6).terms(), ints({1, 1, 2, 5, 14, 42, 132}));
}

TEST(MomentsFromWeights, SingleTerminatedLevel) {
    const Rational q = frac(3, 2);
    const auto a = moments_from_weights({{q}, true}, 1, 4);
    EXPECT_EQ(a.terms(), (std::vector<Rational>{1, q, q * q, q * q * q, q * q * q * q}));
}

TEST(MomentsFromWeights, Factorials) {
    EXPECT_EQ(moments_from_weights({ints({1, 1, 2, 2, 3, 3})}, 1, 6).terms(), ints({1, 1, 2, 6, 24, 120, 720}));
}

TEST(MomentsFromWeights, ScalesByA0AndChecksPreconditions) {
    EXPECT_EQ(moments_from_weights({ints({1, 1})}, 3, 2).terms(), ints({3, 3, 6}));
    EXPECT_THROW(moments_from_weights({ints({1, 1})}, 1, 3), Error);
    EXPECT_THROW(moments_from_weights({ints({1}), true}, -1, 2), Error);
    EXPECT_THROW(moments_from_weights({ints({1}), true}, 1, 13), Error);
}

TEST(MomentsFromWeights, DynamicProgramMatchesEnumeration) {
    oracle::Random rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> lambda;
        for (int i = 0; i < 8; ++i) lambda.push_back(rng.rational(-3, 3));
        const LevelWeights w{lambda};
        const auto dp = moments_from_weights(w, 1, 8);
        for (std::size_t n = 0; n <= 8; ++n) {
            Rational sum = 0;
            for (const auto& p : enumerate_dyck(n)) sum += path_weight(p, w);
            EXPECT_EQ(dp[n], sum);
        }
        EXPECT_EQ(dp.terms(), oracle::brute_moments(lambda, 8));
        EXPECT_EQ(dp[0], 1);
    }
}

TEST(WeightsFromMoments, CatalanAndFactorials) {
    const auto c = weights_from_moments(MomentPrefix(ints({1, 1, 2, 5, 14, 42, 132, 429, 1430})));
    ASSERT_TRUE(c.consistent());
    EXPECT_EQ(c.weights->lambda, std::vector<Rational>(8, 1));
    EXPECT_FALSE(c.weights->terminated);

    const auto f = weights_from_moments(MomentPrefix(ints({1, 1, 2, 6, 24, 120, 720, 5040, 40320})));
    ASSERT_TRUE(f.consistent());
    EXPECT_EQ(f.weights->lambda, ints({1, 1, 2, 2, 3, 3, 4, 4}));
}

TEST(WeightsFromMoments, InconsistentTermination) {
    const auto r = weights_from_moments(MomentPrefix(ints({1, 1, 1, 2})));
    EXPECT_FALSE(r.consistent());
    EXPECT_EQ(r.inconsistent_index, 3u);
}

TEST(WeightsFromMoments, FiniteSupportTerminates) {
    const auto r = weights_from_moments(MomentPrefix(ints({1, 2, 8, 32, 128})));
    ASSERT_TRUE(r.consistent());
    EXPECT_EQ(*r.weights, (LevelWeights{ints({2, 2}), true}));

    const auto single = weights_from_moments(MomentPrefix({1, frac(3, 2), frac(9, 4)}));
    ASSERT_TRUE(single.consistent());
    EXPECT_EQ(*single.weights, (LevelWeights{{frac(3, 2)}, true}));
}

TEST(WeightsFromMoments, LeadingTerm) {
    const auto zero = weights_from_moments(MomentPrefix(ints({0, 0, 0})));
    ASSERT_TRUE(zero.consistent());
    EXPECT_TRUE(zero.weights->lambda.empty());
    EXPECT_TRUE(zero.weights->terminated);
    try {
        weights_from_moments(MomentPrefix(ints({0, 1})));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroLeadingTerm);
    }
    EXPECT_THROW(weights_from_moments(MomentPrefix(ints({-1, 1}))), Error);
}

TEST(WeightsFromMoments, NegativeLevelsAreReportedVerbatim) {
    const auto a = moments_from_weights({{2, -1, 3}}, 1, 3);
    const auto r = weights_from_moments(a);
    ASSERT_TRUE(r.consistent());
    EXPECT_EQ(r.weights->lambda, ints({2, -1, 3}));
}

TEST(WeightsFromMoments, MatchesHankelRatioOracle) {
    oracle::Random rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const auto lambda = rng.positive_weights(6);
        const auto a = oracle::brute_moments(lambda, 6);
        const auto r = weights_from_moments(MomentPrefix(a));
        ASSERT_TRUE(r.consistent());
        EXPECT_EQ(r.weights->lambda, oracle::hankel_ratio_weights(a));
        EXPECT_EQ(r.weights->lambda, lambda);
    }
}

TEST(WeightsFromMoments, RoundTripTerminatedDoubleLength) {
    oracle::Random rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto len = static_cast<std::size_t>(rng.integer(1, 5));
        const LevelWeights lambda{rng.positive_weights(len), true};
        const auto a = moments_from_weights(lambda, 1, 2 * len);
        const auto r = weights_from_moments(a);
        ASSERT_TRUE(r.consistent());
        EXPECT_EQ(*r.weights, lambda);
    }
}

TEST(WeightsFromMoments, RoundTripUnterminated) {
    oracle::Random rng(24);
    for (int trial = 0; trial < 200; ++trial) {
        const auto len = static_cast<std::size_t>(rng.integer(1, 5));
        const LevelWeights lambda{rng.positive_weights(len)};
        const auto a = moments_from_weights(lambda, rng.rational(1, 5), len);
        const auto r = weights_from_moments(a);
        ASSERT_TRUE(r.consistent());
        EXPECT_EQ(*r.weights, lambda);
    }
}

TEST(WeightsFromMoments, NonnegativeWeightsNeverRefutedBySmCheck) {
    oracle::Random rng(25);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        // Moments of random nonnegative weights (zeros included), with one term
        // nudged in half of the trials.
        std::vector<Rational> lambda;
        for (int i = 0; i < 6; ++i) lambda.push_back(rng.integer(0, 4) == 0 ? Rational(0) : rng.rational(0, 3));
        auto terms = moments_from_weights({lambda}, 1, 6).terms();
        if (trial % 2 == 1) terms[static_cast<std::size_t>(rng.integer(1, 6))] += rng.rational(-2, 2);
        const MomentPrefix a(terms);
        const auto r = weights_from_moments(a);
        if (!r.consistent()) continue;
        const bool nonneg = std::all_of(r.weights->lambda.begin(), r.weights->lambda.end(),
                                        [](const Rational& x) { return x >= 0; });
        if (!nonneg) continue;
        ++checked;
        EXPECT_TRUE(sm_check(a).consistent());
    }
    EXPECT_GE(checked, 50);
}

}  // namespace
}  // namespace hankelwalk
