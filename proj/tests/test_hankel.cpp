#include "hankelwalk/error.hpp"
#include "hankelwalk/hankel.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace hankelwalk {
namespace {

using oracle::frac;
using oracle::ints;

MomentPrefix catalan(std::size_t len) {
    const std::vector<long> c{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
    std::vector<Rational> out(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(len));
    return MomentPrefix(out);
}

MomentPrefix factorials(std::size_t len) {
    std::vector<Rational> out{1};
    for (std::size_t n = 1; n < len; ++n) out.push_back(out.back() * static_cast<long>(n));
    return MomentPrefix(out);
}

SymMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> g;
    for (auto r : rows) g.push_back(ints(r));
    return SymMatrix::from_rows(g);
}

TEST(HankelMatrix, IndexesWithShift) {
    EXPECT_EQ(hankel_matrix(catalan(5), 0, 2), mat({{1, 1}, {1, 2}}));
    EXPECT_EQ(hankel_matrix(catalan(5), 1, 2), mat({{1, 2}, {2, 5}}));
    EXPECT_EQ(hankel_matrix(factorials(5), 0, 3), mat({{1, 1, 2}, {1, 2, 6}, {2, 6, 24}}));
}

TEST(HankelMatrix, ReportsRequiredLength) {
    try {
        hankel_matrix(catalan(4), 1, 3);
        FAIL() << "expected InsufficientTerms";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InsufficientTerms);
        EXPECT_NE(std::string(e.what()).find("needs 6 terms"), std::string::npos) << e.what();
    }
}

TEST(SymMatrix, RejectsAsymmetricInput) {
    EXPECT_THROW(SymMatrix::from_rows({ints({1, 2}), ints({3, 1})}), Error);
    EXPECT_THROW(SymMatrix::from_rows({ints({1, 2})}), Error);
}

TEST(DetExact, SmallExamples) {
    EXPECT_EQ(det_exact(mat({{1, 1}, {1, 2}})), 1);
    EXPECT_EQ(det_exact(mat({{1, 2}, {2, 1}})), -3);
    EXPECT_EQ(det_exact(mat({{1, 1, 2}, {1, 2, 5}, {2, 5, 14}})), 1);
    EXPECT_EQ(det_exact(mat({{0, 1}, {1, 0}})), -1);
    EXPECT_EQ(det_exact(mat({{0, 0}, {0, 3}})), 0);
}

TEST(DetExact, AgreesWithCofactorExpansion) {
    oracle::Random rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = static_cast<std::size_t>(rng.integer(1, 5));
        SymMatrix s(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                // Sprinkle zeros so that pivoting is exercised.
                s.set(i, j, rng.integer(0, 3) == 0 ? Rational(0) : rng.rational(-3, 3, 5));
            }
        EXPECT_EQ(det_exact(s), oracle::cofactor_det(s.rows()));
    }
}

TEST(HankelTransform, CatalanL2) {
    EXPECT_EQ(hankel_transform(catalan(11), 2).terms(), ints({1, 1, 3, 14, 84, 594, 4719, 40898, 379236}));
}

TEST(HankelTransform, FactorialL2) {
    EXPECT_EQ(hankel_transform(factorials(8), 2).terms(), ints({1, 2, 12, 144, 2880, 86400}));
}

TEST(HankelTransform, L1IsIdentity) {
    const MomentPrefix a({frac(1, 2), 3, frac(-7, 3), 0});
    EXPECT_EQ(hankel_transform(a, 1), a);
}

TEST(HankelTransform, OutputLengthAndErrors) {
    EXPECT_EQ(hankel_transform(catalan(9), 3).size(), 9u - 6u + 2u);
    EXPECT_EQ(hankel_transform(catalan(5), 3).size(), 1u);
    EXPECT_THROW(hankel_transform(catalan(4), 3), Error);
    EXPECT_THROW(hankel_transform(catalan(4), 0), Error);
}

TEST(HankelTransform, DefinitionUnrolledTwoWays) {
    oracle::Random rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const auto len = static_cast<std::size_t>(rng.integer(3, 10));
        std::vector<Rational> terms;
        for (std::size_t i = 0; i < len; ++i) terms.push_back(rng.rational(-5, 5));
        const MomentPrefix a(terms);
        for (std::size_t k = 1; 2 * k - 1 <= len; ++k) {
            const auto t = hankel_transform(a, k);
            for (std::size_t n = 0; n < t.size(); ++n) {
                EXPECT_EQ(t[n], det_exact(hankel_matrix(shift(a, n), 0, k)));
                EXPECT_EQ(t[n], oracle::cofactor_det(oracle::hankel_grid(terms, n, k)));
            }
        }
    }
}

TEST(Shift, DropsLeadingTerms) {
    EXPECT_EQ(shift(catalan(5), 1).terms(), ints({1, 2, 5, 14}));
    EXPECT_EQ(shift(catalan(5), 0), catalan(5));
    EXPECT_EQ(shift(MomentPrefix(ints({1, 2, 3})), 2).terms(), ints({3}));
    EXPECT_THROW(shift(MomentPrefix(ints({1, 2, 3})), 3), Error);
}

TEST(IterateL2, Factorials) {
    const auto twice = iterate_L2(factorials(9), 2);
    ASSERT_EQ(twice.size(), 5u);
    EXPECT_EQ(twice[0], 8);
    EXPECT_EQ(twice[1], 144);
    EXPECT_EQ(twice[2], 13824);
    for (const auto& x : twice.terms()) EXPECT_GT(x, 0);
}

TEST(IterateL2, IdentityAndSingleRound) {
    EXPECT_EQ(iterate_L2(catalan(3), 0), catalan(3));
    EXPECT_EQ(iterate_L2(catalan(7), 1).terms(), ints({1, 1, 3, 14, 84}));
    EXPECT_THROW(iterate_L2(catalan(4), 2), Error);
}

TEST(PsdCheck, Examples) {
    EXPECT_TRUE(psd_check(mat({{1, 1}, {1, 2}})).psd);

    const auto indefinite = mat({{1, 2}, {2, 1}});
    const auto r = psd_check(indefinite);
    ASSERT_FALSE(r.psd);
    EXPECT_LT(quadratic_form(indefinite, r.witness), 0);
    EXPECT_EQ(quadratic_form(indefinite, ints({1, -1})), -2);

    const auto zero_pivot = mat({{0, 1}, {1, 0}});
    const auto z = psd_check(zero_pivot);
    ASSERT_FALSE(z.psd);
    EXPECT_LT(quadratic_form(zero_pivot, z.witness), 0);
}

TEST(PsdCheck, ZeroRowsAreSkipped) {
    EXPECT_TRUE(psd_check(mat({{0, 0, 0}, {0, 2, 1}, {0, 1, 1}})).psd);
    const auto m = mat({{0, 0, 0}, {0, 1, 2}, {0, 2, 1}});
    const auto r = psd_check(m);
    ASSERT_FALSE(r.psd);
    EXPECT_EQ(r.witness[0], 0);
    EXPECT_LT(quadratic_form(m, r.witness), 0);
}

TEST(PsdCheck, LeadingMinorsAreNotEnough) {
    // All leading principal minors are 0 but the matrix is indefinite.
    const auto m = mat({{0, 0}, {0, -1}});
    EXPECT_FALSE(psd_check(m).psd);
}

TEST(PsdCheck, WitnessesAreNegativeAndPsdSurvivesRandomProbes) {
    oracle::Random rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = static_cast<std::size_t>(rng.integer(1, 5));
        SymMatrix s(m);
        if (trial % 2 == 0) {
            // Gram matrix B^T B of a possibly rank-deficient B: always PSD.
            const auto rank = static_cast<std::size_t>(rng.integer(0, static_cast<long>(m)));
            std::vector<std::vector<Rational>> b(rank, std::vector<Rational>(m));
            for (auto& row : b)
                for (auto& x : row) x = rng.rational(-2, 2, 3);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) {
                    Rational g = 0;
                    for (const auto& row : b) g += row[i] * row[j];
                    s.set(i, j, g);
                }
        } else {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) s.set(i, j, rng.rational(-3, 3, 4));
        }
        const auto r = psd_check(s);
        if (trial % 2 == 0) EXPECT_TRUE(r.psd);
        if (!r.psd) {
            EXPECT_LT(quadratic_form(s, r.witness), 0);
            continue;
        }
        for (int probe = 0; probe < 1000; ++probe) {
            std::vector<Rational> v(m);
            for (auto& x : v) x = rng.rational(-4, 4, 7);
            ASSERT_GE(quadratic_form(s, v), 0);
        }
    }
}

TEST(SmCheck, CatalanIsConsistent) {
    const auto r = sm_check(catalan(9));
    EXPECT_TRUE(r.consistent());
    EXPECT_EQ(r.depth_unshifted, 5u);
    EXPECT_EQ(r.depth_shifted, 4u);
    EXPECT_EQ(r.depth(), 4u);
}

TEST(SmCheck, RefutesWithExplicitBlock) {
    const auto r = sm_check(MomentPrefix(ints({1, 2, 1, 2})));
    ASSERT_FALSE(r.consistent());
    const auto& ref = *r.refutation;
    EXPECT_EQ(ref.shift, 0u);
    ASSERT_TRUE(ref.matrix.has_value());
    EXPECT_EQ(*ref.matrix, mat({{1, 2}, {2, 1}}));
    EXPECT_LT(quadratic_form(*ref.matrix, ref.witness), 0);
}

TEST(SmCheck, ShiftedMatrixCanFail) {
    // H(a) = [[1,-1],[-1,2]] is PSD, but a_1 < 0 breaks H(theta a).
    const auto r = sm_check(MomentPrefix(ints({1, -1, 2})));
    ASSERT_FALSE(r.consistent());
    EXPECT_EQ(r.refutation->shift, 1u);
    EXPECT_LT(quadratic_form(*r.refutation->matrix, r.refutation->witness), 0);
}

TEST(SmCheck, ZeroLeadingTerm) {
    EXPECT_TRUE(sm_check(MomentPrefix(ints({0, 0, 0}))).consistent());
    const auto r = sm_check(MomentPrefix(ints({0, 0, 0, 5})));
    ASSERT_FALSE(r.consistent());
    EXPECT_EQ(r.refutation->offending_index, 3u);
    EXPECT_FALSE(sm_check(MomentPrefix(ints({-1}))).consistent());
    EXPECT_THROW(MomentPrefix(std::vector<Rational>{}), Error);
}

TEST(SmCheck, TransformsOfConsistentPrefixesAreNonnegative) {
    oracle::Random rng(14);
    int consistent_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> terms;
        if (trial % 2 == 0) {
            terms = oracle::brute_moments(rng.positive_weights(6), 6);
        } else {
            for (int i = 0; i < 7; ++i) terms.push_back(rng.rational(0, 6));
        }
        const MomentPrefix a(terms);
        const auto r = sm_check(a);
        if (!r.consistent()) continue;
        ++consistent_seen;
        for (std::size_t k = 1; k <= r.depth(); ++k)
            for (const auto& x : hankel_transform(a, k).terms()) EXPECT_GE(x, 0);
    }
    EXPECT_GE(consistent_seen, 30);
}

}  // namespace
}  // namespace hankelwalk
