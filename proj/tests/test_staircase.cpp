#include <gtest/gtest.h>

#include <algorithm>

#include "ginbound/error.hpp"
#include "ginbound/staircase.hpp"
#include "oracles.hpp"

using namespace ginbound;

TEST(InvariantSequence, RejectsNonDecreasingAndNonPositive) {
    EXPECT_THROW(InvariantSequence({3, 3}), InvalidSequence);
    EXPECT_THROW(InvariantSequence({3, 4}), InvalidSequence);
    EXPECT_THROW(InvariantSequence({3, 0}), InvalidSequence);
    EXPECT_THROW(InvariantSequence(std::vector<int>{}), InvalidSequence);
    const InvariantSequence seq({13, 11, 9, 7, 6});
    EXPECT_EQ(seq.degree(), 46);
    EXPECT_EQ(seq.s(), 5);
    EXPECT_TRUE(seq.is_connected());
    EXPECT_FALSE(InvariantSequence({14, 10, 9}).is_connected());
}

TEST(InvariantSequence, ParsesCommaLists) {
    EXPECT_EQ(parse_sequence("13,11,9,7,6"), InvariantSequence({13, 11, 9, 7, 6}));
    EXPECT_EQ(parse_sequence(" 4, 3 ,2,1 "), InvariantSequence({4, 3, 2, 1}));
    EXPECT_EQ(parse_sequence("13,11,9,7,6").to_string(), "13,11,9,7,6");
    EXPECT_THROW(parse_sequence("13,x"), ParseError);
    EXPECT_THROW(parse_sequence(""), ParseError);
    EXPECT_THROW(parse_sequence("3,5"), InvalidSequence);
}

TEST(Staircase, ContainsColumns) {
    const InvariantSequence seq({13, 11, 9, 7, 6});
    EXPECT_TRUE(staircase_contains(seq, {4, 6}));
    EXPECT_FALSE(staircase_contains(seq, {4, 5}));
    EXPECT_TRUE(staircase_contains(seq, {5, 0}));
    EXPECT_TRUE(staircase_contains(seq, {0, 13}));
    EXPECT_FALSE(staircase_contains(seq, {0, 12}));
}

TEST(Staircase, ContainmentIsMonotone) {
    for (const auto& seq : enumerate_sequences(30, 5)) {
        for (int a = 0; a <= 6; ++a) {
            for (int b = 0; b <= 20; ++b) {
                if (!staircase_contains(seq, {a, b})) continue;
                EXPECT_TRUE(staircase_contains(seq, {a + 1, b}));
                EXPECT_TRUE(staircase_contains(seq, {a, b + 1}));
            }
        }
    }
}

TEST(Enumerate, KnownCases) {
    const auto list46 = enumerate_sequences(46, 5);
    EXPECT_NE(std::find(list46.begin(), list46.end(), InvariantSequence({13, 11, 9, 7, 6})), list46.end());
    for (const auto& seq : list46) EXPECT_NE(seq.to_string(), "14,10,9,7,6");
    const auto list10 = enumerate_sequences(10, 4);
    ASSERT_EQ(list10.size(), 1u);
    EXPECT_EQ(list10.front(), InvariantSequence({4, 3, 2, 1}));
    EXPECT_TRUE(enumerate_sequences(5, 4).empty());
}

TEST(Enumerate, MatchesBruteForceCompositions) {
    for (int d = 1; d <= 30; ++d) {
        for (int s = 1; s <= 6; ++s) {
            std::vector<InvariantSequence> expected;
            for (const auto& parts : oracle::decreasing_compositions(d, s)) {
                if (oracle::gaps_at_most_two(parts)) expected.emplace_back(parts);
            }
            std::sort(expected.begin(), expected.end(), std::greater<>());
            EXPECT_EQ(enumerate_sequences(d, s), expected) << "d=" << d << " s=" << s;
        }
    }
}

TEST(Sums, KnownValues) {
    EXPECT_EQ(sum2(InvariantSequence({13, 11, 9, 7, 6})), 233);
    EXPECT_EQ(sum2(InvariantSequence({14, 12, 11, 9})), 263);
    EXPECT_EQ(sum2(InvariantSequence({1})), -1);
    EXPECT_EQ(sum3(InvariantSequence({13, 11, 9, 7, 6})), 672);
    EXPECT_EQ(sum3(InvariantSequence({14, 12, 11, 9})), 891);
    EXPECT_EQ(sum3(InvariantSequence({13, 11, 10, 8, 6})), 753);
}

TEST(Sums, MatchDirectBinomials) {
    auto c = [](long n, long k) -> long {
        if (n < k || n < 0) return 0;
        long r = 1;
        for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (int d = 10; d <= 40; ++d) {
        for (const auto& seq : enumerate_sequences(d, 4)) {
            long s2 = 0;
            long s3 = 0;
            for (int i = 0; i < seq.s(); ++i) {
                s2 += c(seq.lambda(i), 2) + (i - 1) * seq.lambda(i);
                s3 += c(seq.lambda(i) + i - 1, 3) - c(i - 1, 3);
            }
            EXPECT_EQ(sum2(seq), s2);
            EXPECT_EQ(sum3(seq), s3);
        }
    }
}

TEST(Binomial, EdgeCases) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(1, 2), 0);
    EXPECT_EQ(binomial(-1, 3), 0);
    EXPECT_EQ(binomial(7, 0), 1);
}

TEST(AcmClass, Patterns) {
    const auto ci = acm_class(InvariantSequence({14, 12, 10, 8, 6}));
    EXPECT_EQ(ci.kind, AcmKind::CompleteIntersection);
    EXPECT_EQ(ci.ci_first, 5);
    EXPECT_EQ(ci.ci_second, 10);
    const auto linked = acm_class(InvariantSequence({13, 12, 10, 8, 6}));
    EXPECT_EQ(linked.kind, AcmKind::LinkedToLine);
    EXPECT_EQ(linked.ci_second, 10);
    EXPECT_EQ(acm_class(InvariantSequence({13, 11, 9, 7, 6})).kind, AcmKind::NotAcm);
    EXPECT_FALSE(acm_class(InvariantSequence({5})).is_acm());
}
