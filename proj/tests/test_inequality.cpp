#include <gtest/gtest.h>

#include "ginbound/error.hpp"
#include "ginbound/inequality.hpp"

using namespace ginbound;

namespace {

// P straight from the definition, with binomials written out.
std::int64_t direct_P(const InvariantSequence& seq) {
    auto c2 = [](std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; };
    auto c3 = [](std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; };
    std::int64_t s2 = 0;
    std::int64_t s3 = 0;
    for (int i = 0; i < seq.s(); ++i) {
        s2 += c2(seq.lambda(i)) + (i - 1) * seq.lambda(i);
        s3 += c3(seq.lambda(i) + i - 1) - c3(i - 1);
    }
    const std::int64_t d = seq.degree();
    return d * d - 5 * d - 18 - 10 * s2 + 12 * s3;
}

}  // namespace

TEST(DegreeInequality, Examples) {
    const InvariantSequence w({13, 11, 9, 7, 6});
    const auto e = eval_eq1(w, 731, 44);
    EXPECT_EQ(e.P, 7602);
    EXPECT_EQ(e.value, -202);
    EXPECT_TRUE(e.consistent());
    const InvariantSequence top({13, 11, 10, 8, 6});
    EXPECT_EQ(eval_eq1(top, 810, 45).value, -168);
    EXPECT_EQ(a_independent_part(top), 8562);
    for (const auto& seq : enumerate_sequences(44, 5)) {
        EXPECT_EQ(eval_eq1(seq, 0, 0).value, eval_eq1(seq, 0, 0).P);
        EXPECT_EQ(a_independent_part(seq), direct_P(seq));
    }
}

TEST(DegreeInequality, Linearity) {
    for (int d = 40; d <= 50; ++d) {
        for (const auto& seq : enumerate_sequences(d, 5)) {
            for (std::int64_t A : {0, 300, 777}) {
                for (std::int64_t g : {0, 20, 45}) {
                    const auto base = eval_eq1(seq, A, g).value;
                    EXPECT_EQ(eval_eq1(seq, A + 1, g).value, base - 12);
                    for (int t : {13, 20, 30}) EXPECT_EQ(eval_eq1(seq, A + t, g + 1).value, base - (12 * t - 22));
                }
            }
        }
    }
}

TEST(Neg, TableEntries) {
    EXPECT_EQ(neg_statistic(InvariantSequence({14, 12, 11, 9}), 921, 50), -2);
    EXPECT_EQ(neg_statistic(InvariantSequence({14, 12, 10, 9}), 882, 49), -18);
    EXPECT_EQ(neg_statistic(InvariantSequence({13, 12, 11, 9}), 854, 48), -2);
    EXPECT_EQ(neg_statistic(InvariantSequence({13, 11, 10, 8, 6}), 810, 45), -14);
    EXPECT_EQ(neg_statistic(InvariantSequence({13, 11, 9, 8, 6}), 770, 44), -20);
    EXPECT_EQ(neg_statistic(InvariantSequence({12, 11, 10, 8, 6}), 743, 43), -4);
    EXPECT_EQ(neg_statistic(InvariantSequence({13, 11, 9, 7, 6}), 770, 44), -56);
}

TEST(Neg, FloorsTowardNegativeInfinity) {
    const InvariantSequence seq({13, 11, 10, 8, 6});
    for (std::int64_t A = 700; A <= 900; ++A) {
        const auto value = eval_eq1(seq, A, 45).value;
        const auto n = neg_statistic(seq, A, 45);
        EXPECT_LE(12 * n, value);
        EXPECT_GT(12 * (n + 1), value);
    }
}

TEST(Threshold, Examples) {
    EXPECT_EQ(elimination_threshold(InvariantSequence({13, 11, 10, 8, 6}), 45).a_min, 796);
    // ceil((7602 + 968) / 12) = ceil(714.17)
    EXPECT_EQ(elimination_threshold(InvariantSequence({13, 11, 9, 7, 6}), 44).a_min, 715);
    EXPECT_EQ(elimination_threshold(InvariantSequence({13, 11, 9, 8, 6}), 44).a_min, 750);
    EXPECT_EQ(elimination_threshold(InvariantSequence({13, 11, 9, 8, 6}), 44).objective_threshold, 8032);
}

TEST(Threshold, AMinIsLeastConsistentA) {
    for (const auto& seq : enumerate_sequences(47, 5)) {
        for (std::int64_t z : {0, 10, 44}) {
            const auto t = elimination_threshold(seq, z);
            EXPECT_TRUE(eval_eq1(seq, t.a_min, z).consistent());
            EXPECT_FALSE(eval_eq1(seq, t.a_min - 1, z).consistent());
            EXPECT_EQ(t.objective_threshold, a_independent_part(seq));
        }
    }
}

TEST(ApproxBounds, Examples) {
    EXPECT_EQ(approx_bounds(46, 5).upper_sum2, Rational(1178, 5));
}

TEST(ApproxBounds, HoldForEveryEnumeratedSequence) {
    int checked = 0;
    for (int d = 10; d <= 66; ++d) {
        for (int s : {4, 5}) {
            const auto bounds = approx_bounds(d, s);
            for (const auto& seq : enumerate_sequences(d, s)) {
                EXPECT_LE(Rational(1 + sum2(seq)), bounds.upper_sum2) << seq.to_string();
                // The bound counts -C(-1, 3) = 1 for the first row, which sum3 truncates to 0.
                EXPECT_GE(Rational(sum3(seq) + 1), bounds.lower_sum3) << seq.to_string();
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 250);
}

TEST(GateBounds, CubicGates) {
    EXPECT_EQ(gate_cubic(4, Rational(25)), Rational(-93, 4));
    EXPECT_EQ(gate_cubic(4, Rational(26)), Rational(131, 2));
    EXPECT_EQ(gate_cubic(5, Rational(32)), Rational(-33, 25));
    EXPECT_EQ(gate_cubic(5, Rational(33)), Rational(1326, 25));
    EXPECT_GT(gate_cubic(4, Rational(100)), Rational(0));
    EXPECT_EQ(gamma_lower_gate(4, 40).d_cap, 25);
    EXPECT_EQ(gamma_lower_gate(5, 40).d_cap, 32);
    EXPECT_EQ(gamma_lower_gate(4, 40).gate_gamma, Rational(30));
    EXPECT_EQ(gamma_lower_gate(5, 46).gate_gamma, Rational(92, 5));
    EXPECT_THROW(gamma_lower_gate(6, 40), UnsupportedS);
}

TEST(GateBounds, CubicMatchesClosedForm) {
    for (int d = 1; d <= 80; ++d) {
        const Rational x(d);
        EXPECT_EQ(gate_cubic(4, x), x * x * x / 8 - Rational(23, 8) * x * x - Rational(17, 2) * x + 33);
        EXPECT_EQ(gate_cubic(5, x), x * x * x / 25 - Rational(24, 25) * x * x - 10 * x - 9);
    }
}

TEST(GateBounds, PlaneCurveThresholds) {
    EXPECT_TRUE(plane_curve_lemma(7, 43).contradiction);
    EXPECT_FALSE(plane_curve_lemma(7, 42).contradiction);
    EXPECT_FALSE(plane_curve_lemma(6, 42).contradiction);
    EXPECT_EQ(plane_curve_lemma(6, 42).lhs, plane_curve_lemma(6, 42).rhs);
    EXPECT_TRUE(plane_curve_lemma(6, 43).contradiction);
    EXPECT_TRUE(plane_curve_lemma(5, 35).contradiction);
    EXPECT_FALSE(plane_curve_lemma(5, 34).contradiction);
    EXPECT_EQ(plane_curve_lemma(5, 34).lhs, plane_curve_lemma(5, 34).rhs);
    EXPECT_THROW(plane_curve_lemma(3, 40), UnsupportedS);
    EXPECT_THROW(plane_curve_lemma(8, 40), UnsupportedS);
}

TEST(GateBounds, PlaneCurveThresholdIsSharp) {
    for (auto [s, first] : {std::pair{5, 35}, std::pair{6, 43}, std::pair{7, 43}}) {
        for (int d = 10; d <= 90; ++d) {
            EXPECT_EQ(plane_curve_lemma(s, d).contradiction, d >= first) << "s=" << s << " d=" << d;
        }
    }
}

TEST(GateBounds, NaiveABound) {
    // Sum of t from d/5 + 4 over 2d/5 terms at d = 50: t = 14 .. 33.
    EXPECT_EQ(naive_a_bound(5, 50), Rational(470));
    EXPECT_THROW(naive_a_bound(6, 50), UnsupportedS);
}

TEST(GateBounds, ApproxEq1IsLinearInA) {
    const Rational base = approx_eq1(48, 5, Rational(700), Rational(45));
    EXPECT_EQ(approx_eq1(48, 5, Rational(701), Rational(45)), base - 12);
    EXPECT_EQ(rational_binomial3(Rational(5)), Rational(10));
    EXPECT_EQ(rational_binomial3(Rational(1, 2)), Rational(1, 2) * Rational(-1, 2) * Rational(-3, 2) / 6);
}
