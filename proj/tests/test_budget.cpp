#include <gtest/gtest.h>

#include "ginbound/budget.hpp"
#include "ginbound/error.hpp"

using namespace ginbound;

TEST(MaxSporadic, TableValues) {
    EXPECT_EQ(max_sporadic(InvariantSequence({13, 11, 10, 8, 6})).z, 45);
    EXPECT_EQ(max_sporadic(InvariantSequence({13, 11, 9, 8, 6})).z, 44);
    EXPECT_EQ(max_sporadic(InvariantSequence({12, 11, 10, 8, 6})).z, 43);
    EXPECT_EQ(max_sporadic(InvariantSequence({13, 11, 9, 7, 6})).z, 44);
    EXPECT_EQ(max_sporadic(InvariantSequence({14, 12, 11, 9}), BudgetVariant::S4Table).z, 50);
    EXPECT_EQ(max_sporadic(InvariantSequence({14, 12, 10, 9}), BudgetVariant::S4Table).z, 49);
    EXPECT_EQ(max_sporadic(InvariantSequence({13, 12, 11, 9}), BudgetVariant::S4Table).z, 48);
}

TEST(MaxSporadic, VariantsAndErrors) {
    const auto printed = max_sporadic(InvariantSequence({14, 12, 11, 9}), BudgetVariant::S4Paper);
    const auto table = max_sporadic(InvariantSequence({14, 12, 11, 9}), BudgetVariant::S4Table);
    EXPECT_EQ(printed.z, table.z + 1);
    EXPECT_EQ(printed.variant, BudgetVariant::S4Paper);
    EXPECT_EQ(max_sporadic(InvariantSequence({13, 11, 9, 7, 6}), BudgetVariant::S4Paper).variant, BudgetVariant::S5);
    EXPECT_THROW(max_sporadic(InvariantSequence({5, 4, 3})), UnsupportedS);
    EXPECT_THROW(max_sporadic(InvariantSequence({7, 6, 5, 4, 3, 2})), UnsupportedS);
}

TEST(MaxSporadic, FloorOfExactBound) {
    for (int d = 20; d <= 66; ++d) {
        for (int s : {4, 5}) {
            for (const auto& seq : enumerate_sequences(d, s)) {
                const auto r = max_sporadic(seq);
                EXPECT_EQ(r.z, floor_of(r.exact));
                EXPECT_LE(Rational(r.z), r.exact);
                EXPECT_GT(Rational(r.z + 1), r.exact);
            }
        }
    }
}

TEST(BudgetVariant, Parse) {
    EXPECT_EQ(parse_budget_variant("s4_table"), BudgetVariant::S4Table);
    EXPECT_EQ(parse_budget_variant("s4_paper"), BudgetVariant::S4Paper);
    EXPECT_EQ(to_string(BudgetVariant::S5), "s5");
    EXPECT_THROW(parse_budget_variant("s6"), ParseError);
}

TEST(Admissible, Examples) {
    EXPECT_TRUE(admissible(InvariantSequence({13, 11, 9, 7, 6})).ok);
    const auto ci = admissible(InvariantSequence({14, 12, 10, 8, 6}));
    EXPECT_FALSE(ci.ok);
    EXPECT_NE(ci.reason.find("ci"), std::string::npos) << ci.reason;
    for (const auto& seq : enumerate_sequences(17, 5)) {
        const auto r = admissible(seq);
        EXPECT_FALSE(r.ok) << seq.to_string();
    }
    for (const auto& seq : enumerate_sequences(10, 4)) EXPECT_FALSE(admissible(seq).ok);
}

TEST(Admissible, PriorRanges) {
    Priors priors;
    EXPECT_FALSE(admissible(InvariantSequence({11, 10, 9, 8, 7, 6}), priors).ok);
    priors.s_max = 6;
    EXPECT_FALSE(admissible(InvariantSequence({12, 11, 9, 8, 6, 5}), priors).ok);  // d = 51 > 44
    EXPECT_TRUE(admissible(InvariantSequence({9, 8, 7, 6, 5, 4}), priors).ok);     // d = 39
    Priors narrow;
    narrow.d_max = 45;
    EXPECT_FALSE(admissible(InvariantSequence({13, 11, 9, 7, 6}), narrow).ok);
}

TEST(Admissible, NoSurvivingRecordBreaksGates) {
    for (int d = 10; d <= 66; ++d) {
        for (int s : {4, 5}) {
            for (const auto& seq : enumerate_sequences(d, s)) {
                if (!admissible(seq).ok) continue;
                EXPECT_GT(d, (s - 1) * (s - 1) + 1);
                EXPECT_FALSE(acm_class(seq).is_acm() && d > (s == 4 ? 10 : 17));
            }
        }
    }
}
