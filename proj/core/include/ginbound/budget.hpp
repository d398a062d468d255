#pragma once

// Upper bounds on the number of sporadic zeros, and the structural priors that
// restrict which (d, s) pairs are worth examining at all.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ginbound/rational.hpp"
#include "ginbound/staircase.hpp"

namespace ginbound {

/// Two forms of the s = 4 bound: s4_paper keeps a leading "1 +", s4_table
/// drops it and is the default.
enum class BudgetVariant { S4Paper, S4Table, S5 };

std::string_view to_string(BudgetVariant v);
/// Accepts "s4_paper", "s4_table", "s5".  Throws ParseError.
BudgetVariant parse_budget_variant(std::string_view text);

struct BudgetReport {
    InvariantSequence seq;
    Rational exact;     // the bound before flooring
    std::int64_t z = 0; // floor(exact)
    BudgetVariant variant = BudgetVariant::S5;
};

/// For s = 5 the s4 choice is ignored.  Throws UnsupportedS unless s is 4 or 5.
BudgetReport max_sporadic(const InvariantSequence& seq, BudgetVariant s4_variant = BudgetVariant::S4Table);

struct Priors {
    int s_min = 4;
    int s_max = 5;
    int d_max = 66;
    int d_cap_s3 = 8;    // s <= 3 forces d <= 8
    int d_cap_s67 = 44;  // s = 6, 7 forces d <= 44
    int acm_cap_s4 = 10; // an ACM curve satisfies the inequality only up to these degrees
    int acm_cap_s5 = 17;

    friend bool operator==(const Priors&, const Priors&) = default;
};

struct Admissibility {
    bool ok = true;
    std::string reason;  // empty when ok
};

/// Gate d > (s-1)^2 + 1, the ACM caps, and the s / d ranges of the priors.
Admissibility admissible(const InvariantSequence& seq, const Priors& priors = {});

}  // namespace ginbound
