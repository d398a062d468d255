#pragma once

// Admissibility rules for height functions and the exact maximization of the
// penalty 12A - 22 gamma over every admissible lift of a staircase.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ginbound/budget.hpp"
#include "ginbound/lift.hpp"
#include "ginbound/staircase.hpp"

namespace ginbound {

/// A configuration-specific geometric exclusion: when `column` carries no
/// sporadic zero the curve is arithmetically Cohen-Macaulay, so it may not
/// carry any sporadic zero at all.
struct SpecialExclusion {
    int d = 0;
    std::vector<int> lambdas;
    Column column;
    std::string note;

    friend bool operator==(const SpecialExclusion&, const SpecialExclusion&) = default;
};

/// The plane-quartic instance for (46, {13,11,9,7,6}).
std::vector<SpecialExclusion> default_special_exclusions();

struct RuleSet {
    bool borel = true;
    std::optional<std::int64_t> budget_z;  // nullopt: use max_sporadic
    BudgetVariant budget_variant = BudgetVariant::S4Table;
    bool degree_criteria = true;
    bool ci_forcing = true;
    std::vector<SpecialExclusion> special_exclusions = default_special_exclusions();
    bool half_degree_strict = true;  // criteria fire for 2r > d; otherwise 2r >= d
    int high_generator_count = 6;

    /// Short identifier such as "default" or "no-ci,no-criteria".
    std::string id() const;

    friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// "default", or a comma separated list of no-borel, no-criteria, no-ci,
/// no-exclusions, weak-half applied on top of `base`.  Throws ParseError.
RuleSet parse_rule_set(std::string_view text, RuleSet base = {});

/// Budget of sporadic zeros: the explicit one if set, otherwise max_sporadic.
std::int64_t resolve_budget(const InvariantSequence& seq, const RuleSet& rules);

enum class Rule { None, Borel, Budget, DegreeCriteria, CiForcing, SpecialExclusion };

std::string_view to_string(Rule rule);

struct RuleCheck {
    bool ok = true;
    Rule violated = Rule::None;
    std::string detail;
};

/// Checks, in order: Borel moves (and no zeros on rows >= s), the budget, the
/// high-degree generator criteria, complete-intersection forcing and the
/// special exclusions.  Uses h.seq() as the staircase.
RuleCheck is_admissible(const HeightFunction& h, const RuleSet& rules);

struct Schedule {
    std::int64_t gamma = 0;
    std::int64_t A = 0;
    std::vector<int> generator_degrees;  // ascending, one entry per minimal generator

    std::int64_t objective() const { return 12 * A - 22 * gamma; }
};

Schedule evaluate_schedule(const HeightFunction& h);

struct OptimizationResult {
    std::int64_t best_objective = 0;
    std::int64_t best_A = 0;
    std::int64_t best_gamma = 0;
    std::int64_t budget = 0;
    std::int64_t P = 0;
    HeightFunction witness;
    bool eliminated = false;  // best_objective < P
    std::uint64_t nodes_explored = 0;
};

/// Exact maximum of 12A - 22 gamma over admissible height functions supported
/// on rows 0..s-1.  The witness is the first optimum met by a depth-first
/// search that visits rows in order and heights in decreasing order.
/// Throws Infeasible if no height function is admissible and
/// std::invalid_argument when Borel moves are disabled (the maximum is unbounded).
OptimizationResult maximize_penalty(const InvariantSequence& seq, const RuleSet& rules = {});

enum class HeuristicBranch { SixHigh, Staircase };

struct ChainPlacement {
    int base = 0;  // degree of the lowest zero
    int top = 0;   // degree of the highest zero
};

struct HeuristicResult {
    std::int64_t gamma = 0;
    std::int64_t A = 0;
    std::vector<ChainPlacement> chains;
    std::int64_t remainder = 0;  // six_high: zeros placed above floor(d/2); staircase: unused zeros
};

/// Approximate schedules for reporting an A bound alongside the exact one.  Not sound
/// for elimination.  Throws UnsupportedS unless s is 4 or 5 and
/// InsufficientBudget if z cannot pay for the first chain.
HeuristicResult heuristic_schedule(const InvariantSequence& seq, std::int64_t z, HeuristicBranch branch);

}  // namespace ginbound
