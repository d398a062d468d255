#include "ginbound/budget.hpp"

#include "ginbound/error.hpp"

namespace ginbound {

std::string_view to_string(BudgetVariant v) {
    switch (v) {
        case BudgetVariant::S4Paper: return "s4_paper";
        case BudgetVariant::S4Table: return "s4_table";
        case BudgetVariant::S5: return "s5";
    }
    return "?";
}

BudgetVariant parse_budget_variant(std::string_view text) {
    if (text == "s4_paper") return BudgetVariant::S4Paper;
    if (text == "s4_table") return BudgetVariant::S4Table;
    if (text == "s5") return BudgetVariant::S5;
    throw ParseError("unknown budget variant '" + std::string(text) + "'");
}

BudgetReport max_sporadic(const InvariantSequence& seq, BudgetVariant s4_variant) {
    const std::int64_t d = seq.degree();
    const Rational base(sum2(seq));
    BudgetReport report{seq, Rational(0), 0, BudgetVariant::S5};
    switch (seq.s()) {
        case 4:
            if (s4_variant == BudgetVariant::S4Paper) {
                report.exact = 1 + base - Rational(d * d, 8) + Rational(9 * d, 8);
                report.variant = BudgetVariant::S4Paper;
            } else {
                report.exact = base - Rational(d * d - 9 * d, 8);
                report.variant = BudgetVariant::S4Table;
            }
            break;
        case 5:
            report.exact = 1 + base - Rational(d * d - 5 * d + 10, 10);
            break;
        default:
            throw UnsupportedS("no sporadic-zero bound for s = " + std::to_string(seq.s()));
    }
    report.z = floor_of(report.exact);
    return report;
}

Admissibility admissible(const InvariantSequence& seq, const Priors& priors) {
    const int s = seq.s();
    const int d = seq.degree();
    if (d <= (s - 1) * (s - 1) + 1) {
        return {false, "gate: d <= (s-1)^2+1 = " + std::to_string((s - 1) * (s - 1) + 1)};
    }
    const auto acm = acm_class(seq);
    if (acm.is_acm()) {
        const int cap = s == 4 ? priors.acm_cap_s4 : s == 5 ? priors.acm_cap_s5 : -1;
        if (cap >= 0 && d > cap) {
            return {false, "acm " + acm.to_string() + ": d=" + std::to_string(d) + " > " + std::to_string(cap)};
        }
    }
    if (s < priors.s_min || s > priors.s_max) {
        return {false, "prior: s=" + std::to_string(s) + " outside [" + std::to_string(priors.s_min) + "," +
                           std::to_string(priors.s_max) + "]"};
    }
    if (s <= 3 && d > priors.d_cap_s3) {
        return {false, "prior: s<=3 forces d<=" + std::to_string(priors.d_cap_s3)};
    }
    if ((s == 6 || s == 7) && d > priors.d_cap_s67) {
        return {false, "prior: s=6,7 forces d<=" + std::to_string(priors.d_cap_s67)};
    }
    if (s > 7 || d > priors.d_max) {
        return {false, "prior: s<=7 and d<=" + std::to_string(priors.d_max)};
    }
    return {};
}

}  // namespace ginbound
