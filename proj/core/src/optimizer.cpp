#include "ginbound/optimizer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ginbound/error.hpp"
#include "ginbound/inequality.hpp"

namespace ginbound {

std::vector<SpecialExclusion> default_special_exclusions() {
    return {{46, {13, 11, 9, 7, 6}, {4, 6}, "x0^4 x1^6 as a generator links the curve to a plane quartic"}};
}

std::string RuleSet::id() const {
    std::vector<std::string> parts;
    if (!borel) parts.emplace_back("no-borel");
    if (!degree_criteria) parts.emplace_back("no-criteria");
    if (!ci_forcing) parts.emplace_back("no-ci");
    if (special_exclusions.empty()) parts.emplace_back("no-exclusions");
    else if (special_exclusions != default_special_exclusions()) parts.emplace_back("custom-exclusions");
    if (!half_degree_strict) parts.emplace_back("weak-half");
    if (high_generator_count != 6) parts.push_back("high" + std::to_string(high_generator_count));
    if (budget_z) parts.push_back("z" + std::to_string(*budget_z));
    if (budget_variant != BudgetVariant::S4Table) parts.emplace_back(to_string(budget_variant));
    if (parts.empty()) return "default";
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
    return out;
}

RuleSet parse_rule_set(std::string_view text, RuleSet rules) {
    if (text.empty() || text == "default") return rules;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto token = text.substr(pos, end - pos);
        if (token == "no-borel") rules.borel = false;
        else if (token == "no-criteria") rules.degree_criteria = false;
        else if (token == "no-ci") rules.ci_forcing = false;
        else if (token == "no-exclusions") rules.special_exclusions.clear();
        else if (token == "weak-half") rules.half_degree_strict = false;
        else if (token != "default") throw ParseError("unknown rule toggle '" + std::string(token) + "'");
        pos = end + 1;
    }
    return rules;
}

std::int64_t resolve_budget(const InvariantSequence& seq, const RuleSet& rules) {
    if (rules.budget_z) return *rules.budget_z;
    return max_sporadic(seq, rules.budget_variant).z;
}

std::string_view to_string(Rule rule) {
    switch (rule) {
        case Rule::None: return "none";
        case Rule::Borel: return "R1-borel";
        case Rule::Budget: return "R2-budget";
        case Rule::DegreeCriteria: return "R3-degree-criteria";
        case Rule::CiForcing: return "R4-ci-forcing";
        case Rule::SpecialExclusion: return "R5-special-exclusion";
    }
    return "?";
}

namespace {

std::string col_str(Column c) { return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")"; }

bool criteria_fire(int r, int d, bool strict) { return strict ? 2 * r > d : 2 * r >= d; }

// First generator degree r that violates the high-degree criteria, if any.
// `degrees` must be sorted ascending.
std::optional<int> criteria_violation(const std::vector<int>& degrees, int d, bool strict, int high_count) {
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const int r = degrees[i];
        if (i > 0 && degrees[i - 1] == r) continue;
        if (!criteria_fire(r, d, strict)) continue;
        const bool has_previous = std::binary_search(degrees.begin(), degrees.end(), r - 1);
        const auto at_least_r = static_cast<int>(degrees.end() - std::lower_bound(degrees.begin(), degrees.end(), r));
        if (!has_previous && at_least_r < high_count) return r;
    }
    return std::nullopt;
}

bool exclusion_applies(const SpecialExclusion& ex, const InvariantSequence& seq) {
    return ex.d == seq.degree() && std::equal(ex.lambdas.begin(), ex.lambdas.end(), seq.lambdas().begin(),
                                              seq.lambdas().end());
}

bool in_ci_region(const InvariantSequence& seq, Column col) {
    const int s = seq.s();
    return col.a < s && col.b >= seq.lambda(s - 1) + 2 * (s - 1 - col.a);
}

}  // namespace

RuleCheck is_admissible(const HeightFunction& h, const RuleSet& rules) {
    const auto& seq = h.seq();
    const int s = seq.s();

    if (rules.borel) {
        for (const auto& [col, height] : h.support()) {
            if (col.a >= s) {
                return {false, Rule::Borel, "zero above x0^" + std::to_string(s) + " at " + col_str(col)};
            }
            const Column sources[] = {{col.a - 1, col.b + 1}, {col.a - 1, col.b}, {col.a, col.b - 1}};
            for (std::size_t k = 0; k < 3; ++k) {
                if (!staircase_contains(seq, sources[k])) continue;
                const int src = h.height(sources[k]);
                const int cap = k == 0 ? src : std::max(src - 1, 0);
                if (height > cap) {
                    return {false, Rule::Borel,
                            "H" + col_str(col) + "=" + std::to_string(height) + " exceeds " + std::to_string(cap) +
                                " allowed by H" + col_str(sources[k]) + "=" + std::to_string(src)};
                }
            }
        }
    }

    const auto stats = zero_stats(h);
    const auto z = resolve_budget(seq, rules);
    if (stats.gamma > z) {
        return {false, Rule::Budget, "gamma=" + std::to_string(stats.gamma) + " > z=" + std::to_string(z)};
    }

    if (rules.degree_criteria) {
        const auto schedule = evaluate_schedule(h);
        if (auto r = criteria_violation(schedule.generator_degrees, seq.degree(), rules.half_degree_strict,
                                        rules.high_generator_count)) {
            return {false, Rule::DegreeCriteria,
                    "generator in degree " + std::to_string(*r) + " without one in degree " + std::to_string(*r - 1) +
                        " or " + std::to_string(rules.high_generator_count) + " in degree >= " + std::to_string(*r)};
        }
    }

    if (rules.ci_forcing && s >= 2) {
        const Column corner{s - 1, seq.lambda(s - 1)};
        if (h.height(corner) == 0) {
            for (const auto& [col, height] : h.support()) {
                if (in_ci_region(seq, col)) {
                    return {false, Rule::CiForcing,
                            "x0^" + std::to_string(corner.a) + " x1^" + std::to_string(corner.b) +
                                " is a generator, forcing H" + col_str(col) + "=0"};
                }
            }
        }
    }

    for (const auto& ex : rules.special_exclusions) {
        if (!exclusion_applies(ex, seq)) continue;
        if (h.height(ex.column) == 0 && stats.gamma > 0) {
            return {false, Rule::SpecialExclusion, "H" + col_str(ex.column) + "=0 but gamma>0: " + ex.note};
        }
    }
    return {};
}

Schedule evaluate_schedule(const HeightFunction& h) {
    const auto stats = zero_stats(h);
    Schedule out{stats.gamma, stats.A, {}};
    for (const auto& g : minimal_generators(h)) out.generator_degrees.push_back(g.degree());
    std::sort(out.generator_degrees.begin(), out.generator_degrees.end());
    return out;
}

namespace {

constexpr std::int64_t kNoSlots = std::numeric_limits<std::int64_t>::min();

std::int64_t column_value(std::int64_t base, std::int64_t height) {
    return 12 * (height * base + height * (height - 1) / 2) - 22 * height;
}

// Depth-first search over heights stored row by row, restricted to height
// functions whose largest generator degree is exactly `top`.  Row a holds
// columns b = lambda_a + j for j = 0..width-1; every admissible height function
// fits because a row's heights strictly decrease from its head, which is <= z.
//
// Every column with a positive height is a minimal generator (the Borel moves
// force its neighbours below and to the left to be strictly higher), and the
// only other generators are the x2-free column just past the end of each row
// and x0^s.  The largest generator degree is always attained at a row head.
class PenaltySearch {
public:
    PenaltySearch(const InvariantSequence& seq, const RuleSet& rules, std::int64_t z, int top)
        : seq_(seq), rules_(rules), s_(seq.s()), d_(seq.degree()), z_(static_cast<int>(z)),
          width_(static_cast<int>(z) + 2), top_(top) {
        for (int a = 0; a < s_; ++a) lambda_.push_back(seq.lambda(a));
        heights_.assign(static_cast<std::size_t>(s_ * width_), 0);
        caps_.assign(heights_.size(), 0);
        forced_zero_.assign(heights_.size(), false);
        min_height_.assign(heights_.size(), 0);
        generators_.assign(static_cast<std::size_t>(top_ + 2), 0);
    }

    void force_zero(Column col) { forced_zero_[index(col)] = true; }
    void force_positive(Column col) { min_height_[index(col)] = 1; }
    bool has_cell(Column col) const {
        return col.a >= 0 && col.a < s_ && col.b >= lambda_[col.a] && col.b - lambda_[col.a] < width_;
    }

    std::int64_t root_bound() {
        propagate_caps(0, 0, z_);
        return upper_bound(0, 0, z_);
    }

    // Runs the search; `incumbent` is the best objective already known to be
    // attainable.  Returns true if a strictly better configuration was found.
    bool run(std::int64_t incumbent) {
        best_ = incumbent;
        found_ = false;
        std::fill(heights_.begin(), heights_.end(), 0);
        std::fill(generators_.begin(), generators_.end(), 0);
        add_generator(s_, 1);  // x0^s
        reached_ = 0;
        descend(0, 0, z_, 0);
        return found_;
    }

    std::int64_t best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

    HeightFunction witness() const {
        HeightFunction h(seq_);
        for (int a = 0; a < s_; ++a) {
            for (int j = 0; j < width_; ++j) {
                if (const int v = best_heights_[static_cast<std::size_t>(a * width_ + j)]; v > 0) {
                    h.set({a, lambda_[a] + j}, v);
                }
            }
        }
        return h;
    }

private:
    std::size_t index(Column col) const {
        return static_cast<std::size_t>(col.a * width_ + (col.b - lambda_[col.a]));
    }
    std::size_t cell(int a, int j) const { return static_cast<std::size_t>(a * width_ + j); }
    int base(int a, int j) const { return a + lambda_[a] + j; }

    // Height at (a, j) in `grid`, zero outside the stored window.
    int at(const std::vector<int>& grid, int a, int j) const {
        if (j < 0 || j >= width_) return 0;
        return grid[cell(a, j)];
    }

    // Upper bound on H(a, j) implied by the Borel moves from cells of `grid`
    // that precede it in row-major order, the forced zeros and the top degree.
    int local_cap(const std::vector<int>& grid, int a, int j) const {
        int cap = top_ - base(a, j);
        if (j > 0) cap = std::min(cap, std::max(at(grid, a, j - 1) - 1, 0));
        if (a > 0) {
            const int b = lambda_[a] + j;
            const int left = b - lambda_[a - 1];
            if (left >= 0) cap = std::min(cap, std::max(at(grid, a - 1, left) - 1, 0));
            const int diag = b + 1 - lambda_[a - 1];
            if (diag >= 0) cap = std::min(cap, at(grid, a - 1, diag));
        }
        if (forced_zero_[cell(a, j)]) cap = 0;
        return std::max(cap, 0);
    }

    // Whether the x2-free column (a, j) past the end of row a is a minimal generator.
    bool end_is_generator(int a, int j) const {
        if (a == 0) return true;
        const int left = lambda_[a] + j - lambda_[a - 1];
        return left < 0 || at(heights_, a - 1, left) > 0;
    }

    void add_generator(int degree, int delta) {
        if (degree <= top_) generators_[static_cast<std::size_t>(degree)] += delta;
    }

    void descend(int a, int j, int remaining, std::int64_t value) {
        ++nodes_;
        if (a == s_) {
            leaf(value);
            return;
        }
        propagate_caps(a, j, remaining);
        if (reached_ == 0 && !top_reachable(a, j)) return;
        if (rules_.degree_criteria && !criteria_reachable(a, j, remaining)) return;
        if (value + upper_bound(a, j, remaining) <= best_) return;

        const auto here = cell(a, j);
        const int cap = j >= width_ ? 0 : caps_[here];
        const int floor_height = j >= width_ ? 0 : min_height_[here];
        if (cap < floor_height) return;
        for (int h = cap; h >= floor_height; --h) {
            const int degree = base(a, j) + h;
            if (h == 0) {
                // The row ends at its first empty column.
                const bool gen = end_is_generator(a, j);
                if (gen) add_generator(degree, 1);
                if (j == 0 && degree == top_) ++reached_;
                descend(a + 1, 0, remaining, value);
                if (j == 0 && degree == top_) --reached_;
                if (gen) add_generator(degree, -1);
                break;
            }
            heights_[here] = h;
            add_generator(degree, 1);
            if (j == 0 && degree == top_) ++reached_;
            descend(a, j + 1, remaining - h, value + column_value(base(a, j), h));
            if (j == 0 && degree == top_) --reached_;
            add_generator(degree, -1);
            heights_[here] = 0;
        }
    }

    void leaf(std::int64_t value) {
        if (value <= best_ || reached_ == 0) return;
        for (std::size_t i = 0; i < heights_.size(); ++i) {
            if (heights_[i] < min_height_[i]) return;
        }
        if (rules_.degree_criteria && first_violation() > 0) return;
        best_ = value;
        best_heights_ = heights_;
        found_ = true;
    }

    bool fires(int r) const { return criteria_fire(r, d_, rules_.half_degree_strict); }

    // Largest degree r among the generators placed so far that violates the
    // criteria, or 0.
    int first_violation() const {
        int at_least = 0;
        for (int r = top_; r >= 1 && fires(r); --r) {
            const int here = generators_[static_cast<std::size_t>(r)];
            at_least += here;
            if (here == 0) continue;
            if (generators_[static_cast<std::size_t>(r - 1)] == 0 && at_least < rules_.high_generator_count) return r;
        }
        return 0;
    }

    // Some unassigned row head can still reach the top degree.
    bool top_reachable(int a, int j) const {
        for (int r = (j == 0 ? a : a + 1); r < s_; ++r) {
            if (base(r, 0) + caps_[cell(r, 0)] >= top_) return true;
        }
        return false;
    }

    // Whether every violation among the generators placed so far can still be
    // repaired within the remaining budget.
    bool criteria_reachable(int a, int j, int remaining) {
        int at_least = 0;
        bool hosts_ready = false;
        if (reached_ == 0 && fires(top_)) {
            // Some later row head still has to reach the top degree.
            collect_hosts(a, j);
            hosts_ready = true;
            if (repair_cost(top_, true) > remaining) return false;
        }
        for (int r = top_; r >= 1 && fires(r); --r) {
            const int here = generators_[static_cast<std::size_t>(r)];
            at_least += here;
            if (here == 0 || generators_[static_cast<std::size_t>(r - 1)] > 0) continue;
            if (at_least >= rules_.high_generator_count) continue;
            if (!hosts_ready) {
                collect_hosts(a, j);
                hosts_ready = true;
            }
            if (repair_cost(r, false) > remaining) return false;
        }
        return true;
    }

    // For each unassigned row: the degree b of its first free column and the
    // most generators it can still receive (its run of positive caps plus the
    // column that ends it).  Then best_slots_[n] is the largest sum of slots
    // b, b+1, ..., b+k-1 over the rows with k summing to n.
    void collect_hosts(int a, int j) {
        const int most = top_ + rules_.high_generator_count + 1;
        best_slots_.assign(static_cast<std::size_t>(most + 1), kNoSlots);
        best_slots_[0] = 0;
        std::vector<std::int64_t> next;
        for (int row = a; row < s_; ++row) {
            const int first = row == a ? j : 0;
            int run = 0;
            while (first + run < width_ && caps_[cell(row, first + run)] > 0) ++run;
            const std::int64_t b = base(row, first);
            const int limit = std::min(run + 1, std::max(top_ - static_cast<int>(b) + 1, 0));
            next = best_slots_;
            for (int n = 0; n <= most; ++n) {
                if (best_slots_[static_cast<std::size_t>(n)] == kNoSlots) continue;
                for (int k = 1; k <= limit && n + k <= most; ++k) {
                    auto& slot = next[static_cast<std::size_t>(n + k)];
                    slot = std::max(slot, best_slots_[static_cast<std::size_t>(n)] + k * b + k * (k - 1) / 2);
                }
            }
            best_slots_.swap(next);
        }
    }

    // Lower bound on the zeros needed so that the generator of degree r stops
    // violating the criteria: generators of degrees r-1, ..., r-m must appear
    // until either a degree that does not trigger the criteria is reached or
    // enough generators of degree >= r-m exist.  Each row hosts its new
    // generators in slots of increasing degree, and a generator of degree q in
    // slot t costs at least q - t zeros.  With `place_r` the generator of
    // degree r itself is still to be placed.
    std::int64_t repair_cost(int r, bool place_r) const {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        std::int64_t chain_sum = place_r ? r : 0;
        int chain = place_r ? 1 : 0;
        int at_least = 0;
        for (int q = top_; q >= r; --q) at_least += generators_[static_cast<std::size_t>(q)];
        for (int m = 0; r - m >= 1; ++m) {
            const int q = r - m;
            if (m > 0) {
                const int present = generators_[static_cast<std::size_t>(q)];
                at_least += present;
                if (present == 0) {
                    chain_sum += q;
                    ++chain;
                }
            }
            const bool closes = m > 0 && !fires(q);
            const int extra = closes ? 0 : std::max(rules_.high_generator_count - at_least - chain, 0);
            const int n = chain + extra;
            if (n < static_cast<int>(best_slots_.size()) && best_slots_[static_cast<std::size_t>(n)] != kNoSlots) {
                const std::int64_t cost = chain_sum + static_cast<std::int64_t>(extra) * q - best_slots_[static_cast<std::size_t>(n)];
                best = std::min(best, std::max<std::int64_t>(cost, 0));
            }
            if (closes) break;
        }
        return best;
    }

    // Caps for every unassigned cell from (a, j) on; assigned cells keep their heights.
    void propagate_caps(int a, int j, int remaining) {
        for (int r = 0; r < s_; ++r) {
            for (int k = 0; k < width_; ++k) {
                const auto c = cell(r, k);
                if (r < a || (r == a && k < j)) {
                    caps_[c] = heights_[c];
                } else {
                    caps_[c] = std::min(local_cap(caps_, r, k), remaining);
                }
            }
        }
    }

    // Lagrangian bound on the value obtainable from the unassigned cells with
    // `remaining` zeros, using the caps from propagate_caps.  Within each row
    // the positive cells form a prefix and each cell's contribution, a convex
    // function of its height, is bounded by the better of its extreme heights.
    std::int64_t upper_bound(int a, int j, int remaining) const {
        if (remaining <= 0) return 0;
        int top_degree = 0;
        for (int r = a; r < s_; ++r) {
            for (int k = (r == a ? j : 0); k < width_; ++k) {
                const int cap = caps_[cell(r, k)];
                if (cap <= 0) break;
                top_degree = std::max(top_degree, base(r, k) + cap - 1);
            }
        }
        const std::int64_t slope = 12 * static_cast<std::int64_t>(top_degree) - 22;
        if (slope <= 0) return 0;

        auto dual = [&](std::int64_t mu) {
            std::int64_t total = mu * remaining;
            for (int r = a; r < s_; ++r) {
                std::int64_t prefix = 0;
                std::int64_t best_prefix = 0;
                for (int k = (r == a ? j : 0); k < width_; ++k) {
                    const int cap = caps_[cell(r, k)];
                    if (cap <= 0) break;
                    const int b0 = base(r, k);
                    prefix += std::max(column_value(b0, 1) - mu, column_value(b0, cap) - mu * cap);
                    best_prefix = std::max(best_prefix, prefix);
                }
                total += best_prefix;
            }
            return total;
        };

        std::int64_t lo = 0;
        std::int64_t hi = slope;
        std::int64_t best_bound = std::min(remaining * slope, dual(hi));
        while (hi - lo > 2) {
            const std::int64_t m1 = lo + (hi - lo) / 3;
            const std::int64_t m2 = hi - (hi - lo) / 3;
            const auto f1 = dual(m1);
            const auto f2 = dual(m2);
            best_bound = std::min({best_bound, f1, f2});
            if (f1 <= f2) hi = m2; else lo = m1;
        }
        for (auto mu = lo; mu <= hi; ++mu) best_bound = std::min(best_bound, dual(mu));
        return best_bound;
    }

    const InvariantSequence& seq_;
    const RuleSet& rules_;
    int s_;
    int d_;
    int z_;
    int width_;
    int top_;
    std::vector<int> lambda_;
    std::vector<int> heights_;
    std::vector<int> caps_;
    std::vector<bool> forced_zero_;
    std::vector<int> min_height_;
    std::vector<int> best_heights_;
    std::vector<int> generators_;  // count of placed generators by degree
    std::vector<std::int64_t> best_slots_;
    int reached_ = 0;              // row heads placed at the top degree
    std::int64_t best_ = 0;
    bool found_ = false;
    std::uint64_t nodes_ = 0;
};

struct SearchCase {
    std::vector<Column> zeros;
    std::vector<Column> positives;
};

}  // namespace

OptimizationResult maximize_penalty(const InvariantSequence& seq, const RuleSet& rules) {
    if (!rules.borel) throw std::invalid_argument("the penalty is unbounded without the Borel rule");
    const auto z = resolve_budget(seq, rules);
    const int s = seq.s();

    OptimizationResult result;
    result.budget = z;
    result.P = a_independent_part(seq);
    result.witness = HeightFunction(seq);

    const HeightFunction empty(seq);
    const bool empty_ok = is_admissible(empty, rules).ok;
    if (z <= 0 && !empty_ok) {
        throw Infeasible("budget z=" + std::to_string(z) + " admits no height function for " + seq.to_string());
    }

    // Case split on the conditional rules: each case fixes whether the corner
    // column of the complete-intersection rule and each applicable exclusion
    // column carry zeros.  A zero exclusion column leaves only the empty function.
    std::vector<Column> toggles;
    if (rules.ci_forcing && s >= 2) toggles.push_back({s - 1, seq.lambda(s - 1)});
    for (const auto& ex : rules.special_exclusions) {
        if (exclusion_applies(ex, seq) && std::find(toggles.begin(), toggles.end(), ex.column) == toggles.end()) {
            toggles.push_back(ex.column);
        }
    }
    std::vector<SearchCase> cases;
    for (std::uint32_t mask = 0; mask < (1u << toggles.size()); ++mask) {
        SearchCase c;
        bool skip = false;
        for (std::size_t t = 0; t < toggles.size(); ++t) {
            const Column col = toggles[t];
            if ((mask >> t) & 1u) {
                c.positives.push_back(col);
                continue;
            }
            c.zeros.push_back(col);
            for (const auto& ex : rules.special_exclusions) {
                if (exclusion_applies(ex, seq) && ex.column == col) skip = true;
            }
            if (rules.ci_forcing && s >= 2 && col == Column{s - 1, seq.lambda(s - 1)}) {
                for (int a = 0; a < s; ++a) {
                    for (int b = seq.lambda(a); b < seq.lambda(a) + static_cast<int>(z) + 2; ++b) {
                        if (in_ci_region(seq, {a, b})) c.zeros.push_back({a, b});
                    }
                }
            }
        }
        if (!skip) cases.push_back(std::move(c));
    }

    bool have_best = empty_ok;
    std::int64_t best = empty_ok ? 0 : std::numeric_limits<std::int64_t>::min() / 4;
    std::uint64_t nodes = 0;

    if (z > 0) {
        // The largest generator degree is at least every row head's degree and
        // at most the largest head degree plus z.
        int top_min = 0;
        for (int a = 0; a < s; ++a) top_min = std::max(top_min, a + seq.lambda(a));
        const int top_max = top_min + static_cast<int>(z);

        struct Job {
            std::int64_t bound;
            int top;
            std::size_t case_index;
        };
        auto make_search = [&](int top, const SearchCase& c) {
            PenaltySearch search(seq, rules, z, top);
            for (const auto& col : c.zeros) {
                if (search.has_cell(col)) search.force_zero(col);
            }
            for (const auto& col : c.positives) search.force_positive(col);
            return search;
        };
        std::vector<Job> jobs;
        for (int top = top_max; top >= top_min; --top) {
            for (std::size_t i = 0; i < cases.size(); ++i) {
                jobs.push_back({make_search(top, cases[i]).root_bound(), top, i});
            }
        }
        std::stable_sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) { return x.bound > y.bound; });

        for (const auto& job : jobs) {
            if (job.bound <= best) break;
            auto search = make_search(job.top, cases[job.case_index]);
            if (search.run(best)) {
                // Only strictly better optima are reported, so ties keep the earlier witness.
                best = search.best();
                result.witness = search.witness();
                have_best = true;
            }
            nodes += search.nodes();
        }
    }

    if (!have_best) throw Infeasible("no admissible height function for " + seq.to_string());
    const auto stats = zero_stats(result.witness);
    result.best_A = stats.A;
    result.best_gamma = stats.gamma;
    result.best_objective = 12 * stats.A - 22 * stats.gamma;
    result.eliminated = result.best_objective < result.P;
    result.nodes_explored = nodes;
    return result;
}

HeuristicResult heuristic_schedule(const InvariantSequence& seq, std::int64_t z, HeuristicBranch branch) {
    if (seq.s() != 4 && seq.s() != 5) {
        throw UnsupportedS("heuristic schedules are defined for s = 4, 5 only");
    }
    const int half = seq.degree() / 2;
    std::vector<int> bases;
    for (int i = 0; i < seq.s(); ++i) bases.push_back(i + seq.lambda(i));

    HeuristicResult out;
    auto place = [&out](int base, int top) {
        if (top < base) return;
        out.chains.push_back({base, top});
        out.gamma += top - base + 1;
        out.A += chain_degree_sum(base, top - base + 1);
    };

    if (branch == HeuristicBranch::SixHigh) {
        std::int64_t used = 0;
        for (int b : bases) used += std::max(half - b + 1, 0);
        if (used > z) {
            throw InsufficientBudget("z=" + std::to_string(z) + " cannot fill the row-head chains (" +
                                     std::to_string(used) + " zeros)");
        }
        for (int b : bases) place(b, half);
        out.remainder = z - used;
        if (out.remainder > 0) place(half + 1, half + static_cast<int>(out.remainder));
        return out;
    }

    std::sort(bases.begin(), bases.end(), std::greater<>());
    std::int64_t left = z;
    for (std::size_t k = 0; k < bases.size() && left > 0; ++k) {
        const int top = half + static_cast<int>(k);  // generator in degree floor(d/2) + k + 1
        const int length = top - bases[k] + 1;
        if (k == 0 && left < length) {
            throw InsufficientBudget("z=" + std::to_string(z) + " is below the first chain (" +
                                     std::to_string(length) + " zeros)");
        }
        const int used = static_cast<int>(std::min<std::int64_t>(left, length));
        place(top - used + 1, top);
        left -= used;
    }
    out.remainder = left;
    return out;
}

}  // namespace ginbound
